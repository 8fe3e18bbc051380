#include "nal/proof_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace nal {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json node_to_json(const Proof& p) {
  ordered_json j;
  j["rule"] = rule_name(p.rule.r);
  if (p.rule.r == Rule::Hyp) j["hyp"] = p.rule.hyp;
  j["sequent"] = format_sequent(p.conclusion);
  if (p.position) j["position"] = format_position(*p.position, p.conclusion.ante);
  if (p.aux) j["aux"] = format_formula(p.aux);
  ordered_json prem = ordered_json::array();
  for (const auto& q : p.premises) prem.push_back(node_to_json(q));
  j["premises"] = std::move(prem);
  return j;
}

Proof node_from_json(const ordered_json& j, const LanguageOpts& lang) {
  Proof p;
  const std::string rname = j.at("rule").get<std::string>();
  auto r = rule_from_name(rname);
  if (!r) throw std::runtime_error("unknown rule name: " + rname);
  p.rule.r = *r;
  if (p.rule.r == Rule::Hyp) p.rule.hyp = j.at("hyp").get<int>();
  p.conclusion = parse_sequent(j.at("sequent").get<std::string>(), lang);
  if (j.contains("position"))
    p.position = parse_position(j.at("position").get<std::string>(), p.conclusion.ante);
  if (j.contains("aux")) p.aux = parse_formula(j.at("aux").get<std::string>(), lang);
  if (j.contains("premises"))
    for (const auto& q : j.at("premises")) p.premises.push_back(node_from_json(q, lang));
  return p;
}

}  // namespace

std::string proof_to_text(const Proof& p) { return node_to_json(p).dump(2) + "\n"; }

Proof proof_from_text(const std::string& text, const LanguageOpts& lang) {
  return node_from_json(ordered_json::parse(text), lang);
}

void save_proof(const std::string& path, const Proof& p) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write proof file: " + path);
  out << proof_to_text(p);
}

Proof load_proof(const std::string& path, const LanguageOpts& lang) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open proof file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return proof_from_text(ss.str(), lang);
}

}  // namespace nal
