#include "nal/encoding.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace nal {

Formula rho(const Structure& x) {
  switch (x.kind()) {
    case StructKind::Unit: return Formula::one();
    case StructKind::Leaf: return x.leaf_formula();
    case StructKind::Pair: return Formula::fus(rho(x.left()), rho(x.right()));
  }
  throw std::logic_error("rho: empty structure");
}

Formula sigma(const Formula& succ) { return succ ? succ : Formula::zero(); }

Formula tau(const Sequent& s) {
  if (s.empty_succ())
    throw std::invalid_argument("tau is undefined on empty succedents, use tau_star");
  return Formula::bang(Formula::lres(rho(s.ante), s.succ));
}

Formula tau_star(const Sequent& s) {
  return Formula::bang(Formula::lres(rho(s.ante), sigma(s.succ)));
}

Sequent encode_consequence(const HypothesisSet& hyps, const Sequent& goal, bool classical) {
  if (hyps.empty()) return goal;
  Structure fold = Structure::leaf(classical ? tau_star(hyps.back()) : tau(hyps.back()));
  for (size_t i = hyps.size() - 1; i-- > 0;) {
    Formula t = classical ? tau_star(hyps[i]) : tau(hyps[i]);
    fold = Structure::pair(Structure::leaf(t), fold);
  }
  return Sequent{Structure::pair(goal.ante, fold), goal.succ};
}

HypothesisSet parse_hypothesis_lines(std::istream& in, const LanguageOpts& lang) {
  HypothesisSet hyps;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    lineno++;
    size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos || line[i] == '#') continue;
    try {
      hyps.push_back(parse_sequent(line, lang));
    } catch (const ParseError& e) {
      throw std::runtime_error("hypothesis line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return hyps;
}

HypothesisSet load_hypothesis_file(const std::string& path, const LanguageOpts& lang) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open hypothesis file: " + path);
  return parse_hypothesis_lines(in, lang);
}

}  // namespace nal
