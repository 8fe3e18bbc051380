#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "nal/proof_io.hpp"

using namespace nal;
using namespace nal::testing;

namespace {

bool has_rule(const std::vector<RuleInstance>& xs, Rule r) {
  return std::any_of(xs.begin(), xs.end(), [&](const RuleInstance& i) { return i.rule.r == r; });
}

const RuleInstance* find_rule(const std::vector<RuleInstance>& xs, Rule r) {
  for (const auto& i : xs)
    if (i.rule.r == r) return &i;
  return nullptr;
}

}  // namespace

TEST_CASE("axiom instances") {
  auto xs = rule_instances_backward(seq("p => p"), cfg_fnl(), {});
  CHECK(has_rule(xs, Rule::Id));
  auto ys = rule_instances_backward(seq("eps => 1"), cfg_fnl(), {});
  CHECK(has_rule(ys, Rule::OneR));
}

TEST_CASE("modal instances on !p => !p") {
  auto xs = rule_instances_backward(seq("!p => !p"), cfg_nacill(), {});
  const RuleInstance* r = find_rule(xs, Rule::BangR);
  REQUIRE(r);
  REQUIRE(r->premises.size() == 1);
  CHECK(r->premises[0] == seq("!p => p"));
  const RuleInstance* l = find_rule(xs, Rule::BangL);
  REQUIRE(l);
  REQUIRE(l->position);
  CHECK(l->position->is_hole());
  CHECK(l->premises[0] == seq("p => !p"));
  CHECK(has_rule(xs, Rule::Id));
}

TEST_CASE("directed exchange on (q,!p) => r") {
  auto xs = rule_instances_backward(seq("(q,!p) => r"), cfg_nacill(), {});
  const RuleInstance* i = find_rule(xs, Rule::BangEBwd);
  REQUIRE(i);
  REQUIRE(i->position);
  CHECK(i->position->is_hole());
  CHECK(i->premises[0] == seq("(!p,q) => r"));
  CHECK_FALSE(has_rule(xs, Rule::BangEFwd));
}

TEST_CASE("fusion right includes the unit splits") {
  auto xs = rule_instances_backward(seq("eps => 1*1"), cfg_fnl(), {});
  const RuleInstance* i = find_rule(xs, Rule::FusR);
  REQUIRE(i);
  CHECK(i->premises[0] == seq("eps => 1"));
  CHECK(i->premises[1] == seq("eps => 1"));
}

TEST_CASE("residual left rules cover both the paired and the eps instance") {
  auto xs = rule_instances_backward(seq("(p,p\\q) => q"), cfg_fnl(), {});
  int count = 0;
  for (const auto& i : xs)
    if (i.rule.r == Rule::BslL) count++;
  CHECK(count == 2);  // x = p at the pair, and x = eps at the leaf
}

TEST_CASE("checker and enumerator agree on random goals") {
  Gen g(2024);
  g.zero = true;
  std::vector<LogicConfig> cfgs;
  cfgs.push_back(cfg_fnl());
  cfgs.push_back(cfg_nacill());
  {
    LogicConfig c = cfg_nacill();
    c.se = c.sc = c.sw = true;
    cfgs.push_back(c);
    c = cfg_fnl();
    c.sa = true;
    c.czero = true;
    c.ctop = c.cbot = true;
    cfgs.push_back(c);
    c.base = Base::NACCLL;
    cfgs.push_back(c);
  }
  HypothesisSet hyps = {seq("p => q")};
  for (int i = 0; i < 150; i++) {
    LogicConfig cfg = cfgs[g.pick(static_cast<int>(cfgs.size()))];
    g.modal = cfg.modal();
    g.zero = cfg.zero_rules();
    Sequent goal = g.sequent(1 + g.pick(4));
    if (!well_formed(goal, cfg).empty()) continue;
    for (const auto& inst : rule_instances_backward(goal, cfg, hyps)) {
      CheckResult r = check_step(inst.rule, goal, inst.position, inst.aux, inst.premises,
                                 cfg, hyps);
      INFO(format_sequent(goal), " rule ", rule_name(inst.rule.r), ": ", r.error);
      CHECK(r.ok);
    }
  }
}

TEST_CASE("double-line tags are mutually inverse") {
  Gen g(77);
  LogicConfig cfg = cfg_nacill();
  cfg.sa = true;
  auto inverse = [](Rule r) -> Rule {
    switch (r) {
      case Rule::BangEFwd: return Rule::BangEBwd;
      case Rule::BangEBwd: return Rule::BangEFwd;
      case Rule::BangAFwd: return Rule::BangABwd;
      case Rule::BangABwd: return Rule::BangAFwd;
      case Rule::BangAsFwd: return Rule::BangAsBwd;
      case Rule::BangAsBwd: return Rule::BangAsFwd;
      case Rule::AFwd: return Rule::ABwd;
      case Rule::ABwd: return Rule::AFwd;
      default: return r;
    }
  };
  for (int i = 0; i < 120; i++) {
    Sequent goal = g.sequent(1 + g.pick(4));
    for (const auto& inst : rule_instances_backward(goal, cfg, {})) {
      Rule inv = inverse(inst.rule.r);
      if (inv == inst.rule.r) continue;
      REQUIRE(inst.premises.size() == 1);
      auto back = rule_instances_backward(inst.premises[0], cfg, {});
      bool found = false;
      for (const auto& j : back)
        if (j.rule.r == inv && j.premises.size() == 1 && j.premises[0] == goal) found = true;
      INFO(format_sequent(goal), " via ", rule_name(inst.rule.r));
      CHECK(found);
    }
  }
}

TEST_CASE("check_proof accepts Id and rejects a bad BangR") {
  Proof id{seq("p => p"), {Rule::Id, -1}, {}, std::nullopt, {}};
  CHECK(check_proof(id, cfg_fnl()).ok);

  Proof bad{seq("p => !p"),
            {Rule::BangR, -1},
            {Proof{seq("p => p"), {Rule::Id, -1}, {}, std::nullopt, {}}},
            std::nullopt,
            {}};
  auto r = check_proof(bad, cfg_nacill());
  CHECK_FALSE(r.ok);
  CHECK(r.error.find("bang-structure") != std::string::npos);
}

TEST_CASE("hypothesis leaves are exact sequents") {
  HypothesisSet hyps = {seq("p => q")};
  Proof ok{seq("p => q"), {Rule::Hyp, 0}, {}, std::nullopt, {}};
  CHECK(check_proof(ok, cfg_fnl(), hyps).ok);
  Proof wrong{seq("q => q"), {Rule::Hyp, 0}, {}, std::nullopt, {}};
  CHECK_FALSE(check_proof(wrong, cfg_fnl(), hyps).ok);
}

TEST_CASE("cut checking honours the policy and unit-insertion positions") {
  LogicConfig cfg = cfg_fnl();
  Proof premise1{seq("eps => 1"), {Rule::OneR, -1}, {}, std::nullopt, {}};
  Proof premise2{seq("(1,p) => p"),
                 {Rule::OneL, -1},
                 {Proof{seq("p => p"), {Rule::Id, -1}, {}, std::nullopt, {}}},
                 parse_position("L", str("(1,p)")),
                 {}};
  Proof cut{seq("p => p"),
            {Rule::Cut, -1},
            {premise1, premise2},
            parse_position("L^", str("p")),
            Formula::one()};
  CHECK_FALSE(check_proof(cut, cfg).ok);  // forbidden by default
  cfg.cut = CutMode::Unrestricted;
  auto r = check_proof(cut, cfg);
  INFO(r.error);
  CHECK(r.ok);
  CHECK(cut.uses_cut());
  CHECK(cut.height() == 3);

  // canonical text round trip
  std::string text = proof_to_text(cut);
  Proof back = proof_from_text(text, cfg.lang());
  CHECK(proof_to_text(back) == text);
  CHECK(check_proof(back, cfg).ok);
}

TEST_CASE("well-formedness gates the language per logic") {
  CHECK_FALSE(well_formed(seq("!p => p"), cfg_fnl()).empty());
  CHECK(well_formed(seq("!p => p"), cfg_nacill()).empty());
  CHECK_FALSE(well_formed(seq("p =>"), cfg_nacill()).empty());
  LogicConfig classical;
  classical.base = Base::FCNLm;
  CHECK(well_formed(seq("p =>"), classical).empty());
  CHECK(well_formed(seq("0 =>"), classical).empty());
}

TEST_CASE("analytic cut set contains the hypothesis residuals") {
  HypothesisSet hyps = {seq("(p,q) => r")};
  auto set = analytic_cut_set(seq("p => r"), hyps);
  Formula want = Formula::lres(fml("p*q"), Formula::var("r"));
  CHECK(std::find(set.begin(), set.end(), want) != set.end());
}
