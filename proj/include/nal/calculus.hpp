#pragma once

// Sequent calculi for FNL / NACILL and their classical variants FCNL- / FCNL /
// NACCLL- / NACCLL, plus the optional structural rules e, c, w, a. Provides
// the directed rule table, exhaustive backward rule-instance enumeration, and
// proof tree checking.

#include <optional>
#include <string>
#include <vector>

#include "nal/syntax.hpp"

namespace nal {

enum class Base : uint8_t { FNL, NACILL, FCNLm, FCNL, NACCLLm, NACCLL };

enum class CutMode : uint8_t { Forbidden, Unrestricted, Analytic };

struct LogicConfig {
  Base base = Base::FNL;
  bool se = false, sc = false, sw = false, sa = false;  // structural rules
  bool czero = false, ctop = false, cbot = false;       // optional constants
  CutMode cut = CutMode::Forbidden;
  std::vector<Formula> cut_formulas;  // allowed cut formulas under Analytic

  bool classical() const {
    return base == Base::FCNLm || base == Base::FCNL || base == Base::NACCLLm ||
           base == Base::NACCLL;
  }
  bool modal() const {
    return base == Base::NACILL || base == Base::NACCLLm || base == Base::NACCLL;
  }
  bool cyclic() const { return base == Base::FCNL || base == Base::NACCLL; }
  // The 0-rules come with the constant 0; they license empty succedents.
  bool zero_rules() const { return czero || classical(); }

  LanguageOpts lang() const {
    return LanguageOpts{modal(), zero_rules(), ctop, cbot, zero_rules()};
  }
};

// Well-formedness of a sequent for a configuration (connective availability
// and empty-succedent licensing). Returns an error message or empty string.
std::string well_formed(const Sequent& s, const LogicConfig& cfg);

std::optional<Base> base_from_name(const std::string& id);
const char* base_name(Base b);

enum class Rule : uint8_t {
  Id, OneR, OneL, Cut,
  FusL, FusR, BslL, BslR, SlL, SlR,
  AndL1, AndL2, AndR, OrL, OrR1, OrR2,
  BangL, BangR, BangW, BangC,
  BangEFwd, BangEBwd, BangAFwd, BangABwd, BangAsFwd, BangAsBwd,
  E, C, W, AFwd, ABwd,
  ZeroL, ZeroR, TopR, BotL,
  DN1a, DN1b, DN2a, DN2b, CONa, CONb, CycA, CycB,
  Hyp
};

struct RuleId {
  Rule r = Rule::Id;
  int hyp = -1;  // index into the hypothesis set, for Rule::Hyp

  bool operator==(const RuleId& o) const { return r == o.r && hyp == o.hyp; }
};

const char* rule_name(Rule r);
std::optional<Rule> rule_from_name(const std::string& name);

struct Proof {
  Sequent conclusion;
  RuleId rule;
  std::vector<Proof> premises;
  std::optional<Context> position;  // the u of the rule instance
  Formula aux;                      // cut formula / scheme instantiation

  int height() const;
  int node_count() const;
  bool uses_cut() const;
};

struct RuleInstance {
  RuleId rule;
  std::optional<Context> position;
  std::vector<Sequent> premises;
  Formula aux;
};

// The complete finite list of rule instances with conclusion exactly `goal`,
// premises in the paper's left-to-right order. Cut instances are emitted only
// under Analytic (formulas from cfg.cut_formulas) or Unrestricted (same
// universe; an unrestricted backward cut cannot be enumerated in full).
std::vector<RuleInstance> rule_instances_backward(const Sequent& goal,
                                                  const LogicConfig& cfg,
                                                  const HypothesisSet& hyps);

struct CheckResult {
  bool ok = true;
  std::string error;
  std::vector<int> path;  // premise indices from the root to the bad node

  explicit operator bool() const { return ok; }
};

// Validates one rule application: conclusion, premise sequents, side
// conditions, position and aux. Shared by check_proof and the tests.
CheckResult check_step(const RuleId& rule, const Sequent& conclusion,
                       const std::optional<Context>& position, const Formula& aux,
                       const std::vector<Sequent>& premises, const LogicConfig& cfg,
                       const HypothesisSet& hyps);

CheckResult check_proof(const Proof& p, const LogicConfig& cfg,
                        const HypothesisSet& hyps = {});

// Subformulas of goal and hypotheses plus rho(y)\sigma(b) per hypothesis
// y => b: the default cut universe for hypothesis search.
std::vector<Formula> analytic_cut_set(const Sequent& goal, const HypothesisSet& hyps);

}  // namespace nal
