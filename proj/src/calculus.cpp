#include "nal/calculus.hpp"

#include <algorithm>
#include <unordered_set>

#include "nal/encoding.hpp"

namespace nal {

std::string well_formed(const Sequent& s, const LogicConfig& cfg) {
  std::string err;
  auto scan = [&](const Formula& f, auto&& self) -> void {
    if (!err.empty() || f.empty()) return;
    switch (f.kind()) {
      case Conn::Bang:
        if (!cfg.modal()) { err = "! is not in the language of this logic"; return; }
        self(f.lhs(), self);
        return;
      case Conn::Zero:
        if (!cfg.zero_rules()) err = "constant 0 is not enabled";
        return;
      case Conn::Top:
        if (!cfg.ctop) err = "constant top is not enabled";
        return;
      case Conn::Bot:
        if (!cfg.cbot) err = "constant bot is not enabled";
        return;
      case Conn::Var: case Conn::One: return;
      default:
        self(f.lhs(), self);
        self(f.rhs(), self);
        return;
    }
  };
  auto scan_struct = [&](const Structure& x, auto&& self) -> void {
    if (!err.empty()) return;
    switch (x.kind()) {
      case StructKind::Unit: return;
      case StructKind::Leaf: scan(x.leaf_formula(), scan); return;
      case StructKind::Pair:
        self(x.left(), self);
        self(x.right(), self);
        return;
    }
  };
  scan_struct(s.ante, scan_struct);
  if (err.empty() && s.empty_succ() && !cfg.zero_rules())
    err = "empty succedent requires the 0-rules";
  if (err.empty() && !s.empty_succ()) scan(s.succ, scan);
  return err;
}

std::optional<Base> base_from_name(const std::string& id) {
  if (id == "fnl") return Base::FNL;
  if (id == "nacill") return Base::NACILL;
  if (id == "fcnl-") return Base::FCNLm;
  if (id == "fcnl") return Base::FCNL;
  if (id == "naccll-") return Base::NACCLLm;
  if (id == "naccll") return Base::NACCLL;
  return std::nullopt;
}

const char* base_name(Base b) {
  switch (b) {
    case Base::FNL: return "fnl";
    case Base::NACILL: return "nacill";
    case Base::FCNLm: return "fcnl-";
    case Base::FCNL: return "fcnl";
    case Base::NACCLLm: return "naccll-";
    case Base::NACCLL: return "naccll";
  }
  return "?";
}

namespace {

constexpr const char* kRuleNames[] = {
    "Id", "OneR", "OneL", "Cut",
    "FusL", "FusR", "BslL", "BslR", "SlL", "SlR",
    "AndL1", "AndL2", "AndR", "OrL", "OrR1", "OrR2",
    "BangL", "BangR", "BangW", "BangC",
    "BangE_fwd", "BangE_bwd", "BangA_fwd", "BangA_bwd", "BangAs_fwd", "BangAs_bwd",
    "E", "C", "W", "A_fwd", "A_bwd",
    "ZeroL", "ZeroR", "TopR", "BotL",
    "DN1a", "DN1b", "DN2a", "DN2b", "CONa", "CONb", "CycA", "CycB",
    "Hyp"};

}  // namespace

const char* rule_name(Rule r) { return kRuleNames[static_cast<size_t>(r)]; }

std::optional<Rule> rule_from_name(const std::string& name) {
  for (size_t i = 0; i < std::size(kRuleNames); i++)
    if (name == kRuleNames[i]) return static_cast<Rule>(i);
  return std::nullopt;
}

int Proof::height() const {
  int h = 0;
  for (const auto& p : premises) h = std::max(h, p.height());
  return h + 1;
}

int Proof::node_count() const {
  int n = 1;
  for (const auto& p : premises) n += p.node_count();
  return n;
}

bool Proof::uses_cut() const {
  if (rule.r == Rule::Cut) return true;
  for (const auto& p : premises) {
    if (p.uses_cut()) return true;
  }
  return false;
}

// ----------------------------------------------------- pattern helpers

namespace {

Formula neg_r(const Formula& a) { return Formula::lres(a, Formula::zero()); }
Formula neg_l(const Formula& a) { return Formula::rres(Formula::zero(), a); }

// 0/(a\0) => a  and back
bool match_dn1(const Formula& f, Formula& a) {
  if (f.kind() != Conn::Rres || f.lhs() != Formula::zero()) return false;
  Formula g = f.rhs();
  if (g.kind() != Conn::Lres || g.rhs() != Formula::zero()) return false;
  a = g.lhs();
  return true;
}

// (0/a)\0 => a  and back
bool match_dn2(const Formula& f, Formula& a) {
  if (f.kind() != Conn::Lres || f.rhs() != Formula::zero()) return false;
  Formula g = f.lhs();
  if (g.kind() != Conn::Rres || g.lhs() != Formula::zero()) return false;
  a = g.rhs();
  return true;
}

// (a\0)/b
bool match_con_lhs(const Formula& f, Formula& a, Formula& b) {
  if (f.kind() != Conn::Rres) return false;
  Formula g = f.lhs();
  if (g.kind() != Conn::Lres || g.rhs() != Formula::zero()) return false;
  a = g.lhs();
  b = f.rhs();
  return true;
}

// a\(0/b)
bool match_con_rhs(const Formula& f, Formula& a, Formula& b) {
  if (f.kind() != Conn::Lres) return false;
  Formula g = f.rhs();
  if (g.kind() != Conn::Rres || g.lhs() != Formula::zero()) return false;
  a = f.lhs();
  b = g.rhs();
  return true;
}

struct SubtreeRef {
  Structure sub;       // the plugged part; eps for a unit-insertion position
  bool inserted = false;
};

std::optional<SubtreeRef> subtree_at(const Context& u, const Structure& ante) {
  Structure cur = ante;
  const auto& steps = u.steps();
  for (size_t i = 0; i < steps.size(); i++) {
    const auto& st = steps[i];
    if (cur.is_pair() && (st.hole_right ? cur.left() : cur.right()) == st.sibling) {
      cur = st.hole_right ? cur.right() : cur.left();
      continue;
    }
    if (i + 1 == steps.size() && cur == st.sibling)
      return SubtreeRef{Structure::unit(), true};
    return std::nullopt;
  }
  return SubtreeRef{cur, false};
}

}  // namespace

// --------------------------------------------- backward rule enumeration

namespace {

enum Phase : int { kAxiom = 0, kInvertibleRight = 1, kOther = 2, kCut = 3 };

struct Collector {
  std::vector<RuleInstance> out;
  std::vector<std::tuple<int, int, int>> keys;  // phase, subtree size, index

  void add(int phase, int subsize, RuleInstance inst) {
    keys.emplace_back(phase, subsize, static_cast<int>(out.size()));
    out.push_back(std::move(inst));
  }

  std::vector<RuleInstance> finish() {
    std::vector<size_t> order(out.size());
    for (size_t i = 0; i < order.size(); i++) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
      return keys[a] < keys[b];
    });
    std::vector<RuleInstance> sorted;
    sorted.reserve(out.size());
    for (size_t i : order) sorted.push_back(std::move(out[i]));
    return sorted;
  }
};

}  // namespace

std::vector<RuleInstance> rule_instances_backward(const Sequent& goal,
                                                  const LogicConfig& cfg,
                                                  const HypothesisSet& hyps) {
  Collector col;
  const Structure& x = goal.ante;
  const Formula& s = goal.succ;
  const bool has_succ = !goal.empty_succ();
  auto ctxs = contexts_of(x);

  // --- zero-premise rules
  if (has_succ && x.is_leaf() && x.leaf_formula() == s)
    col.add(kAxiom, 0, {{Rule::Id, -1}, std::nullopt, {}, {}});
  if (has_succ && x.is_unit() && s == Formula::one())
    col.add(kAxiom, 0, {{Rule::OneR, -1}, std::nullopt, {}, {}});
  if (cfg.zero_rules() && !has_succ && x.is_leaf() && x.leaf_formula() == Formula::zero())
    col.add(kAxiom, 0, {{Rule::ZeroL, -1}, std::nullopt, {}, {}});
  if (cfg.ctop && has_succ && s == Formula::top())
    col.add(kAxiom, 0, {{Rule::TopR, -1}, std::nullopt, {}, {}});
  if (cfg.cbot) {
    for (auto& [u, y] : ctxs)
      if (y.is_leaf() && y.leaf_formula() == Formula::bot())
        col.add(kAxiom, 1, {{Rule::BotL, -1}, u, {}, {}});
  }
  if (cfg.classical() && has_succ) {
    Formula a, b;
    if (x.is_leaf()) {
      const Formula f = x.leaf_formula();
      if (match_dn1(f, a) && a == s)
        col.add(kAxiom, 0, {{Rule::DN1a, -1}, std::nullopt, {}, a});
      if (match_dn2(f, a) && a == s)
        col.add(kAxiom, 0, {{Rule::DN2a, -1}, std::nullopt, {}, a});
      if (match_dn1(s, a) && a == f)
        col.add(kAxiom, 0, {{Rule::DN1b, -1}, std::nullopt, {}, a});
      if (match_dn2(s, a) && a == f)
        col.add(kAxiom, 0, {{Rule::DN2b, -1}, std::nullopt, {}, a});
      if (match_con_lhs(f, a, b) && s == Formula::lres(a, neg_l(b)))
        col.add(kAxiom, 0, {{Rule::CONa, -1}, std::nullopt, {}, {}});
      if (match_con_rhs(f, a, b) && s == Formula::rres(neg_r(a), b))
        col.add(kAxiom, 0, {{Rule::CONb, -1}, std::nullopt, {}, {}});
      if (cfg.cyclic()) {
        if (f.kind() == Conn::Lres && f.rhs() == Formula::zero() && s == neg_l(f.lhs()))
          col.add(kAxiom, 0, {{Rule::CycA, -1}, std::nullopt, {}, f.lhs()});
        if (f.kind() == Conn::Rres && f.lhs() == Formula::zero() && s == neg_r(f.rhs()))
          col.add(kAxiom, 0, {{Rule::CycB, -1}, std::nullopt, {}, f.rhs()});
      }
    }
  }
  for (size_t i = 0; i < hyps.size(); i++)
    if (goal == hyps[i])
      col.add(kAxiom, 0, {{Rule::Hyp, static_cast<int>(i)}, std::nullopt, {}, {}});

  // --- invertible right rules
  if (has_succ) {
    switch (s.kind()) {
      case Conn::And:
        col.add(kInvertibleRight, 0,
                {{Rule::AndR, -1}, std::nullopt, {{x, s.lhs()}, {x, s.rhs()}}, {}});
        break;
      case Conn::Lres:
        col.add(kInvertibleRight, 0,
                {{Rule::BslR, -1}, std::nullopt,
                 {{Structure::pair(Structure::leaf(s.lhs()), x), s.rhs()}}, {}});
        break;
      case Conn::Rres:
        col.add(kInvertibleRight, 0,
                {{Rule::SlR, -1}, std::nullopt,
                 {{Structure::pair(x, Structure::leaf(s.rhs())), s.lhs()}}, {}});
        break;
      case Conn::Zero:
        if (cfg.zero_rules())
          col.add(kInvertibleRight, 0,
                  {{Rule::ZeroR, -1}, std::nullopt, {{x, Formula()}}, {}});
        break;
      default: break;
    }
  }

  // --- remaining right rules
  if (has_succ && s.kind() == Conn::Or) {
    col.add(kOther, 0, {{Rule::OrR1, -1}, std::nullopt, {{x, s.lhs()}}, {}});
    col.add(kOther, 0, {{Rule::OrR2, -1}, std::nullopt, {{x, s.rhs()}}, {}});
  }
  if (has_succ && s.kind() == Conn::Fus) {
    auto split = [&](Structure l, Structure r) {
      col.add(kOther, 0,
              {{Rule::FusR, -1}, std::nullopt, {{l, s.lhs()}, {r, s.rhs()}}, {}});
    };
    if (x.is_pair()) split(x.left(), x.right());
    split(Structure::unit(), x);
    if (!x.is_unit()) split(x, Structure::unit());
  }
  if (cfg.modal() && has_succ && s.kind() == Conn::Bang && is_bang_structure(x))
    col.add(kOther, 0, {{Rule::BangR, -1}, std::nullopt, {{x, s.lhs()}}, {}});

  // --- left and structural rules, one batch per context position
  for (auto& [u, y] : ctxs) {
    const int sz = y.node_count();
    auto prem1 = [&](Structure repl) -> std::vector<Sequent> {
      return {{u.plug(std::move(repl)), s}};
    };
    if (y.is_leaf()) {
      const Formula f = y.leaf_formula();
      switch (f.kind()) {
        case Conn::One:
          col.add(kOther, sz, {{Rule::OneL, -1}, u, prem1(Structure::unit()), {}});
          break;
        case Conn::Fus:
          col.add(kOther, sz,
                  {{Rule::FusL, -1}, u,
                   prem1(Structure::pair(Structure::leaf(f.lhs()), Structure::leaf(f.rhs()))), {}});
          break;
        case Conn::And:
          col.add(kOther, sz, {{Rule::AndL1, -1}, u, prem1(Structure::leaf(f.lhs())), {}});
          col.add(kOther, sz, {{Rule::AndL2, -1}, u, prem1(Structure::leaf(f.rhs())), {}});
          break;
        case Conn::Or:
          col.add(kOther, sz,
                  {{Rule::OrL, -1}, u,
                   {{u.plug(Structure::leaf(f.lhs())), s}, {u.plug(Structure::leaf(f.rhs())), s}}, {}});
          break;
        case Conn::Bang:
          if (cfg.modal())
            col.add(kOther, sz, {{Rule::BangL, -1}, u, prem1(Structure::leaf(f.lhs())), {}});
          break;
        case Conn::Lres: {
          // u[x . (a\b)] with x = eps at the leaf position itself
          col.add(kOther, sz,
                  {{Rule::BslL, -1}, u,
                   {{Structure::unit(), f.lhs()}, {u.plug(Structure::leaf(f.rhs())), s}}, {}});
          if (!u.is_hole() && u.steps().back().hole_right) {
            Context up(std::vector<Context::Step>(u.steps().begin(), u.steps().end() - 1));
            Structure xl = u.steps().back().sibling;
            col.add(kOther, sz + xl.node_count() + 1,
                    {{Rule::BslL, -1}, up,
                     {{xl, f.lhs()}, {up.plug(Structure::leaf(f.rhs())), s}}, {}});
          }
          break;
        }
        case Conn::Rres: {
          // u[(b/a) . x] with x = eps at the leaf position itself
          col.add(kOther, sz,
                  {{Rule::SlL, -1}, u,
                   {{Structure::unit(), f.rhs()}, {u.plug(Structure::leaf(f.lhs())), s}}, {}});
          if (!u.is_hole() && !u.steps().back().hole_right) {
            Context up(std::vector<Context::Step>(u.steps().begin(), u.steps().end() - 1));
            Structure xr = u.steps().back().sibling;
            col.add(kOther, sz + xr.node_count() + 1,
                    {{Rule::SlL, -1}, up,
                     {{xr, f.rhs()}, {up.plug(Structure::leaf(f.lhs())), s}}, {}});
          }
          break;
        }
        default: break;
      }
    }
    const bool bang_y = cfg.modal() && is_bang_structure(y);
    if (bang_y && !y.is_unit()) {
      col.add(kOther, sz, {{Rule::BangW, -1}, u, prem1(Structure::unit()), {}});
      col.add(kOther, sz, {{Rule::BangC, -1}, u, prem1(Structure::pair(y, y)), {}});
    }
    if (cfg.sw && !y.is_unit())
      col.add(kOther, sz, {{Rule::W, -1}, u, prem1(Structure::unit()), {}});
    if (cfg.sc && !y.is_unit())
      col.add(kOther, sz, {{Rule::C, -1}, u, prem1(Structure::pair(y, y)), {}});
    if (y.is_pair()) {
      Structure swapped = Structure::pair(y.right(), y.left());
      if (cfg.se)
        col.add(kOther, sz, {{Rule::E, -1}, u, prem1(swapped), {}});
      if (cfg.modal() && is_bang_structure(y.left()))
        col.add(kOther, sz, {{Rule::BangEFwd, -1}, u, prem1(swapped), {}});
      if (cfg.modal() && is_bang_structure(y.right()))
        col.add(kOther, sz, {{Rule::BangEBwd, -1}, u, prem1(swapped), {}});
      if (y.left().is_pair()) {
        // y = (p . q) . r ; reassociate to p . (q . r)
        Structure re = Structure::pair(y.left().left(), Structure::pair(y.left().right(), y.right()));
        if (cfg.sa)
          col.add(kOther, sz, {{Rule::AFwd, -1}, u, prem1(re), {}});
        if (cfg.modal() && is_bang_structure(y.left().left()))
          col.add(kOther, sz, {{Rule::BangAFwd, -1}, u, prem1(re), {}});
        if (cfg.modal() && is_bang_structure(y.right()))
          col.add(kOther, sz, {{Rule::BangAsFwd, -1}, u, prem1(re), {}});
      }
      if (y.right().is_pair()) {
        // y = p . (q . r) ; reassociate to (p . q) . r
        Structure re = Structure::pair(Structure::pair(y.left(), y.right().left()), y.right().right());
        if (cfg.sa)
          col.add(kOther, sz, {{Rule::ABwd, -1}, u, prem1(re), {}});
        if (cfg.modal() && is_bang_structure(y.left()))
          col.add(kOther, sz, {{Rule::BangABwd, -1}, u, prem1(re), {}});
        if (cfg.modal() && is_bang_structure(y.right().right()))
          col.add(kOther, sz, {{Rule::BangAsBwd, -1}, u, prem1(re), {}});
      }
    }
    if (cfg.cut != CutMode::Forbidden) {
      for (const Formula& a : cfg.cut_formulas)
        col.add(kCut, sz,
                {{Rule::Cut, -1}, u,
                 {{y, a}, {u.plug(Structure::leaf(a)), s}}, a});
    }
  }

  return col.finish();
}

// ------------------------------------------------------------- checking

namespace {

CheckResult fail_step(std::string msg) { return {false, std::move(msg), {}}; }

}  // namespace

CheckResult check_step(const RuleId& rule, const Sequent& conclusion,
                       const std::optional<Context>& position, const Formula& aux,
                       const std::vector<Sequent>& premises, const LogicConfig& cfg,
                       const HypothesisSet& hyps) {
  const Structure& x = conclusion.ante;
  const Formula& s = conclusion.succ;
  const bool has_succ = !conclusion.empty_succ();

  auto expect = [&](std::vector<Sequent> want) -> CheckResult {
    if (premises.size() != want.size())
      return fail_step(std::string(rule_name(rule.r)) + ": expected " +
                       std::to_string(want.size()) + " premises, got " +
                       std::to_string(premises.size()));
    for (size_t i = 0; i < want.size(); i++)
      if (premises[i] != want[i])
        return fail_step(std::string(rule_name(rule.r)) + ": premise " +
                         std::to_string(i + 1) + " should be \"" +
                         format_sequent(want[i]) + "\", found \"" +
                         format_sequent(premises[i]) + "\"");
    return {};
  };

  auto need_position = [&]() -> std::optional<SubtreeRef> {
    if (!position) return std::nullopt;
    return subtree_at(*position, x);
  };

  // Rule availability under the configuration.
  switch (rule.r) {
    case Rule::BangL: case Rule::BangR: case Rule::BangW: case Rule::BangC:
    case Rule::BangEFwd: case Rule::BangEBwd: case Rule::BangAFwd:
    case Rule::BangABwd: case Rule::BangAsFwd: case Rule::BangAsBwd:
      if (!cfg.modal()) return fail_step("modal rule in a non-modal logic");
      break;
    case Rule::E: if (!cfg.se) return fail_step("rule (e) not enabled"); break;
    case Rule::C: if (!cfg.sc) return fail_step("rule (c) not enabled"); break;
    case Rule::W: if (!cfg.sw) return fail_step("rule (w) not enabled"); break;
    case Rule::AFwd: case Rule::ABwd:
      if (!cfg.sa) return fail_step("rule (a) not enabled");
      break;
    case Rule::ZeroL: case Rule::ZeroR:
      if (!cfg.zero_rules()) return fail_step("0-rules not enabled");
      break;
    case Rule::TopR: if (!cfg.ctop) return fail_step("top not enabled"); break;
    case Rule::BotL: if (!cfg.cbot) return fail_step("bot not enabled"); break;
    case Rule::DN1a: case Rule::DN1b: case Rule::DN2a: case Rule::DN2b:
    case Rule::CONa: case Rule::CONb:
      if (!cfg.classical()) return fail_step("classical axiom in a non-classical logic");
      break;
    case Rule::CycA: case Rule::CycB:
      if (!cfg.cyclic()) return fail_step("cyclicity only holds in fcnl/naccll");
      break;
    case Rule::Cut:
      if (cfg.cut == CutMode::Forbidden) return fail_step("cut is forbidden");
      break;
    default: break;
  }

  switch (rule.r) {
    case Rule::Id:
      if (!has_succ || !x.is_leaf() || x.leaf_formula() != s)
        return fail_step("Id: conclusion is not of the form a => a");
      return expect({});
    case Rule::OneR:
      if (!has_succ || !x.is_unit() || s != Formula::one())
        return fail_step("OneR: conclusion is not eps => 1");
      return expect({});
    case Rule::ZeroL:
      if (has_succ || x != Structure::leaf(Formula::zero()))
        return fail_step("ZeroL: conclusion is not 0 =>");
      return expect({});
    case Rule::TopR:
      if (!has_succ || s != Formula::top()) return fail_step("TopR: succedent is not top");
      return expect({});
    case Rule::BotL: {
      if (position) {
        auto ref = need_position();
        if (!ref || ref->inserted || !ref->sub.is_leaf() ||
            ref->sub.leaf_formula() != Formula::bot())
          return fail_step("BotL: position does not name a bot leaf");
        return expect({});
      }
      for (auto& [u, y] : contexts_of(x))
        if (y.is_leaf() && y.leaf_formula() == Formula::bot()) return expect({});
      return fail_step("BotL: antecedent contains no bot");
    }
    case Rule::DN1a: case Rule::DN2a: {
      Formula a;
      if (!has_succ || !x.is_leaf() ||
          !(rule.r == Rule::DN1a ? match_dn1(x.leaf_formula(), a)
                                 : match_dn2(x.leaf_formula(), a)) ||
          a != s)
        return fail_step(std::string(rule_name(rule.r)) + ": shape mismatch");
      return expect({});
    }
    case Rule::DN1b: case Rule::DN2b: {
      Formula a;
      if (!has_succ || !x.is_leaf() ||
          !(rule.r == Rule::DN1b ? match_dn1(s, a) : match_dn2(s, a)) ||
          x.leaf_formula() != a)
        return fail_step(std::string(rule_name(rule.r)) + ": shape mismatch");
      return expect({});
    }
    case Rule::CONa: {
      Formula a, b;
      if (!has_succ || !x.is_leaf() || !match_con_lhs(x.leaf_formula(), a, b) ||
          s != Formula::lres(a, neg_l(b)))
        return fail_step("CONa: shape mismatch");
      return expect({});
    }
    case Rule::CONb: {
      Formula a, b;
      if (!has_succ || !x.is_leaf() || !match_con_rhs(x.leaf_formula(), a, b) ||
          s != Formula::rres(neg_r(a), b))
        return fail_step("CONb: shape mismatch");
      return expect({});
    }
    case Rule::CycA: {
      if (!has_succ || !x.is_leaf()) return fail_step("CycA: shape mismatch");
      Formula f = x.leaf_formula();
      if (f.kind() != Conn::Lres || f.rhs() != Formula::zero() || s != neg_l(f.lhs()))
        return fail_step("CycA: shape mismatch");
      return expect({});
    }
    case Rule::CycB: {
      if (!has_succ || !x.is_leaf()) return fail_step("CycB: shape mismatch");
      Formula f = x.leaf_formula();
      if (f.kind() != Conn::Rres || f.lhs() != Formula::zero() || s != neg_r(f.rhs()))
        return fail_step("CycB: shape mismatch");
      return expect({});
    }
    case Rule::Hyp:
      if (rule.hyp < 0 || static_cast<size_t>(rule.hyp) >= hyps.size())
        return fail_step("Hyp: index out of range");
      if (conclusion != hyps[rule.hyp])
        return fail_step("Hyp: conclusion differs from the hypothesis");
      return expect({});

    case Rule::AndR:
      if (!has_succ || s.kind() != Conn::And) return fail_step("AndR: succedent is not /\\");
      return expect({{x, s.lhs()}, {x, s.rhs()}});
    case Rule::OrR1:
      if (!has_succ || s.kind() != Conn::Or) return fail_step("OrR1: succedent is not \\/");
      return expect({{x, s.lhs()}});
    case Rule::OrR2:
      if (!has_succ || s.kind() != Conn::Or) return fail_step("OrR2: succedent is not \\/");
      return expect({{x, s.rhs()}});
    case Rule::BslR:
      if (!has_succ || s.kind() != Conn::Lres) return fail_step("BslR: succedent is not \\");
      return expect({{Structure::pair(Structure::leaf(s.lhs()), x), s.rhs()}});
    case Rule::SlR:
      if (!has_succ || s.kind() != Conn::Rres) return fail_step("SlR: succedent is not /");
      return expect({{Structure::pair(x, Structure::leaf(s.rhs())), s.lhs()}});
    case Rule::ZeroR:
      if (!has_succ || s != Formula::zero()) return fail_step("ZeroR: succedent is not 0");
      return expect({{x, Formula()}});
    case Rule::BangR:
      if (!has_succ || s.kind() != Conn::Bang) return fail_step("BangR: succedent is not !");
      if (!is_bang_structure(x))
        return fail_step("BangR: antecedent is not a bang-structure");
      return expect({{x, s.lhs()}});
    case Rule::FusR: {
      if (!has_succ || s.kind() != Conn::Fus) return fail_step("FusR: succedent is not *");
      if (premises.size() != 2) return fail_step("FusR: needs two premises");
      if (premises[0].succ != s.lhs() || premises[1].succ != s.rhs())
        return fail_step("FusR: premise succedents do not split the fusion");
      if (Structure::pair(premises[0].ante, premises[1].ante) != x)
        return fail_step("FusR: premise antecedents do not compose to the conclusion");
      return {};
    }

    default: break;  // context rules below
  }

  // Everything past this point needs a position.
  if (!position) return fail_step(std::string(rule_name(rule.r)) + ": missing position");
  auto ref = need_position();
  if (!ref) return fail_step("position does not match the conclusion antecedent");
  if (ref->inserted && rule.r != Rule::Cut)
    return fail_step("unit-insertion positions are only meaningful for Cut");
  const Structure y = ref->sub;
  const Context& u = *position;
  auto prem1 = [&](Structure repl) -> std::vector<Sequent> {
    return {{u.plug(std::move(repl)), s}};
  };

  switch (rule.r) {
    case Rule::OneL:
      if (y != Structure::leaf(Formula::one())) return fail_step("OneL: position is not 1");
      return expect(prem1(Structure::unit()));
    case Rule::FusL: {
      if (!y.is_leaf() || y.leaf_formula().kind() != Conn::Fus)
        return fail_step("FusL: position is not a fusion");
      Formula f = y.leaf_formula();
      return expect(prem1(Structure::pair(Structure::leaf(f.lhs()), Structure::leaf(f.rhs()))));
    }
    case Rule::AndL1: case Rule::AndL2: {
      if (!y.is_leaf() || y.leaf_formula().kind() != Conn::And)
        return fail_step("AndL: position is not /\\");
      Formula f = y.leaf_formula();
      return expect(prem1(Structure::leaf(rule.r == Rule::AndL1 ? f.lhs() : f.rhs())));
    }
    case Rule::OrL: {
      if (!y.is_leaf() || y.leaf_formula().kind() != Conn::Or)
        return fail_step("OrL: position is not \\/");
      Formula f = y.leaf_formula();
      return expect({{u.plug(Structure::leaf(f.lhs())), s},
                     {u.plug(Structure::leaf(f.rhs())), s}});
    }
    case Rule::BangL: {
      if (!y.is_leaf() || y.leaf_formula().kind() != Conn::Bang)
        return fail_step("BangL: position is not !");
      return expect(prem1(Structure::leaf(y.leaf_formula().lhs())));
    }
    case Rule::BslL: {
      Formula f;
      Structure xpart;
      if (y.is_leaf() && y.leaf_formula().kind() == Conn::Lres) {
        f = y.leaf_formula();
        xpart = Structure::unit();
      } else if (y.is_pair() && y.right().is_leaf() &&
                 y.right().leaf_formula().kind() == Conn::Lres) {
        f = y.right().leaf_formula();
        xpart = y.left();
      } else {
        return fail_step("BslL: position is not x . (a\\b)");
      }
      return expect({{xpart, f.lhs()}, {u.plug(Structure::leaf(f.rhs())), s}});
    }
    case Rule::SlL: {
      Formula f;
      Structure xpart;
      if (y.is_leaf() && y.leaf_formula().kind() == Conn::Rres) {
        f = y.leaf_formula();
        xpart = Structure::unit();
      } else if (y.is_pair() && y.left().is_leaf() &&
                 y.left().leaf_formula().kind() == Conn::Rres) {
        f = y.left().leaf_formula();
        xpart = y.right();
      } else {
        return fail_step("SlL: position is not (b/a) . x");
      }
      return expect({{xpart, f.rhs()}, {u.plug(Structure::leaf(f.lhs())), s}});
    }
    case Rule::BangW:
      if (!is_bang_structure(y)) return fail_step("BangW: position is not a bang-structure");
      return expect(prem1(Structure::unit()));
    case Rule::BangC:
      if (!is_bang_structure(y) || y.is_unit())
        return fail_step("BangC: position is not a bang-structure");
      return expect(prem1(Structure::pair(y, y)));
    case Rule::W:
      if (y.is_unit()) return fail_step("W: nothing to weaken");
      return expect(prem1(Structure::unit()));
    case Rule::C:
      if (y.is_unit()) return fail_step("C: nothing to contract");
      return expect(prem1(Structure::pair(y, y)));
    case Rule::E:
      if (!y.is_pair()) return fail_step("E: position is not a pair");
      return expect(prem1(Structure::pair(y.right(), y.left())));
    case Rule::BangEFwd:
      if (!y.is_pair() || !is_bang_structure(y.left()))
        return fail_step("BangE_fwd: position is not x! . y");
      return expect(prem1(Structure::pair(y.right(), y.left())));
    case Rule::BangEBwd:
      if (!y.is_pair() || !is_bang_structure(y.right()))
        return fail_step("BangE_bwd: position is not y . x!");
      return expect(prem1(Structure::pair(y.right(), y.left())));
    case Rule::AFwd: case Rule::BangAFwd: case Rule::BangAsFwd: {
      if (!y.is_pair() || !y.left().is_pair())
        return fail_step(std::string(rule_name(rule.r)) + ": position is not (p . q) . r");
      if (rule.r == Rule::BangAFwd && !is_bang_structure(y.left().left()))
        return fail_step("BangA_fwd: head is not a bang-structure");
      if (rule.r == Rule::BangAsFwd && !is_bang_structure(y.right()))
        return fail_step("BangAs_fwd: tail is not a bang-structure");
      return expect(prem1(Structure::pair(y.left().left(),
                                          Structure::pair(y.left().right(), y.right()))));
    }
    case Rule::ABwd: case Rule::BangABwd: case Rule::BangAsBwd: {
      if (!y.is_pair() || !y.right().is_pair())
        return fail_step(std::string(rule_name(rule.r)) + ": position is not p . (q . r)");
      if (rule.r == Rule::BangABwd && !is_bang_structure(y.left()))
        return fail_step("BangA_bwd: head is not a bang-structure");
      if (rule.r == Rule::BangAsBwd && !is_bang_structure(y.right().right()))
        return fail_step("BangAs_bwd: tail is not a bang-structure");
      return expect(prem1(Structure::pair(Structure::pair(y.left(), y.right().left()),
                                          y.right().right())));
    }
    case Rule::Cut: {
      if (aux.empty()) return fail_step("Cut: missing cut formula");
      if (cfg.cut == CutMode::Analytic) {
        bool allowed = false;
        for (const Formula& g : cfg.cut_formulas)
          if (g == aux) { allowed = true; break; }
        if (!allowed) return fail_step("Cut: formula outside the analytic cut set");
      }
      return expect({{y, aux}, {u.plug(Structure::leaf(aux)), s}});
    }
    default:
      return fail_step(std::string("unhandled rule ") + rule_name(rule.r));
  }
}

namespace {

CheckResult check_rec(const Proof& p, const LogicConfig& cfg, const HypothesisSet& hyps,
                      std::vector<int>& path) {
  std::string wf = well_formed(p.conclusion, cfg);
  if (!wf.empty()) return {false, wf, path};
  std::vector<Sequent> prem;
  prem.reserve(p.premises.size());
  for (const auto& q : p.premises) prem.push_back(q.conclusion);
  CheckResult r = check_step(p.rule, p.conclusion, p.position, p.aux, prem, cfg, hyps);
  if (!r.ok) {
    r.path = path;
    return r;
  }
  for (size_t i = 0; i < p.premises.size(); i++) {
    path.push_back(static_cast<int>(i));
    CheckResult sub = check_rec(p.premises[i], cfg, hyps, path);
    if (!sub.ok) return sub;
    path.pop_back();
  }
  return {};
}

}  // namespace

CheckResult check_proof(const Proof& p, const LogicConfig& cfg, const HypothesisSet& hyps) {
  std::vector<int> path;
  return check_rec(p, cfg, hyps, path);
}

std::vector<Formula> analytic_cut_set(const Sequent& goal, const HypothesisSet& hyps) {
  std::vector<Formula> out;
  std::unordered_set<Formula> seen;
  auto add = [&](const Formula& f, auto&& self) -> void {
    if (f.empty() || !seen.insert(f).second) return;
    out.push_back(f);
    switch (f.kind()) {
      case Conn::Bang: self(f.lhs(), self); break;
      case Conn::And: case Conn::Or: case Conn::Fus: case Conn::Lres: case Conn::Rres:
        self(f.lhs(), self);
        self(f.rhs(), self);
        break;
      default: break;
    }
  };
  auto add_struct = [&](const Structure& x, auto&& self) -> void {
    switch (x.kind()) {
      case StructKind::Unit: return;
      case StructKind::Leaf: add(x.leaf_formula(), add); return;
      case StructKind::Pair:
        self(x.left(), self);
        self(x.right(), self);
        return;
    }
  };
  add_struct(goal.ante, add_struct);
  add(goal.succ, add);
  for (const Sequent& h : hyps) {
    add_struct(h.ante, add_struct);
    add(h.succ, add);
  }
  for (const Sequent& h : hyps)
    add(Formula::lres(rho(h.ante), sigma(h.succ)), add);
  return out;
}

}  // namespace nal
