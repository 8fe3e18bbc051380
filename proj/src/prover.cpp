#include "nal/prover.hpp"

#include <climits>
#include <unordered_map>

namespace nal {

namespace {

enum class Res : uint8_t { Proved, Fail, Abort };

// Failure results carry the lowest stack level of any ancestor their
// exploration was blocked on. INT_MAX means the failure is absolute for the
// given height bound and may be memoized; anything lower is path-relative.
struct Out {
  Res res;
  int taint = INT_MAX;
};

struct Searcher {
  const LogicConfig& cfg;
  const HypothesisSet& hyps;
  long budget;
  int contraction_limit;

  long nodes = 0;
  std::unordered_map<Sequent, int> failed_depth;  // no proof of height <= value
  std::unordered_map<Sequent, int> path_level;

  Out search(const Sequent& goal, int remaining, int contractions, Proof& out) {
    if (remaining <= 0) return {Res::Fail};
    if (++nodes > budget) return {Res::Abort, 0};
    if (auto it = failed_depth.find(goal); it != failed_depth.end() && it->second >= remaining)
      return {Res::Fail};
    if (auto it = path_level.find(goal); it != path_level.end())
      return {Res::Fail, it->second};

    const int level = static_cast<int>(path_level.size());
    path_level.emplace(goal, level);
    int taint = INT_MAX;
    auto instances = rule_instances_backward(goal, cfg, hyps);
    for (const auto& inst : instances) {
      const bool is_contraction = inst.rule.r == Rule::C || inst.rule.r == Rule::BangC;
      if (is_contraction && contractions >= contraction_limit) {
        taint = -1;  // skipped work: never memoize this failure
        continue;
      }
      if (remaining == 1 && !inst.premises.empty()) continue;
      std::vector<Proof> sub;
      sub.reserve(inst.premises.size());
      bool ok = true;
      for (const Sequent& prem : inst.premises) {
        Proof q;
        Out r = search(prem, remaining - 1, contractions + (is_contraction ? 1 : 0), q);
        if (r.res == Res::Abort) {
          path_level.erase(goal);
          return r;
        }
        if (r.res != Res::Proved) {
          taint = std::min(taint, r.taint);
          ok = false;
          break;
        }
        sub.push_back(std::move(q));
      }
      if (ok) {
        path_level.erase(goal);
        out = Proof{goal, inst.rule, std::move(sub), inst.position, inst.aux};
        return {Res::Proved};
      }
    }
    path_level.erase(goal);
    if (taint >= level) {
      // Loops, if any, passed through this goal itself: a height-minimal
      // proof never repeats its own conclusion, so the failure is absolute.
      auto& slot = failed_depth[goal];
      slot = std::max(slot, remaining);
      return {Res::Fail};
    }
    return {Res::Fail, taint};
  }
};

SearchResult run(const Sequent& goal, const LogicConfig& cfg, const HypothesisSet& hyps,
                 const SearchOptions& opts) {
  SearchOptions o = opts;
  if (o.contraction_limit < 0) o.contraction_limit = o.depth;
  Searcher s{cfg, hyps, o.node_budget, o.contraction_limit};
  SearchResult result;
  const int start = o.iterative_deepening ? 1 : o.depth;
  for (int d = start; d <= o.depth; d++) {
    Proof p;
    Out r = s.search(goal, d, 0, p);
    if (r.res == Res::Proved) {
      result.status = SearchStatus::Proved;
      result.proof = std::move(p);
      result.depth_used = d;
      break;
    }
    if (r.res == Res::Abort) {
      result.status = SearchStatus::BudgetExceeded;
      break;
    }
  }
  result.nodes = s.nodes;
  return result;
}

}  // namespace

SearchResult prove(const Sequent& goal, const LogicConfig& cfg, const SearchOptions& opts) {
  LogicConfig c = cfg;
  if (c.cut != CutMode::Forbidden && c.cut_formulas.empty())
    c.cut_formulas = analytic_cut_set(goal, {});
  return run(goal, c, {}, opts);
}

SearchResult prove_from(const HypothesisSet& hyps, const Sequent& goal, LogicConfig cfg,
                        const SearchOptions& opts, bool promote_cut_default) {
  if (promote_cut_default && cfg.cut == CutMode::Forbidden) cfg.cut = CutMode::Analytic;
  if (cfg.cut != CutMode::Forbidden && cfg.cut_formulas.empty())
    cfg.cut_formulas = analytic_cut_set(goal, hyps);
  return run(goal, cfg, hyps, opts);
}

}  // namespace nal
