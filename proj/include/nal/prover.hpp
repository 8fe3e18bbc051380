#pragma once

// Bounded backward proof search. Cut-free by default; loop avoidance prunes
// any branch that repeats a sequent, and failures that did not depend on the
// path are memoized per remaining depth.

#include <optional>

#include "nal/calculus.hpp"

namespace nal {

struct SearchOptions {
  int depth = 24;
  long node_budget = 1'000'000;
  int contraction_limit = -1;  // per branch; -1 means: equal to depth
  bool iterative_deepening = true;
};

enum class SearchStatus { Proved, NotFound, BudgetExceeded };

struct SearchResult {
  SearchStatus status = SearchStatus::NotFound;
  std::optional<Proof> proof;
  long nodes = 0;
  int depth_used = 0;  // smallest height bound at which the proof was found

  bool proved() const { return status == SearchStatus::Proved; }
};

SearchResult prove(const Sequent& goal, const LogicConfig& cfg, const SearchOptions& opts = {});

// Hypothesis search. Unless the caller disables the promotion, a Forbidden cut
// policy is upgraded to Analytic over analytic_cut_set(goal, hyps); an
// Analytic policy with an empty formula set is filled the same way.
SearchResult prove_from(const HypothesisSet& hyps, const Sequent& goal, LogicConfig cfg,
                        const SearchOptions& opts = {}, bool promote_cut_default = true);

}  // namespace nal
