#pragma once

// Finite residuated lattice-ordered unital groupoids and their modal /
// involutive expansions: axiom checking, formula evaluation, semantic
// entailment, exhaustive enumeration up to isomorphism, and countermodel
// search.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nal/syntax.hpp"

namespace nal {

struct FiniteAlgebra {
  int n = 0;
  std::vector<uint8_t> join, meet, mult, lres, rres;  // n*n row-major
  uint8_t unit = 0;
  std::vector<uint8_t> bang;  // empty when the algebra has no !
  int zero = -1;              // -1 when the algebra has no 0

  bool has_bang() const { return !bang.empty(); }
  bool has_zero() const { return zero >= 0; }
  bool leq(int x, int y) const { return meet[x * n + y] == static_cast<uint8_t>(x); }
  int jn(int x, int y) const { return join[x * n + y]; }
  int mt(int x, int y) const { return meet[x * n + y]; }
  int ml(int x, int y) const { return mult[x * n + y]; }
  int ld(int x, int z) const { return lres[x * n + z]; }  // x \ z
  int rd(int z, int y) const { return rres[z * n + y]; }  // z / y
  int bottom() const;
  int top() const;
  int sim(int x) const { return ld(x, zero); }    // x \ 0
  int minus(int x) const { return rd(zero, x); }  // 0 / x

  // Shape, range, lattice-law, unit and residuation validation; empty = ok.
  std::string validate() const;
  // Residual tables recomputed from mult; returns false if some residual
  // would not exist (mult not join-preserving or not bottom-absorbing).
  bool derive_residuals();
};

enum class AlgKind : uint8_t { RLUG, ModalRLUG, NACILL, InRLUG, CyInRLUG, NACCLLm, NACCLL };

struct AlgebraClass {
  AlgKind kind = AlgKind::RLUG;
  bool e = false, c = false, w = false;

  bool needs_bang() const {
    return kind == AlgKind::ModalRLUG || kind == AlgKind::NACILL ||
           kind == AlgKind::NACCLLm || kind == AlgKind::NACCLL;
  }
  bool needs_zero() const {
    return kind == AlgKind::InRLUG || kind == AlgKind::CyInRLUG ||
           kind == AlgKind::NACCLLm || kind == AlgKind::NACCLL;
  }
  std::string name() const;  // e.g. "nacill+ec"
  static std::optional<AlgebraClass> parse(const std::string& id);
};

struct AxiomReport {
  bool ok = true;
  std::string law;      // violated identity, empty when ok
  std::string witness;  // elements violating it
  explicit operator bool() const { return ok; }
  std::string format() const;
};

AxiomReport check_axioms(const FiniteAlgebra& A, const AlgebraClass& cls);

// The two equivalent axiomatizations of the modal laws: via monotonicity of !
// and via !(x /\ y) <= !y. Both assume a valid rlug reduct.
bool modal_laws_monotone_form(const FiniteAlgebra& A, const std::vector<uint8_t>& bang);
bool modal_laws_meet_form(const FiniteAlgebra& A, const std::vector<uint8_t>& bang);

using Valuation = std::map<std::string, int>;

int eval(const FiniteAlgebra& A, const Valuation& f, const Formula& e);
int eval_structure(const FiniteAlgebra& A, const Valuation& f, const Structure& x);

// Semantic entailment: every valuation satisfying all hypotheses satisfies
// the goal, where x => a reads as rho(x) <= sigma(a).
bool validates(const FiniteAlgebra& A, const HypothesisSet& hyps, const Sequent& goal);
std::optional<Valuation> refuting_valuation(const FiniteAlgebra& A, const HypothesisSet& hyps,
                                            const Sequent& goal);

struct EnumResult {
  bool exhaustive = true;
  long candidates = 0;  // full multiplication tables examined
};

// Exhaustively yields the algebras of the class with carrier size n, up to
// isomorphism, in a deterministic order. The sink returns false to stop
// early. A non-negative budget caps the number of candidate tables.
EnumResult enumerate_algebras(const AlgebraClass& cls, int n,
                              const std::function<bool(const FiniteAlgebra&)>& sink,
                              long budget = -1, int jobs = 1);

struct AlgebraSet {
  std::vector<FiniteAlgebra> algebras;
  bool exhaustive = true;
};

AlgebraSet all_algebras(const AlgebraClass& cls, int n, long budget = -1, int jobs = 1);

// On-disk cache of exhaustive enumerations, shared across runs.
void set_algebra_cache_dir(const std::string& dir);
const AlgebraSet& cached_algebras(const AlgebraClass& cls, int n);

struct Countermodel {
  FiniteAlgebra algebra;
  Valuation valuation;
  int size = 0;
};

struct CountermodelSearch {
  std::optional<Countermodel> found;
  bool exhaustive = true;  // search space fully covered (when nothing found)
};

CountermodelSearch find_countermodel(const HypothesisSet& hyps, const Sequent& goal,
                                     const AlgebraClass& cls, int max_size,
                                     long budget = -1, int jobs = 1);

}  // namespace nal
