#pragma once

// Finite unital residuated frames, Galois algebras of closed sets,
// Dedekind-MacNeille completions with the ! layer, and the rule-shaped frame
// conditions that mirror the cut-free calculi.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nal/algebra.hpp"
#include "nal/calculus.hpp"

namespace nal {

// Two-sorted frame (W, W', N) with W a finite unital groupoid, the nuclear
// relation N as per-element bitmasks over W', residual maps realizing
// x||z and z||y, and a distinguished subalgebra K of W. Frames built from
// algebras have W = W' = the carrier and N = <=.
struct FiniteFrame {
  int nw = 0, nwp = 0;          // |W|, |W'|
  std::vector<uint8_t> op;      // nw*nw
  uint8_t eps = 0;
  std::vector<uint32_t> nrow;   // per x in W: bitmask of {z : x N z}
  std::vector<uint8_t> resl;    // nw*nwp: x || z
  std::vector<uint8_t> resr;    // nwp*nw: z || y
  uint32_t kmask = 0;
  std::vector<uint8_t> sim, minus;  // optional involutive operations on W

  bool has_involution() const { return !sim.empty(); }
  bool N(int x, int z) const { return (nrow[x] >> z) & 1u; }
  int prod(int x, int y) const { return op[x * nw + y]; }

  // Nuclearity of N, K a subalgebra containing eps; empty = ok.
  std::string validate() const;
};

enum class KMode : uint8_t { BangImage, Conditions15 };

// W = W' = carrier, N = <=, residual maps from the algebra; K is either the
// image of ! or the set of elements below 1 that are idempotent, central and
// associate on both sides. Involutive algebras also get x~ = x\0, x- = 0/x.
FiniteFrame frame_of_algebra(const FiniteAlgebra& A, KMode k_mode);

uint32_t galois_rhd(const FiniteFrame& F, uint32_t X);  // X |> subset of W'
uint32_t galois_lhd(const FiniteFrame& F, uint32_t Z);  // Z <| subset of W
uint32_t galois_closure(const FiniteFrame& F, uint32_t X);

struct GaloisAlgebra {
  FiniteAlgebra alg;             // operations on closed-set indices
  std::vector<uint32_t> closed;  // closed sets as W-bitmasks, ascending
  std::vector<int> embed;        // per x in W: index of {x}^<|
  uint32_t kmask = 0;            // the frame's K
};

// Enumerates the Galois-closed subsets and builds all operation tables,
// including !(X) = closure(X /\ K) when K is nontrivial and the involutive
// 0 = {eps~}^<| when the frame carries an involution.
GaloisAlgebra galois_algebra(const FiniteFrame& F, size_t closed_cap = 4096);

struct FrameReport {
  bool ok = true;
  std::string detail;
  explicit operator bool() const { return ok; }
};

// x -> {x}^<| is injective and preserves /\, \/, *, \, /, 1 (and ! when the
// input algebra has one and K was its image; and 0 for involutive algebras).
FrameReport verify_embedding(const FiniteAlgebra& A, const GaloisAlgebra& G);

// The full rule table over all element tuples: [1R], [Id], [1L], the
// connective rules, the K-rules, plus [e]/[c]/[w] exactly when cfg has them.
FrameReport check_gentzen_rules(const FiniteFrame& F, const FiniteAlgebra& A,
                                const LogicConfig& cfg);

// Involutive frame conditions (i)-(iii), optional cyclicity, and the induced
// Galois algebra: 0 = {eps~}^<| = {eps-}^<| passing the involutive axioms.
FrameReport check_involutive_frame(const FiniteFrame& F, bool require_cyclic);

// f(a) in f*(a) subset-of {f(a)}^<| for every formula of depth <= max_depth
// over the given number of variables and every valuation, where f*(p) =
// {f(p)}^<|. Checked over reachable (element, closed-set) pairs.
FrameReport quasi_embedding_check(const FiniteAlgebra& A, const GaloisAlgebra& G,
                                  int max_depth, int num_vars);

}  // namespace nal
