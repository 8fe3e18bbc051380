#pragma once

#include <random>
#include <string>
#include <vector>

#include "nal/algebra.hpp"
#include "nal/calculus.hpp"
#include "nal/syntax.hpp"

namespace nal::testing {

inline LanguageOpts full_lang() { return LanguageOpts{true, true, true, true, true}; }

inline Sequent seq(const std::string& s) { return parse_sequent(s, full_lang()); }
inline Formula fml(const std::string& s) { return parse_formula(s, full_lang()); }
inline Structure str(const std::string& s) { return parse_structure(s, full_lang()); }

inline LogicConfig cfg_fnl() { return LogicConfig{}; }
inline LogicConfig cfg_nacill() {
  LogicConfig c;
  c.base = Base::NACILL;
  return c;
}

struct Gen {
  std::mt19937 rng;
  bool modal = true;
  bool zero = false;
  std::vector<std::string> vars = {"p", "q", "r"};

  explicit Gen(uint32_t seed) : rng(seed) {}

  int pick(int n) { return static_cast<int>(rng() % n); }

  Formula formula(int depth) {
    if (depth <= 0 || pick(4) == 0) {
      int k = pick(static_cast<int>(vars.size()) + (zero ? 2 : 1));
      if (k < static_cast<int>(vars.size())) return Formula::var(vars[k]);
      if (k == static_cast<int>(vars.size())) return Formula::one();
      return Formula::zero();
    }
    int k = pick(modal ? 6 : 5);
    switch (k) {
      case 0: return Formula::and_(formula(depth - 1), formula(depth - 1));
      case 1: return Formula::or_(formula(depth - 1), formula(depth - 1));
      case 2: return Formula::fus(formula(depth - 1), formula(depth - 1));
      case 3: return Formula::lres(formula(depth - 1), formula(depth - 1));
      case 4: return Formula::rres(formula(depth - 1), formula(depth - 1));
      default: return Formula::bang(formula(depth - 1));
    }
  }

  Structure structure(int depth) {
    int k = pick(depth <= 0 ? 2 : 3);
    if (k == 0 && depth >= 2) return Structure::unit();  // rare
    if (k <= 1 || depth <= 0) return Structure::leaf(formula(std::min(depth, 3)));
    return Structure::pair(structure(depth - 1), structure(depth - 1));
  }

  Sequent sequent(int depth) {
    Structure a = structure(depth);
    if (a.is_unit()) a = Structure::leaf(formula(1));
    return Sequent{structure(depth), formula(std::min(depth, 3))};
  }
};

// 2-chain 0 < 1 with multiplication = meet and the given bang.
inline FiniteAlgebra two_chain(std::vector<uint8_t> bang = {}, int zero = -1) {
  FiniteAlgebra A;
  A.n = 2;
  A.join = {0, 1, 1, 1};
  A.meet = {0, 0, 0, 1};
  A.mult = {0, 0, 0, 1};
  A.unit = 1;
  A.bang = std::move(bang);
  A.zero = zero;
  if (!A.derive_residuals()) throw std::logic_error("two_chain not residuated");
  return A;
}

// 3-chain 0 < 1 < 2, unit on top, a*a = 0 for the middle element a = 1.
inline FiniteAlgebra three_chain_nilpotent() {
  FiniteAlgebra A;
  A.n = 3;
  A.join = {0, 1, 2, 1, 1, 2, 2, 2, 2};
  A.meet = {0, 0, 0, 0, 1, 1, 0, 1, 2};
  A.mult = {0, 0, 0, 0, 0, 1, 0, 1, 2};
  A.unit = 2;
  if (!A.derive_residuals()) throw std::logic_error("three_chain not residuated");
  return A;
}

// 3-chain 0 < 1 < 2 with the unit at 1 (mid); forces t*t = t for the top t.
inline FiniteAlgebra three_chain_mid_unit() {
  FiniteAlgebra A;
  A.n = 3;
  A.join = {0, 1, 2, 1, 1, 2, 2, 2, 2};
  A.meet = {0, 0, 0, 0, 1, 1, 0, 1, 2};
  A.mult = {0, 0, 0, 0, 1, 2, 0, 2, 2};
  A.unit = 1;
  if (!A.derive_residuals()) throw std::logic_error("three_chain_mid not residuated");
  return A;
}

}  // namespace nal::testing
