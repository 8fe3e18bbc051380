#include "nal/algebra.hpp"

#include <atomic>
#include <filesystem>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include "nal/algebra_io.hpp"
#include "nal/encoding.hpp"
#include "nal/lattices.hpp"

namespace nal {

// --------------------------------------------------------- FiniteAlgebra

int FiniteAlgebra::bottom() const {
  for (int x = 0; x < n; x++) {
    bool least = true;
    for (int y = 0; y < n && least; y++) least = leq(x, y);
    if (least) return x;
  }
  throw std::logic_error("lattice has no bottom");
}

int FiniteAlgebra::top() const {
  for (int x = 0; x < n; x++) {
    bool greatest = true;
    for (int y = 0; y < n && greatest; y++) greatest = leq(y, x);
    if (greatest) return x;
  }
  throw std::logic_error("lattice has no top");
}

std::string FiniteAlgebra::validate() const {
  if (n <= 0 || n > 64) return "size out of range";
  const size_t nn = static_cast<size_t>(n) * n;
  if (join.size() != nn || meet.size() != nn || mult.size() != nn ||
      lres.size() != nn || rres.size() != nn)
    return "table shape mismatch";
  if (!bang.empty() && bang.size() != static_cast<size_t>(n)) return "bang shape mismatch";
  auto inr = [&](uint8_t v) { return v < n; };
  for (size_t i = 0; i < nn; i++)
    if (!inr(join[i]) || !inr(meet[i]) || !inr(mult[i]) || !inr(lres[i]) || !inr(rres[i]))
      return "table entry out of range";
  for (uint8_t v : bang)
    if (!inr(v)) return "bang entry out of range";
  if (unit >= n) return "unit out of range";
  if (zero >= n) return "zero out of range";
  for (int x = 0; x < n; x++)
    for (int y = 0; y < n; y++) {
      if (jn(x, y) != jn(y, x) || mt(x, y) != mt(y, x)) return "lattice not commutative";
      if (mt(x, jn(x, y)) != x || jn(x, mt(x, y)) != x) return "absorption fails";
      if ((mt(x, y) == x) != (jn(x, y) == y)) return "join/meet disagree on the order";
      for (int z = 0; z < n; z++) {
        if (jn(jn(x, y), z) != jn(x, jn(y, z))) return "join not associative";
        if (mt(mt(x, y), z) != mt(x, mt(y, z))) return "meet not associative";
      }
    }
  for (int x = 0; x < n; x++)
    if (ml(unit, x) != x || ml(x, unit) != x) return "unit law fails";
  for (int x = 0; x < n; x++)
    for (int y = 0; y < n; y++)
      for (int z = 0; z < n; z++) {
        bool p = leq(ml(x, y), z);
        if (p != leq(y, ld(x, z)) || p != leq(x, rd(z, y))) return "residuation law fails";
      }
  return {};
}

bool FiniteAlgebra::derive_residuals() {
  const size_t nn = static_cast<size_t>(n) * n;
  lres.assign(nn, 0);
  rres.assign(nn, 0);
  int bot = bottom();
  for (int x = 0; x < n; x++)
    for (int z = 0; z < n; z++) {
      int acc = bot;
      for (int y = 0; y < n; y++)
        if (leq(ml(x, y), z)) acc = jn(acc, y);
      if (!leq(ml(x, acc), z)) return false;  // maximum not attained
      lres[x * n + z] = static_cast<uint8_t>(acc);
    }
  for (int z = 0; z < n; z++)
    for (int y = 0; y < n; y++) {
      int acc = bot;
      for (int x = 0; x < n; x++)
        if (leq(ml(x, y), z)) acc = jn(acc, x);
      if (!leq(ml(acc, y), z)) return false;
      rres[z * n + y] = static_cast<uint8_t>(acc);
    }
  return true;
}

// ---------------------------------------------------------- AlgebraClass

std::string AlgebraClass::name() const {
  std::string base;
  switch (kind) {
    case AlgKind::RLUG: base = "rlug"; break;
    case AlgKind::ModalRLUG: base = "modal-rlug"; break;
    case AlgKind::NACILL: base = "nacill"; break;
    case AlgKind::InRLUG: base = "inrlug"; break;
    case AlgKind::CyInRLUG: base = "cyinrlug"; break;
    case AlgKind::NACCLLm: base = "naccll-"; break;
    case AlgKind::NACCLL: base = "naccll"; break;
  }
  if (e || c || w) {
    base += '+';
    if (e) base += 'e';
    if (c) base += 'c';
    if (w) base += 'w';
  }
  return base;
}

std::optional<AlgebraClass> AlgebraClass::parse(const std::string& id) {
  AlgebraClass cls;
  std::string base = id;
  if (auto plus = id.find('+'); plus != std::string::npos) {
    base = id.substr(0, plus);
    for (char ch : id.substr(plus + 1)) {
      if (ch == 'e') cls.e = true;
      else if (ch == 'c') cls.c = true;
      else if (ch == 'w') cls.w = true;
      else return std::nullopt;
    }
  }
  if (base == "rlug") cls.kind = AlgKind::RLUG;
  else if (base == "modal-rlug") cls.kind = AlgKind::ModalRLUG;
  else if (base == "nacill") cls.kind = AlgKind::NACILL;
  else if (base == "inrlug") cls.kind = AlgKind::InRLUG;
  else if (base == "cyinrlug") cls.kind = AlgKind::CyInRLUG;
  else if (base == "naccll-") cls.kind = AlgKind::NACCLLm;
  else if (base == "naccll") cls.kind = AlgKind::NACCLL;
  else return std::nullopt;
  return cls;
}

std::string AxiomReport::format() const {
  if (ok) return "ok";
  return law + (witness.empty() ? "" : " at " + witness);
}

// ------------------------------------------------------------ law checks

bool modal_laws_monotone_form(const FiniteAlgebra& A, const std::vector<uint8_t>& b) {
  const int n = A.n;
  if (!A.leq(A.unit, b[A.unit])) return false;
  for (int x = 0; x < n; x++)
    for (int y = 0; y < n; y++) {
      if (A.leq(x, y) && !A.leq(b[x], b[y])) return false;
      if (!A.leq(A.ml(b[x], b[y]), b[A.ml(x, y)])) return false;
    }
  return true;
}

bool modal_laws_meet_form(const FiniteAlgebra& A, const std::vector<uint8_t>& b) {
  const int n = A.n;
  if (!A.leq(A.unit, b[A.unit])) return false;
  for (int x = 0; x < n; x++)
    for (int y = 0; y < n; y++) {
      if (!A.leq(b[A.mt(x, y)], b[y])) return false;
      if (!A.leq(A.ml(b[x], b[y]), b[A.ml(x, y)])) return false;
    }
  return true;
}

namespace {

bool nacill_laws(const FiniteAlgebra& A, const std::vector<uint8_t>& b) {
  const int n = A.n;
  if (!modal_laws_monotone_form(A, b)) return false;
  for (int x = 0; x < n; x++) {
    if (!A.leq(b[x], x)) return false;             // !x <= x
    if (!A.leq(b[x], b[b[x]])) return false;       // !x <= !!x
    if (!A.leq(b[x], A.unit)) return false;        // !x <= 1
    if (!A.leq(b[x], A.ml(b[x], b[x]))) return false;  // !x <= !x!x
  }
  for (int x = 0; x < n; x++)
    for (int y = 0; y < n; y++) {
      if (A.ml(b[x], y) != A.ml(y, b[x])) return false;  // !x central
      for (int z = 0; z < n; z++) {
        if (A.ml(b[x], A.ml(y, z)) != A.ml(A.ml(b[x], y), z)) return false;
        if (A.ml(x, A.ml(y, b[z])) != A.ml(A.ml(x, y), b[z])) return false;
      }
    }
  return true;
}

bool involutive_laws(const FiniteAlgebra& A, int z0) {
  const int n = A.n;
  auto sim = [&](int x) { return A.ld(x, z0); };
  auto minus = [&](int x) { return A.rd(z0, x); };
  for (int x = 0; x < n; x++)
    if (minus(sim(x)) != x || sim(minus(x)) != x) return false;
  for (int x = 0; x < n; x++)
    for (int y = 0; y < n; y++)
      if (A.rd(sim(y), x) != A.ld(y, minus(x))) return false;  // ~y/x = y\-x
  return true;
}

bool cyclic_law(const FiniteAlgebra& A, int z0) {
  for (int x = 0; x < A.n; x++)
    if (A.ld(x, z0) != A.rd(z0, x)) return false;
  return true;
}

bool structural_laws(const FiniteAlgebra& A, const AlgebraClass& cls, std::string* law,
                     std::string* wit) {
  const int n = A.n;
  for (int x = 0; x < n; x++) {
    if (cls.c && !A.leq(x, A.ml(x, x))) {
      if (law) { *law = "x <= xx"; *wit = "x=" + std::to_string(x); }
      return false;
    }
    if (cls.w && !A.leq(x, A.unit)) {
      if (law) { *law = "x <= 1"; *wit = "x=" + std::to_string(x); }
      return false;
    }
    for (int y = 0; y < n; y++)
      if (cls.e && !A.leq(A.ml(x, y), A.ml(y, x))) {
        if (law) { *law = "xy <= yx"; *wit = "x=" + std::to_string(x) + ",y=" + std::to_string(y); }
        return false;
      }
  }
  return true;
}

std::string elems(std::initializer_list<std::pair<const char*, int>> xs) {
  std::string out;
  for (auto& [k, v] : xs) {
    if (!out.empty()) out += ',';
    out += k;
    out += '=';
    out += std::to_string(v);
  }
  return out;
}

}  // namespace

AxiomReport check_axioms(const FiniteAlgebra& A, const AlgebraClass& cls) {
  if (std::string err = A.validate(); !err.empty()) return {false, err, ""};
  const int n = A.n;
  AxiomReport rep;
  auto fail = [&](std::string law, std::string wit) {
    rep.ok = false;
    rep.law = std::move(law);
    rep.witness = std::move(wit);
    return rep;
  };

  if (!structural_laws(A, cls, &rep.law, &rep.witness)) {
    rep.ok = false;
    return rep;
  }

  const bool modal = cls.needs_bang();
  const bool invol = cls.needs_zero();
  if (modal && !A.has_bang()) return fail("algebra has no ! operation", "");
  if (invol && !A.has_zero()) return fail("algebra has no 0 element", "");

  if (modal) {
    if (!A.leq(A.unit, A.bang[A.unit])) return fail("1 <= !1", "");
    for (int x = 0; x < n; x++)
      for (int y = 0; y < n; y++) {
        if (A.leq(x, y) && !A.leq(A.bang[x], A.bang[y]))
          return fail("x <= y implies !x <= !y", elems({{"x", x}, {"y", y}}));
        if (!A.leq(A.ml(A.bang[x], A.bang[y]), A.bang[A.ml(x, y)]))
          return fail("!x!y <= !(xy)", elems({{"x", x}, {"y", y}}));
      }
    // The monotonicity and !(x/\y) <= !y presentations accept the same tables.
    if (modal_laws_monotone_form(A, A.bang) != modal_laws_meet_form(A, A.bang))
      return fail("modal axiomatizations disagree", "");
  }

  if (cls.kind == AlgKind::NACILL || cls.kind == AlgKind::NACCLLm ||
      cls.kind == AlgKind::NACCLL) {
    const auto& b = A.bang;
    for (int x = 0; x < n; x++) {
      if (!A.leq(b[x], x)) return fail("!x <= x", elems({{"x", x}}));
      if (!A.leq(b[x], b[b[x]])) return fail("!x <= !!x", elems({{"x", x}}));
      if (!A.leq(b[x], A.unit)) return fail("!x <= 1", elems({{"x", x}}));
      if (!A.leq(b[x], A.ml(b[x], b[x]))) return fail("!x <= !x!x", elems({{"x", x}}));
    }
    for (int x = 0; x < n; x++)
      for (int y = 0; y < n; y++) {
        if (A.ml(b[x], y) != A.ml(y, b[x]))
          return fail("!x y = y !x", elems({{"x", x}, {"y", y}}));
        for (int z = 0; z < n; z++) {
          if (A.ml(b[x], A.ml(y, z)) != A.ml(A.ml(b[x], y), z))
            return fail("!x(yz) = (!x y)z", elems({{"x", x}, {"y", y}, {"z", z}}));
          if (A.ml(x, A.ml(y, b[z])) != A.ml(A.ml(x, y), b[z]))
            return fail("x(y !z) = (xy)!z", elems({{"x", x}, {"y", y}, {"z", z}}));
        }
      }
  }

  if (invol) {
    for (int x = 0; x < n; x++) {
      if (A.minus(A.sim(x)) != x) return fail("-(~x) = x", elems({{"x", x}}));
      if (A.sim(A.minus(x)) != x) return fail("~(-x) = x", elems({{"x", x}}));
    }
    for (int x = 0; x < n; x++)
      for (int y = 0; y < n; y++)
        if (A.rd(A.sim(y), x) != A.ld(y, A.minus(x)))
          return fail("~y/x = y\\-x", elems({{"x", x}, {"y", y}}));
  }

  if (cls.kind == AlgKind::CyInRLUG || cls.kind == AlgKind::NACCLL) {
    for (int x = 0; x < n; x++)
      if (A.sim(x) != A.minus(x)) return fail("~x = -x", elems({{"x", x}}));
  }

  return rep;
}

// ------------------------------------------------------------ evaluation

int eval(const FiniteAlgebra& A, const Valuation& f, const Formula& e) {
  switch (e.kind()) {
    case Conn::Var: {
      auto it = f.find(e.var_name());
      if (it == f.end()) throw std::runtime_error("valuation misses variable " + e.var_name());
      if (it->second < 0 || it->second >= A.n)
        throw std::runtime_error("valuation out of range for " + e.var_name());
      return it->second;
    }
    case Conn::One: return A.unit;
    case Conn::Zero:
      if (!A.has_zero()) throw std::runtime_error("algebra has no 0");
      return A.zero;
    case Conn::Top: return A.top();
    case Conn::Bot: return A.bottom();
    case Conn::Bang:
      if (!A.has_bang()) throw std::runtime_error("algebra has no !");
      return A.bang[eval(A, f, e.lhs())];
    case Conn::And: return A.mt(eval(A, f, e.lhs()), eval(A, f, e.rhs()));
    case Conn::Or: return A.jn(eval(A, f, e.lhs()), eval(A, f, e.rhs()));
    case Conn::Fus: return A.ml(eval(A, f, e.lhs()), eval(A, f, e.rhs()));
    case Conn::Lres: return A.ld(eval(A, f, e.lhs()), eval(A, f, e.rhs()));
    case Conn::Rres: return A.rd(eval(A, f, e.lhs()), eval(A, f, e.rhs()));
  }
  throw std::logic_error("eval: empty formula");
}

int eval_structure(const FiniteAlgebra& A, const Valuation& f, const Structure& x) {
  switch (x.kind()) {
    case StructKind::Unit: return A.unit;
    case StructKind::Leaf: return eval(A, f, x.leaf_formula());
    case StructKind::Pair:
      return A.ml(eval_structure(A, f, x.left()), eval_structure(A, f, x.right()));
  }
  throw std::logic_error("eval: empty structure");
}

namespace {

void collect_vars(const Formula& e, std::set<std::string>& out) {
  if (e.empty()) return;
  switch (e.kind()) {
    case Conn::Var: out.insert(e.var_name()); return;
    case Conn::Bang: collect_vars(e.lhs(), out); return;
    case Conn::And: case Conn::Or: case Conn::Fus: case Conn::Lres: case Conn::Rres:
      collect_vars(e.lhs(), out);
      collect_vars(e.rhs(), out);
      return;
    default: return;
  }
}

void collect_vars(const Structure& x, std::set<std::string>& out) {
  switch (x.kind()) {
    case StructKind::Unit: return;
    case StructKind::Leaf: collect_vars(x.leaf_formula(), out); return;
    case StructKind::Pair:
      collect_vars(x.left(), out);
      collect_vars(x.right(), out);
      return;
  }
}

// Satisfaction of y => b under f: eval(rho(y)) <= eval(sigma(b)).
bool holds(const FiniteAlgebra& A, const Valuation& f, const Sequent& s) {
  int lhs = eval_structure(A, f, s.ante);
  int rhs = s.empty_succ() ? A.zero : eval(A, f, s.succ);
  if (s.empty_succ() && !A.has_zero())
    throw std::runtime_error("empty succedent needs an algebra with 0");
  return A.leq(lhs, rhs);
}

}  // namespace

std::optional<Valuation> refuting_valuation(const FiniteAlgebra& A, const HypothesisSet& hyps,
                                            const Sequent& goal) {
  std::set<std::string> vars;
  for (const Sequent& h : hyps) {
    collect_vars(h.ante, vars);
    collect_vars(h.succ, vars);
  }
  collect_vars(goal.ante, vars);
  collect_vars(goal.succ, vars);
  std::vector<std::string> names(vars.begin(), vars.end());
  std::vector<int> assign(names.size(), 0);
  for (;;) {
    Valuation f;
    for (size_t i = 0; i < names.size(); i++) f[names[i]] = assign[i];
    bool hyps_ok = true;
    for (const Sequent& h : hyps)
      if (!holds(A, f, h)) { hyps_ok = false; break; }
    if (hyps_ok && !holds(A, f, goal)) return f;
    size_t k = 0;
    for (; k < assign.size(); k++) {
      if (++assign[k] < A.n) break;
      assign[k] = 0;
    }
    if (k == assign.size()) break;
    if (assign.empty()) break;
  }
  return std::nullopt;
}

bool validates(const FiniteAlgebra& A, const HypothesisSet& hyps, const Sequent& goal) {
  return !refuting_valuation(A, hyps, goal).has_value();
}

// ----------------------------------------------------------- enumeration

namespace {

struct LayerKey {
  int zero = -1;
  std::vector<uint8_t> bang;
  bool operator<(const LayerKey& o) const {
    if (zero != o.zero) return zero < o.zero;
    return bang < o.bang;
  }
};

// One (lattice, unit) slice of the search space.
struct Partition {
  const AlgebraClass& cls;
  const Lattice& L;
  int unit;
  long budget;                  // shared via counter when >= 0
  std::atomic<long>* counter;   // full-table candidates
  std::atomic<bool>* stop;

  int n = 0;
  std::vector<std::pair<int, int>> cellpos = {};  // (ji row, ji col)
  std::vector<int> cellval = {};
  std::vector<FiniteAlgebra> out = {};
  bool exhausted = true;

  void run() {
    n = L.n;
    if (cls.w && unit != L.top) return;  // x <= 1 forces the unit on top
    for (int a : L.ji)
      for (int b : L.ji) cellpos.emplace_back(a, b);
    cellval.assign(cellpos.size(), -1);
    assign(0);
  }

  int cell(int a, int b) const {
    for (size_t k = 0; k < cellpos.size(); k++)
      if (cellpos[k].first == a && cellpos[k].second == b) return cellval[k];
    return -1;
  }

  void assign(size_t k) {
    if (stop->load(std::memory_order_relaxed) || !exhausted) return;
    if (k == cellpos.size()) {
      flush();
      return;
    }
    auto [a, b] = cellpos[k];
    for (int v = 0; v < n; v++) {
      if (a == unit && v != b) continue;
      if (b == unit && v != a) continue;
      if (cls.w && !L.le(v, L.meet[a * n + b])) continue;
      if (cls.c && a == b && !L.le(a, v)) continue;
      bool ok = true;
      for (size_t k2 = 0; k2 < k && ok; k2++) {
        auto [a2, b2] = cellpos[k2];
        if (L.le(a2, a) && L.le(b2, b) && !L.le(cellval[k2], v)) ok = false;
        if (L.le(a, a2) && L.le(b, b2) && !L.le(v, cellval[k2])) ok = false;
        if (cls.e && a2 == b && b2 == a && cellval[k2] != v) ok = false;
      }
      if (!ok) continue;
      cellval[k] = v;
      assign(k + 1);
      cellval[k] = -1;
      if (stop->load(std::memory_order_relaxed) || !exhausted) return;
    }
  }

  void flush() {
    if (budget >= 0 && counter->fetch_add(1) + 1 > budget) {
      exhausted = false;
      return;
    }
    if (budget < 0) counter->fetch_add(1);
    FiniteAlgebra A;
    A.n = n;
    A.join = L.join;
    A.meet = L.meet;
    A.unit = static_cast<uint8_t>(unit);
    A.mult.assign(n * n, 0);
    for (int x = 0; x < n; x++)
      for (int y = 0; y < n; y++) {
        int acc = L.bottom;
        for (int i : L.ji_below[x])
          for (int j : L.ji_below[y]) acc = L.join[acc * n + cell(i, j)];
        A.mult[x * n + y] = static_cast<uint8_t>(acc);
      }
    for (int x = 0; x < n; x++)
      if (A.ml(A.unit, x) != x || A.ml(x, A.unit) != x) return;
    if (!structural_laws(A, cls, nullptr, nullptr)) return;
    if (!A.derive_residuals()) return;

    // Canonical form under the lattice automorphisms: reject any base whose
    // (unit, mult) image is lexicographically smaller; automorphisms fixing
    // the base make up the stabilizer used for the bang/zero layers.
    std::vector<const std::vector<uint8_t>*> stab;
    for (const auto& pi : L.autos) {
      int u2 = pi[unit];
      if (u2 < unit) return;
      if (u2 > unit) continue;
      std::vector<uint8_t> pm(n * n);
      for (int x = 0; x < n; x++)
        for (int y = 0; y < n; y++)
          pm[pi[x] * n + pi[y]] = pi[A.mult[x * n + y]];
      if (pm < A.mult) return;
      if (pm == A.mult) stab.push_back(&pi);
    }

    emit_layers(A, stab);
  }

  void emit_layers(const FiniteAlgebra& A, const std::vector<const std::vector<uint8_t>*>& stab) {
    auto canonical_layer = [&](const LayerKey& key) {
      for (const auto* pis : stab) {
        const auto& pi = *pis;
        LayerKey img;
        img.zero = key.zero >= 0 ? pi[key.zero] : -1;
        if (!key.bang.empty()) {
          img.bang.resize(n);
          for (int x = 0; x < n; x++) img.bang[pi[x]] = pi[key.bang[x]];
        }
        if (img < key) return false;
      }
      return true;
    };

    auto emit = [&](int z0, const std::vector<uint8_t>& bang) {
      FiniteAlgebra B = A;
      B.zero = z0;
      B.bang = bang;
      out.push_back(std::move(B));
    };

    const bool modal = cls.needs_bang();
    const bool invol = cls.needs_zero();
    if (!modal && !invol) {
      out.push_back(A);
      return;
    }

    std::vector<int> zeros;
    if (invol) {
      for (int z0 = 0; z0 < n; z0++)
        if (involutive_laws(A, z0) &&
            (!(cls.kind == AlgKind::CyInRLUG || cls.kind == AlgKind::NACCLL) ||
             cyclic_law(A, z0)))
          zeros.push_back(z0);
    } else {
      zeros.push_back(-1);
    }
    if (zeros.empty()) return;

    if (!modal) {
      for (int z0 : zeros)
        if (canonical_layer({z0, {}})) emit(z0, {});
      return;
    }

    std::vector<uint8_t> bang(n, 0);
    for (;;) {
      bool laws_ok = (cls.kind == AlgKind::ModalRLUG) ? modal_laws_monotone_form(A, bang)
                                                      : nacill_laws(A, bang);
      if (laws_ok) {
        for (int z0 : zeros)
          if (canonical_layer({z0, bang})) emit(z0, bang);
      }
      int k = n - 1;
      for (; k >= 0; k--) {
        if (++bang[k] < n) break;
        bang[k] = 0;
      }
      if (k < 0) break;
    }
  }
};

}  // namespace

EnumResult enumerate_algebras(const AlgebraClass& cls, int n,
                              const std::function<bool(const FiniteAlgebra&)>& sink,
                              long budget, int jobs) {
  const auto& cat = lattice_catalog(n);
  std::atomic<long> counter{0};
  std::atomic<bool> stop{false};
  std::vector<Partition> parts;
  for (const Lattice& L : cat)
    for (int u = 0; u < n; u++)
      parts.push_back(Partition{.cls = cls,
                                .L = L,
                                .unit = u,
                                .budget = budget,
                                .counter = &counter,
                                .stop = &stop});

  if (jobs <= 1) {
    EnumResult res;
    for (auto& p : parts) {
      p.run();
      if (!p.exhausted) res.exhaustive = false;
      for (auto& A : p.out)
        if (!sink(A)) {
          stop = true;
          res.candidates = counter.load();
          return res;
        }
      if (!res.exhaustive) break;
    }
    res.candidates = counter.load();
    return res;
  }

  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  int nthreads = std::min<int>(jobs, static_cast<int>(parts.size()));
  for (int t = 0; t < nthreads; t++)
    pool.emplace_back([&] {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= parts.size()) return;
        parts[i].run();
      }
    });
  for (auto& th : pool) th.join();
  EnumResult res;
  res.candidates = counter.load();
  for (auto& p : parts) {
    if (!p.exhausted) res.exhaustive = false;
    for (auto& A : p.out)
      if (!sink(A)) return res;
  }
  return res;
}

AlgebraSet all_algebras(const AlgebraClass& cls, int n, long budget, int jobs) {
  AlgebraSet set;
  EnumResult r = enumerate_algebras(
      cls, n,
      [&](const FiniteAlgebra& A) {
        set.algebras.push_back(A);
        return true;
      },
      budget, jobs);
  set.exhaustive = r.exhaustive;
  return set;
}

// ---------------------------------------------------------------- cache

namespace {

std::mutex g_cache_mu;
std::string g_cache_dir;
std::map<std::pair<std::string, int>, AlgebraSet> g_cache;

std::string cache_dir_locked() {
  if (g_cache_dir.empty()) {
    if (const char* env = std::getenv("NAL_CACHE_DIR"))
      g_cache_dir = env;
    else
      g_cache_dir = "nal-cache";
  }
  return g_cache_dir;
}

}  // namespace

void set_algebra_cache_dir(const std::string& dir) {
  std::lock_guard lock(g_cache_mu);
  g_cache_dir = dir;
  g_cache.clear();
}

const AlgebraSet& cached_algebras(const AlgebraClass& cls, int n) {
  std::lock_guard lock(g_cache_mu);
  auto key = std::make_pair(cls.name(), n);
  if (auto it = g_cache.find(key); it != g_cache.end()) return it->second;
  std::string dir = cache_dir_locked();
  std::string path = dir + "/" + cls.name() + "-" + std::to_string(n) + ".alg";
  if (auto loaded = load_algebra_set(path, cls.name(), n); loaded && loaded->exhaustive)
    return g_cache.emplace(key, std::move(*loaded)).first->second;
  AlgebraSet fresh = all_algebras(cls, n);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (!ec) save_algebra_set(path, cls.name(), n, fresh);
  return g_cache.emplace(key, std::move(fresh)).first->second;
}

// ---------------------------------------------------------- countermodel

CountermodelSearch find_countermodel(const HypothesisSet& hyps, const Sequent& goal,
                                     const AlgebraClass& cls, int max_size, long budget,
                                     int jobs) {
  CountermodelSearch res;
  for (int size = 1; size <= max_size; size++) {
    std::vector<const FiniteAlgebra*> algs;
    AlgebraSet streamed;
    if (budget < 0) {
      const AlgebraSet& set = cached_algebras(cls, size);
      for (const auto& A : set.algebras) algs.push_back(&A);
    } else {
      streamed = all_algebras(cls, size, budget);
      if (!streamed.exhaustive) res.exhaustive = false;
      for (const auto& A : streamed.algebras) algs.push_back(&A);
    }

    if (jobs <= 1 || algs.size() < 2) {
      for (const FiniteAlgebra* A : algs)
        if (auto f = refuting_valuation(*A, hyps, goal)) {
          res.found = Countermodel{*A, std::move(*f), size};
          return res;
        }
    } else {
      std::atomic<size_t> next{0};
      std::atomic<size_t> best{algs.size()};
      std::vector<std::thread> pool;
      int nthreads = std::min<int>(jobs, static_cast<int>(algs.size()));
      for (int t = 0; t < nthreads; t++)
        pool.emplace_back([&] {
          for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= algs.size() || i >= best.load()) return;
            if (refuting_valuation(*algs[i], hyps, goal)) {
              size_t cur = best.load();
              while (i < cur && !best.compare_exchange_weak(cur, i)) {
              }
              return;
            }
          }
        });
      for (auto& th : pool) th.join();
      if (best.load() < algs.size()) {
        const FiniteAlgebra* A = algs[best.load()];
        auto f = refuting_valuation(*A, hyps, goal);
        res.found = Countermodel{*A, std::move(*f), size};
        return res;
      }
    }
    if (!res.exhaustive) break;  // budget ran out at this size
  }
  return res;
}

}  // namespace nal
