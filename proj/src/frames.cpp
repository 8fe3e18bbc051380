#include "nal/frames.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace nal {

namespace {

std::string el(std::initializer_list<std::pair<const char*, int>> xs) {
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

std::string FiniteFrame::validate() const {
  if (nw <= 0 || nw > 32 || nwp <= 0 || nwp > 32) return "frame size out of range";
  for (int x = 0; x < nw; x++)
    for (int y = 0; y < nw; y++) {
      if (prod(x, y) >= nw) return "op out of range";
      for (int z = 0; z < nwp; z++) {
        bool p = N(prod(x, y), z);
        if (p != N(y, resl[x * nwp + z]))
          return "nuclearity fails on the left at " + el({{"x", x}, {"y", y}, {"z", z}});
        if (p != N(x, resr[z * nw + y]))
          return "nuclearity fails on the right at " + el({{"x", x}, {"y", y}, {"z", z}});
      }
    }
  for (int x = 0; x < nw; x++)
    if (prod(eps, x) != x || prod(x, eps) != x) return "eps is not a unit";
  if (!((kmask >> eps) & 1u)) return "K does not contain eps";
  for (int x = 0; x < nw; x++)
    for (int y = 0; y < nw; y++)
      if (((kmask >> x) & 1u) && ((kmask >> y) & 1u) && !((kmask >> prod(x, y)) & 1u))
        return "K is not closed under the product at " + el({{"x", x}, {"y", y}});
  if (has_involution()) {
    if (sim.size() != static_cast<size_t>(nw) || minus.size() != static_cast<size_t>(nw))
      return "involution shape mismatch";
  }
  return {};
}

FiniteFrame frame_of_algebra(const FiniteAlgebra& A, KMode k_mode) {
  FiniteFrame F;
  F.nw = F.nwp = A.n;
  F.op = A.mult;
  F.eps = A.unit;
  F.nrow.assign(A.n, 0);
  for (int x = 0; x < A.n; x++)
    for (int z = 0; z < A.n; z++)
      if (A.leq(x, z)) F.nrow[x] |= 1u << z;
  F.resl = A.lres;
  F.resr = A.rres;
  if (k_mode == KMode::BangImage) {
    if (!A.has_bang()) throw std::invalid_argument("k-mode bang needs a ! operation");
    for (int x = 0; x < A.n; x++) F.kmask |= 1u << A.bang[x];
  } else {
    for (int x = 0; x < A.n; x++) {
      if (!A.leq(x, A.unit)) continue;
      if (A.ml(x, x) != x) continue;
      bool ok = true;
      for (int a = 0; a < A.n && ok; a++) {
        if (A.ml(x, a) != A.ml(a, x)) ok = false;
        for (int b = 0; b < A.n && ok; b++) {
          if (A.ml(x, A.ml(a, b)) != A.ml(A.ml(x, a), b)) ok = false;
          if (A.ml(A.ml(a, b), x) != A.ml(a, A.ml(b, x))) ok = false;
        }
      }
      if (ok) F.kmask |= 1u << x;
    }
  }
  if (A.has_zero()) {
    F.sim.resize(A.n);
    F.minus.resize(A.n);
    for (int x = 0; x < A.n; x++) {
      F.sim[x] = static_cast<uint8_t>(A.sim(x));
      F.minus[x] = static_cast<uint8_t>(A.minus(x));
    }
  }
  return F;
}

uint32_t galois_rhd(const FiniteFrame& F, uint32_t X) {
  uint32_t acc = (F.nwp == 32) ? ~0u : ((1u << F.nwp) - 1);
  for (int x = 0; x < F.nw; x++)
    if ((X >> x) & 1u) acc &= F.nrow[x];
  return acc;
}

uint32_t galois_lhd(const FiniteFrame& F, uint32_t Z) {
  uint32_t acc = 0;
  for (int x = 0; x < F.nw; x++) {
    bool in = true;
    for (int z = 0; z < F.nwp && in; z++)
      if ((Z >> z) & 1u) in = F.N(x, z);
    if (in) acc |= 1u << x;
  }
  return acc;
}

uint32_t galois_closure(const FiniteFrame& F, uint32_t X) {
  return galois_lhd(F, galois_rhd(F, X));
}

GaloisAlgebra galois_algebra(const FiniteFrame& F, size_t closed_cap) {
  std::set<uint32_t> closed_set;
  if (F.nwp <= 12) {
    for (uint32_t Z = 0; Z < (1u << F.nwp); Z++) closed_set.insert(galois_lhd(F, Z));
  } else {
    // All closed sets are intersections of principal ones.
    closed_set.insert(galois_lhd(F, 0));
    std::vector<uint32_t> work(closed_set.begin(), closed_set.end());
    for (int z = 0; z < F.nwp; z++) work.push_back(galois_lhd(F, 1u << z));
    for (uint32_t w : work) closed_set.insert(w);
    for (bool grew = true; grew;) {
      grew = false;
      std::vector<uint32_t> snapshot(closed_set.begin(), closed_set.end());
      for (uint32_t a : snapshot)
        for (uint32_t b : snapshot)
          if (closed_set.insert(a & b).second) grew = true;
      if (closed_set.size() > closed_cap)
        throw std::runtime_error("closed-set cap exceeded");
    }
  }
  if (closed_set.size() > closed_cap) throw std::runtime_error("closed-set cap exceeded");
  if (closed_set.size() > 255) throw std::runtime_error("too many closed sets for one algebra");

  GaloisAlgebra G;
  G.closed.assign(closed_set.begin(), closed_set.end());
  std::map<uint32_t, int> index;
  for (size_t i = 0; i < G.closed.size(); i++) index[G.closed[i]] = static_cast<int>(i);
  auto idx = [&](uint32_t mask) {
    auto it = index.find(mask);
    if (it == index.end()) throw std::logic_error("operation left the closed-set lattice");
    return it->second;
  };

  const int m = static_cast<int>(G.closed.size());
  FiniteAlgebra& alg = G.alg;
  alg.n = m;
  alg.join.assign(m * m, 0);
  alg.meet.assign(m * m, 0);
  alg.mult.assign(m * m, 0);
  alg.lres.assign(m * m, 0);
  alg.rres.assign(m * m, 0);
  for (int i = 0; i < m; i++)
    for (int j = 0; j < m; j++) {
      uint32_t X = G.closed[i], Y = G.closed[j];
      alg.meet[i * m + j] = static_cast<uint8_t>(idx(X & Y));
      alg.join[i * m + j] = static_cast<uint8_t>(idx(galois_closure(F, X | Y)));
      uint32_t prodset = 0;
      for (int x = 0; x < F.nw; x++)
        if ((X >> x) & 1u)
          for (int y = 0; y < F.nw; y++)
            if ((Y >> y) & 1u) prodset |= 1u << F.prod(x, y);
      alg.mult[i * m + j] = static_cast<uint8_t>(idx(galois_closure(F, prodset)));
      uint32_t ldiv = 0, rdiv = 0;
      for (int w = 0; w < F.nw; w++) {
        bool inl = true, inr = true;
        for (int x = 0; x < F.nw && (inl || inr); x++) {
          if ((X >> x) & 1u) {
            if (!((Y >> F.prod(x, w)) & 1u)) inl = false;
            if (!((Y >> F.prod(w, x)) & 1u)) inr = false;
          }
        }
        if (inl) ldiv |= 1u << w;
        if (inr) rdiv |= 1u << w;
      }
      alg.lres[i * m + j] = static_cast<uint8_t>(idx(ldiv));
      alg.rres[i * m + j] = static_cast<uint8_t>(idx(rdiv));
    }
  alg.unit = static_cast<uint8_t>(idx(galois_closure(F, 1u << F.eps)));
  alg.bang.resize(m);
  for (int i = 0; i < m; i++)
    alg.bang[i] = static_cast<uint8_t>(idx(galois_closure(F, G.closed[i] & F.kmask)));
  if (F.has_involution()) {
    uint32_t zset = galois_lhd(F, 1u << F.sim[F.eps]);
    alg.zero = idx(zset);
  }
  G.kmask = F.kmask;
  G.embed.resize(F.nw);
  for (int x = 0; x < F.nw; x++) G.embed[x] = idx(galois_lhd(F, 1u << x));
  return G;
}

FrameReport verify_embedding(const FiniteAlgebra& A, const GaloisAlgebra& G) {
  const int n = A.n;
  const int m = G.alg.n;
  if (static_cast<int>(G.embed.size()) != n) return {false, "embedding map has wrong size"};
  for (int x = 0; x < n; x++)
    for (int y = x + 1; y < n; y++)
      if (G.embed[x] == G.embed[y])
        return {false, "not injective: " + el({{"x", x}, {"y", y}})};
  auto h = [&](int x) { return G.embed[x]; };
  for (int x = 0; x < n; x++)
    for (int y = 0; y < n; y++) {
      if (h(A.mt(x, y)) != G.alg.mt(h(x), h(y)))
        return {false, "/\\ not preserved at " + el({{"x", x}, {"y", y}})};
      if (h(A.jn(x, y)) != G.alg.jn(h(x), h(y)))
        return {false, "\\/ not preserved at " + el({{"x", x}, {"y", y}})};
      if (h(A.ml(x, y)) != G.alg.ml(h(x), h(y)))
        return {false, "* not preserved at " + el({{"x", x}, {"y", y}})};
      if (h(A.ld(x, y)) != G.alg.ld(h(x), h(y)))
        return {false, "\\ not preserved at " + el({{"x", x}, {"y", y}})};
      if (h(A.rd(x, y)) != G.alg.rd(h(x), h(y)))
        return {false, "/ not preserved at " + el({{"x", x}, {"y", y}})};
    }
  if (h(A.unit) != G.alg.unit) return {false, "1 not preserved"};
  if (A.has_bang()) {
    uint32_t image = 0;
    for (int x = 0; x < n; x++) image |= 1u << A.bang[x];
    // ! transfers along h exactly when K was taken to be the image of !.
    if (G.kmask == image)
      for (int x = 0; x < n; x++)
        if (h(A.bang[x]) != G.alg.bang[h(x)])
          return {false, "! not preserved at " + el({{"x", x}})};
  }
  if (A.has_zero() && G.alg.has_zero() && h(A.zero) != G.alg.zero)
    return {false, "0 not preserved"};
  if (m < n) return {false, "completion smaller than the algebra"};
  return {};
}

namespace {

struct GentzenChecker {
  const FiniteFrame& F;
  const FiniteAlgebra& A;
  int n;

  std::vector<int> kelems;

  FrameReport fail(const char* rule, std::string wit) {
    return {false, std::string(rule) + " fails at " + wit};
  }

  FrameReport run(const LogicConfig& cfg) {
    for (int x = 0; x < n; x++)
      if ((F.kmask >> x) & 1u) kelems.push_back(x);

    // [1R]
    if (!F.N(F.eps, A.unit)) return fail("[1R]", "eps");
    // [Id]
    for (int a = 0; a < n; a++)
      if (!F.N(a, a)) return fail("[Id]", el({{"a", a}}));
    // [1L]
    for (int z = 0; z < n; z++)
      if (F.N(F.eps, z) && !F.N(A.unit, z)) return fail("[1L]", el({{"z", z}}));
    // [*L]
    for (int a = 0; a < n; a++)
      for (int b = 0; b < n; b++)
        for (int z = 0; z < n; z++)
          if (F.N(F.prod(a, b), z) && !F.N(A.ml(a, b), z))
            return fail("[*L]", el({{"a", a}, {"b", b}, {"z", z}}));
    // [*R]
    for (int x = 0; x < n; x++)
      for (int y = 0; y < n; y++)
        for (int a = 0; a < n; a++)
          for (int b = 0; b < n; b++)
            if (F.N(x, a) && F.N(y, b) && !F.N(F.prod(x, y), A.ml(a, b)))
              return fail("[*R]", el({{"x", x}, {"y", y}, {"a", a}, {"b", b}}));
    // [\L]
    for (int x = 0; x < n; x++)
      for (int a = 0; a < n; a++)
        for (int b = 0; b < n; b++)
          for (int z = 0; z < n; z++)
            if (F.N(x, a) && F.N(b, z) && !F.N(F.prod(x, A.ld(a, b)), z))
              return fail("[\\L]", el({{"x", x}, {"a", a}, {"b", b}, {"z", z}}));
    // [\R]
    for (int x = 0; x < n; x++)
      for (int a = 0; a < n; a++)
        for (int b = 0; b < n; b++)
          if (F.N(F.prod(a, x), b) && !F.N(x, A.ld(a, b)))
            return fail("[\\R]", el({{"x", x}, {"a", a}, {"b", b}}));
    // [/L]
    for (int x = 0; x < n; x++)
      for (int a = 0; a < n; a++)
        for (int b = 0; b < n; b++)
          for (int z = 0; z < n; z++)
            if (F.N(x, a) && F.N(b, z) && !F.N(F.prod(A.rd(b, a), x), z))
              return fail("[/L]", el({{"x", x}, {"a", a}, {"b", b}, {"z", z}}));
    // [/R]
    for (int x = 0; x < n; x++)
      for (int a = 0; a < n; a++)
        for (int b = 0; b < n; b++)
          if (F.N(F.prod(x, a), b) && !F.N(x, A.rd(b, a)))
            return fail("[/R]", el({{"x", x}, {"a", a}, {"b", b}}));
    // [/\L] both projections
    for (int a = 0; a < n; a++)
      for (int b = 0; b < n; b++)
        for (int z = 0; z < n; z++) {
          if (F.N(a, z) && !F.N(A.mt(a, b), z))
            return fail("[/\\L1]", el({{"a", a}, {"b", b}, {"z", z}}));
          if (F.N(b, z) && !F.N(A.mt(a, b), z))
            return fail("[/\\L2]", el({{"a", a}, {"b", b}, {"z", z}}));
        }
    // [/\R]
    for (int x = 0; x < n; x++)
      for (int a = 0; a < n; a++)
        for (int b = 0; b < n; b++)
          if (F.N(x, a) && F.N(x, b) && !F.N(x, A.mt(a, b)))
            return fail("[/\\R]", el({{"x", x}, {"a", a}, {"b", b}}));
    // [\/L]
    for (int a = 0; a < n; a++)
      for (int b = 0; b < n; b++)
        for (int z = 0; z < n; z++)
          if (F.N(a, z) && F.N(b, z) && !F.N(A.jn(a, b), z))
            return fail("[\\/L]", el({{"a", a}, {"b", b}, {"z", z}}));
    // [\/R] both injections
    for (int x = 0; x < n; x++)
      for (int a = 0; a < n; a++)
        for (int b = 0; b < n; b++) {
          if (F.N(x, a) && !F.N(x, A.jn(a, b)))
            return fail("[\\/R1]", el({{"x", x}, {"a", a}, {"b", b}}));
          if (F.N(x, b) && !F.N(x, A.jn(a, b)))
            return fail("[\\/R2]", el({{"x", x}, {"a", a}, {"b", b}}));
        }

    if (cfg.modal()) {
      if (!A.has_bang()) return {false, "modal rules need a ! operation"};
      // [!L]
      for (int a = 0; a < n; a++)
        for (int z = 0; z < n; z++)
          if (F.N(a, z) && !F.N(A.bang[a], z))
            return fail("[!L]", el({{"a", a}, {"z", z}}));
      // [!R]
      for (int k : kelems)
        for (int a = 0; a < n; a++)
          if (F.N(k, a) && !F.N(k, A.bang[a]))
            return fail("[!R]", el({{"k", k}, {"a", a}}));
      // [K-w]
      for (int k : kelems)
        for (int z = 0; z < n; z++)
          if (F.N(F.eps, z) && !F.N(k, z)) return fail("[K-w]", el({{"k", k}, {"z", z}}));
      // [K-c]
      for (int k : kelems)
        for (int z = 0; z < n; z++)
          if (F.N(F.prod(k, k), z) && !F.N(k, z))
            return fail("[K-c]", el({{"k", k}, {"z", z}}));
      // [K-e] both directions
      for (int k : kelems)
        for (int y = 0; y < n; y++)
          for (int z = 0; z < n; z++)
            if (F.N(F.prod(k, y), z) != F.N(F.prod(y, k), z))
              return fail("[K-e]", el({{"k", k}, {"y", y}, {"z", z}}));
      // [K-a]
      for (int k : kelems)
        for (int x = 0; x < n; x++)
          for (int y = 0; y < n; y++)
            for (int z = 0; z < n; z++)
              if (F.N(F.prod(k, F.prod(x, y)), z) != F.N(F.prod(F.prod(k, x), y), z))
                return fail("[K-a]", el({{"k", k}, {"x", x}, {"y", y}, {"z", z}}));
      // [K-a*]
      for (int k : kelems)
        for (int x = 0; x < n; x++)
          for (int y = 0; y < n; y++)
            for (int z = 0; z < n; z++)
              if (F.N(F.prod(x, F.prod(y, k)), z) != F.N(F.prod(F.prod(x, y), k), z))
                return fail("[K-a*]", el({{"k", k}, {"x", x}, {"y", y}, {"z", z}}));
    }

    if (cfg.se)
      for (int x = 0; x < n; x++)
        for (int y = 0; y < n; y++)
          for (int z = 0; z < n; z++)
            if (F.N(F.prod(x, y), z) && !F.N(F.prod(y, x), z))
              return fail("[e]", el({{"x", x}, {"y", y}, {"z", z}}));
    if (cfg.sc)
      for (int x = 0; x < n; x++)
        for (int z = 0; z < n; z++)
          if (F.N(F.prod(x, x), z) && !F.N(x, z)) return fail("[c]", el({{"x", x}, {"z", z}}));
    if (cfg.sw)
      for (int x = 0; x < n; x++)
        for (int z = 0; z < n; z++)
          if (F.N(F.eps, z) && !F.N(x, z)) return fail("[w]", el({{"x", x}, {"z", z}}));

    return {};
  }
};

}  // namespace

FrameReport check_gentzen_rules(const FiniteFrame& F, const FiniteAlgebra& A,
                                const LogicConfig& cfg) {
  if (cfg.sa)
    throw std::invalid_argument("the frame rule table covers e, c, w but not a");
  if (F.nw != A.n || F.nwp != A.n)
    return {false, "frame and algebra carriers differ"};
  GentzenChecker chk{F, A, A.n, {}};
  return chk.run(cfg);
}

FrameReport check_involutive_frame(const FiniteFrame& F, bool require_cyclic) {
  if (!F.has_involution()) return {false, "frame carries no involution maps"};
  if (F.nw != F.nwp) return {false, "involutive frames need W = W'"};
  const int n = F.nw;
  auto s = [&](int x) { return F.sim[x]; };
  auto mns = [&](int x) { return F.minus[x]; };
  for (int x = 0; x < n; x++)
    for (int y = 0; y < n; y++) {
      if (F.resl[x * n + y] != s(F.prod(mns(y), x)))
        return {false, "(i) x||y = (y- . x)~ fails at " + el({{"x", x}, {"y", y}})};
      if (F.resr[y * n + x] != mns(F.prod(x, s(y))))
        return {false, "(i) y||x = (x . y~)- fails at " + el({{"x", x}, {"y", y}})};
    }
  for (int x = 0; x < n; x++)
    if (s(mns(x)) != x || mns(s(x)) != x)
      return {false, "(ii) x~- = x = x-~ fails at " + el({{"x", x}})};
  for (int x = 0; x < n; x++)
    for (int y = 0; y < n; y++)
      if (mns(F.prod(s(x), s(y))) != s(F.prod(mns(x), mns(y))))
        return {false, "(iii) (x~ . y~)- = (x- . y-)~ fails at " + el({{"x", x}, {"y", y}})};
  if (require_cyclic)
    for (int x = 0; x < n; x++)
      if (s(x) != mns(x)) return {false, "cyclicity fails at " + el({{"x", x}})};

  GaloisAlgebra G = galois_algebra(F);
  uint32_t z_sim = galois_lhd(F, 1u << F.sim[F.eps]);
  uint32_t z_minus = galois_lhd(F, 1u << F.minus[F.eps]);
  if (z_sim != z_minus) return {false, "0 = ~{eps} = -{eps} fails"};
  AlgebraClass cls;
  cls.kind = require_cyclic ? AlgKind::CyInRLUG : AlgKind::InRLUG;
  AxiomReport rep = check_axioms(G.alg, cls);
  if (!rep.ok) return {false, "Galois algebra: " + rep.format()};
  return {};
}

FrameReport quasi_embedding_check(const FiniteAlgebra& A, const GaloisAlgebra& G,
                                  int max_depth, int num_vars) {
  const int n = A.n;
  auto colmask = [&](int v) {
    uint32_t acc = 0;
    for (int x = 0; x < n; x++)
      if (A.leq(x, v)) acc |= 1u << x;
    return acc;
  };
  std::vector<int> assign(num_vars, 0);
  for (;;) {
    // reachable (element, closed-set) pairs from the variable atoms and 1
    std::set<std::pair<int, int>> level;
    for (int v : assign) level.insert({v, G.embed[v]});
    level.insert({A.unit, G.alg.unit});
    auto check = [&](const std::pair<int, int>& p) -> std::optional<std::string> {
      int v = p.first;
      uint32_t V = G.closed[p.second];
      if (!((V >> v) & 1u)) return "f(a) not in f*(a) at v=" + std::to_string(v);
      if ((V & ~colmask(v)) != 0)
        return "f*(a) not below {f(a)} at v=" + std::to_string(v);
      return std::nullopt;
    };
    for (const auto& p : level)
      if (auto err = check(p)) return {false, *err};
    std::set<std::pair<int, int>> seen = level;
    for (int d = 0; d < max_depth; d++) {
      std::set<std::pair<int, int>> next = seen;
      for (const auto& p : seen) {
        if (A.has_bang()) next.insert({A.bang[p.first], G.alg.bang[p.second]});
        for (const auto& q : seen) {
          next.insert({A.mt(p.first, q.first), G.alg.mt(p.second, q.second)});
          next.insert({A.jn(p.first, q.first), G.alg.jn(p.second, q.second)});
          next.insert({A.ml(p.first, q.first), G.alg.ml(p.second, q.second)});
          next.insert({A.ld(p.first, q.first), G.alg.ld(p.second, q.second)});
          next.insert({A.rd(p.first, q.first), G.alg.rd(p.second, q.second)});
        }
      }
      for (const auto& p : next)
        if (auto err = check(p)) return {false, *err};
      if (next == seen) break;
      seen = std::move(next);
    }
    int k = 0;
    for (; k < num_vars; k++) {
      if (++assign[k] < n) break;
      assign[k] = 0;
    }
    if (k == num_vars || num_vars == 0) break;
  }
  return {};
}

}  // namespace nal
