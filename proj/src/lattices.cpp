#include "nal/lattices.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace nal {

namespace {

Lattice build(int n, std::string name, const std::vector<std::pair<int, int>>& covers) {
  Lattice L;
  L.n = n;
  L.name = std::move(name);
  L.leq.assign(n * n, 0);
  for (int x = 0; x < n; x++) L.leq[x * n + x] = 1;
  for (auto [a, b] : covers) L.leq[a * n + b] = 1;
  for (bool changed = true; changed;) {  // transitive closure
    changed = false;
    for (int x = 0; x < n; x++)
      for (int y = 0; y < n; y++)
        if (L.leq[x * n + y])
          for (int z = 0; z < n; z++)
            if (L.leq[y * n + z] && !L.leq[x * n + z]) {
              L.leq[x * n + z] = 1;
              changed = true;
            }
  }
  auto lub = [&](int x, int y) -> int {
    int best = -1;
    for (int z = 0; z < n; z++) {
      if (!L.le(x, z) || !L.le(y, z)) continue;
      if (best < 0 || L.le(z, best)) best = z;
    }
    for (int z = 0; z < n; z++)
      if (L.le(x, z) && L.le(y, z) && !L.le(best, z))
        throw std::logic_error("catalog lattice " + L.name + ": no lub");
    return best;
  };
  auto glb = [&](int x, int y) -> int {
    int best = -1;
    for (int z = 0; z < n; z++) {
      if (!L.le(z, x) || !L.le(z, y)) continue;
      if (best < 0 || L.le(best, z)) best = z;
    }
    for (int z = 0; z < n; z++)
      if (L.le(z, x) && L.le(z, y) && !L.le(z, best))
        throw std::logic_error("catalog lattice " + L.name + ": no glb");
    return best;
  };
  L.join.assign(n * n, 0);
  L.meet.assign(n * n, 0);
  for (int x = 0; x < n; x++)
    for (int y = 0; y < n; y++) {
      L.join[x * n + y] = static_cast<uint8_t>(lub(x, y));
      L.meet[x * n + y] = static_cast<uint8_t>(glb(x, y));
    }
  L.bottom = 0;
  L.top = n - 1;
  for (int x = 0; x < n; x++)
    if (!L.le(L.bottom, x) || !L.le(x, L.top))
      throw std::logic_error("catalog lattice " + L.name + ": bad bounds");
  // join-irreducibles: x != bottom and x is not a proper join
  for (int x = 1; x < n; x++) {
    bool irred = true;
    for (int a = 0; a < n && irred; a++)
      for (int b = 0; b < n && irred; b++)
        if (a != x && b != x && L.join[a * n + b] == x) irred = false;
    if (irred) L.ji.push_back(x);
  }
  L.ji_below.resize(n);
  for (int x = 0; x < n; x++)
    for (int j : L.ji)
      if (L.le(j, x)) L.ji_below[x].push_back(j);
  // sanity: every element is the join of the JIs below it
  for (int x = 0; x < n; x++) {
    int acc = L.bottom;
    for (int j : L.ji_below[x]) acc = L.join[acc * n + j];
    if (acc != x) throw std::logic_error("catalog lattice " + L.name + ": JI decomposition");
  }
  std::vector<uint8_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int x = 0; x < n && ok; x++)
      for (int y = 0; y < n && ok; y++)
        if (L.le(x, y) != L.le(perm[x], perm[y])) ok = false;
    if (ok) L.autos.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return L;
}

std::vector<Lattice> make_catalog(int n) {
  switch (n) {
    case 1: return {build(1, "c1", {})};
    case 2: return {build(2, "c2", {{0, 1}})};
    case 3: return {build(3, "c3", {{0, 1}, {1, 2}})};
    case 4:
      return {build(4, "c4", {{0, 1}, {1, 2}, {2, 3}}),
              build(4, "d4", {{0, 1}, {0, 2}, {1, 3}, {2, 3}})};
    case 5:
      return {build(5, "c5", {{0, 1}, {1, 2}, {2, 3}, {3, 4}}),
              // bottom chain then a diamond on top
              build(5, "vtop5", {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}}),
              // diamond at the bottom, chain on top
              build(5, "vbot5", {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}}),
              build(5, "m3", {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}),
              build(5, "n5", {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}})};
    default:
      throw std::out_of_range("lattice catalog covers sizes 1..5");
  }
}

}  // namespace

const std::vector<Lattice>& lattice_catalog(int n) {
  static const std::vector<Lattice> cat[5] = {
      make_catalog(1), make_catalog(2), make_catalog(3), make_catalog(4), make_catalog(5)};
  if (n < 1 || n > 5) throw std::out_of_range("lattice catalog covers sizes 1..5");
  return cat[n - 1];
}

std::string lattice_catalog_selfcheck() {
  for (int n = 1; n <= 5; n++) {
    const auto& cat = lattice_catalog(n);
    for (const Lattice& L : cat) {
      for (int x = 0; x < n; x++)
        for (int y = 0; y < n; y++) {
          if (L.join[x * n + y] != L.join[y * n + x] || L.meet[x * n + y] != L.meet[y * n + x])
            return L.name + ": join/meet not commutative";
          if (L.meet[x * n + L.join[x * n + y]] != x || L.join[x * n + L.meet[x * n + y]] != x)
            return L.name + ": absorption fails";
          if (L.le(x, y) != (L.meet[x * n + y] == x) || L.le(x, y) != (L.join[x * n + y] == y))
            return L.name + ": order/table mismatch";
          for (int z = 0; z < n; z++) {
            if (L.join[L.join[x * n + y] * n + z] != L.join[x * n + L.join[y * n + z]])
              return L.name + ": join not associative";
            if (L.meet[L.meet[x * n + y] * n + z] != L.meet[x * n + L.meet[y * n + z]])
              return L.name + ": meet not associative";
          }
        }
      std::vector<uint8_t> ident(n);
      std::iota(ident.begin(), ident.end(), 0);
      if (L.autos.empty() || L.autos.front() != ident)
        return L.name + ": automorphism list must start with the identity";
    }
    for (size_t i = 0; i < cat.size(); i++)
      for (size_t j = i + 1; j < cat.size(); j++) {
        std::vector<uint8_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do {
          bool iso = true;
          for (int x = 0; x < n && iso; x++)
            for (int y = 0; y < n && iso; y++)
              if (cat[i].le(x, y) != cat[j].le(perm[x], perm[y])) iso = false;
          if (iso) return cat[i].name + " and " + cat[j].name + " are isomorphic";
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
  }
  return {};
}

}  // namespace nal
