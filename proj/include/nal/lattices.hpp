#pragma once

// Hard-coded catalog of the finite lattices with up to five elements, one
// representative per isomorphism class, with derived join/meet tables,
// join-irreducibles and automorphism groups. Element 0 is always the bottom
// and element n-1 the top.

#include <cstdint>
#include <string>
#include <vector>

namespace nal {

struct Lattice {
  int n = 0;
  std::string name;
  std::vector<uint8_t> leq;   // n*n, leq[x*n+y] = (x <= y)
  std::vector<uint8_t> join;  // n*n
  std::vector<uint8_t> meet;  // n*n
  int bottom = 0, top = 0;
  std::vector<int> ji;                      // join-irreducibles, ascending
  std::vector<std::vector<int>> ji_below;   // per element: JIs below it
  std::vector<std::vector<uint8_t>> autos;  // order-automorphisms, identity first

  bool le(int x, int y) const { return leq[x * n + y]; }
};

// Lattices of the given size (1..5).
const std::vector<Lattice>& lattice_catalog(int n);

// Re-verifies every catalog entry (lattice axioms, unique bottom/top,
// join/meet consistency, automorphism closure) and mutual non-isomorphism
// within each size. Returns an empty string when everything holds.
std::string lattice_catalog_selfcheck();

}  // namespace nal
