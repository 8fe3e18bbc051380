#pragma once

// Canonical text format for finite algebras: fields size, join, meet, mult
// (row-major integer matrices), unit, then optional bang vector and zero.
// Galois-algebra dumps extend the format with closed_sets and K bitmasks.

#include <iosfwd>
#include <optional>
#include <string>

#include "nal/algebra.hpp"

namespace nal {

void write_algebra(std::ostream& out, const FiniteAlgebra& A);
FiniteAlgebra read_algebra(std::istream& in);

void save_algebra_file(const std::string& path, const FiniteAlgebra& A);
FiniteAlgebra load_algebra_file(const std::string& path);

// Cache files hold a whole enumeration result for one (class, size).
void save_algebra_set(const std::string& path, const std::string& cls_name, int n,
                      const AlgebraSet& set);
std::optional<AlgebraSet> load_algebra_set(const std::string& path,
                                           const std::string& cls_name, int n);

}  // namespace nal
