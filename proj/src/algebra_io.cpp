#include "nal/algebra_io.hpp"

#include <fstream>
#include <sstream>

namespace nal {

namespace {

void write_matrix(std::ostream& out, const std::vector<uint8_t>& m, int n) {
  for (int x = 0; x < n; x++) {
    for (int y = 0; y < n; y++) out << (y ? " " : "") << static_cast<int>(m[x * n + y]);
    out << "\n";
  }
}

std::vector<uint8_t> read_matrix(std::istream& in, int n) {
  std::vector<uint8_t> m(n * n);
  for (int i = 0; i < n * n; i++) {
    int v;
    if (!(in >> v)) throw std::runtime_error("algebra file: truncated matrix");
    m[i] = static_cast<uint8_t>(v);
  }
  return m;
}

}  // namespace

void write_algebra(std::ostream& out, const FiniteAlgebra& A) {
  out << "size " << A.n << "\n";
  out << "join\n";
  write_matrix(out, A.join, A.n);
  out << "meet\n";
  write_matrix(out, A.meet, A.n);
  out << "mult\n";
  write_matrix(out, A.mult, A.n);
  out << "unit " << static_cast<int>(A.unit) << "\n";
  if (A.has_bang()) {
    out << "bang";
    for (uint8_t v : A.bang) out << " " << static_cast<int>(v);
    out << "\n";
  }
  if (A.has_zero()) out << "zero " << A.zero << "\n";
}

FiniteAlgebra read_algebra(std::istream& in) {
  FiniteAlgebra A;
  std::string key;
  bool have_size = false, have_unit = false;
  while (in >> key) {
    if (key == "size") {
      if (!(in >> A.n) || A.n < 1 || A.n > 64)
        throw std::runtime_error("algebra file: bad size");
      have_size = true;
    } else if (key == "join" || key == "meet" || key == "mult") {
      if (!have_size) throw std::runtime_error("algebra file: size must come first");
      auto m = read_matrix(in, A.n);
      if (key == "join") A.join = std::move(m);
      else if (key == "meet") A.meet = std::move(m);
      else A.mult = std::move(m);
    } else if (key == "unit") {
      int u;
      if (!(in >> u)) throw std::runtime_error("algebra file: bad unit");
      A.unit = static_cast<uint8_t>(u);
      have_unit = true;
    } else if (key == "bang") {
      if (!have_size) throw std::runtime_error("algebra file: size must come first");
      A.bang.resize(A.n);
      for (int i = 0; i < A.n; i++) {
        int v;
        if (!(in >> v)) throw std::runtime_error("algebra file: truncated bang");
        A.bang[i] = static_cast<uint8_t>(v);
      }
    } else if (key == "zero") {
      if (!(in >> A.zero)) throw std::runtime_error("algebra file: bad zero");
    } else if (key == "end") {
      break;
    } else {
      throw std::runtime_error("algebra file: unknown field '" + key + "'");
    }
  }
  if (!have_size || !have_unit || A.join.empty() || A.meet.empty() || A.mult.empty())
    throw std::runtime_error("algebra file: missing required fields");
  if (!A.derive_residuals())
    throw std::runtime_error("algebra file: multiplication is not residuated");
  if (std::string err = A.validate(); !err.empty())
    throw std::runtime_error("algebra file: " + err);
  return A;
}

void save_algebra_file(const std::string& path, const FiniteAlgebra& A) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_algebra(out, A);
}

FiniteAlgebra load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_algebra(in);
}

void save_algebra_set(const std::string& path, const std::string& cls_name, int n,
                      const AlgebraSet& set) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "class " << cls_name << "\n";
  out << "carrier " << n << "\n";
  out << "count " << set.algebras.size() << "\n";
  out << "exhaustive " << (set.exhaustive ? 1 : 0) << "\n";
  for (const auto& A : set.algebras) {
    write_algebra(out, A);
    out << "end\n";
  }
}

std::optional<AlgebraSet> load_algebra_set(const std::string& path,
                                           const std::string& cls_name, int n) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::string key, name;
  int carrier = 0;
  size_t count = 0;
  int exhaustive = 0;
  try {
    if (!(in >> key >> name) || key != "class" || name != cls_name) return std::nullopt;
    if (!(in >> key >> carrier) || key != "carrier" || carrier != n) return std::nullopt;
    if (!(in >> key >> count) || key != "count") return std::nullopt;
    if (!(in >> key >> exhaustive) || key != "exhaustive") return std::nullopt;
    AlgebraSet set;
    set.exhaustive = exhaustive != 0;
    for (size_t i = 0; i < count; i++) set.algebras.push_back(read_algebra(in));
    return set;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace nal
