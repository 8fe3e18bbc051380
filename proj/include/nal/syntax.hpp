#pragma once

// Term language for non-associative substructural sequents: formulas over
// {/\, \/, *, \, /, !} with constants {1, 0, top, bot}, antecedent structures
// forming a free unital groupoid (binary trees over formulas, unit eps),
// one-hole contexts, and sequents with an optional empty succedent.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nal {

enum class Conn : uint8_t { Var, One, Zero, Top, Bot, Bang, And, Or, Fus, Lres, Rres };

inline bool conn_is_binary(Conn c) { return c >= Conn::And; }
inline bool conn_is_const(Conn c) { return c >= Conn::One && c <= Conn::Bot; }

// Immutable shared formula tree. Binary operands are stored in display order:
// Lres(a,b) prints "a\b", Rres(b,a) prints "b/a" (numerator first).
class Formula {
 public:
  Formula() = default;

  static Formula var(std::string name);
  static Formula one();
  static Formula zero();
  static Formula top();
  static Formula bot();
  static Formula bang(Formula a);
  static Formula bin(Conn op, Formula lhs, Formula rhs);
  static Formula and_(Formula a, Formula b) { return bin(Conn::And, std::move(a), std::move(b)); }
  static Formula or_(Formula a, Formula b) { return bin(Conn::Or, std::move(a), std::move(b)); }
  static Formula fus(Formula a, Formula b) { return bin(Conn::Fus, std::move(a), std::move(b)); }
  // a \ b
  static Formula lres(Formula a, Formula b) { return bin(Conn::Lres, std::move(a), std::move(b)); }
  // b / a
  static Formula rres(Formula b, Formula a) { return bin(Conn::Rres, std::move(b), std::move(a)); }

  bool empty() const { return !n_; }
  explicit operator bool() const { return n_ != nullptr; }

  Conn kind() const;
  const std::string& var_name() const;
  Formula lhs() const;  // bang child lives here
  Formula rhs() const;

  size_t hash() const;
  bool operator==(const Formula& o) const;
  bool operator!=(const Formula& o) const { return !(*this == o); }

  int size() const;  // node count

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  static Formula nullary(Conn k);
  std::shared_ptr<const Node> n_;
};

enum class StructKind : uint8_t { Unit, Leaf, Pair };

// Element of the free unital groupoid over formulas. Pair children are never
// Unit: the smart constructor applies the unit laws eps . x = x = x . eps, so
// values are canonical representatives. Re-associations stay distinct.
class Structure {
 public:
  Structure() = default;

  static Structure unit();
  static Structure leaf(Formula f);
  static Structure pair(Structure l, Structure r);

  bool empty() const { return !n_; }
  explicit operator bool() const { return n_ != nullptr; }

  StructKind kind() const;
  bool is_unit() const { return kind() == StructKind::Unit; }
  bool is_leaf() const { return kind() == StructKind::Leaf; }
  bool is_pair() const { return kind() == StructKind::Pair; }
  Formula leaf_formula() const;
  Structure left() const;
  Structure right() const;

  size_t hash() const;
  bool operator==(const Structure& o) const;
  bool operator!=(const Structure& o) const { return !(*this == o); }

  int node_count() const;

 private:
  struct Node;
  explicit Structure(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

// One-hole context as the path from the root of a structure to the hole.
// Each step records which side the hole descends into and the sibling tree.
// A context whose final sibling equals the plugged-at subtree of some x acts
// as a unit-insertion site of x: plug(u, eps) collapses back to x.
class Context {
 public:
  struct Step {
    bool hole_right = false;  // false: hole in left child, sibling on the right
    Structure sibling;
    bool operator==(const Step& o) const {
      return hole_right == o.hole_right && sibling == o.sibling;
    }
  };

  Context() = default;
  explicit Context(std::vector<Step> steps) : steps_(std::move(steps)) {}

  bool is_hole() const { return steps_.empty(); }
  const std::vector<Step>& steps() const { return steps_; }
  void push(bool hole_right, Structure sibling) { steps_.push_back({hole_right, std::move(sibling)}); }

  Structure plug(const Structure& y) const;

  bool operator==(const Context& o) const { return steps_ == o.steps_; }
  bool operator!=(const Context& o) const { return !(*this == o); }

 private:
  std::vector<Step> steps_;
};

// Antecedent structure plus succedent; an empty succ formula encodes the
// empty succedent (allowed only in configurations with the 0-rules).
struct Sequent {
  Structure ante;
  Formula succ;

  bool empty_succ() const { return succ.empty(); }
  size_t hash() const;
  bool operator==(const Sequent& o) const { return ante == o.ante && succ == o.succ; }
  bool operator!=(const Sequent& o) const { return !(*this == o); }
};

using HypothesisSet = std::vector<Sequent>;

// All decompositions (u, y) with plug(u, y) = x, one per node of x, in
// pre-order (root first, then left subtree, then right).
std::vector<std::pair<Context, Structure>> contexts_of(const Structure& x);

// Every context u with plug(u, eps) = x: two insertion sites per node of x
// (new left / right sibling), or the bare hole when x = eps.
std::vector<Context> unit_insertion_points(const Structure& x);

// True iff every leaf of x is a !-formula; eps qualifies.
bool is_bang_structure(const Structure& x);

struct LanguageOpts {
  bool allow_bang = true;
  bool allow_zero = false;
  bool allow_top = false;
  bool allow_bot = false;
  bool allow_empty_succ = false;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " (at column " + std::to_string(pos + 1) + ")"), position(pos) {}
  size_t position;
};

Formula parse_formula(const std::string& text, const LanguageOpts& lang = {});
Structure parse_structure(const std::string& text, const LanguageOpts& lang = {});
Sequent parse_sequent(const std::string& text, const LanguageOpts& lang = {});

std::string format_formula(const Formula& f);
std::string format_structure(const Structure& x);
std::string format_sequent(const Sequent& s);

// Position path over the conclusion antecedent: 'L'/'R' per step, with a
// trailing "L^"/"R^" when the hole is a unit-insertion site (the plugged part
// collapsed away in the conclusion).
std::string format_position(const Context& u, const Structure& conclusion_ante);
Context parse_position(const std::string& path, const Structure& conclusion_ante);

}  // namespace nal

template <>
struct std::hash<nal::Formula> {
  size_t operator()(const nal::Formula& f) const { return f.hash(); }
};
template <>
struct std::hash<nal::Structure> {
  size_t operator()(const nal::Structure& s) const { return s.hash(); }
};
template <>
struct std::hash<nal::Sequent> {
  size_t operator()(const nal::Sequent& s) const { return s.hash(); }
};
