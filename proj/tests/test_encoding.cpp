#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "nal/encoding.hpp"

using namespace nal;
using namespace nal::testing;

TEST_CASE("rho is the shape-preserving fusion image") {
  CHECK(rho(Structure::unit()) == Formula::one());
  CHECK(rho(str("p")) == Formula::var("p"));
  CHECK(format_formula(rho(str("(p,(q,r))"))) == "p*(q*r)");
  CHECK(format_formula(rho(str("((p,q),r)"))) == "(p*q)*r");
}

TEST_CASE("sigma maps only the empty succedent") {
  CHECK(sigma(Formula::var("p")) == Formula::var("p"));
  CHECK(sigma(Formula()) == Formula::zero());
  CHECK(sigma(Formula::zero()) == Formula::zero());
}

TEST_CASE("tau and tau_star") {
  CHECK(format_formula(tau(seq("p => q"))) == "!(p\\q)");
  CHECK(format_formula(tau(seq("eps => p"))) == "!(1\\p)");
  CHECK(format_formula(tau(seq("(p,q) => r"))) == "!((p*q)\\r)");
  CHECK_THROWS(tau(seq("p =>")));
  CHECK(format_formula(tau_star(seq("p =>"))) == "!(p\\0)");
  CHECK(format_formula(tau_star(seq("eps =>"))) == "!(1\\0)");
  Gen g(5);
  for (int i = 0; i < 100; i++) {
    Sequent s = g.sequent(1 + g.pick(4));
    CHECK(tau_star(s) == tau(s));  // coincide on formula succedents
  }
}

TEST_CASE("consequence encoding folds right-nested") {
  CHECK(encode_consequence({}, seq("p => q")) == seq("p => q"));
  CHECK(format_sequent(encode_consequence({seq("p => q")}, seq("p => q"))) ==
        "(p,!(p\\q)) => q");
  HypothesisSet two = {seq("p => q"), seq("q => r")};
  CHECK(format_sequent(encode_consequence(two, seq("p => r"))) ==
        "(p,(!(p\\q),!(q\\r))) => r");
  HypothesisSet three = {seq("p => q"), seq("q => r"), seq("r => p")};
  CHECK(format_sequent(encode_consequence(three, seq("p => p"))) ==
        "(p,(!(p\\q),(!(q\\r),!(r\\p)))) => p");
}

TEST_CASE("classical encoding uses tau_star") {
  HypothesisSet hyps = {seq("p =>")};
  CHECK(format_sequent(encode_consequence(hyps, seq("q => q"), true)) ==
        "(q,!(p\\0)) => q");
}

TEST_CASE("rho preserves tree shape: injective away from fusion-headed leaves") {
  // Leaf(p*q) and (p,q) share an image, as do Leaf(1) and eps; any other leaf
  // content keeps rho injective.
  Gen g(42);
  auto clean = [&](const Structure& x, auto&& self) -> bool {
    switch (x.kind()) {
      case StructKind::Unit: return true;
      case StructKind::Leaf:
        return x.leaf_formula().kind() != Conn::Fus && x.leaf_formula() != Formula::one();
      case StructKind::Pair: return self(x.left(), self) && self(x.right(), self);
    }
    return false;
  };
  int compared = 0;
  for (int i = 0; i < 500; i++) {
    Structure a = g.structure(1 + g.pick(5));
    Structure b = g.structure(1 + g.pick(5));
    if (!clean(a, clean) || !clean(b, clean)) continue;
    compared++;
    if (rho(a) == rho(b)) CHECK(a == b);
    if (a == b) CHECK(rho(a) == rho(b));
  }
  CHECK(compared > 100);
  CHECK(rho(str("(p,q)")) == rho(Structure::leaf(fml("p*q"))));  // the known collision
}

TEST_CASE("hypothesis files") {
  std::istringstream in(
      "# two hypotheses\n"
      "p => q\n"
      "\n"
      "  (q,r) => p\n");
  auto hyps = parse_hypothesis_lines(in, full_lang());
  REQUIRE(hyps.size() == 2);
  CHECK(hyps[0] == seq("p => q"));
  CHECK(hyps[1] == seq("(q,r) => p"));
  std::istringstream bad("p => ) q\n");
  CHECK_THROWS(parse_hypothesis_lines(bad, full_lang()));
}
