#include <doctest.h>

#include "helpers.hpp"

using namespace nal;
using namespace nal::testing;

TEST_CASE("parsing the basic sequent shapes") {
  Sequent s = seq("p => p");
  CHECK(s.ante == Structure::leaf(Formula::var("p")));
  CHECK(s.succ == Formula::var("p"));

  s = seq("eps => 1");
  CHECK(s.ante.is_unit());
  CHECK(s.succ == Formula::one());

  s = seq("((p,!q),r) => p*(q*r)");
  Structure want = Structure::pair(
      Structure::pair(Structure::leaf(Formula::var("p")),
                      Structure::leaf(Formula::bang(Formula::var("q")))),
      Structure::leaf(Formula::var("r")));
  CHECK(s.ante == want);
  CHECK(s.succ == Formula::fus(Formula::var("p"),
                               Formula::fus(Formula::var("q"), Formula::var("r"))));
}

TEST_CASE("canonical formatting") {
  CHECK(format_sequent(Sequent{Structure::unit(), Formula::one()}) == "eps => 1");
  Sequent s{Structure::pair(Structure::leaf(Formula::var("p")), Structure::leaf(Formula::var("q"))),
            Formula::fus(Formula::var("p"), Formula::var("q"))};
  CHECK(format_sequent(s) == "(p,q) => p*q");
  Sequent empty{Structure::leaf(Formula::bang(Formula::var("p"))), Formula()};
  CHECK(format_sequent(empty) == "!p =>");
  CHECK(format_formula(fml("~p")) == "p\\0");
  CHECK(format_formula(fml("-p")) == "0/p");
  CHECK(format_formula(fml("!(p\\q)")) == "!(p\\q)");
}

TEST_CASE("grammar rejects silent association and gated constants") {
  CHECK_THROWS_AS(parse_formula("a \\ b \\ c", full_lang()), ParseError);
  CHECK_THROWS_AS(parse_formula("a * b * c", full_lang()), ParseError);
  CHECK_THROWS_AS(parse_formula("a /\\ b /\\ c", full_lang()), ParseError);
  LanguageOpts no_zero;
  no_zero.allow_zero = false;
  CHECK_THROWS_AS(parse_formula("0", no_zero), ParseError);
  CHECK_THROWS_AS(parse_formula("~p", no_zero), ParseError);
  LanguageOpts no_bang;
  no_bang.allow_bang = false;
  CHECK_THROWS_AS(parse_formula("!p", no_bang), ParseError);
  LanguageOpts strict;
  CHECK_THROWS_AS(parse_sequent("p =>", strict), ParseError);
  CHECK_THROWS_AS(parse_sequent("p => q => r", full_lang()), ParseError);
}

TEST_CASE("mixed parenthesized formulas inside structures") {
  CHECK(str("(p*q)") == Structure::leaf(fml("p*q")));
  CHECK(str("(p)\\q") == Structure::leaf(fml("p\\q")));
  CHECK(str("((p,q),(r,p))").is_pair());
}

TEST_CASE("round trip through the printer, random terms") {
  Gen g(12345);
  g.zero = true;
  for (int i = 0; i < 400; i++) {
    Sequent s = g.sequent(1 + g.pick(7));
    Sequent back = parse_sequent(format_sequent(s), full_lang());
    REQUIRE(back == s);
  }
}

TEST_CASE("structure equality distinguishes re-association, units collapse") {
  Structure a = str("((p,q),r)");
  Structure b = str("(p,(q,r))");
  CHECK(a != b);
  CHECK(Structure::pair(Structure::unit(), str("p")) == str("p"));
  CHECK(Structure::pair(str("p"), Structure::unit()) == str("p"));
}

TEST_CASE("contexts_of enumerates one decomposition per node") {
  auto one = contexts_of(str("p"));
  REQUIRE(one.size() == 1);
  CHECK(one[0].first.is_hole());

  auto three = contexts_of(str("(p,q)"));
  REQUIRE(three.size() == 3);
  CHECK(three[0].first.is_hole());
  CHECK(three[1].second == str("p"));
  CHECK(three[2].second == str("q"));

  CHECK(contexts_of(str("((p,q),r)")).size() == 5);

  Gen g(999);
  for (int i = 0; i < 200; i++) {
    Structure x = g.structure(1 + g.pick(6));
    auto ctxs = contexts_of(x);
    CHECK(static_cast<int>(ctxs.size()) == x.node_count());
    for (auto& [u, y] : ctxs) CHECK(u.plug(y) == x);
  }
}

TEST_CASE("unit insertion points") {
  CHECK(unit_insertion_points(Structure::unit()).size() == 1);
  Gen g(7);
  for (int i = 0; i < 100; i++) {
    Structure x = g.structure(1 + g.pick(5));
    auto pts = unit_insertion_points(x);
    if (x.is_unit())
      CHECK(pts.size() == 1);
    else
      CHECK(static_cast<int>(pts.size()) == 2 * x.node_count());
    for (const Context& u : pts) CHECK(u.plug(Structure::unit()) == x);
  }
}

TEST_CASE("bang structures") {
  CHECK(is_bang_structure(str("(!p,!q)")));
  CHECK(is_bang_structure(Structure::unit()));
  CHECK_FALSE(is_bang_structure(str("(p,!q)")));
}

TEST_CASE("position paths") {
  Structure x = str("((p,!q),r)");
  for (auto& [u, y] : contexts_of(x)) {
    std::string path = format_position(u, x);
    Context back = parse_position(path, x);
    CHECK(back == u);
  }
  // unit-insertion path round trip
  for (const Context& u : unit_insertion_points(x)) {
    std::string path = format_position(u, x);
    REQUIRE(path.size() >= 2);
    CHECK(path.back() == '^');
    CHECK(parse_position(path, x) == u);
  }
  CHECK_THROWS(parse_position("LL", str("p")));
}
