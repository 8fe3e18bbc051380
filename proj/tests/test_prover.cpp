#include <doctest.h>

#include "helpers.hpp"
#include "nal/prover.hpp"

using namespace nal;
using namespace nal::testing;

TEST_CASE("one-step proofs") {
  SearchOptions o;
  o.depth = 1;
  auto r = prove(seq("eps => 1"), cfg_fnl(), o);
  REQUIRE(r.proved());
  CHECK(r.proof->rule.r == Rule::OneR);
  CHECK(r.proof->height() == 1);
}

TEST_CASE("modal corpus smoke: !a \\ a and friends") {
  SearchOptions o;
  o.depth = 12;
  for (const char* s : {"eps => !1", "eps => !p \\ p", "eps => !p \\ 1",
                        "eps => !p \\ !!p", "eps => !p \\ (!p * !p)"}) {
    auto r = prove(seq(s), cfg_nacill(), o);
    INFO(s);
    REQUIRE(r.proved());
    CHECK(check_proof(*r.proof, cfg_nacill()).ok);
    CHECK_FALSE(r.proof->uses_cut());
  }
}

TEST_CASE("atomic non-theorem fails fast") {
  SearchOptions o;
  o.depth = 30;
  auto r = prove(seq("p => q"), cfg_fnl(), o);
  CHECK(r.status == SearchStatus::NotFound);
  CHECK(r.nodes < 100);
}

TEST_CASE("hypothesis search") {
  HypothesisSet hyps = {seq("p => q")};
  SearchOptions o;
  o.depth = 1;
  auto r = prove_from(hyps, seq("p => q"), cfg_fnl(), o);
  REQUIRE(r.proved());
  CHECK(r.proof->rule.r == Rule::Hyp);

  HypothesisSet chain = {seq("p => q"), seq("q => r")};
  o.depth = 6;
  auto t = prove_from(chain, seq("p => r"), cfg_fnl(), o);
  REQUIRE(t.proved());
  CHECK(t.proof->uses_cut());
  LogicConfig vc = cfg_fnl();
  vc.cut = CutMode::Unrestricted;
  CHECK(check_proof(*t.proof, vc, chain).ok);
}

TEST_CASE("depth monotonicity on a few provable goals") {
  for (const char* s : {"eps => p \\ p", "p /\\ q => q /\\ p", "(p,q) => p*q"}) {
    SearchOptions o;
    o.depth = 10;
    auto r = prove(seq(s), cfg_fnl(), o);
    REQUIRE(r.proved());
    int d = r.depth_used;
    for (int extra : {0, 1, 5}) {
      SearchOptions o2;
      o2.depth = d + extra;
      auto r2 = prove(seq(s), cfg_fnl(), o2);
      CHECK(r2.proved());
    }
  }
}

TEST_CASE("structural rules change provability") {
  // weakening
  LogicConfig w = cfg_fnl();
  SearchOptions o;
  o.depth = 8;
  CHECK(prove(seq("p => 1"), w, o).status == SearchStatus::NotFound);
  w.sw = true;
  CHECK(prove(seq("p => 1"), w, o).proved());
  // exchange
  LogicConfig e = cfg_fnl();
  CHECK(prove(seq("(p,q) => q*p"), e, o).status == SearchStatus::NotFound);
  e.se = true;
  CHECK(prove(seq("(p,q) => q*p"), e, o).proved());
  // contraction
  LogicConfig c = cfg_fnl();
  CHECK(prove(seq("p => p*p"), c, o).status == SearchStatus::NotFound);
  c.sc = true;
  CHECK(prove(seq("p => p*p"), c, o).proved());
  // associativity (both directions)
  LogicConfig a = cfg_fnl();
  CHECK(prove(seq("(p*q)*r => p*(q*r)"), a, o).status == SearchStatus::NotFound);
  a.sa = true;
  CHECK(prove(seq("(p*q)*r => p*(q*r)"), a, o).proved());
  CHECK(prove(seq("p*(q*r) => (p*q)*r"), a, o).proved());
}

TEST_CASE("classical axioms reach the prover") {
  LogicConfig cl;
  cl.base = Base::FCNL;
  SearchOptions o;
  o.depth = 6;
  CHECK(prove(seq("0/(p\\0) => p"), cl, o).proved());
  CHECK(prove(seq("p\\0 => 0/p"), cl, o).proved());   // cyclicity
  CHECK(prove(seq("0 =>"), cl, o).proved());
  CHECK(prove(seq("(p,p\\0) => 0"), cl, o).proved());
  cl.base = Base::FCNLm;
  CHECK(prove(seq("p\\0 => 0/p"), cl, o).status == SearchStatus::NotFound);
}

TEST_CASE("node budget reports") {
  LogicConfig c = cfg_nacill();
  c.sc = true;
  SearchOptions o;
  o.depth = 20;
  o.node_budget = 50;
  auto r = prove(seq("((p\\q)\\r) => (q \\ (p \\ r))"), c, o);
  CHECK(r.status == SearchStatus::BudgetExceeded);
}

TEST_CASE("every returned proof passes the checker") {
  Gen g(31337);
  g.modal = true;
  LogicConfig cfg = cfg_nacill();
  SearchOptions o;
  o.depth = 7;
  o.node_budget = 60000;
  int proved = 0;
  for (int i = 0; i < 120; i++) {
    Sequent goal = g.sequent(1 + g.pick(3));
    if (!well_formed(goal, cfg).empty()) continue;
    auto r = prove(goal, cfg, o);
    if (r.proved()) {
      proved++;
      CHECK(check_proof(*r.proof, cfg).ok);
      CHECK(r.proof->height() <= o.depth);
    }
  }
  CHECK(proved > 5);
}
