#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bialg/fixture.hpp"
#include "bialg/theorems.hpp"
#include "faults.hpp"

using namespace bialg;
using Q = Rational;
using namespace faults;

namespace {

std::string fx(const std::string& name) { return std::string(BIALG_FIXTURES) + "/" + name + ".json"; }
LeftBialgebroid<Q> load(const std::string& name) { return LeftBialgebroid<Q>{load_bialgebroid<Q>(fx(name))}; }

YDAlgebra<Q> verified_base(const LeftBialgebroid<Q>& L) {
  auto A = base_yd_algebra(L);
  verify_yd(L, A.M);
  verify_braided_commutative(L, A);
  return A;
}

YDAlgebra<Q> monoid(const LeftBialgebroid<Q>& L, bool weyl) { return weyl ? weyl_tilde(L) : verified_base(L); }

}  // namespace

TEST_CASE("eta over a base-trivial smash is the identity") {
  auto L = load("c2");
  auto W = verify_eta(L, verified_base(L));
  INFO(W.report.text());
  CHECK(W.report.pass());
  CHECK(W.eta == Mat<Q>::identity(2));
  CHECK(W.inverse == Mat<Q>::identity(2));
}

TEST_CASE("eta is an isomorphism of left Hopf right bialgebroids") {
  struct Case {
    const char* name;
    bool weyl;
  };
  for (Case c : {Case{"trivial", false}, Case{"c2", true}, Case{"sw4", false}, Case{"sw4", true}, Case{"pair2", false},
                 Case{"pair2", true}}) {
    CAPTURE(c.name);
    CAPTURE(c.weyl);
    auto L = load(c.name);
    auto A = monoid(L, c.weyl);
    auto W = verify_eta(L, A);
    INFO(W.report.text());
    CHECK(W.report.pass());
    // U is free over A, so U_* # R has dimension dim R * dim U / dim A
    CHECK(W.eta.rows() == A.R.n * L.d.n() / L.d.nA());
    CHECK(W.report.sub.size() == 4);
    CHECK(W.report.sub.back().title == "hopf");
    for (const auto& s : W.report.sub) {
      CAPTURE(s.title);
      for (const auto& a : s.axioms) CHECK(a.probes > 0);
    }
  }
}

TEST_CASE("eta over a bialgebroid without Hopf structure skips the translation maps") {
  auto L = load("monoid2");
  auto W = verify_eta(L, verified_base(L));
  INFO(W.report.text());
  CHECK(W.report.pass());
  CHECK(W.report.sub.size() == 3);
  CHECK(!W.report.info.empty());
}

TEST_CASE("eta refuses an unverified monoid") {
  auto L = load("sw4");
  auto A = base_yd_algebra(L);
  CHECK_THROWS_AS(verify_eta(L, A), UncheckedSubstrate);
}

TEST_CASE("a smash product is recognized as the action bialgebroid of its base") {
  struct Case {
    const char* name;
    bool weyl;
  };
  for (Case c : {Case{"trivial", false}, Case{"c2", false}, Case{"c2", true}, Case{"sw4", false}, Case{"sw4", true},
                 Case{"pair2", false}, Case{"pair2", true}, Case{"monoid2", false}}) {
    CAPTURE(c.name);
    CAPTURE(c.weyl);
    auto W = load(c.name);
    auto A = monoid(W, c.weyl);
    auto Sm = smash_left(W, A);
    auto P = action_presentation(W, Sm, A);
    auto r = recognize_action(P.U, W, P.morphism, P.rho);
    INFO(r.report.text());
    REQUIRE(r.recognized);
    CHECK(r.failed.empty());
    size_t N = P.U.d.n();
    CHECK(r.xi == Mat<Q>::identity(N));
    CHECK(r.iso == Mat<Q>::identity(N));
    CHECK(r.base.M.module.act == A.M.module.act);
    CHECK(same_coaction(W, r.base.M.comodule, A.M.comodule));
    CHECK(mult_map(r.base.R) == mult_map(A.R));
  }
}

TEST_CASE("a morphism that is not a coring map fails condition (i)") {
  auto W = load("sw4");
  auto A = weyl_tilde(W);
  auto P = action_presentation(W, smash_left(W, A), A);
  P.morphism.F = P.morphism.F * sweedler_twist();
  auto r = recognize_action(P.U, W, P.morphism, P.rho);
  INFO(r.report.text());
  CHECK(!r.recognized);
  REQUIRE(!r.failed.empty());
  CHECK(r.failed.front() == 1);
  const auto& C = r.report.sub[1];
  REQUIRE(C.find("coring") != nullptr);
  CHECK(!C.find("coring")->pass());
  CHECK(C.find("ring")->pass());
}

TEST_CASE("a coaction that is not B-linear fails condition (ii) only") {
  auto W = load("sw4");
  auto A = weyl_tilde(W);
  auto P = action_presentation(W, smash_left(W, A), A);
  P.rho = tm_compose(P.rho, tm_from_mat(projection_onto(P.morphism.F)));
  auto r = recognize_action(P.U, W, P.morphism, P.rho);
  INFO(r.report.text());
  CHECK(!r.recognized);
  CHECK(r.failed == std::vector<int>{2});
  CHECK(!r.report.sub[2].find("atlas")->pass());
}

TEST_CASE("a coaction twisted by a non-colinear automorphism fails condition (iii)") {
  auto W = load("sw4");
  auto A = weyl_tilde(W);
  auto Sm = smash_left(W, A);
  auto P = action_presentation(W, Sm, A);
  Mat<Q> g = P.U.d.U.rmul(Sm.embed_U.col(1));
  P.rho = tm_compose(P.rho, tm_from_mat(g));
  auto r = recognize_action(P.U, W, P.morphism, P.rho);
  INFO(r.report.text());
  CHECK(!r.recognized);
  CHECK(flagged(r, 3));
  CHECK(!flagged(r, 1));
  const auto* col = r.report.sub[3].find("colinearity");
  REQUIRE(col != nullptr);
  REQUIRE(!col->violations.empty());
  CHECK(!col->violations.front().witness.empty());
}

TEST_CASE("recognition rejects malformed inputs") {
  auto W = load("c2");
  auto A = verified_base(W);
  auto P = action_presentation(W, smash_left(W, A), A);
  Mat<Q> bad(1, 1);
  CHECK_THROWS_AS(recognize_action(P.U, W, BialgebroidMorphism<Q>{bad, P.morphism.f}, P.rho), ShapeError);
  auto broken = load("broken_counit");
  size_t n = broken.d.n(), nA = broken.d.nA();
  auto r = recognize_action(broken, broken, BialgebroidMorphism<Q>{Mat<Q>::identity(n), Mat<Q>::identity(nA)},
                            broken.d.delta);
  CHECK(r.failed == std::vector<int>{0});
}
