#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bialg/duals.hpp"
#include "bialg/fixture.hpp"

using namespace bialg;
using Q = Rational;

namespace {

std::string fx(const std::string& name) { return std::string(BIALG_FIXTURES) + "/" + name + ".json"; }
LeftBialgebroid<Q> load(const std::string& name) { return LeftBialgebroid<Q>{load_bialgebroid<Q>(fx(name))}; }

}  // namespace

TEST_CASE("dual of the ground field is the ground field") {
  auto L = trivial_bialgebroid<Q>();
  for (const auto& D : {left_dual(L), right_dual(L)}) {
    CHECK(D.V.d.n() == 1);
    CHECK(D.V.d.U.table[0] == SparseVec<Q>{{0, Q(1)}});
    CHECK(check_right_bialgebroid(D.V).pass());
  }
}

TEST_CASE("left dual of C2 is the algebra of functions on C2") {
  auto D = left_dual(load("c2"));
  const auto& v = D.V.d;
  REQUIRE(v.n() == 2);
  CHECK(v.labels == std::vector<std::string>{"δ_1", "δ_g"});
  // δ_x δ_y = [x = y] δ_x and 1 = δ_1 + δ_g
  CHECK(v.U.prod(0, 0) == SparseVec<Q>{{0, Q(1)}});
  CHECK(v.U.prod(1, 1) == SparseVec<Q>{{1, Q(1)}});
  CHECK(v.U.prod(0, 1).empty());
  CHECK(v.U.prod(1, 0).empty());
  CHECK(v.U.unit == Vec<Q>{Q(1), Q(1)});
  // Δ_r(δ_x) = Σ_{yz = x} δ_y ⊗ δ_z
  auto Qrc = right_coproduct_space(v);
  TMap<Q> expect{{2, 2}, {{{0, Q(1)}, {3, Q(1)}}, {{1, Q(1)}, {2, Q(1)}}}};
  CHECK(compare_in(Qrc, v.delta, expect).empty());
  CHECK(v.eps == Mat<Q>::from_cols(1, {Vec<Q>{Q(1)}, Vec<Q>{Q(0)}}));
}

TEST_CASE("left duals pass the right bialgebroid axioms and pairing identities") {
  for (const char* name : {"c2", "sw4", "pair2", "monoid2"}) {
    CAPTURE(name);
    auto L = load(name);
    auto D = left_dual(L);
    Report R = check_right_bialgebroid(D.V);
    INFO(R.text());
    CHECK(R.pass());
    Report P = check_dual_pairing(L, D);
    INFO(P.text());
    CHECK(P.pass());
  }
  CHECK(left_dual(load("pair2")).V.d.n() == 4);
}

TEST_CASE("right duals pass the right bialgebroid axioms") {
  for (const char* name : {"c2", "sw4", "pair2"}) {
    CAPTURE(name);
    auto D = right_dual(load(name));
    Report R = check_right_bialgebroid(D.V);
    INFO(R.text());
    CHECK(R.pass());
  }
  CHECK(right_dual(load("pair2")).V.d.n() == 4);
}

TEST_CASE("both duals of C2 have the same structure constants") {
  auto L = load("c2");
  auto a = left_dual(L), b = right_dual(L);
  CHECK(a.V.d.U.table == b.V.d.U.table);
  CHECK(a.V.d.s == b.V.d.s);
  CHECK(a.V.d.t == b.V.d.t);
  CHECK(a.V.d.eps == b.V.d.eps);
  CHECK(compare_in(right_coproduct_space(a.V.d), a.V.d.delta, b.V.d.delta).empty());
}

TEST_CASE("a zero counit on the dual of the pair groupoid is rejected") {
  auto D = left_dual(load("pair2"));
  D.V.d.eps = Mat<Q>(2, 4);
  Report R = check_right_bialgebroid(D.V);
  CHECK_FALSE(R.pass());
  CHECK_FALSE(R.find("counit")->pass());
}

TEST_CASE("dual translation map agrees with inverting beta_l") {
  for (const char* name : {"trivial", "c2", "sw4", "pair2"}) {
    CAPTURE(name);
    auto L = load(name);
    auto D = left_dual(L);
    TranslationMap<Q> T = dual_hopf_structure(L, D);
    TranslationMap<Q> direct = translation_map(D.V);
    CHECK(compare_in(right_hopf_space(D.V.d), T.map, direct.map).empty());
    Report U = check_uch(D.V, T);
    INFO(U.text());
    CHECK(U.pass());
    CHECK(U.axioms.size() == 9);
    Report P = check_dual_translation(L, D, T);
    INFO(P.text());
    CHECK(P.pass());
  }
  auto t = left_dual(trivial_bialgebroid<Q>());
  auto Tt = dual_hopf_structure(trivial_bialgebroid<Q>(), t);
  CHECK(Tt.map.cols[0] == SparseVec<Q>{{0, Q(1)}});
}

TEST_CASE("the dual of a non-Hopf bialgebroid has no dual translation map") {
  auto L = load("monoid2");
  auto D = left_dual(L);
  CHECK_THROWS_AS(dual_hopf_structure(L, D), NotHopf);
  CHECK_THROWS_AS(translation_map(D.V), NotHopf);
}

TEST_CASE("evaluation into the double dual is an isomorphism of bialgebroids") {
  auto t = double_dual_iso(trivial_bialgebroid<Q>());
  CHECK(t.iso == Mat<Q>::identity(1));
  CHECK(t.report.pass());
  for (const char* name : {"c2", "sw4", "pair2", "monoid2"}) {
    CAPTURE(name);
    auto L = load(name);
    auto X = double_dual_iso(L);
    INFO(X.report.text());
    CHECK(X.report.pass());
    CHECK(X.iso.rows() == L.d.n());
    CHECK(rank(X.iso) == L.d.n());
    CHECK(check_left_bialgebroid(X.DD).pass());
  }
}

TEST_CASE("a module that is not free has no dual basis") {
  LeftBialgebroid<Q> L;
  auto& d = L.d;
  std::vector<Vec<Q>> diag;
  for (size_t i = 0; i < 4; ++i) {
    Vec<Q> v(16, Q(0));
    v[i * 4 + i] = Q(1);
    diag.push_back(v);
  }
  std::vector<Vec<Q>> tab(16, Vec<Q>(4, Q(0)));
  for (size_t i = 0; i < 4; ++i) tab[i * 4 + i][i] = Q(1);
  d.U = make_algebra<Q>(4, tab, Vec<Q>(4, Q(1)));
  d.A = make_algebra<Q>(2, {Vec<Q>{Q(1), Q(0)}, Vec<Q>{Q(0), Q(0)}, Vec<Q>{Q(0), Q(0)}, Vec<Q>{Q(0), Q(1)}},
                        Vec<Q>{Q(1), Q(1)});
  // s(e_1) = E_1 + E_2 + E_3, s(e_2) = E_4: ranks 3 and 1
  d.s = Mat<Q>::from_cols(4, {Vec<Q>{Q(1), Q(1), Q(1), Q(0)}, Vec<Q>{Q(0), Q(0), Q(0), Q(1)}});
  d.t = d.s;
  d.eps = Mat<Q>(2, 4);
  d.delta = TMap<Q>{{4, 4}, std::vector<SparseVec<Q>>(4)};
  CHECK_THROWS_AS(left_dual(L), NoDualBasis);
}
