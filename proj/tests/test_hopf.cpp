#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bialg/fixture.hpp"
#include "bialg/hopf.hpp"

using namespace bialg;
using Q = Rational;

namespace {

std::string fx(const std::string& name) { return std::string(BIALG_FIXTURES) + "/" + name + ".json"; }
LeftBialgebroid<Q> load(const std::string& name) { return LeftBialgebroid<Q>{load_bialgebroid<Q>(fx(name))}; }

// Elementary tensor e_i ⊗ e_j with coefficient c, as a lift.
SparseVec<Q> et(size_t n, size_t i, size_t j, Q c = Q(1)) { return {{i * n + j, c}}; }

SparseVec<Q> plus(SparseVec<Q> a, const SparseVec<Q>& b) { return sparse_add(a, b); }

// Antipode of Sweedler's algebra on {1, g, x, gx}: S(x) = -gx, S(gx) = x.
Mat<Q> sweedler_antipode() {
  Mat<Q> S(4, 4);
  S(0, 0) = 1;
  S(1, 1) = 1;
  S(3, 2) = -1;
  S(2, 3) = 1;
  return S;
}

}  // namespace

TEST_CASE("alpha_l on C2 sends g ⊗ g to g ⊗ 1") {
  auto L = load("c2");
  auto G = galois_map(L, Galois::AlphaL);
  CHECK(G.dom.dim() == 4);
  CHECK(G.cod.dim() == 4);
  SparseVec<Q> img = sparse_apply(G.lift.cols, et(2, 1, 1));
  CHECK(G.cod.project(img) == G.cod.project(et(2, 1, 0)));
}

TEST_CASE("one-dimensional bialgebroid has identity Galois maps") {
  auto L = trivial_bialgebroid<Q>();
  for (Galois k : {Galois::AlphaL, Galois::AlphaR}) CHECK(galois_map(L, k).mat == Mat<Q>::identity(1));
  CHECK(galois_map(op_right(L), Galois::BetaL).mat == Mat<Q>::identity(1));
  CHECK_THROWS_AS(galois_map(L, Galois::BetaL), ChiralityError);
  CHECK_THROWS_AS(galois_map(op_right(L), Galois::AlphaL), ChiralityError);
}

TEST_CASE("alpha_r on the pair groupoid is an invertible 8x8 matrix") {
  auto G = galois_map(load("pair2"), Galois::AlphaR);
  CHECK(G.mat.rows() == 8);
  CHECK(G.mat.cols() == 8);
  CHECK(rank(G.mat) == 8);
}

TEST_CASE("group-like translation maps") {
  auto L = load("c2");
  auto Tl = translation_map(L, Flavor::LeftHopf);
  auto Ql = left_hopf_space(L.d);
  CHECK(Ql.project(Tl.map.cols[1]) == Ql.project(et(2, 1, 1)));
  auto P = load("pair2");
  auto Tp = translation_map(P, Flavor::LeftHopf);
  auto Tq = translation_map(P, Flavor::RightHopf);
  auto Qp = left_hopf_space(P.d), Qr = right_hopf_space(P.d);
  // E_ij_+ ⊗ E_ij_- = E_ij ⊗ E_ji, and E_ij_[+] ⊗ E_ij_[-] = E_ij ⊗ E_ji
  for (size_t i = 0; i < 2; ++i)
    for (size_t j = 0; j < 2; ++j) {
      size_t e = 2 * i + j, inv = 2 * j + i;
      CHECK(Qp.project(Tp.map.cols[e]) == Qp.project(et(4, e, inv)));
      CHECK(Qr.project(Tq.map.cols[e]) == Qr.project(et(4, e, inv)));
    }
}

TEST_CASE("Sweedler translation maps match the antipode") {
  auto L = load("sw4");
  const auto& d = L.d;
  Mat<Q> S = sweedler_antipode();
  auto Tl = translation_map(L, Flavor::LeftHopf);
  auto Ql = left_hopf_space(d);
  // x_+ ⊗ x_- = x ⊗ 1 - g ⊗ gx
  CHECK(Ql.project(Tl.map.cols[2]) == Ql.project(plus(et(4, 2, 0), et(4, 1, 3, Q(-1)))));
  // u_+ ⊗ u_- = u_(1) ⊗ S(u_(2))
  TMap<Q> oracle = tm_apply(d.delta, 1, S);
  CHECK(compare_in(Ql, Tl.map, oracle).empty());
  // u_[+] ⊗ u_[-] = u_(2) ⊗ S^{-1}(u_(1))
  Mat<Q> Sinv = *invert(S).inverse;
  auto Tr = translation_map(L, Flavor::RightHopf);
  TMap<Q> oracle_r = tm_permute(tm_apply(d.delta, 0, Sinv), {1, 0});
  CHECK(compare_in(right_hopf_space(d), Tr.map, oracle_r).empty());
}

TEST_CASE("translation maps invert the Galois maps") {
  for (const char* name : {"c2", "sw4", "pair2"}) {
    CAPTURE(name);
    auto L = load(name);
    for (auto [kind, flavor] : {std::pair{Galois::AlphaL, Flavor::LeftHopf}, {Galois::AlphaR, Flavor::RightHopf}}) {
      auto G = galois_map(L, kind);
      auto T = translation_map(L, flavor);
      TMap<Q> back = tm_compose(G.lift, T.map);
      CHECK(compare_in(G.cod, back, unit_tensor(L.d, kind == Galois::AlphaR)).empty());
    }
  }
}

TEST_CASE("the idempotent monoid is not Hopf") {
  auto L = load("monoid2");
  CHECK_THROWS_AS(translation_map(L, Flavor::LeftHopf), NotHopf);
  CHECK_THROWS_AS(translation_map(L, Flavor::RightHopf), NotHopf);
  try {
    translation_map(L, Flavor::LeftHopf);
  } catch (const NotHopf& e) {
    CHECK(e.certificate.find("kernel element") == 0);
  }
  auto G = galois_map(L, Galois::AlphaL);
  CHECK(rank(G.mat) < G.mat.rows());
}

TEST_CASE("identity suites hold on the Hopf fixtures") {
  for (const char* name : {"trivial", "c2", "sw4", "pair2"}) {
    CAPTURE(name);
    auto L = load(name);
    for (Suite s : {Suite::Sch, Suite::Tch, Suite::Mixed}) {
      Report R = verify_hopf_identities(L, s);
      INFO(R.text());
      CHECK(R.pass());
    }
  }
  Report sch = verify_hopf_identities(load("sw4"), Suite::Sch);
  CHECK(sch.axioms.size() == 9);
  Report mixed = verify_hopf_identities(load("pair2"), Suite::Mixed);
  CHECK(mixed.axioms.size() == 3);
}

TEST_CASE("a sign error in u_- is caught by Sch7") {
  auto L = load("sw4");
  auto Tl = translation_map(L, Flavor::LeftHopf);
  Mat<Q> neg(4, 4);
  for (size_t i = 0; i < 4; ++i) neg(i, i) = -1;
  Tl.map = tm_apply(Tl.map, 1, neg);
  Report R = check_sch(L, Tl);
  const AxiomResult* a = R.find("Sch7");
  REQUIRE(a != nullptr);
  CHECK_FALSE(a->pass());
  CHECK(a->violations.front().witness == "u=1");
}
