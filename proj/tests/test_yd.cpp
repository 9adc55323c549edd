#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bialg/yd.hpp"
#include "bialg/fixture.hpp"

using namespace bialg;
using Q = Rational;

namespace {

std::string fx(const std::string& name) { return std::string(BIALG_FIXTURES) + "/" + name + ".json"; }
LeftBialgebroid<Q> load(const std::string& name) { return LeftBialgebroid<Q>{load_bialgebroid<Q>(fx(name))}; }

}  // namespace

TEST_CASE("the base algebra is a right comodule via the target map") {
  for (const char* name : {"trivial", "c2", "sw4", "pair2", "monoid2"}) {
    CAPTURE(name);
    auto L = load(name);
    auto C = base_comodule(L);
    Report R = check_comodule(L, C);
    INFO(R.text());
    CHECK(R.pass());
    Ops<Q> ind = induced_action(L, C);
    for (size_t a = 0; a < L.d.nA(); ++a) CHECK(ind[a] == L.d.A.lmul(unit_vec<Q>(L.d.nA(), a)));
  }
}

TEST_CASE("the coproduct makes a bialgebroid a right comodule over itself") {
  for (const char* name : {"c2", "sw4", "pair2", "monoid2"}) {
    CAPTURE(name);
    auto L = load(name);
    auto C = regular_comodule(L);
    Report R = check_comodule(L, C);
    INFO(R.text());
    CHECK(R.pass());
    // the induced left action is right multiplication by the target
    CHECK(induced_action(L, C) == action_ops(L.d, Act::BlkL));
  }
}

TEST_CASE("a zero coaction violates the counit axiom") {
  auto L = load("pair2");
  auto C = regular_comodule(L);
  for (auto& c : C.coaction.cols) c.clear();
  Report R = check_comodule(L, C);
  CHECK_FALSE(R.find("counit")->pass());
  CHECK(R.find("coassociativity")->pass());
}

TEST_CASE("left comodules reduce to right comodules over the coopposite") {
  for (const char* name : {"c2", "sw4", "pair2"}) {
    CAPTURE(name);
    auto L = load(name);
    auto C = regular_comodule(coopposite(L));
    C.side = CoSide::Left;
    C.coaction = tm_permute(C.coaction, {1, 0});
    Report R = check_comodule(L, C);
    INFO(R.text());
    CHECK(R.pass());
    // over the right bialgebroid op_left(L) the same data is a right comodule
    auto V = op_right(L);
    auto D = regular_comodule(L);
    Report RV = check_comodule(V, D);
    INFO(RV.text());
    CHECK(RV.pass());
  }
}

TEST_CASE("the counit action on the base is a module") {
  for (const char* name : {"trivial", "c2", "sw4", "pair2", "monoid2"}) {
    CAPTURE(name);
    auto L = load(name);
    auto M = base_module(L.d);
    CHECK(check_module(L.d.U, M).pass());
    auto B = forgetful_actions(L.d, M);
    // a ▷ b = ab and b ◁ a = ba
    for (size_t a = 0; a < L.d.nA(); ++a) {
      CHECK(B.ops(Act::TriL)[a] == L.d.A.lmul(unit_vec<Q>(L.d.nA(), a)));
      CHECK(B.ops(Act::TriR)[a] == L.d.A.rmul(unit_vec<Q>(L.d.nA(), a)));
    }
  }
}

TEST_CASE("the base algebra is a braided commutative YD algebra") {
  for (const char* name : {"trivial", "c2", "sw4", "pair2", "monoid2"}) {
    CAPTURE(name);
    auto L = load(name);
    auto A = base_yd_algebra(L);
    CHECK_THROWS_AS(check_braided_commutative(L, A), UncheckedSubstrate);
    Report Y = verify_yd(L, A.M);
    INFO(Y.text());
    CHECK(Y.pass());
    Report B = verify_braided_commutative(L, A);
    INFO(B.text());
    CHECK(B.pass());
    CHECK(A.verified);
  }
}

TEST_CASE("flavors are checked against the owner") {
  auto L = load("c2");
  auto A = base_yd_algebra(L);
  A.M.flavor = YDFlavor::RightLeft;
  CHECK_THROWS_AS(check_yd(L, A.M), ChiralityError);
  A.M.flavor = YDFlavor::LeftRight;
  CHECK_THROWS_AS(check_yd(op_right(L), A.M), ChiralityError);
}

namespace {

UComodule<Q> one_dim_comodule(size_t n, size_t g) {
  UComodule<Q> C;
  C.dim = 1;
  C.base = {Mat<Q>::identity(1)};
  C.coaction = TMap<Q>{{1, n}, {{{g, Q(1)}}}};
  return C;
}

UModule<Q> regular_module(const LeftBialgebroid<Q>& L) {
  UModule<Q> M;
  M.dim = L.d.n();
  for (size_t u = 0; u < L.d.n(); ++u) M.act.push_back(L.d.U.lmul(unit_vec<Q>(L.d.n(), u)));
  M.labels = L.d.labels;
  return M;
}

}  // namespace

TEST_CASE("a group-like right coaction becomes the inverse left coaction") {
  auto L = load("c2");
  auto out = transport_coaction(L, one_dim_comodule(2, 1));
  CHECK(out.side == CoSide::Left);
  CHECK(compare_in(coaction_space(L, out), out.coaction, TMap<Q>{{2, 1}, {{{1, Q(1)}}}}).empty());
  auto triv = transport_coaction(L, one_dim_comodule(2, 0));
  CHECK(compare_in(coaction_space(L, triv), triv.coaction, TMap<Q>{{2, 1}, {{{0, Q(1)}}}}).empty());
}

TEST_CASE("transporting the regular coaction gives a left coaction and back") {
  for (const char* name : {"c2", "sw4", "pair2"}) {
    CAPTURE(name);
    auto L = load(name);
    auto C = regular_comodule(L);
    auto left = transport_coaction(L, C);
    Report R = check_comodule(L, left);
    INFO(R.text());
    CHECK(R.pass());
    auto back = transport_coaction(L, left);
    CHECK(back.base == C.base);
    CHECK(back.coaction == canonical_coaction(L, C).coaction);
  }
  CHECK_THROWS_AS(transport_coaction(load("monoid2"), regular_comodule(load("monoid2"))), NotHopf);
}

TEST_CASE("transporting a left-right YD module gives a left-left one") {
  for (const char* name : {"c2", "sw4", "pair2"}) {
    CAPTURE(name);
    auto L = load(name);
    auto A = base_yd_algebra(L);
    YDModule<Q> ll = transport_yd(L, A.M);
    CHECK(ll.flavor == YDFlavor::LeftLeft);
    Report R = check_yd(L, ll);
    INFO(R.text());
    CHECK(R.pass());
  }
}

TEST_CASE("comodules over U are modules over the left dual") {
  for (const char* name : {"trivial", "c2", "sw4", "pair2", "monoid2"}) {
    CAPTURE(name);
    auto L = load(name);
    auto D = left_dual(L);
    auto C = regular_comodule(L);
    UModule<Q> M = comodule_to_dual_module(L, D, C);
    CHECK(check_module(D.V.d.U, M).pass());
    // ψ'(uψ) = (ψψ')(u)
    size_t m = D.P.dim(), n = L.d.n();
    bool agree = true;
    for (size_t x = 0; x < m; ++x)
      for (size_t y = 0; y < m; ++y) {
        Vec<Q> prod = to_dense(D.V.d.U.prod(x, y), m);
        Mat<Q> direct = D.P.values(prod);
        Mat<Q> via = D.P.eval[y] * M.act[x];
        agree = agree && direct == via;
      }
    CHECK(agree);
    CHECK(n == M.dim);
    UComodule<Q> back = dual_module_to_comodule(L, D, M);
    CHECK(same_coaction(L, back, C));
    CHECK(comodule_to_dual_module(L, D, back).act == M.act);
  }
}

TEST_CASE("modules over U are comodules over the left dual") {
  for (const char* name : {"trivial", "c2", "sw4", "pair2", "monoid2"}) {
    CAPTURE(name);
    auto L = load(name);
    auto D = left_dual(L);
    for (const auto& M : {base_module(L.d), regular_module(L)}) {
      UComodule<Q> C = module_to_dual_comodule(L, D, M);
      Report R = check_comodule(D.V, C);
      INFO(R.text());
      CHECK(R.pass());
      CHECK(dual_comodule_to_module(L, D, C).act == M.act);
      CHECK(module_to_dual_comodule(L, D, dual_comodule_to_module(L, D, C)).coaction == C.coaction);
    }
  }
  auto t = trivial_bialgebroid<Q>();
  auto C = module_to_dual_comodule(t, left_dual(t), base_module(t.d));
  CHECK(C.coaction.cols[0] == SparseVec<Q>{{0, Q(1)}});
}

TEST_CASE("the counit module over C2 has the coaction a -> sum of delta_x tensor a") {
  auto L = load("c2");
  auto D = left_dual(L);
  UComodule<Q> C = module_to_dual_comodule(L, D, base_module(L.d));
  // ε(x)1 = 1 for both group elements
  CHECK(compare_in(coaction_space(D.V, C), C.coaction, TMap<Q>{{2, 1}, {{{0, Q(1)}, {1, Q(1)}}}}).empty());
}

TEST_CASE("comodules over the right dual become comodules over the left dual") {
  for (const char* name : {"trivial", "c2", "sw4", "pair2", "monoid2"}) {
    CAPTURE(name);
    auto L = load(name);
    auto Dl = left_dual(L), Dr = right_dual(L);
    for (const auto& M : {base_module(L.d), regular_module(L)}) {
      UComodule<Q> Cr = module_to_right_dual_comodule(L, Dr, M);
      Report R = check_comodule(Dr.V, Cr);
      INFO(R.text());
      CHECK(R.pass());
      UComodule<Q> Cl = right_dual_comodule_to_dual_comodule(Dl, Dr, Cr);
      Report R2 = check_comodule(Dl.V, Cl);
      INFO(R2.text());
      CHECK(R2.pass());
      CHECK(same_coaction(Dl.V, Cl, module_to_dual_comodule(L, Dl, M)));
    }
  }
}

TEST_CASE("braided commutative monoids move to the left dual and back") {
  for (const char* name : {"trivial", "c2", "sw4", "pair2", "monoid2"}) {
    CAPTURE(name);
    auto L = load(name);
    auto D = left_dual(L);
    auto A = base_yd_algebra(L);
    CHECK_THROWS_AS(transport_braided_monoid(L, D, A), UncheckedSubstrate);
    verify_yd(L, A.M);
    verify_braided_commutative(L, A);
    REQUIRE(A.verified);
    YDAlgebra<Q> B = transport_braided_monoid(L, D, A);
    CHECK(B.M.flavor == YDFlavor::RightLeft);
    CHECK(B.verified);
    CHECK(B.R.table == A.R.table);
    YDAlgebra<Q> C = transport_braided_monoid_back(L, D, B);
    CHECK(C.M.module.act == A.M.module.act);
    CHECK(C.M.comodule.base == A.M.comodule.base);
    CHECK(C.M.comodule.coaction == canonical_coaction(L, A.M.comodule).coaction);
    YDAlgebra<Q> B2 = transport_braided_monoid(L, D, C);
    CHECK(B2.M.module.act == B.M.module.act);
    CHECK(B2.M.comodule.coaction == B.M.comodule.coaction);
  }
}
