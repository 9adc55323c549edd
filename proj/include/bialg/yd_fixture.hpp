#ifndef BIALG_YD_FIXTURE_HPP
#define BIALG_YD_FIXTURE_HPP

#include <string>
#include <vector>

#include "bialg/fixture.hpp"
#include "bialg/yd.hpp"

namespace bialg {

inline YDFlavor read_yd_flavor(const std::string& s) {
  if (s == "left-left") return YDFlavor::LeftLeft;
  if (s == "left-right") return YDFlavor::LeftRight;
  if (s == "right-left") return YDFlavor::RightLeft;
  throw FixtureError("unknown YD flavor " + s);
}

inline std::vector<std::string> yd_block_names(const json& fixture) {
  std::vector<std::string> out;
  if (fixture.contains("yd"))
    for (const auto& [k, v] : fixture["yd"].items()) out.push_back(k);
  return out;
}

// A YD block over the bialgebroid d: action[u] is a dim x dim matrix, coaction[m] the
// coefficient matrix of m_[0] ⊗ m_[1] (right) or m_(-1) ⊗ m_(0) (left).  The base action of
// the comodule is the forgetful one, along t for left-right and along s otherwise.
template <class S>
YDAlgebra<S> read_yd_algebra(const json& j, const FieldDesc& f, const BialgebroidData<S>& d) {
  YDAlgebra<S> Y;
  Y.M.flavor = read_yd_flavor(j.value("flavor", std::string("left-right")));
  if (!j.contains("dim") || !j.contains("algebra") || !j.contains("action") || !j.contains("coaction"))
    throw FixtureError("YD block needs dim, algebra, action and coaction");
  size_t m = j["dim"].get<size_t>(), n = d.n();
  json alg = j["algebra"];
  if (!alg.contains("dim")) alg["dim"] = m;
  Y.R = read_algebra<S>(alg, f, "YD algebra");
  if (Y.R.n != m) throw FixtureError("YD algebra dimension differs from dim");
  auto labels = read_labels(j, m);
  UModule<S>& M = Y.M.module;
  M.right = Y.M.flavor == YDFlavor::RightLeft;
  M.dim = m;
  M.labels = labels;
  const json& a = j["action"];
  if (!a.is_array() || a.size() != n) throw FixtureError("YD action: one matrix per basis element");
  for (size_t u = 0; u < n; ++u) M.act.push_back(read_mat<S>(a[u], m, m, f, "YD action"));
  UComodule<S>& C = Y.M.comodule;
  bool left = Y.M.flavor != YDFlavor::LeftRight;
  C.side = left ? CoSide::Left : CoSide::Right;
  C.dim = m;
  C.labels = labels;
  const json& c = j["coaction"];
  if (!c.is_array() || c.size() != m) throw FixtureError("YD coaction: one matrix per basis element");
  C.coaction.dims = left ? std::vector<size_t>{n, m} : std::vector<size_t>{m, n};
  for (size_t x = 0; x < m; ++x)
    C.coaction.cols.push_back(left ? read_tensor2<S>(c[x], n, m, f, "YD coaction") : read_tensor2<S>(c[x], m, n, f, "YD coaction"));
  const Mat<S>& along = Y.M.flavor == YDFlavor::LeftRight ? d.t : d.s;
  for (size_t k = 0; k < d.nA(); ++k) C.base.push_back(M.op(along.col(k)));
  return Y;
}

template <class S>
json write_yd_algebra(const YDAlgebra<S>& Y, size_t n) {
  json j;
  j["flavor"] = flavor_name(Y.M.flavor);
  j["dim"] = Y.R.n;
  j["labels"] = Y.M.module.labels;
  j["algebra"] = write_algebra(Y.R, Y.M.module.labels);
  json a = json::array();
  for (const auto& op : Y.M.module.act) a.push_back(write_mat(op));
  j["action"] = a;
  json c = json::array();
  bool left = Y.M.comodule.side == CoSide::Left;
  for (const auto& col : Y.M.comodule.coaction.cols)
    c.push_back(left ? write_tensor2<S>(col, n, Y.R.n) : write_tensor2<S>(col, Y.R.n, n));
  j["coaction"] = c;
  return j;
}

}  // namespace bialg

#endif
