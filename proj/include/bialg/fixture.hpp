#ifndef BIALG_FIXTURE_HPP
#define BIALG_FIXTURE_HPP

#include <stdexcept>
#include <string>

#include "bialg/bialgebroid.hpp"
#include "json.hpp"

namespace bialg {

using json = nlohmann::ordered_json;

class FixtureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class FieldKind { Rational, Prime, HPolynomial };

struct FieldDesc {
  FieldKind kind = FieldKind::Rational;
  uint32_t p = 0;
  uint32_t N = 0;  // truncation for h-polynomial fields (0: exact)
};

FieldDesc read_field(const json& j);
json write_field(const FieldDesc& f);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
std::string digest(const std::string& bytes);
json load_json_file(const std::string& path);
// Canonical text of an emitted fixture.
std::string dump_fixture(const json& j);

template <class S>
struct ScalarIO;

template <>
struct ScalarIO<Rational> {
  static Rational read(const json& j, const FieldDesc&) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw FixtureError("rational entry must be an integer or a \"p/q\" string");
  }
  static json write(const Rational& x) { return x.str(); }
};

template <>
struct ScalarIO<Fp> {
  static Fp read(const json& j, const FieldDesc& f) {
    if (!j.is_number_integer()) throw FixtureError("prime-field entry must be an integer");
    return Fp(j.get<long>(), f.p);
  }
  static json write(const Fp& x) { return x.value(); }
};

template <>
struct ScalarIO<HPoly> {
  static HPoly read(const json& j, const FieldDesc& f) {
    if (j.is_number_integer()) return HPoly({j.get<int64_t>()}, f.p, 0);
    if (!j.is_array()) throw FixtureError("h-polynomial entry must be a coefficient list");
    std::vector<int64_t> c;
    for (const auto& x : j) {
      if (!x.is_number_integer()) throw FixtureError("h-polynomial coefficient must be an integer");
      c.push_back(x.get<int64_t>());
    }
    return HPoly(std::move(c), f.p, 0);
  }
  static json write(const HPoly& x) {
    json a = json::array();
    for (auto c : x.coeffs()) a.push_back(c);
    return a;
  }
};

template <class S>
Vec<S> read_vec(const json& j, size_t n, const FieldDesc& f, const std::string& what) {
  if (!j.is_array() || j.size() != n) throw FixtureError(what + ": expected vector of length " + std::to_string(n));
  Vec<S> v;
  for (const auto& x : j) v.push_back(ScalarIO<S>::read(x, f));
  return v;
}

template <class S>
json write_vec(const Vec<S>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(ScalarIO<S>::write(x));
  return a;
}

// Row-major matrix.
template <class S>
Mat<S> read_mat(const json& j, size_t rows, size_t cols, const FieldDesc& f, const std::string& what) {
  if (!j.is_array() || j.size() != rows)
    throw FixtureError(what + ": expected " + std::to_string(rows) + " rows");
  Mat<S> m(rows, cols);
  for (size_t i = 0; i < rows; ++i) {
    Vec<S> r = read_vec<S>(j[i], cols, f, what);
    for (size_t k = 0; k < cols; ++k) m(i, k) = r[k];
  }
  return m;
}

template <class S>
json write_mat(const Mat<S>& m) {
  json a = json::array();
  for (size_t i = 0; i < m.rows(); ++i) a.push_back(write_vec(m.row(i)));
  return a;
}

template <class S>
Algebra<S> read_algebra(const json& j, const FieldDesc& f, const std::string& what) {
  if (!j.contains("dim") || !j.contains("mult") || !j.contains("unit"))
    throw FixtureError(what + ": needs dim, mult, unit");
  size_t n = j["dim"].get<size_t>();
  if (n == 0) throw FixtureError(what + ": zero-dimensional algebra");
  const json& m = j["mult"];
  if (!m.is_array() || m.size() != n) throw FixtureError(what + ": mult must be n x n x n");
  std::vector<SparseVec<S>> table;
  for (size_t i = 0; i < n; ++i) {
    if (!m[i].is_array() || m[i].size() != n) throw FixtureError(what + ": mult must be n x n x n");
    for (size_t k = 0; k < n; ++k) table.push_back(to_sparse(read_vec<S>(m[i][k], n, f, what + ".mult")));
  }
  return Algebra<S>(n, std::move(table), read_vec<S>(j["unit"], n, f, what + ".unit"));
}

template <class S>
json write_algebra(const Algebra<S>& A, const std::vector<std::string>& labels) {
  json j;
  j["dim"] = A.n;
  if (!labels.empty()) j["labels"] = labels;
  json m = json::array();
  for (size_t i = 0; i < A.n; ++i) {
    json row = json::array();
    for (size_t k = 0; k < A.n; ++k) row.push_back(write_vec(to_dense(A.prod(i, k), A.n)));
    m.push_back(row);
  }
  j["mult"] = m;
  j["unit"] = write_vec(A.unit);
  return j;
}

inline std::vector<std::string> read_labels(const json& j, size_t n) {
  std::vector<std::string> out;
  if (j.contains("labels")) {
    for (const auto& x : j["labels"]) out.push_back(x.get<std::string>());
    if (out.size() != n) throw FixtureError("labels length mismatch");
  }
  return out;
}

// Element of U ⊗ U given as an n x n coefficient matrix.
template <class S>
SparseVec<S> read_tensor2(const json& j, size_t r, size_t c, const FieldDesc& f, const std::string& what) {
  Mat<S> m = read_mat<S>(j, r, c, f, what);
  SparseVec<S> v;
  for (size_t i = 0; i < r; ++i)
    for (size_t k = 0; k < c; ++k)
      if (!m(i, k).is_zero()) v.emplace_back(i * c + k, m(i, k));
  return v;
}

template <class S>
json write_tensor2(const SparseVec<S>& v, size_t r, size_t c) {
  Mat<S> m(r, c);
  for (const auto& [i, x] : v) m(i / c, i % c) = x;
  return write_mat(m);
}

template <class S>
BialgebroidData<S> read_bialgebroid(const json& j, const FieldDesc& f) {
  BialgebroidData<S> d;
  d.name = j.value("name", std::string());
  if (!j.contains("base") || !j.contains("total")) throw FixtureError("fixture needs base and total algebras");
  d.A = read_algebra<S>(j["base"], f, "base");
  d.U = read_algebra<S>(j["total"], f, "total");
  d.base_labels = read_labels(j["base"], d.A.n);
  d.labels = read_labels(j["total"], d.U.n);
  size_t n = d.U.n, nA = d.A.n;
  for (const char* key : {"source", "target", "coproduct", "counit"})
    if (!j.contains(key)) throw FixtureError(std::string("fixture lacks ") + key);
  d.s = read_mat<S>(j["source"], n, nA, f, "source");
  d.t = read_mat<S>(j["target"], n, nA, f, "target");
  d.eps = read_mat<S>(j["counit"], nA, n, f, "counit");
  const json& c = j["coproduct"];
  if (!c.is_array() || c.size() != n) throw FixtureError("coproduct: one matrix per basis element");
  d.delta.dims = {n, n};
  for (size_t u = 0; u < n; ++u) d.delta.cols.push_back(read_tensor2<S>(c[u], n, n, f, "coproduct"));
  if (j.contains("a_basis")) {
    std::vector<Vec<S>> cols;
    for (const auto& x : j["a_basis"]) cols.push_back(read_vec<S>(x, n, f, "a_basis"));
    d.a_basis = Mat<S>::from_cols(n, cols);
  }
  return d;
}

template <class S>
json write_bialgebroid(const BialgebroidData<S>& d, const FieldDesc& f, const std::string& chirality) {
  json j;
  j["name"] = d.name;
  j["field"] = write_field(f);
  j["chirality"] = chirality;
  j["base"] = write_algebra(d.A, d.base_labels);
  j["total"] = write_algebra(d.U, d.labels);
  j["source"] = write_mat(d.s);
  j["target"] = write_mat(d.t);
  json c = json::array();
  for (const auto& col : d.delta.cols) c.push_back(write_tensor2<S>(col, d.n(), d.n()));
  j["coproduct"] = c;
  j["counit"] = write_mat(d.eps);
  if (d.a_basis) {
    json b = json::array();
    for (size_t k = 0; k < d.a_basis->cols(); ++k) b.push_back(write_vec(d.a_basis->col(k)));
    j["a_basis"] = b;
  }
  return j;
}

template <class S>
BialgebroidData<S> load_bialgebroid(const std::string& path) {
  json j = load_json_file(path);
  return read_bialgebroid<S>(j, read_field(j.value("field", json())));
}

}  // namespace bialg

#endif
