#include <cstdio>
#include <fstream>
#include <sstream>

#include "bialg/fixture.hpp"

namespace bialg {

FieldDesc read_field(const json& j) {
  FieldDesc f;
  if (j.is_null()) return f;
  std::string kind = j.value("kind", std::string("rational"));
  if (kind == "rational") {
    f.kind = FieldKind::Rational;
  } else if (kind == "prime") {
    f.kind = FieldKind::Prime;
    f.p = j.at("p").get<uint32_t>();
  } else if (kind == "hpoly") {
    f.kind = FieldKind::HPolynomial;
    f.p = j.at("p").get<uint32_t>();
  } else {
    throw FixtureError("unknown field kind: " + kind);
  }
  if (f.kind != FieldKind::Rational && f.p < 2) throw FixtureError("field characteristic must be a prime");
  return f;
}

json write_field(const FieldDesc& f) {
  json j;
  switch (f.kind) {
    case FieldKind::Rational: j["kind"] = "rational"; break;
    case FieldKind::Prime: j["kind"] = "prime"; j["p"] = f.p; break;
    case FieldKind::HPolynomial: j["kind"] = "hpoly"; j["p"] = f.p; break;
  }
  return j;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FixtureError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FixtureError("cannot write " + path);
  out << text;
}

std::string digest(const std::string& bytes) {
  uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json load_json_file(const std::string& path) {
  std::string text = read_text_file(path);
  try {
    return json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw FixtureError(path + ": " + e.what());
  }
}

std::string dump_fixture(const json& j) { return j.dump(1) + "\n"; }

}  // namespace bialg
