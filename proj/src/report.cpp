#include "bialg/report.hpp"

#include <sstream>

namespace bialg {

AxiomResult& Report::axiom(const std::string& name) {
  for (auto& a : axioms)
    if (a.name == name) return a;
  axioms.push_back(AxiomResult{name, 0, {}});
  return axioms.back();
}

const AxiomResult* Report::find(const std::string& name) const {
  for (const auto& a : axioms)
    if (a.name == name) return &a;
  return nullptr;
}

void Report::fail(const std::string& axiom_name, const std::string& probe, const std::string& witness,
                  const std::string& detail) {
  axiom(axiom_name).violations.push_back(Violation{probe, witness, detail});
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& a : other.axioms) {
    AxiomResult& dst = axiom(prefix + a.name);
    dst.probes += a.probes;
    dst.violations.insert(dst.violations.end(), a.violations.begin(), a.violations.end());
  }
  for (const auto& kv : other.info) info.push_back(kv);
  for (const auto& s : other.sub) sub.push_back(s);
}

bool Report::pass() const {
  for (const auto& a : axioms)
    if (!a.pass()) return false;
  for (const auto& s : sub)
    if (!s.pass()) return false;
  return true;
}

std::vector<std::string> Report::failed() const {
  std::vector<std::string> out;
  for (const auto& a : axioms)
    if (!a.pass()) out.push_back(a.name);
  for (const auto& s : sub)
    for (const auto& n : s.failed()) out.push_back(s.title + "/" + n);
  return out;
}

std::string Report::text(int indent) const {
  std::ostringstream os;
  std::string pad(indent, ' ');
  os << pad << "== " << title << ": " << (pass() ? "PASS" : "FAIL") << "\n";
  for (const auto& [k, v] : info) os << pad << "  " << k << ": " << v << "\n";
  for (const auto& a : axioms) {
    os << pad << "  [" << (a.pass() ? "ok" : "FAIL") << "] " << a.name << " (" << a.probes << " probes";
    if (!a.pass()) os << ", " << a.violations.size() << " violations";
    os << ")\n";
    for (const auto& v : a.violations) {
      os << pad << "      " << v.probe << " at " << v.witness;
      if (!v.detail.empty()) os << ": " << v.detail;
      os << "\n";
    }
  }
  for (const auto& s : sub) os << s.text(indent + 2);
  return os.str();
}

nlohmann::ordered_json Report::json() const {
  nlohmann::ordered_json j;
  j["title"] = title;
  j["pass"] = pass();
  nlohmann::ordered_json inf = nlohmann::ordered_json::object();
  for (const auto& [k, v] : info) inf[k] = v;
  j["info"] = inf;
  nlohmann::ordered_json ax = nlohmann::ordered_json::array();
  for (const auto& a : axioms) {
    nlohmann::ordered_json x;
    x["axiom"] = a.name;
    x["probes"] = a.probes;
    x["pass"] = a.pass();
    nlohmann::ordered_json vs = nlohmann::ordered_json::array();
    for (const auto& v : a.violations) vs.push_back({{"probe", v.probe}, {"witness", v.witness}, {"detail", v.detail}});
    x["violations"] = vs;
    ax.push_back(x);
  }
  j["axioms"] = ax;
  nlohmann::ordered_json subs = nlohmann::ordered_json::array();
  for (const auto& s : sub) subs.push_back(s.json());
  j["sub"] = subs;
  return j;
}

}  // namespace bialg
