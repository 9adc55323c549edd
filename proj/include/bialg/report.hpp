#ifndef BIALG_REPORT_HPP
#define BIALG_REPORT_HPP

#include <string>
#include <vector>

#include "json.hpp"

namespace bialg {

struct Violation {
  std::string probe;
  std::string witness;
  std::string detail;
};

struct AxiomResult {
  std::string name;
  size_t probes = 0;
  std::vector<Violation> violations;
  bool pass() const { return violations.empty(); }
};

struct Report {
  std::string title;
  std::vector<std::pair<std::string, std::string>> info;
  std::vector<AxiomResult> axioms;
  std::vector<Report> sub;

  AxiomResult& axiom(const std::string& name);
  const AxiomResult* find(const std::string& name) const;
  void note(const std::string& key, const std::string& value) { info.emplace_back(key, value); }
  void fail(const std::string& axiom_name, const std::string& probe, const std::string& witness,
            const std::string& detail = "");
  void count(const std::string& axiom_name, size_t n = 1) { axiom(axiom_name).probes += n; }
  void merge(const Report& other, const std::string& prefix = "");

  bool pass() const;
  // Names of failing axioms, including those of sub-reports as "sub/axiom".
  std::vector<std::string> failed() const;

  std::string text(int indent = 0) const;
  nlohmann::ordered_json json() const;
};

}  // namespace bialg

#endif
