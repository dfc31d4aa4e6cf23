#pragma once

#include "sepvar/classifier.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sepvar {

// Hand-checked instances with their expected classification. Used by the
// selftest subcommand and the acceptance suite.
struct CatalogEntry {
  std::string name;
  std::string p;
  std::string q;
  Outcome outcome;
  std::string rule;
  std::optional<int> listed_case;  // must appear in evidence.theorem3_cases
  std::optional<int> genus;        // expected geometry oracle value
};

const std::vector<CatalogEntry>& catalog();

struct SelftestLine {
  std::string name;
  bool passed = false;
  std::string detail;
};

std::vector<SelftestLine> run_selftest();

}  // namespace sepvar
