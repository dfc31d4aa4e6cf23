#pragma once

#include "sepvar/classifier.hpp"
#include "sepvar/geometry.hpp"
#include "sepvar/numeric.hpp"
#include "sepvar/witness.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sepvar {

struct ReportOptions {
  bool witness = false;
  bool geometry = false;
  bool numeric = false;
  int precision_bits = kDefaultPrecision;
  bool timings = false;
};

struct Report {
  Poly p;  // as given
  Poly q;
  Analysis analysis;
  Verdict verdict;
  std::optional<WitnessPair> witnesses;
  std::string witness_error;
  std::optional<DeficiencyReport> geometry;
  std::optional<NumericCheck> numeric;
  std::vector<std::pair<std::string, double>> timings_ms;
};

Report build_report(const Poly& p, const Poly& q, const ReportOptions& opts);

// Key order is fixed, so dump() is byte-stable for a given input.
nlohmann::ordered_json to_json(const Report& r, const ReportOptions& opts);
std::string to_text(const Report& r, const ReportOptions& opts);

int exit_code(Outcome o);

}  // namespace sepvar
