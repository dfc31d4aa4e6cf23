#include "sepvar/report.hpp"

#include <chrono>
#include <sstream>

namespace sepvar {

namespace {

using json = nlohmann::ordered_json;

class Stopwatch {
 public:
  explicit Stopwatch(std::vector<std::pair<std::string, double>>& sink) : sink_(sink) {}
  void lap(const std::string& stage) {
    auto now = std::chrono::steady_clock::now();
    sink_.emplace_back(stage, std::chrono::duration<double, std::milli>(now - last_).count());
    last_ = now;
  }

 private:
  std::vector<std::pair<std::string, double>>& sink_;
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

json pair_classes_json(const std::vector<PairClass>& pcs) {
  json arr = json::array();
  for (const auto& c : pcs) arr.push_back({{"p", c.p}, {"q", c.q}, {"count", c.count}});
  return arr;
}

json critical_json(const CriticalStructure& cs) {
  json arr = json::array();
  for (const auto& c : cs.classes)
    arr.push_back({{"multiplicity", c.multiplicity},
                   {"count", c.roots.degree()},
                   {"points", c.roots.to_string("x")},
                   {"values", c.values.to_string("y")}});
  return arr;
}

json form_json(const OneFormSpec& f, const RegularityReport& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks)
    checks.push_back({{"point", c.point}, {"clause", c.clause}, {"satisfied", c.satisfied}, {"margin", c.margin}});
  return {{"name", f.name},
          {"source_rule", f.source_rule},
          {"expression", f.to_string()},
          {"numerator_degree", f.numerator_degree()},
          {"denominator_degree", f.denominator_degree()},
          {"wronskian", {f.wronskian.first, f.wronskian.second}},
          {"legend", f.legend()},
          {"regular", rep.overall},
          {"checks", checks}};
}

std::optional<bool> geometry_consistent(const DeficiencyReport& g, Outcome o) {
  if (!g.genus || o == Outcome::Inconclusive) return std::nullopt;
  bool low = *g.genus <= 1;
  if (o == Outcome::HasLowGenusComponent) return g.exact ? std::optional<bool>(low) : std::optional<bool>(true);
  // Hyperbolic: every component has genus >= 2, so an exact low genus contradicts.
  return !(low && g.exact);
}

}  // namespace

int exit_code(Outcome o) {
  switch (o) {
    case Outcome::Hyperbolic:
      return 0;
    case Outcome::HasLowGenusComponent:
      return 10;
    case Outcome::Inconclusive:
      return 20;
  }
  return 1;
}

Report build_report(const Poly& p, const Poly& q, const ReportOptions& opts) {
  std::vector<std::pair<std::string, double>> timings;
  Stopwatch sw(timings);
  PolynomialPair pp(p, q);
  Report r{p, q, analyze_pair(pp), {}, {}, {}, {}, {}, {}};
  sw.lap("analysis");
  r.verdict = classify(r.analysis);
  sw.lap("classify");
  if (opts.witness && r.verdict.outcome == Outcome::Hyperbolic) {
    try {
      r.witnesses = emit_witnesses(r.verdict, r.analysis);
    } catch (const std::exception& e) {
      r.witness_error = e.what();
    }
    sw.lap("witness");
  }
  if (opts.geometry) {
    r.geometry = genus_if_supported(r.analysis);
    sw.lap("geometry");
  }
  if (opts.numeric) {
    r.numeric = verify_pair_counts(r.analysis, opts.precision_bits);
    sw.lap("numeric");
  }
  r.timings_ms = std::move(timings);
  return r;
}

json to_json(const Report& r, const ReportOptions& opts) {
  const auto& a = r.analysis;
  const auto& v = r.verdict;
  const auto& ev = v.evidence;
  json out;
  out["schema"] = 1;
  out["input"] = {{"p", r.p.to_string("x")}, {"q", r.q.to_string("x")}};
  out["verdict"] = outcome_name(v.outcome);
  out["rule"] = v.rule;
  out["case"] = v.case_id ? json{{"id", v.case_id->id}, {"parameters", v.case_id->parameters}} : json(nullptr);
  out["swapped"] = v.swapped;
  out["n"] = ev.n;
  out["m"] = ev.m;
  out["n0"] = ev.n0;
  out["m0"] = ev.m0;
  out["hypothesis_I"] = {{"p", ev.hypothesis_I_p}, {"q", ev.hypothesis_I_q}};
  out["critical"] = {{"p", critical_json(a.cp)}, {"q", critical_json(a.cq)}};
  out["l"] = ev.l;
  out["h"] = ev.h;
  out["l0"] = ev.l0;
  out["l1"] = ev.l1;
  out["theorem1_lhs"] = ev.theorem1_lhs;
  out["corollary1_lhs"] = ev.corollary1_lhs;
  out["pair_classes"] = pair_classes_json(a.pm.pair_classes);
  out["fired_rules"] = ev.fired;
  out["theorem3_cases"] = ev.theorem3_cases;
  out["failed_hypotheses"] = ev.failed_hypotheses;
  out["notes"] = ev.notes;
  if (ev.linear_factor) {
    const auto& w = *ev.linear_factor;
    out["linear_factor"] = {{"lambda_minpoly", w.lambda_minpoly.to_string("z")},
                            {"mu_numerator", w.mu_numerator.to_string("z")},
                            {"mu_denominator", w.mu_denominator.to_string("z")},
                            {"description", w.description}};
  } else {
    out["linear_factor"] = nullptr;
  }

  json forms = json::array();
  if (r.witnesses) {
    forms.push_back(form_json(r.witnesses->first, r.witnesses->first_report));
    forms.push_back(form_json(r.witnesses->second, r.witnesses->second_report));
  }
  out["witness_forms"] = forms;
  if (r.witnesses) out["witness_proof_case"] = r.witnesses->proof_case;
  if (!r.witness_error.empty()) out["witness_error"] = r.witness_error;

  json oracle;
  if (r.geometry) {
    const auto& g = *r.geometry;
    auto cons = geometry_consistent(g, v.outcome);
    oracle["geometry"] = {{"supported", g.method != GenusMethod::Unsupported},
                          {"delta", g.delta},
                          {"genus", g.genus ? json(*g.genus) : json(nullptr)},
                          {"exact", g.exact},
                          {"method", genus_method_name(g.method)},
                          {"certificate", certificate_name(g.certificate)},
                          {"consistent_with_verdict", cons ? json(*cons) : json(nullptr)}};
  } else {
    oracle["geometry"] = nullptr;
  }
  if (r.numeric) {
    const auto& nc = *r.numeric;
    oracle["numeric"] = {{"outcome", numeric_outcome_name(nc.outcome)},
                         {"precision_bits", nc.precision_bits},
                         {"hypothesis_I", {{"p", nc.hyp_p}, {"q", nc.hyp_q}}},
                         {"l0", nc.l0},
                         {"pair_classes", pair_classes_json(nc.pair_classes)},
                         {"value_clusters", nc.values.clusters.size()},
                         {"detail", nc.detail}};
  } else {
    oracle["numeric"] = nullptr;
  }
  out["oracle"] = oracle;

  if (opts.timings) {
    json t;
    for (const auto& [stage, ms] : r.timings_ms) t[stage] = ms;
    out["timings_ms"] = t;
  }
  return out;
}

std::string to_text(const Report& r, const ReportOptions& opts) {
  const auto& v = r.verdict;
  const auto& ev = v.evidence;
  std::ostringstream os;
  os << "P(x) = " << r.p.to_string("x") << "\n";
  os << "Q(y) = " << r.q.to_string("y") << "\n";
  os << "verdict: " << outcome_name(v.outcome) << "\n";
  os << "rule:    " << v.rule;
  if (v.case_id && !v.case_id->parameters.empty()) os << " (" << v.case_id->parameters << ")";
  os << "\n";
  if (v.swapped) os << "note: P and Q swapped so that deg P >= deg Q\n";
  os << "n=" << ev.n << " m=" << ev.m << " n0=" << ev.n0 << " m0=" << ev.m0 << "\n";
  os << "hypothesis I: P " << (ev.hypothesis_I_p ? "yes" : "no") << ", Q " << (ev.hypothesis_I_q ? "yes" : "no")
     << "\n";
  os << "l=" << ev.l << " h=" << ev.h << " l0=" << ev.l0 << " l1=" << ev.l1 << "\n";
  os << "mass sums: alpha " << ev.theorem1_lhs << ", beta " << ev.corollary1_lhs << "\n";
  if (!r.analysis.pm.pair_classes.empty()) {
    os << "pair classes:";
    for (const auto& c : r.analysis.pm.pair_classes) os << " (" << c.p << "," << c.q << ")x" << c.count;
    os << "\n";
  }
  if (ev.linear_factor) os << "linear factor: " << ev.linear_factor->description << "\n";
  if (!ev.fired.empty()) {
    os << "fired:";
    for (const auto& f : ev.fired) os << " [" << f << "]";
    os << "\n";
  }
  for (const auto& h : ev.failed_hypotheses) os << "unmet: " << h << "\n";
  for (const auto& n : ev.notes) os << "note: " << n << "\n";
  if (r.witnesses) {
    os << "witness forms (" << r.witnesses->proof_case << "):\n";
    for (const auto* f : {&r.witnesses->first, &r.witnesses->second}) {
      os << "  " << f->name << ": " << f->to_string() << "\n";
      for (const auto& l : f->legend()) os << "      " << l << "\n";
    }
    os << "  regular: " << (r.witnesses->first_report.overall && r.witnesses->second_report.overall ? "yes" : "no")
       << "\n";
  }
  if (!r.witness_error.empty()) os << "witness error: " << r.witness_error << "\n";
  if (r.geometry) {
    const auto& g = *r.geometry;
    os << "geometry: ";
    if (g.method == GenusMethod::Unsupported)
      os << "unsupported";
    else
      os << "delta=" << g.delta << " genus" << (g.exact ? "=" : "<=") << *g.genus << " via "
         << genus_method_name(g.method) << "/" << certificate_name(g.certificate);
    os << "\n";
  }
  if (r.numeric) {
    const auto& nc = *r.numeric;
    os << "numeric: " << numeric_outcome_name(nc.outcome) << " at " << nc.precision_bits << " bits, l0=" << nc.l0;
    if (!nc.detail.empty()) os << " (" << nc.detail << ")";
    os << "\n";
  }
  if (opts.timings)
    for (const auto& [stage, ms] : r.timings_ms) os << "time " << stage << ": " << ms << " ms\n";
  return os.str();
}

}  // namespace sepvar
