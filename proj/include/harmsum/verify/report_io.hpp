#pragma once

// Report serialization. Every number is a decimal string carrying the full
// working precision, so nothing is lost to binary floating point.
//
// {
//   "precision": 50,
//   "tolerances": {"standard": "...", "double_integral": "...", "antiderivative": "..."},
//   "overall_pass": true,
//   "checks": [{"name", "lhs", "rhs", "abs_diff", "tol", "passed", "detail"}, ...],
//   "informational": [...same shape...],
//   "timing_ms": {"<check name>": 1.25, ...}        only when requested
// }
// A complex lhs/rhs is an object {"re": "...", "im": "..."}.

#include <cstdio>
#include <ostream>
#include <string>

#include <json.hpp>

#include "harmsum/check.hpp"
#include "harmsum/quad.hpp"
#include "harmsum/series.hpp"
#include "harmsum/verify/report.hpp"

namespace harmsum {

inline nlohmann::ordered_json value_to_json(const CheckValue& v, int digits) {
  if (const auto* r = std::get_if<Real>(&v)) return r->to_string(digits);
  const auto& c = std::get<Complex>(v);
  return nlohmann::ordered_json{{"re", c.re.to_string(digits)}, {"im", c.im.to_string(digits)}};
}

inline nlohmann::ordered_json outcome_to_json(const CheckOutcome& c, int digits) {
  return nlohmann::ordered_json{{"name", c.name},
                                {"lhs", value_to_json(c.lhs, digits)},
                                {"rhs", value_to_json(c.rhs, digits)},
                                {"abs_diff", c.abs_diff.to_string(digits)},
                                {"tol", c.tol.to_string(digits)},
                                {"passed", c.passed},
                                {"detail", c.detail}};
}

inline nlohmann::ordered_json report_to_json(const Report& r, bool include_timing = false) {
  const int digits = r.precision.decimal_digits();
  nlohmann::ordered_json j;
  j["precision"] = digits;
  j["tolerances"] = nlohmann::ordered_json{{"standard", r.tolerances.standard.to_string(digits)},
                                           {"double_integral", r.tolerances.double_integral.to_string(digits)},
                                           {"antiderivative", r.tolerances.antiderivative.to_string(digits)}};
  j["overall_pass"] = r.overall_pass;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) j["checks"].push_back(outcome_to_json(c, digits));
  j["informational"] = nlohmann::ordered_json::array();
  for (const auto& c : r.informational) j["informational"].push_back(outcome_to_json(c, digits));
  if (include_timing) {
    nlohmann::ordered_json t = nlohmann::ordered_json::object();
    for (const auto& c : r.checks) t[c.name] = c.elapsed_ms;
    j["timing_ms"] = std::move(t);
  }
  return j;
}

inline nlohmann::ordered_json series_to_json(const SeriesResult& s, int digits) {
  return nlohmann::ordered_json{{"value", s.value.to_string(digits)},
                                {"tail_bound", s.tail_bound.to_string(digits)},
                                {"terms_used", s.terms_used}};
}

inline nlohmann::ordered_json quadrature_to_json(const QuadratureResult& q, int digits) {
  return nlohmann::ordered_json{{"value", q.value.to_string(digits)},
                                {"error_estimate", q.error_estimate.to_string(digits)},
                                {"evaluations", q.evaluations},
                                {"converged", q.converged}};
}

namespace detail {

inline std::string value_text(const CheckValue& v, int digits) {
  if (const auto* r = std::get_if<Real>(&v)) return r->to_string(digits);
  const auto& c = std::get<Complex>(v);
  const std::string im = c.im.to_string(digits);
  return c.re.to_string(digits) + (im.front() == '-' ? " - " + im.substr(1) : " + " + im) + "i";
}

}  // namespace detail

inline void write_outcome_text(std::ostream& os, const CheckOutcome& c, int digits, const char* tag = nullptr) {
  os << (tag ? tag : (c.passed ? "PASS" : "FAIL")) << "  " << c.name << "\n"
     << "      lhs = " << detail::value_text(c.lhs, digits) << "\n"
     << "      rhs = " << detail::value_text(c.rhs, digits) << "\n"
     << "      |diff| = " << c.abs_diff.to_string(3) << "  tol = " << c.tol.to_string(3) << "\n";
  if (!c.detail.empty()) os << "      " << c.detail << "\n";
}

inline void write_report_text(std::ostream& os, const Report& r, int digits, bool include_timing = false) {
  os << "precision: " << r.precision.decimal_digits() << " digits\n"
     << "tolerances: standard " << r.tolerances.standard.to_string(3) << ", double_integral "
     << r.tolerances.double_integral.to_string(3) << ", antiderivative " << r.tolerances.antiderivative.to_string(3)
     << "\n\n";
  std::size_t passed = 0;
  for (const auto& c : r.checks) {
    write_outcome_text(os, c, digits);
    if (include_timing) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.3f", c.elapsed_ms);
      os << "      time " << buf << " ms\n";
    }
    passed += c.passed ? 1 : 0;
  }
  if (!r.informational.empty()) {
    os << "\ninformational (not part of overall result):\n";
    for (const auto& c : r.informational) write_outcome_text(os, c, digits, c.passed ? "info:match" : "info:differ");
  }
  os << "\n" << passed << "/" << r.checks.size() << " checks passed; overall: " << (r.overall_pass ? "PASS" : "FAIL")
     << "\n";
}

}  // namespace harmsum
