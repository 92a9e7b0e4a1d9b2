#pragma once

#include <chrono>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "harmsum/check.hpp"
#include "harmsum/real.hpp"
#include "harmsum/series.hpp"
#include "harmsum/verify/antiderivative.hpp"
#include "harmsum/verify/checks.hpp"

namespace harmsum {

struct VerifyConfig {
  PrecisionConfig precision{50};
  /// Decimal literal applied to every check in place of the default schedule.
  std::optional<std::string> tol_override;
  long max_terms = 10000;

  ToleranceSchedule tolerances() const {
    if (tol_override) return ToleranceSchedule::uniform(precision.parse(*tol_override));
    return ToleranceSchedule::defaults(precision);
  }
};

struct Report {
  PrecisionConfig precision{50};
  ToleranceSchedule tolerances;
  std::vector<CheckOutcome> checks;
  /// Reported but never gating: boundary evaluations of the antiderivative and
  /// the forms / branch presets that do not define a valid antiderivative.
  std::vector<CheckOutcome> informational;
  bool overall_pass = false;
};

/// 9 points from 0.05 to 0.95, step 0.1125.
inline std::vector<Real> interior_grid(const PrecisionConfig& precision) {
  std::vector<Real> grid;
  for (long k = 0; k < 9; ++k) grid.push_back(precision.parse("0.05") + precision.parse("0.1125") * k);
  return grid;
}

/// v in {0.1, 0.3, 0.5, 0.7, 0.9}.
inline std::vector<Real> antiderivative_grid(const PrecisionConfig& precision) {
  std::vector<Real> grid;
  for (long k = 1; k <= 9; k += 2) grid.push_back(precision.real(k) / 10);
  return grid;
}

namespace detail {

class ReportBuilder {
 public:
  ReportBuilder(std::vector<CheckOutcome>& sink, bits_t bits) : sink_(sink), bits_(bits) {}

  // Runs `fn`; failures are recorded as a failed outcome, never propagated.
  void run(const std::string& name, const std::function<std::vector<CheckOutcome>()>& fn) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<CheckOutcome> produced;
    try {
      produced = fn();
    } catch (const std::exception& e) {
      Real inf(bits_);
      mpfr_set_inf(inf.get(), 1);
      produced.push_back(CheckOutcome{name, Real(bits_), Real(bits_), std::move(inf), Real(bits_), false,
                                      std::string("error: ") + e.what(), 0.0});
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    for (auto& c : produced) {
      c.elapsed_ms = ms / static_cast<double>(produced.size());
      sink_.push_back(std::move(c));
    }
  }

  void run_one(const std::string& name, const std::function<CheckOutcome()>& fn) {
    run(name, [&] { return std::vector<CheckOutcome>{fn()}; });
  }

 private:
  std::vector<CheckOutcome>& sink_;
  bits_t bits_;
};

}  // namespace detail

/// Every check of the reduction chain in a fixed order.
inline Report run_all(const VerifyConfig& config) {
  const PrecisionConfig& pc = config.precision;
  const bits_t bits = pc.bits();
  Report report{pc, config.tolerances(), {}, {}, false};
  const ToleranceSchedule& tol = report.tolerances;
  detail::ReportBuilder checks(report.checks, bits);
  detail::ReportBuilder info(report.informational, bits);

  for (unsigned long n = 1; n <= 20; ++n) {
    checks.run("eq1[n=" + std::to_string(n) + "]", [&] { return check_eq1(n, tol.standard, pc); });
  }
  for (unsigned long n = 1; n <= 10; ++n) {
    checks.run("eq2[n=" + std::to_string(n) + "]", [&] { return check_eq2(n, tol.standard, pc); });
  }
  checks.run_one("eq2.half_integer", [&] { return check_digamma_integral(pc.real(1) / 2, tol.standard, pc); });

  for (const char* w : {"0.25", "0.5", "0.9"}) {
    checks.run_one(std::string("power_sum[w=") + w + "]", [&] {
      CheckOutcome c = power_sum_check(pc.parse(w), 500);
      if (config.tol_override) {
        // a uniform override replaces the rounding slack as well
        c = CheckOutcome::compare(c.name, c.lhs, c.rhs, tol.standard, c.detail);
      }
      return c;
    });
  }

  for (const Real& a : interior_grid(pc)) {
    checks.run("inner[a=" + a.to_string(6) + "]", [&] { return check_inner_integral(a, tol.standard, pc); });
  }
  for (const Real& v : interior_grid(pc)) {
    checks.run_one("reduction[v=" + v.to_string(6) + "]", [&] { return check_reduction(v, tol.standard, pc); });
  }

  checks.run_one("double_integral", [&] { return check_double_integral(tol.double_integral, pc); });
  checks.run_one("eq3", [&] { return check_eq3(tol.standard, pc); });

  const BranchChoice principal = BranchChoice::principal(bits);
  const BranchChoice unit = BranchChoice::unit_two_thirds(bits);
  for (const Real& v : antiderivative_grid(pc)) {
    checks.run_one("antiderivative", [&] {
      return check_antiderivative(v, principal, AntiderivativeForm::swapped_arguments, tol.antiderivative, pc);
    });
  }

  checks.run_one("dilog.argument_swap", [&] { return check_argument_swap(pc); });
  checks.run_one("delta1.reality", [&] { return check_delta1_reality(pc); });
  checks.run_one("closed_form", [&] { return check_closed_form(tol.standard, pc); });

  // Not gating: which (form, preset) pairs are antiderivatives, and what the endpoints give.
  const Real s = series_value(pc, config.max_terms);
  for (const auto form : {AntiderivativeForm::published, AntiderivativeForm::swapped_arguments}) {
    for (const BranchChoice* b : {&principal, &unit}) {
      if (!(form == AntiderivativeForm::swapped_arguments && b == &principal)) {
        for (const Real& v : antiderivative_grid(pc)) {
          info.run_one("antiderivative", [&] { return check_antiderivative(v, *b, form, tol.antiderivative, pc); });
        }
      }
      info.run_one("antiderivative_boundary",
                   [&] { return check_antiderivative_boundary(*b, form, s, tol.standard, pc); });
    }
  }

  report.overall_pass = !report.checks.empty();
  for (const auto& c : report.checks) report.overall_pass = report.overall_pass && c.passed;
  return report;
}

}  // namespace harmsum
