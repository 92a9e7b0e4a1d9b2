// harmsum: run the verification suite or one of its computations.
//
//   harmsum verify [--precision D] [--tol T] [--format json]
//   harmsum sum [--tol T] [--terms N]
//   harmsum integral3
//   harmsum li2 <re> <im>
//   harmsum delta1
//
// Exit status: 0 success, 1 failed verification or non-convergence, 2 usage error.

#include <chrono>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "harmsum/harmsum.hpp"
#include "harmsum/verify/report_io.hpp"

namespace {

using harmsum::Complex;
using harmsum::PrecisionConfig;
using harmsum::Real;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int precision = 50;
  std::optional<std::string> tol;
  long max_terms = 10000;
  std::string format = "text";
  int digits = 20;
  bool timing = false;
  std::string li2_re, li2_im;
};

class Command {
 public:
  explicit Command(const Options& o) : opt_(o), pc_(make_precision(o.precision)) {
    if (opt_.tol) {
      tol_ = parse_number(*opt_.tol, "--tol");
      if (!(*tol_ > 0)) throw UsageError("--tol must be positive, got " + *opt_.tol);
    }
    if (opt_.max_terms < 2) throw UsageError("--max-terms must be at least 2");
    if (opt_.digits < 1) throw UsageError("--digits must be at least 1");
  }

  int verify() {
    harmsum::VerifyConfig cfg{pc_, opt_.tol, opt_.max_terms};
    const auto start = clock::now();
    const harmsum::Report report = harmsum::run_all(cfg);
    if (json_out()) {
      json j = harmsum::report_to_json(report, opt_.timing);
      if (opt_.timing) j["timing_ms"]["total"] = elapsed_ms(start);
      std::cout << j.dump(2) << "\n";
    } else {
      harmsum::write_report_text(std::cout, report, opt_.digits, opt_.timing);
      if (opt_.timing) std::cout << "total time " << elapsed_ms(start) << " ms\n";
    }
    return report.overall_pass ? kExitOk : kExitFailed;
  }

  int sum() {
    const Real tol = tol_ ? *tol_ : harmsum::default_series_tol(pc_);
    const auto start = clock::now();
    const auto s = harmsum::sum_series(tol, opt_.max_terms, pc_);
    if (json_out()) {
      json j{{"precision", pc_.decimal_digits()}, {"tol", tol.to_string(full())}};
      j["series"] = harmsum::series_to_json(s, full());
      emit(j, start);
    } else {
      std::cout << "S          = " << s.value.to_string(opt_.digits) << "\n"
                << "tail_bound = " << s.tail_bound.to_string(3) << "\n"
                << "terms_used = " << s.terms_used << "\n";
      emit_text_timing(start);
    }
    return kExitOk;
  }

  int integral3() {
    const Real tol = tol_ ? *tol_ : pc_.tolerance(5);
    const auto start = clock::now();
    const auto q = harmsum::integral3(tol, pc_);
    if (json_out()) {
      json j{{"precision", pc_.decimal_digits()}, {"tol", tol.to_string(full())}};
      j["integral"] = harmsum::quadrature_to_json(q, full());
      j["minus_integral"] = (-q.value).to_string(full());
      emit(j, start);
    } else {
      std::cout << "integral       = " << q.value.to_string(opt_.digits) << "\n"
                << "-integral      = " << (-q.value).to_string(opt_.digits) << "\n"
                << "error_estimate = " << q.error_estimate.to_string(3) << "\n"
                << "evaluations    = " << q.evaluations << "\n"
                << "converged      = " << (q.converged ? "yes" : "no") << "\n";
      emit_text_timing(start);
    }
    if (!q.converged) {
      std::cerr << "harmsum: quadrature did not reach tolerance " << tol.to_string(3) << "\n";
      return kExitFailed;
    }
    return kExitOk;
  }

  int li2() {
    const Complex z(parse_number(opt_.li2_re, "re"), parse_number(opt_.li2_im, "im"));
    const auto start = clock::now();
    const Complex w = harmsum::li2(z);
    if (json_out()) {
      json j{{"precision", pc_.decimal_digits()},
             {"z", {{"re", z.re.to_string(full())}, {"im", z.im.to_string(full())}}},
             {"li2", {{"re", w.re.to_string(full())}, {"im", w.im.to_string(full())}}}};
      emit(j, start);
    } else {
      std::cout << "re = " << w.re.to_string(opt_.digits) << "\n"
                << "im = " << w.im.to_string(opt_.digits) << "\n";
      emit_text_timing(start);
    }
    return kExitOk;
  }

  int delta1() {
    const auto start = clock::now();
    const auto e = harmsum::delta1_expression(pc_);
    const Real bound = pc_.tolerance(5);
    const Real residual = abs(e.value.im);
    const bool real = residual <= bound;
    if (json_out()) {
      json j{{"precision", pc_.decimal_digits()},
             {"delta1", e.value.re.to_string(full())},
             {"imaginary_residual", e.value.im.to_string(full())},
             {"bound", bound.to_string(full())},
             {"real", real}};
      emit(j, start);
    } else {
      std::cout << "delta1             = " << e.value.re.to_string(opt_.digits) << "\n"
                << "imaginary residual = " << e.value.im.to_string(3) << "\n"
                << "bound              = " << bound.to_string(3) << "\n"
                << "real               = " << (real ? "yes" : "no") << "\n";
      emit_text_timing(start);
    }
    if (!real) {
      std::cerr << "harmsum: delta1 has imaginary part above " << bound.to_string(3) << "\n";
      return kExitFailed;
    }
    return kExitOk;
  }

 private:
  using clock = std::chrono::steady_clock;

  static PrecisionConfig make_precision(int digits) {
    try {
      return PrecisionConfig(digits);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--precision: ") + e.what());
    }
  }

  Real parse_number(const std::string& text, const std::string& what) const {
    try {
      return pc_.parse(text);
    } catch (const std::invalid_argument&) {
      throw UsageError(what + ": not a number: '" + text + "'");
    }
  }

  static double elapsed_ms(clock::time_point start) {
    return std::chrono::duration<double, std::milli>(clock::now() - start).count();
  }

  bool json_out() const { return opt_.format == "json"; }
  int full() const { return pc_.decimal_digits(); }

  void emit(json& j, clock::time_point start) const {
    if (opt_.timing) j["timing_ms"] = elapsed_ms(start);
    std::cout << j.dump(2) << "\n";
  }

  void emit_text_timing(clock::time_point start) const {
    if (opt_.timing) std::cout << "time " << elapsed_ms(start) << " ms\n";
  }

  Options opt_;
  PrecisionConfig pc_;
  std::optional<Real> tol_;
};

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Numerical verification of a harmonic-number series identity"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--precision", opt.precision, "Working precision in decimal digits")->capture_default_str();
  app.add_option("--tol", opt.tol, "Tolerance override (decimal literal)");
  app.add_option("--max-terms", opt.max_terms, "Series term cap")->capture_default_str();
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--digits", opt.digits, "Significant digits shown in text output")->capture_default_str();
  app.add_flag("--timing", opt.timing, "Report elapsed times");

  auto* verify = app.add_subcommand("verify", "Run every check and report");
  auto* sum = app.add_subcommand("sum", "Sum the series to a rigorous tail bound");
  sum->add_option("--terms", opt.max_terms, "Series term cap (same as --max-terms)");
  auto* integral3 = app.add_subcommand("integral3", "Evaluate the single integral");
  auto* li2 = app.add_subcommand("li2", "Complex dilogarithm Li2(re + i im)");
  li2->add_option("re", opt.li2_re, "Real part")->required();
  li2->add_option("im", opt.li2_im, "Imaginary part")->required();
  auto* delta1 = app.add_subcommand("delta1", "The constant delta1 and its reality residual");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::Error& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    Command cmd(opt);
    if (verify->parsed()) return cmd.verify();
    if (sum->parsed()) return cmd.sum();
    if (integral3->parsed()) return cmd.integral3();
    if (li2->parsed()) return cmd.li2();
    if (delta1->parsed()) return cmd.delta1();
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "harmsum: " << e.what() << "\n";
    return kExitUsage;
  } catch (const harmsum::convergence_error& e) {
    std::cerr << "harmsum: " << e.what() << "\n";
    return kExitFailed;
  } catch (const std::exception& e) {
    std::cerr << "harmsum: " << e.what() << "\n";
    return kExitFailed;
  }
}
