#include "cli/cli.hpp"

#include <cstdlib>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "binform/errors.hpp"
#include "cli/commands.hpp"

namespace binform::cli {

namespace {

double env_tolerance() {
  if (const char* v = std::getenv("BINFORM_TOL")) {
    try {
      const double tol = std::stod(v);
      if (tol > 0.0) {
        return tol;
      }
    } catch (const std::exception&) {
    }
    throw DomainError(std::string("BINFORM_TOL must be a positive number, got '") + v + "'");
  }
  return 1e-10;
}

unsigned env_threads() {
  if (const char* v = std::getenv("BINFORM_THREADS")) {
    try {
      const long threads = std::stol(v);
      if (threads >= 1) {
        return static_cast<unsigned>(threads);
      }
    } catch (const std::exception&) {
    }
    throw DomainError(std::string("BINFORM_THREADS must be a positive integer, got '") + v + "'");
  }
  return 1;
}

void add_form_source(CLI::App* cmd, FormSource& source) {
  cmd->add_option("--n", source.n, "Degree of the generated form");
  cmd->add_option("--form", source.form, "Family: fstar or sn")
      ->check(CLI::IsMember({"fstar", "sn"}));
  cmd->add_option("--file", source.file, "Form document (JSON with degree and coefficients)");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CoeffsArgs coeffs;
  AreaArgs area;
  DiscArgs disc;
  CheckArgs check;
  ThueArgs thue;
  InvariantArgs invariant;

  try {
    area.tol = env_tolerance();
    invariant.tol = area.tol;
    thue.threads = env_threads();
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  CLI::App app{"Binary forms F_n*, S_n: coefficients, discriminants, areas and Thue counts",
               "binform"};
  app.require_subcommand(1);
  const auto formats = CLI::IsMember({"json", "csv", "text"});

  auto* c_coeffs = app.add_subcommand("coeffs", "Exact coefficients of F_n* or S_n");
  c_coeffs->add_option("n", coeffs.n, "Degree n >= 1")->required();
  c_coeffs->add_option("--form", coeffs.form, "fstar or sn")->check(CLI::IsMember({"fstar", "sn"}));
  c_coeffs->add_option("--format", coeffs.format, "json, csv or text")->check(formats);
  c_coeffs->add_option("--output", coeffs.output, "Also write the form document to this path");

  auto* c_area = app.add_subcommand("area", "Area of |F(x,y)| <= 1");
  add_form_source(c_area, area.source);
  c_area->add_option("--method", area.method, "closed, polar, line or all")
      ->check(CLI::IsMember({"closed", "polar", "line", "all"}));
  c_area->add_option("--tol", area.tol, "Quadrature tolerance (default 1e-10 or BINFORM_TOL)");
  c_area->add_option("--format", area.format, "json, csv or text")->check(formats);

  auto* c_disc = app.add_subcommand("disc", "Exact discriminant");
  add_form_source(c_disc, disc.source);
  c_disc->add_option("--format", disc.format, "json, csv or text")->check(formats);

  auto* c_check = app.add_subcommand("check", "Run identity suites");
  c_check->add_option("--suite", check.suite,
                      "all, sin-product, chebyshev, chebyshev-product, chebyshev-sine, "
                      "leading-coefficient, gcd, hermite, legendre");
  c_check->add_option("--n-max", check.n_max, "Override every selected suite's n cap");
  c_check->add_option("--tol", check.tol, "Override the relative tolerance of floating-point suites");
  c_check->add_option("--samples", check.samples, "Random samples per n");
  c_check->add_option("--seed", check.seed, "Sampling seed");
  c_check->add_option("--format", check.format, "json, csv or text")->check(formats);

  auto* c_thue = app.add_subcommand("thue", "Count 0 < |S_n(x,y)| <= h and compare with A h^(2/n)");
  c_thue->set_help_flag("--help", "Print this help message and exit");
  c_thue->add_option("--n", thue.n, "Degree n >= 3")->required();
  c_thue->add_option("--h", thue.h_values, "Comma-separated ascending bounds")
      ->required()
      ->delimiter(',');
  c_thue->add_option("--threads", thue.threads, "Row-counting threads (default BINFORM_THREADS)");
  c_thue->add_option("--format", thue.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* c_inv = app.add_subcommand("invariant", "|D|^(1/(n(n-1))) A for F_n* over a degree range");
  c_inv->add_option("--n-min", invariant.n_min, "First degree (>= 3)");
  c_inv->add_option("--n-max", invariant.n_max, "Last degree");
  auto* single = c_inv->add_option("--n", "Single degree");
  c_inv->add_option("--tol", invariant.tol, "Quadrature tolerance");
  c_inv->add_option("--format", invariant.format, "json, csv or text")->check(formats);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*c_coeffs) {
      return cmd_coeffs(coeffs, out, err);
    }
    if (*c_area) {
      return cmd_area(area, out, err);
    }
    if (*c_disc) {
      return cmd_disc(disc, out, err);
    }
    if (*c_check) {
      return cmd_check(check, out, err);
    }
    if (*c_thue) {
      if (thue.threads == 0) {
        thue.threads = std::max(1u, std::thread::hardware_concurrency());
      }
      return cmd_thue(thue, out, err);
    }
    if (*c_inv) {
      if (single->count() > 0) {
        invariant.n_min = invariant.n_max = single->as<std::int64_t>();
      }
      return cmd_invariant(invariant, out, err);
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace binform::cli
