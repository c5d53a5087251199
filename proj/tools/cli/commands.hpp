#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace binform::cli {

/// Form selection shared by area and disc: either a generated family member
/// or a form document on disk.
struct FormSource {
  std::optional<std::int64_t> n;
  std::string form = "fstar";  // fstar | sn
  std::string file;
};

struct CoeffsArgs {
  std::int64_t n = 0;
  std::string form = "fstar";
  std::string format = "text";
  std::string output;  // optional form-document path
};

struct AreaArgs {
  FormSource source;
  std::string method = "all";  // closed | polar | line | all
  double tol = 1e-10;
  std::string format = "text";
};

struct DiscArgs {
  FormSource source;
  std::string format = "text";
};

struct CheckArgs {
  std::string suite = "all";
  std::optional<std::int64_t> n_max;
  std::optional<double> tol;  // replaces the tolerance of floating suites
  long samples = 1000;
  std::uint64_t seed = 42;
  std::string format = "text";
};

struct ThueArgs {
  std::int64_t n = 0;
  std::vector<std::int64_t> h_values;
  unsigned threads = 1;
  std::string format = "csv";
};

struct InvariantArgs {
  std::int64_t n_min = 3;
  std::int64_t n_max = 12;
  double tol = 1e-10;
  std::string format = "csv";
};

int cmd_coeffs(const CoeffsArgs& args, std::ostream& out, std::ostream& err);
int cmd_area(const AreaArgs& args, std::ostream& out, std::ostream& err);
int cmd_disc(const DiscArgs& args, std::ostream& out, std::ostream& err);
int cmd_check(const CheckArgs& args, std::ostream& out, std::ostream& err);
int cmd_thue(const ThueArgs& args, std::ostream& out, std::ostream& err);
int cmd_invariant(const InvariantArgs& args, std::ostream& out, std::ostream& err);

/// Names and default n caps of the identity suites run by `check`.
struct SuiteSpec {
  std::string name;
  std::int64_t default_n_max;
  double tolerance;  // 0 for exact suites
};
const std::vector<SuiteSpec>& identity_suites();

}  // namespace binform::cli
