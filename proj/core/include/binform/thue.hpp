#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "binform/binary_form.hpp"

namespace binform {

/// One lattice count of 0 < |F(x, y)| <= h against the area prediction.
struct ThueRecord {
  std::uint64_t n = 0;
  std::uint64_t h = 0;
  std::uint64_t count = 0;
  double predicted = 0.0;         // A_F h^(2/n), A_F from the polar quadrature
  double ratio = 0.0;             // count / predicted
  double mahler_stat = 0.0;       // |count - predicted| / h^(1/(n-1))
  double closed_form_area = 0.0;  // closed-form A_F when known, else NaN
  std::int64_t max_row = 0;       // largest |y| scanned
  bool lower_bound = false;       // row cap hit while the last shell was nonempty

  std::string flags() const { return lower_bound ? "lower_bound" : ""; }
};

struct ThueOptions {
  unsigned threads = 1;
};

/// Integers x with 0 < |f(x, y)| <= h for fixed y != 0, ascending. Candidate
/// intervals come from the real roots of f(x, y) -+ (h + 1/2) and of its
/// x-derivative; every candidate is confirmed by exact evaluation.
/// Throws DomainError for y == 0, a non-integral form, or a row on which
/// f(x, y) does not depend on x.
std::vector<std::int64_t> row_solution_xs(const BinaryForm& f, std::int64_t y, std::uint64_t h);
std::uint64_t row_solutions(const BinaryForm& f, std::int64_t y, std::uint64_t h);

/// Z_F(h) with zero values excluded. Row y = 0 is counted directly from a_0;
/// the remaining rows are scanned as below.
///
/// Rows are visited in shells |y| in [1, 8], (8, 16], (16, 32], ... When
/// a_0 == 0, f = Y g with g integral, so a nonzero value has |f| >= |y| and the
/// rows |y| <= h are exhaustive. Otherwise scanning stops after two
/// consecutive empty shells. Either way |y| never exceeds 64 h^(1/(n-2)); if
/// that cap cuts off a nonempty shell the record is flagged as a lower bound.
/// Throws DomainError for degree < 3 or a non-integral form and
/// ConvergenceError if the area quadrature fails.
ThueRecord count_thue(const BinaryForm& f, std::uint64_t h, const ThueOptions& options = {});

/// Same, reusing an already computed area for the prediction.
ThueRecord count_thue(const BinaryForm& f, std::uint64_t h, double area,
                      const ThueOptions& options = {});

/// count_thue for S_n at each bound. Throws DomainError for n < 3 or a bound
/// list that is empty, non-positive or not ascending.
std::vector<ThueRecord> run_experiment(std::uint64_t n, std::span<const std::uint64_t> h_values,
                                       const ThueOptions& options = {});

}  // namespace binform
