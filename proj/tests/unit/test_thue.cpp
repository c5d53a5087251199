#include "binform/errors.hpp"
#include "binform/forms.hpp"
#include "binform/thue.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace binform {
namespace {

std::vector<std::int64_t> integer_coefficients(const BinaryForm& f) {
  std::vector<std::int64_t> out;
  for (const auto& c : f.coefficients()) out.push_back(c.get_num().get_si());
  return out;
}

// Brute force over a box, insisting every solution found lies well inside it.
oracle::BruteForce checked_brute_force(const BinaryForm& f, std::uint64_t h_max, std::int64_t bx,
                                       std::int64_t by) {
  auto bf = oracle::brute_force(integer_coefficients(f), h_max, bx, by);
  EXPECT_LE(2 * bf.widest_x, bx) << f.to_string();
  EXPECT_LE(2 * bf.widest_y, by) << f.to_string();
  return bf;
}

TEST(RowSolutions, SmallCubic) {
  const auto s3 = sn_coefficients(3);
  EXPECT_EQ(row_solution_xs(s3, 1, 2), (std::vector<std::int64_t>{-1, 0, 1}));
  EXPECT_EQ(row_solutions(s3, 1, 2), 3u);
  EXPECT_EQ(row_solutions(s3, -1, 2), 3u);
  EXPECT_THROW(row_solution_xs(s3, 0, 2), DomainError);
}

TEST(RowSolutions, MatchRowBruteForce) {
  const std::vector<BinaryForm> forms{sn_coefficients(3), sn_coefficients(5), BinaryForm({1, 0, 0, -2}),
                                      BinaryForm({1, 1, -2, -1}), BinaryForm({2, -1, 0, 3, 1})};
  for (const auto& f : forms) {
    const auto a = integer_coefficients(f);
    for (std::int64_t y : {-7, -2, 1, 3, 10}) {
      for (std::uint64_t h : {1, 5, 40, 333}) {
        std::vector<std::int64_t> expected;
        for (std::int64_t x = -2000; x <= 2000; ++x) {
          const auto v = oracle::eval_int(a, x, y);
          if (v != 0 && v <= static_cast<__int128>(h) && v >= -static_cast<__int128>(h)) expected.push_back(x);
        }
        EXPECT_EQ(row_solution_xs(f, y, h), expected) << f.to_string() << " y=" << y << " h=" << h;
      }
    }
  }
}

TEST(CountThue, SnFamilyMatchesBruteForce) {
  const std::uint64_t h_max = 300;
  for (std::uint64_t n : {3, 4, 5, 6}) {
    const auto f = sn_coefficients(n);
    const auto bf = checked_brute_force(f, h_max, 3 * h_max, 2 * h_max + 2);
    for (std::uint64_t h : {1, 2, 3, 10, 47, 100, 300}) {
      const auto rec = count_thue(f, h);
      EXPECT_EQ(rec.count, bf.count(h)) << "n=" << n << " h=" << h;
      EXPECT_FALSE(rec.lower_bound);
    }
  }
}

TEST(CountThue, GeneralFormsMatchBruteForce) {
  // Leading coefficient nonzero, so the row range comes from the shell scan.
  const std::vector<BinaryForm> cubics{BinaryForm({1, 0, 0, -2}), BinaryForm({1, 1, -2, -1}),
                                       BinaryForm({1, 0, 0, 1}), BinaryForm({2, 3, -5, 7})};
  for (const auto& f : cubics) {
    const auto bf = checked_brute_force(f, 30, 1600, 1200);
    for (std::uint64_t h : {1, 4, 9, 30}) EXPECT_EQ(count_thue(f, h).count, bf.count(h)) << f.to_string() << " " << h;
  }
  const std::vector<BinaryForm> quartics{BinaryForm({1, 0, 0, 0, -2}), BinaryForm({1, 0, -3, 0, 1})};
  for (const auto& f : quartics) {
    const auto bf = checked_brute_force(f, 60, 800, 800);
    for (std::uint64_t h : {1, 7, 60}) EXPECT_EQ(count_thue(f, h).count, bf.count(h)) << f.to_string() << " " << h;
  }
}

TEST(CountThue, EvenAndMonotoneProperty) {
  for (std::uint64_t n = 3; n <= 7; ++n) {
    const auto f = sn_coefficients(n);
    std::uint64_t previous = 0;
    for (std::uint64_t h = 1; h <= 200; h += 9) {
      const auto count = count_thue(f, h).count;
      EXPECT_EQ(count % 2, 0u) << n << " " << h;
      EXPECT_GE(count, previous) << n << " " << h;
      previous = count;
    }
  }
}

TEST(CountThue, UnimodularInvarianceProperty) {
  const auto f = BinaryForm({1, 1, -2, -1});
  const auto g = substitute_unimodular(f, UnimodularMatrix{2, 1, 1, 1});
  for (std::uint64_t h : {1, 7, 50}) EXPECT_EQ(count_thue(f, h).count, count_thue(g, h).count) << h;
}

TEST(CountThue, ThreadsDoNotChangeCounts) {
  const auto f = sn_coefficients(3);
  ThueOptions four{4};
  for (std::uint64_t h : {10, 1000, 5000}) EXPECT_EQ(count_thue(f, h).count, count_thue(f, h, four).count);
}

TEST(CountThue, RecordFields) {
  const auto f = sn_coefficients(3);
  const auto rec = count_thue(f, 1000);
  EXPECT_EQ(rec.n, 3u);
  EXPECT_EQ(rec.h, 1000u);
  EXPECT_EQ(rec.count, 616u);
  EXPECT_NEAR(rec.predicted, 7.28595194366274483 * 100.0, 1e-8);
  EXPECT_NEAR(rec.ratio, 616.0 / rec.predicted, 1e-15);
  EXPECT_NEAR(rec.mahler_stat, std::abs(616.0 - rec.predicted) / std::pow(1000.0, 0.5), 1e-12);
  EXPECT_TRUE(std::isnan(rec.closed_form_area));
  EXPECT_EQ(rec.flags(), "");
}

TEST(CountThue, Errors) {
  EXPECT_THROW(count_thue(sn_coefficients(2), 10), DomainError);
  EXPECT_THROW(count_thue(fstar_coefficients(3), 10), DomainError);
}

TEST(RunExperiment, ValidatesBounds) {
  const std::vector<std::uint64_t> empty;
  const std::vector<std::uint64_t> descending{10, 5};
  const std::vector<std::uint64_t> zero{0, 5};
  EXPECT_THROW(run_experiment(3, empty), DomainError);
  EXPECT_THROW(run_experiment(3, descending), DomainError);
  EXPECT_THROW(run_experiment(3, zero), DomainError);
  const std::vector<std::uint64_t> ok{2, 10, 100};
  EXPECT_THROW(run_experiment(2, ok), DomainError);
  const auto recs = run_experiment(3, ok);
  ASSERT_EQ(recs.size(), 3u);
  EXPECT_EQ(recs[0].count, 10u);
  EXPECT_EQ(recs[1].count, 24u);
  EXPECT_EQ(recs[2].count, 120u);
  EXPECT_NEAR(recs[2].closed_form_area, 7.28595194366274483, 1e-13);
}

}  // namespace
}  // namespace binform
