#include "binform/thue.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "binform/area.hpp"
#include "binform/errors.hpp"
#include "binform/forms.hpp"
#include "binform/real_roots.hpp"

namespace binform {

namespace {

constexpr std::int64_t kFirstShell = 8;

void require_integral(const BinaryForm& f) {
  if (!f.is_integral()) {
    throw DomainError("Thue counting requires integer coefficients");
  }
}

// Coefficients of x -> f(x, y), lowest degree first.
std::vector<mpz_class> row_polynomial(const BinaryForm& f, std::int64_t y) {
  const std::size_t n = f.degree();
  std::vector<mpz_class> out(n + 1);
  mpz_class ypow = 1;
  const mpz_class yz(static_cast<long>(y));
  for (std::size_t j = 0; j <= n; ++j) {
    out[n - j] = f[j].get_num() * ypow;
    ypow *= yz;
  }
  while (!out.empty() && out.back() == 0) {
    out.pop_back();
  }
  return out;
}

std::int64_t to_index(long double v) {
  constexpr long double kLimit = 4.0e18L;
  if (!(std::abs(v) < kLimit)) {
    throw DomainError("row search interval exceeds the 64-bit range");
  }
  return static_cast<std::int64_t>(v);
}

std::uint64_t count_rows(const BinaryForm& f, std::int64_t first, std::int64_t last,
                         std::uint64_t h, unsigned threads) {
  const std::int64_t rows = last - first + 1;
  if (rows <= 0) {
    return 0;
  }
  auto work = [&](std::int64_t begin, std::int64_t end) {
    std::uint64_t sum = 0;
    for (std::int64_t y = begin; y < end; ++y) {
      sum += row_solutions(f, y, h) + row_solutions(f, -y, h);
    }
    return sum;
  };
  const auto workers = static_cast<std::int64_t>(std::max(1u, threads));
  if (workers == 1 || rows < 64) {
    return work(first, last + 1);
  }
  std::vector<std::uint64_t> partial(static_cast<std::size_t>(workers), 0);
  {
    std::vector<std::jthread> pool;
    const std::int64_t chunk = (rows + workers - 1) / workers;
    for (std::int64_t w = 0; w < workers; ++w) {
      const std::int64_t begin = first + w * chunk;
      const std::int64_t end = std::min(last + 1, begin + chunk);
      if (begin >= end) {
        break;
      }
      pool.emplace_back([&, w, begin, end] { partial[static_cast<std::size_t>(w)] = work(begin, end); });
    }
  }
  std::uint64_t total = 0;
  for (const auto p : partial) {
    total += p;
  }
  return total;
}

}  // namespace

std::vector<std::int64_t> row_solution_xs(const BinaryForm& f, std::int64_t y, std::uint64_t h) {
  require_integral(f);
  if (y == 0) {
    throw DomainError("row y = 0 is excluded");
  }
  const std::vector<mpz_class> g = row_polynomial(f, y);
  if (g.size() < 2) {
    throw DomainError("f(x, y) does not depend on x on this row");
  }

  std::vector<long double> approx;
  approx.reserve(g.size());
  for (const auto& c : g) {
    approx.push_back(static_cast<long double>(c.get_d()));
  }
  // g is integer-valued on integers, so |g| <= h iff |g| <= h + 1/2; the
  // half-unit slack keeps the boundary roots away from lattice points.
  const long double bound = static_cast<long double>(h) + 0.5L;
  std::vector<long double> shifted_up = approx;
  std::vector<long double> shifted_down = approx;
  shifted_up[0] -= bound;
  shifted_down[0] += bound;
  std::vector<long double> derivative(approx.size() - 1);
  for (std::size_t i = 1; i < approx.size(); ++i) {
    derivative[i - 1] = approx[i] * static_cast<long double>(i);
  }

  std::vector<long double> breaks;
  for (const auto* poly : {&shifted_up, &shifted_down, &derivative}) {
    const auto roots = real_roots(*poly);
    breaks.insert(breaks.end(), roots.begin(), roots.end());
  }
  std::sort(breaks.begin(), breaks.end());

  // Integer ranges to verify: every segment whose midpoint satisfies the
  // inequality, widened by one on each side, plus a neighbourhood of every
  // breakpoint to catch tangencies.
  std::vector<std::pair<std::int64_t, std::int64_t>> ranges;
  for (const long double b : breaks) {
    const std::int64_t c = to_index(std::floor(b));
    ranges.emplace_back(c - 1, c + 2);
  }
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const long double mid = 0.5L * (breaks[i] + breaks[i + 1]);
    if (std::abs(polyval(approx, mid)) <= bound) {
      ranges.emplace_back(to_index(std::floor(breaks[i])) - 1, to_index(std::ceil(breaks[i + 1])) + 1);
    }
  }
  std::sort(ranges.begin(), ranges.end());

  std::vector<std::int64_t> xs;
  const mpz_class limit(static_cast<unsigned long>(h));
  std::int64_t next_unchecked = std::numeric_limits<std::int64_t>::min();
  for (const auto& [lo, hi] : ranges) {
    for (std::int64_t x = std::max(lo, next_unchecked); x <= hi; ++x) {
      mpz_class value = 0;
      const mpz_class xz(static_cast<long>(x));
      for (auto it = g.rbegin(); it != g.rend(); ++it) {
        value = value * xz + *it;
      }
      if (value != 0 && abs(value) <= limit) {
        xs.push_back(x);
      }
    }
    next_unchecked = std::max(next_unchecked, hi + 1);
  }
  return xs;
}

std::uint64_t row_solutions(const BinaryForm& f, std::int64_t y, std::uint64_t h) {
  return row_solution_xs(f, y, h).size();
}

ThueRecord count_thue(const BinaryForm& f, std::uint64_t h, const ThueOptions& options) {
  if (f.degree() < 3) {
    throw DomainError("Thue counting requires degree >= 3");
  }
  require_integral(f);
  const QuadratureResult area = area_polar(f);
  if (!area.converged) {
    throw ConvergenceError("area quadrature did not converge");
  }
  return count_thue(f, h, area.value, options);
}

namespace {

// Row y = 0 contributes the x != 0 with |a_0| |x|^n <= h.
std::uint64_t axis_row(const BinaryForm& f, std::uint64_t h) {
  const mpz_class a0 = abs(f[0].get_num());
  if (a0 == 0) {
    return 0;
  }
  std::uint64_t count = 0;
  for (mpz_class x = 1;; ++x) {
    mpz_class v;
    mpz_pow_ui(v.get_mpz_t(), x.get_mpz_t(), f.degree());
    if (a0 * v > h) {
      break;
    }
    count += 2;
  }
  return count;
}

}  // namespace

ThueRecord count_thue(const BinaryForm& f, std::uint64_t h, double area,
                      const ThueOptions& options) {
  const std::size_t n = f.degree();
  if (n < 3) {
    throw DomainError("Thue counting requires degree >= 3");
  }
  require_integral(f);
  if (h == 0) {
    throw DomainError("Thue bound h must be positive");
  }
  if (std::all_of(f.coefficients().begin(), f.coefficients().end() - 1,
                  [](const mpq_class& c) { return c == 0; })) {
    throw DomainError("a pure power of Y has infinitely many solutions on each row");
  }

  const auto hd = static_cast<double>(h);
  const auto cap = static_cast<std::int64_t>(
      std::floor(64.0 * std::pow(hd, 1.0 / static_cast<double>(n - 2))));
  const bool y_divides = f[0] == 0;
  const std::int64_t limit = y_divides ? std::min<std::int64_t>(cap, static_cast<std::int64_t>(h)) : cap;

  ThueRecord record;
  record.n = n;
  record.h = h;
  record.closed_form_area = std::numeric_limits<double>::quiet_NaN();
  record.count = axis_row(f, h);

  std::int64_t shell_lo = 1;
  std::int64_t shell_hi = kFirstShell;
  int empty_shells = 0;
  std::uint64_t last_shell = 0;
  while (shell_lo <= limit) {
    shell_hi = std::min(shell_hi, limit);
    last_shell = count_rows(f, shell_lo, shell_hi, h, options.threads);
    record.count += last_shell;
    record.max_row = shell_hi;
    empty_shells = last_shell == 0 ? empty_shells + 1 : 0;
    if (!y_divides && empty_shells >= 2) {
      break;
    }
    shell_lo = shell_hi + 1;
    shell_hi *= 2;
  }
  const bool exhausted = y_divides ? record.max_row >= static_cast<std::int64_t>(h)
                                   : empty_shells >= 2;
  record.lower_bound = !exhausted && record.max_row >= cap && last_shell > 0;

  record.predicted = area * std::pow(hd, 2.0 / static_cast<double>(n));
  record.ratio = static_cast<double>(record.count) / record.predicted;
  record.mahler_stat = std::abs(static_cast<double>(record.count) - record.predicted) /
                       std::pow(hd, 1.0 / static_cast<double>(n - 1));
  return record;
}

std::vector<ThueRecord> run_experiment(std::uint64_t n, std::span<const std::uint64_t> h_values,
                                       const ThueOptions& options) {
  if (n < 3) {
    throw DomainError("Thue experiments require n >= 3");
  }
  if (h_values.empty()) {
    throw DomainError("at least one bound h is required");
  }
  for (std::size_t i = 0; i < h_values.size(); ++i) {
    if (h_values[i] == 0 || (i > 0 && h_values[i] < h_values[i - 1])) {
      throw DomainError("bounds must be positive and ascending");
    }
  }
  const BinaryForm sn = sn_coefficients(n);
  const QuadratureResult area = area_polar(sn);
  if (!area.converged) {
    throw ConvergenceError("area quadrature did not converge");
  }
  const double closed = area_sn_closed(n);
  std::vector<ThueRecord> records;
  records.reserve(h_values.size());
  for (const auto h : h_values) {
    ThueRecord r = count_thue(sn, h, area.value, options);
    r.closed_form_area = closed;
    records.push_back(r);
  }
  return records;
}

}  // namespace binform
