#include "sawlab/bounds.hpp"

#include <cmath>
#include <limits>

#include "sawlab/error.hpp"

namespace sawlab {

namespace {

/// sign of y^n - N, exactly
int compare_power(double y, int n, const mpz_class& value) {
  mpq_class base(y);
  mpq_class p = 1;
  for (int i = 0; i < n; ++i) p *= base;
  return cmp(p, mpq_class(value));
}

double approx_root(const mpz_class& value, int n) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, value.get_mpz_t());
  return std::exp((std::log(mant) + static_cast<double>(exp) * std::log(2.0)) / n);
}

}  // namespace

double root_down(const mpz_class& value, int n) {
  if (n < 1) throw UsageError("root index must be positive");
  if (value <= 0) return 0;
  double y = approx_root(value, n);
  while (compare_power(y, n, value) > 0) y = std::nextafter(y, 0.0);
  while (true) {
    const double up = std::nextafter(y, std::numeric_limits<double>::infinity());
    if (compare_power(up, n, value) > 0) break;
    y = up;
  }
  return y;
}

double root_up(const mpz_class& value, int n) {
  if (n < 1) throw UsageError("root index must be positive");
  if (value <= 0) return 0;
  double y = approx_root(value, n);
  while (compare_power(y, n, value) < 0) y = std::nextafter(y, std::numeric_limits<double>::infinity());
  while (y > 0) {
    const double down = std::nextafter(y, 0.0);
    if (compare_power(down, n, value) < 0) break;
    y = down;
  }
  return y;
}

BoundsReport bracket(const CountTable& table) {
  if (table.complete_through < 1) throw UsageError("bracket needs counts up to at least n = 1");
  BoundsReport r;
  r.family = table.family;
  r.height = table.height;
  r.n_max = table.complete_through;
  r.lower = 0;
  r.upper = std::numeric_limits<double>::infinity();
  for (int n = 1; n <= r.n_max; ++n) {
    const double lo = root_down(table.b[static_cast<std::size_t>(n)], n);
    const double hi = root_up(table.sigma[static_cast<std::size_t>(n)], n);
    r.lower_candidates.push_back(lo);
    r.upper_candidates.push_back(hi);
    if (lo > r.lower) {
      r.lower = lo;
      r.lower_at = n;
    }
    if (hi < r.upper) {
      r.upper = hi;
      r.upper_at = n;
    }
  }
  return r;
}

std::vector<FeketeViolation> fekete_violations(const CountTable& table) {
  std::vector<FeketeViolation> out;
  const int top = table.complete_through;
  for (int m = 1; m <= top; ++m) {
    for (int n = m; m + n <= top; ++n) {
      const auto i = static_cast<std::size_t>(m), j = static_cast<std::size_t>(n);
      if (table.sigma[i + j] > table.sigma[i] * table.sigma[j]) out.push_back({'s', m, n});
      if (table.b[i + j] < table.b[i] * table.b[j]) out.push_back({'b', m, n});
    }
  }
  return out;
}

bool check_fekete(const CountTable& table) { return fekete_violations(table).empty(); }

double eta(const CountTable& table, int k) {
  const BoundsReport r = bracket(table);
  if (k < 1 || k > r.n_max) throw UsageError("eta: k must lie in [1, n_max]");
  double top = 0;
  for (int n = k; n <= r.n_max; ++n) top = std::max(top, r.upper_candidates[static_cast<std::size_t>(n - 1)]);
  return top - r.lower;
}

double eval_f(double b, double x) {
  if (!(b > 0) || !(x > 0)) throw UsageError("eval_f needs B > 0 and x > 0");
  return std::exp((std::log(b) + 3 * std::log(x) + b * std::sqrt(x)) / x);
}

PartitionFacts distinct_partitions(int n) {
  if (n < 1) throw UsageError("distinct_partitions needs n >= 1");
  const auto size = static_cast<std::size_t>(n);
  // ways[k][s]: partitions of s into k distinct parts, parts added in increasing size
  std::vector<std::vector<mpz_class>> ways(1, std::vector<mpz_class>(size + 1, 0));
  ways[0][0] = 1;
  for (std::size_t part = 1; part <= size; ++part) {
    if (ways.size() * (ways.size() + 1) / 2 <= size) ways.emplace_back(size + 1, 0);
    for (std::size_t k = ways.size() - 1; k >= 1; --k) {
      for (std::size_t s = size; s >= part; --s) ways[k][s] += ways[k - 1][s - part];
    }
  }
  PartitionFacts out;
  out.count = 0;
  for (std::size_t k = 1; k < ways.size(); ++k) {
    if (ways[k][size] > 0) {
      out.count += ways[k][size];
      out.max_order = static_cast<int>(k);
    }
  }
  return out;
}

}  // namespace sawlab
