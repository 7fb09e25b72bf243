#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "sawlab/saw.hpp"

namespace sawlab {

/// Largest double y with y^n <= N, and smallest with y^n >= N (checked in
/// exact rational arithmetic).
double root_down(const mpz_class& value, int n);
double root_up(const mpz_class& value, int n);

/// Certified connective-constant bracket from a count table.
struct BoundsReport {
  std::string family;
  std::string height;
  int n_max = 0;
  std::vector<double> lower_candidates;  // index n-1: b_n^(1/n), rounded down
  std::vector<double> upper_candidates;  // index n-1: sigma_n^(1/n), rounded up
  double lower = 0;
  double upper = 0;
  int lower_at = 0;
  int upper_at = 0;

  [[nodiscard]] double width() const { return upper - lower; }
  [[nodiscard]] double midpoint() const { return (lower + upper) / 2; }
  [[nodiscard]] bool contains(double mu) const { return lower <= mu && mu <= upper; }
};

BoundsReport bracket(const CountTable& table);

struct FeketeViolation {
  char sequence = 's';  // 's' for sigma, 'b' for bridges
  int m = 0;
  int n = 0;
};

std::vector<FeketeViolation> fekete_violations(const CountTable& table);
bool check_fekete(const CountTable& table);

/// max_{k<=n<=n_max} sigma_n^(1/n) (rounded up) minus the certified lower bound.
double eta(const CountTable& table, int k);

/// f(x) = (B x^3 e^(B sqrt x))^(1/x), evaluated through its logarithm.
double eval_f(double b, double x);

struct PartitionFacts {
  mpz_class count;    // partitions of n into distinct parts
  int max_order = 0;  // most parts in any of them
};

PartitionFacts distinct_partitions(int n);

}  // namespace sawlab
