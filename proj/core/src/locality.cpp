#include "sawlab/locality.hpp"

#include <algorithm>
#include <cmath>

#include "sawlab/error.hpp"
#include "sawlab/isomorphism.hpp"

namespace sawlab {

SimilarityResult similarity_K(const GraphFamily& a, const GraphFamily& b, int cap, const Limits& limits) {
  if (cap < 0) throw UsageError("similarity cap must be non-negative");
  SimilarityResult r;
  r.cap = cap;
  for (int k = 1; k <= cap; ++k) {
    const Ball ba = ball(a, a.origin(), k, limits.vertex_budget);
    const Ball bb = ball(b, b.origin(), k, limits.vertex_budget);
    if (!ball_isomorphic(ba, bb, limits.search_budget)) {
      r.k = k - 1;
      r.mismatch_radius = k;
      return r;
    }
  }
  r.k = cap;
  r.capped = true;
  return r;
}

LocalityReport locality_report(const GraphFamily& fam_a, const HeightFunction& hf_a,
                               const GraphFamily& fam_b, const HeightFunction& hf_b, int n_max, int cap,
                               const EngineOptions& options) {
  if (n_max < 1) throw UsageError("locality needs n_max >= 1");
  LocalityReport r;
  r.n_max = n_max;
  r.similarity = similarity_K(fam_a, fam_b, cap, options.limits);
  r.slack = static_cast<int>(std::max(fam_a.orbit_count(), fam_b.orbit_count())) - 1;
  r.table_a = build_table(fam_a, hf_a, n_max, options);
  r.table_b = build_table(fam_b, hf_b, n_max, options);
  r.bounds_a = bracket(r.table_a);
  r.bounds_b = bracket(r.table_b);

  const int upto = std::min(r.table_a.complete_through, r.table_b.complete_through);
  for (int n = 0; n <= upto; ++n) {
    const auto i = static_cast<std::size_t>(n);
    if (r.table_a.sigma[i] != r.table_b.sigma[i] || r.table_a.b[i] != r.table_b.b[i]) {
      r.divergence_index = n;
      break;
    }
  }
  r.applicable = r.similarity.k - r.slack >= n_max;
  if (r.applicable) r.tables_consistent = r.divergence_index < 0;
  r.cross_bounds = r.bounds_a.lower <= r.bounds_b.upper && r.bounds_b.lower <= r.bounds_a.upper;
  r.gap = std::fabs(r.bounds_a.midpoint() - r.bounds_b.midpoint());
  return r;
}

}  // namespace sawlab
