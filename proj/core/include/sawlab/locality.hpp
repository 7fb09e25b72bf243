#pragma once

#include "sawlab/bounds.hpp"
#include "sawlab/graph.hpp"
#include "sawlab/height.hpp"
#include "sawlab/saw.hpp"

namespace sawlab {

/// Largest k <= cap with rooted-isomorphic origin balls of radius k.
struct SimilarityResult {
  int k = 0;
  int cap = 0;
  bool capped = false;
  int mismatch_radius = -1;  // first non-isomorphic radius, -1 when capped
};

SimilarityResult similarity_K(const GraphFamily& a, const GraphFamily& b, int cap,
                              const Limits& limits = default_limits());

struct LocalityReport {
  SimilarityResult similarity;
  int slack = 0;  // max(M, M') - 1
  int n_max = 0;
  CountTable table_a;
  CountTable table_b;
  BoundsReport bounds_a;
  BoundsReport bounds_b;
  int divergence_index = -1;    // first n with differing sigma or b, -1 if none
  bool applicable = false;      // K - S >= n_max: tables must agree
  bool tables_consistent = true;  // false only if applicable and tables differ
  bool cross_bounds = false;    // each lower bound <= the other's upper bound
  double gap = 0;               // |midpoint_a - midpoint_b|
};

LocalityReport locality_report(const GraphFamily& fam_a, const HeightFunction& hf_a,
                               const GraphFamily& fam_b, const HeightFunction& hf_b, int n_max, int cap,
                               const EngineOptions& options = {});

}  // namespace sawlab
