#include "sawlab/saw.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>
#include <unordered_map>

#include "sawlab/error.hpp"

namespace sawlab {

std::string to_string(WalkKind k) {
  switch (k) {
    case WalkKind::saw: return "saw";
    case WalkKind::halfspace: return "halfspace";
    default: return "bridge";
  }
}

WalkKind walk_kind_from_string(const std::string& s) {
  if (s == "saw") return WalkKind::saw;
  if (s == "halfspace") return WalkKind::halfspace;
  if (s == "bridge") return WalkKind::bridge;
  throw UsageError("unknown walk kind '" + s + "'");
}

namespace {

/// The radius-n ball as flat adjacency arrays in the family's neighbour order.
struct Arena {
  std::vector<std::uint32_t> offset;
  std::vector<std::uint32_t> target;
  std::vector<std::int64_t> height;
  std::int64_t max_rise = 0;
};

Arena build_arena(const GraphFamily& family, const HeightFunction* hf, const VertexLabel& start, int n,
                  std::uint64_t vertex_budget) {
  const Ball region = ball(family, start, n, vertex_budget);
  std::unordered_map<VertexLabel, std::uint32_t, VertexLabelHash> index;
  index.reserve(region.vertices.size());
  for (std::size_t i = 0; i < region.vertices.size(); ++i) {
    index.emplace(region.vertices[i], static_cast<std::uint32_t>(i));
  }
  Arena a;
  a.offset.push_back(0);
  std::vector<VertexLabel> nbrs;
  const std::int64_t h0 = hf ? hf->evaluate(start) : 0;
  for (const auto& v : region.vertices) {
    const std::int64_t hv = hf ? hf->evaluate(v) : 0;
    a.height.push_back(hv);
    a.max_rise = std::max(a.max_rise, hv - h0);
    if (region.dist.at(v) < n) {
      family.neighbors_into(v, nbrs);
      for (const auto& w : nbrs) a.target.push_back(index.at(w));
    }
    a.offset.push_back(static_cast<std::uint32_t>(a.target.size()));
  }
  return a;
}

struct Tally {
  std::vector<std::uint64_t> saw, half, bridge;
  std::vector<std::vector<std::uint64_t>> span;
  std::uint64_t nodes = 0;

  Tally(int n, std::int64_t max_rise)
      : saw(n + 1, 0), half(n + 1, 0), bridge(n + 1, 0),
        span(n + 1, std::vector<std::uint64_t>(static_cast<std::size_t>(max_rise) + 1, 0)) {}

  void merge(const Tally& o) {
    for (std::size_t i = 0; i < saw.size(); ++i) {
      saw[i] += o.saw[i];
      half[i] += o.half[i];
      bridge[i] += o.bridge[i];
      for (std::size_t s = 0; s < span[i].size(); ++s) span[i][s] += o.span[i][s];
    }
    nodes += o.nodes;
  }
};

struct Prefix {
  std::vector<std::uint32_t> path;
  bool above = true;
  std::int64_t top = 0;
};

struct Shared {
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> abort{false};
  std::uint64_t budget = 0;
};

class Search {
 public:
  Search(const Arena& a, int n, bool prune, Shared& shared, int split)
      : a_(a), n_(n), prune_(prune), split_(split), shared_(shared),
        visited_(a.height.size(), 0), tally_(n, a.max_rise) {}

  void run_prefixes(std::vector<Prefix>& out) {
    out_ = &out;
    visited_[0] = 1;
    tally_.saw[0] = tally_.half[0] = tally_.bridge[0] = 1;
    tally_.span[0][0] = 1;
    step(0, 0, true, a_.height[0]);
    out_ = nullptr;
  }

  void run_task(const Prefix& p) {
    for (auto v : p.path) visited_[v] = 1;
    step(p.path.back(), static_cast<int>(p.path.size()) - 1, p.above, p.top);
    for (auto v : p.path) visited_[v] = 0;
  }

  void flush() {
    shared_.nodes += pending_;
    pending_ = 0;
  }

  Tally& tally() { return tally_; }

 private:
  void step(std::uint32_t v, int depth, bool above, std::int64_t top) {
    if (++pending_ >= 4096) {
      flush();
      if (shared_.nodes.load(std::memory_order_relaxed) > shared_.budget) shared_.abort = true;
    }
    if (shared_.abort.load(std::memory_order_relaxed)) return;
    ++tally_.nodes;
    const std::int64_t h0 = a_.height[0];
    const int next = depth + 1;
    for (std::uint32_t k = a_.offset[v]; k < a_.offset[v + 1]; ++k) {
      const std::uint32_t w = a_.target[k];
      if (visited_[w]) continue;
      const std::int64_t hw = a_.height[w];
      const bool up = above && hw > h0;
      if (prune_ && !up) continue;
      ++tally_.saw[next];
      std::int64_t new_top = top;
      if (up) {
        ++tally_.half[next];
        if (hw >= top) {
          ++tally_.bridge[next];
          ++tally_.span[next][static_cast<std::size_t>(hw - h0)];
        }
        new_top = std::max(top, hw);
      }
      if (next == n_) continue;
      if (out_ && next == split_) {
        Prefix p;
        p.path = path_;
        p.path.push_back(w);
        p.above = up;
        p.top = new_top;
        out_->push_back(std::move(p));
        continue;
      }
      visited_[w] = 1;
      if (out_) path_.push_back(w);
      step(w, next, up, new_top);
      if (out_) path_.pop_back();
      visited_[w] = 0;
    }
  }

  const Arena& a_;
  int n_;
  bool prune_;
  int split_;
  Shared& shared_;
  std::vector<std::uint8_t> visited_;
  Tally tally_;
  std::uint64_t pending_ = 0;
  std::vector<Prefix>* out_ = nullptr;
  std::vector<std::uint32_t> path_{0};
};

/// One attempt at exactly n steps; false when the node budget ran out.
bool attempt(const Arena& a, int n, bool prune, const EngineOptions& options, Tally& result) {
  Shared shared;
  shared.budget = options.limits.node_budget;
  const int split = std::clamp(options.split_depth, 1, std::max(1, n));
  std::vector<Prefix> prefixes;
  Search root(a, n, prune, shared, split);
  root.run_prefixes(prefixes);
  root.flush();
  Tally total = root.tally();

  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(prefixes.size())));
  std::vector<Tally> parts(jobs, Tally(n, a.max_rise));
  std::atomic<std::size_t> next{0};
  auto worker = [&](unsigned id) {
    Search s(a, n, prune, shared, split);
    for (std::size_t i = next++; i < prefixes.size(); i = next++) s.run_task(prefixes[i]);
    s.flush();
    parts[id] = s.tally();
  };
  if (jobs == 1 || prefixes.empty()) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker, j);
    for (auto& t : pool) t.join();
  }
  if (shared.abort) return false;
  for (const auto& p : parts) total.merge(p);
  result = std::move(total);
  return true;
}

std::vector<mpz_class> to_mpz(const std::vector<std::uint64_t>& v, int upto) {
  std::vector<mpz_class> out;
  for (int i = 0; i <= upto; ++i) {
    mpz_class x;
    mpz_import(x.get_mpz_t(), 1, 1, sizeof(std::uint64_t), 0, 0, &v[static_cast<std::size_t>(i)]);
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace

WalkCounts count_walks(const GraphFamily& family, const HeightFunction* hf, const VertexLabel& start,
                       int n_max, bool prune, const EngineOptions& options) {
  if (n_max < 0) throw UsageError("n_max must be non-negative");
  if (prune && !hf) throw UsageError("pruned enumeration needs a height function");
  family.validate(start);
  WalkCounts out;
  out.start = start;
  out.n_max = n_max;
  for (int n = n_max; n >= 0; --n) {
    Arena arena;
    try {
      arena = build_arena(family, hf, start, n, options.limits.vertex_budget);
    } catch (const ResourceError&) {
      out.exhausted = true;
      continue;
    }
    Tally t(n, arena.max_rise);
    if (!attempt(arena, n, prune, options, t)) {
      out.exhausted = true;
      continue;
    }
    out.complete_through = n;
    out.nodes = t.nodes;
    if (!prune) out.saw = to_mpz(t.saw, n);
    if (hf) {
      out.halfspace = to_mpz(t.half, n);
      out.bridge = to_mpz(t.bridge, n);
      for (int i = 0; i <= n; ++i) {
        auto row = to_mpz(t.span[static_cast<std::size_t>(i)], static_cast<int>(arena.max_rise));
        out.bridge_by_span.push_back(std::move(row));
      }
    }
    return out;
  }
  throw ResourceError("budget too small for even the empty walk");
}

std::vector<mpz_class> count_saws(const GraphFamily& family, const VertexLabel& start, int n_max,
                                  const EngineOptions& options) {
  return count_walks(family, nullptr, start, n_max, false, options).saw;
}

std::vector<mpz_class> count_halfspace(const GraphFamily& family, const HeightFunction& hf,
                                       const VertexLabel& start, int n_max, const EngineOptions& options) {
  return count_walks(family, &hf, start, n_max, true, options).halfspace;
}

WalkCounts count_bridges(const GraphFamily& family, const HeightFunction& hf, const VertexLabel& start,
                         int n_max, const EngineOptions& options) {
  return count_walks(family, &hf, start, n_max, true, options);
}

CountTable build_table(const GraphFamily& family, const HeightFunction& hf, int n_max,
                       const EngineOptions& options) {
  CountTable t;
  t.family = family.name();
  t.height = hf.name();
  t.n_max = n_max;
  t.declared_orbits = family.orbit_count();
  t.declared_d = hf.declared_d();
  t.sigma_reps = family.declared_orbits();
  t.b_reps = hf.orbit_representatives();

  int complete = n_max;
  std::vector<WalkCounts> sig, br;
  for (const auto& r : t.sigma_reps) {
    sig.push_back(count_walks(family, &hf, r, n_max, false, options));
    complete = std::min(complete, sig.back().complete_through);
  }
  for (std::size_t i = 0; i < t.b_reps.size(); ++i) {
    if (t.b_reps[i] == t.sigma_reps.front()) {
      br.push_back(sig.front());
    } else {
      br.push_back(count_walks(family, &hf, t.b_reps[i], n_max, true, options));
    }
    complete = std::min(complete, br.back().complete_through);
  }
  t.complete_through = complete;
  t.exhausted = complete < n_max;

  const auto upto = static_cast<std::size_t>(complete) + 1;
  for (const auto& s : sig) {
    t.sigma_by_rep.emplace_back(s.saw.begin(), s.saw.begin() + static_cast<std::ptrdiff_t>(upto));
  }
  for (std::size_t n = 0; n < upto; ++n) {
    mpz_class best = 0;
    for (const auto& row : t.sigma_by_rep) best = std::max(best, row[n]);
    t.sigma.push_back(best);
  }
  t.c.assign(sig.front().halfspace.begin(), sig.front().halfspace.begin() + static_cast<std::ptrdiff_t>(upto));
  for (const auto& b : br) {
    t.b_by_rep.emplace_back(b.bridge.begin(), b.bridge.begin() + static_cast<std::ptrdiff_t>(upto));
  }
  for (std::size_t n = 0; n < upto; ++n) {
    std::size_t arg = 0;
    for (std::size_t i = 1; i < br.size(); ++i) {
      if (t.b_by_rep[i][n] < t.b_by_rep[arg][n]) arg = i;
    }
    t.b.push_back(t.b_by_rep[arg][n]);
    auto row = br[arg].bridge_by_span[n];
    while (row.size() > 1 && row.back() == 0) row.pop_back();
    t.b_by_span.push_back(std::move(row));
  }
  return t;
}

// ---------------------------------------------------------------- walks

bool is_saw(const GraphFamily& family, const Walk& w) {
  if (w.empty()) return false;
  std::set<VertexLabel> seen(w.begin(), w.end());
  if (seen.size() != w.size()) return false;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (!family.adjacent(w[i], w[i + 1])) return false;
  }
  return true;
}

bool is_halfspace(const HeightFunction& hf, const Walk& w) {
  const std::int64_t h0 = hf(w.front());
  return std::all_of(w.begin() + 1, w.end(), [&](const VertexLabel& v) { return hf(v) > h0; });
}

bool is_bridge(const HeightFunction& hf, const Walk& w) {
  const std::int64_t h0 = hf(w.front()), hn = hf(w.back());
  return std::all_of(w.begin() + 1, w.end(), [&](const VertexLabel& v) {
    const auto h = hf(v);
    return h0 < h && h <= hn;
  });
}

bool is_reversed_bridge(const HeightFunction& hf, const Walk& w) {
  const std::int64_t h0 = hf(w.front()), hn = hf(w.back());
  return std::all_of(w.begin() + 1, w.end(), [&](const VertexLabel& v) {
    const auto h = hf(v);
    return h0 > h && h >= hn;
  });
}

void for_each_walk(const GraphFamily& family, const HeightFunction* hf, const VertexLabel& start, int n,
                   WalkKind kind, const std::function<void(const Walk&)>& visit) {
  if (n < 0) throw UsageError("walk length must be non-negative");
  if (kind != WalkKind::saw && !hf) throw UsageError("walk kind needs a height function");
  Walk walk{start};
  std::set<VertexLabel> on_walk{start};
  std::function<void()> extend = [&]() {
    if (static_cast<int>(walk.size()) == n + 1) {
      const bool keep = kind == WalkKind::saw || (kind == WalkKind::halfspace && is_halfspace(*hf, walk)) ||
                        (kind == WalkKind::bridge && is_bridge(*hf, walk));
      if (keep) visit(walk);
      return;
    }
    for (const auto& next : family.neighbors(walk.back())) {
      if (on_walk.contains(next)) continue;
      walk.push_back(next);
      on_walk.insert(next);
      extend();
      on_walk.erase(next);
      walk.pop_back();
    }
  };
  extend();
}

std::vector<Walk> enumerate_walks(const GraphFamily& family, const HeightFunction* hf,
                                  const VertexLabel& start, int n, WalkKind kind, const Limits& limits) {
  std::vector<Walk> out;
  for_each_walk(family, hf, start, n, kind, [&](const Walk& w) {
    if (out.size() >= limits.search_budget) throw ResourceError("walk enumeration exceeded budget");
    out.push_back(w);
  });
  return out;
}

std::int64_t span(const HeightFunction& hf, const Walk& w) {
  if (w.empty()) throw UsageError("span of an empty vertex list");
  std::int64_t lo = hf(w.front()), hi = lo;
  for (const auto& v : w) {
    lo = std::min(lo, hf(v));
    hi = std::max(hi, hf(v));
  }
  return hi - lo;
}

BridgeDecomposition decompose(const HeightFunction& hf, const Walk& w) {
  if (w.empty() || !is_halfspace(hf, w)) throw UsageError("decompose needs a half-space walk");
  std::vector<std::int64_t> h;
  for (const auto& v : w) h.push_back(hf(v));
  const std::size_t n = w.size() - 1;
  BridgeDecomposition out;
  std::size_t prev = 0;
  for (int j = 1; prev < n; ++j) {
    // odd j: largest maximiser of h; even j: largest minimiser
    const std::int64_t sign = j % 2 == 1 ? 1 : -1;
    std::int64_t best = 0;
    std::size_t arg = prev;
    for (std::size_t m = prev; m <= n; ++m) {
      const std::int64_t val = sign * (h[m] - h[prev]);
      if (val >= best) {
        best = val;
        arg = m;
      }
    }
    if (arg == prev) throw InvariantError("decomposition stalled");
    out.spans.push_back(best);
    out.breaks.push_back(arg);
    prev = arg;
  }
  return out;
}

}  // namespace sawlab
