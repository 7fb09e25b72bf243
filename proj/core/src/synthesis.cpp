#include "sawlab/synthesis.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <random>

#include "sawlab/error.hpp"

namespace sawlab {

namespace {

constexpr long kPerturbationPrime = 10007;
constexpr std::uint64_t kPathSearchBudget = 2'000'000;

bool is_integer(const Rational& x) { return x.get_den() == 1; }

std::vector<std::size_t> staircase_ports(const std::vector<std::int64_t>& z) {
  std::vector<std::size_t> ports;
  for (std::size_t i = 0; i < z.size(); ++i) {
    const std::size_t p = z[i] >= 0 ? 2 * i : 2 * i + 1;
    for (std::int64_t k = 0; k < std::abs(z[i]); ++k) ports.push_back(p);
  }
  return ports;
}

/// Lattice vectors with a given L1 norm, in lexicographic order.
void vectors_with_norm(std::size_t dim, std::int64_t norm, std::vector<std::int64_t>& cur,
                       std::vector<std::vector<std::int64_t>>& out) {
  if (cur.size() + 1 == dim) {
    cur.push_back(-norm);
    out.push_back(cur);
    cur.back() = norm;
    if (norm != 0) out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (std::int64_t x = -norm; x <= norm; ++x) {
    cur.push_back(x);
    vectors_with_norm(dim, norm - std::abs(x), cur, out);
    cur.pop_back();
  }
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

/// Directed id traversing undirected slot `s` out of vertex `x`.
std::size_t orient(const QuotientGraph& q, const DirectedCycleBasis& b, std::size_t s, std::size_t x) {
  const std::size_t c = b.canonical[s];
  return q.edges[c].from == x ? c : q.edges[c].reverse;
}

}  // namespace

std::vector<DirectedCycle> unit_square_generators(const QuotientGraph& q) {
  std::vector<DirectedCycle> out;
  const std::size_t dim = q.degree() / 2;
  for (std::size_t o = 0; o < q.orbit_count(); ++o) {
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = i + 1; j < dim; ++j) {
        out.push_back(q.follow(o, {2 * i, 2 * j, 2 * i + 1, 2 * j + 1}));
      }
    }
  }
  return out;
}

RatVector DirectedCycleBasis::vector_of(const DirectedCycle& walk) const {
  RatVector v(edge_count(), 0);
  for (auto e : walk) v[slot[e]] += sign[e];
  return v;
}

std::vector<DirectedCycle> DirectedCycleBasis::full_list(const QuotientGraph& q) const {
  std::vector<bool> used(edge_count(), false);
  for (std::size_t i = 0; i < rho_prime; ++i) {
    for (auto e : cycles[i]) used[slot[e]] = true;
  }
  std::vector<DirectedCycle> out;
  for (std::size_t s = 0; s < edge_count(); ++s) {
    if (used[s]) out.push_back({canonical[s], q.edges[canonical[s]].reverse});
  }
  for (std::size_t i = 0; i < rho_prime; ++i) out.push_back(cycles[i]);
  for (std::size_t s = 0; s < edge_count(); ++s) {
    if (!used[s]) out.push_back({canonical[s], q.edges[canonical[s]].reverse});
  }
  for (std::size_t i = rho_prime; i < cycles.size(); ++i) out.push_back(cycles[i]);
  return out;
}

DirectedCycleBasis cycle_basis(const QuotientGraph& q, const std::vector<DirectedCycle>& generators) {
  if (!check_symmetric(q)) throw UsageError("cycle basis needs a symmetric quotient");
  DirectedCycleBasis b;
  b.canonical = q.undirected_edges();
  b.slot.assign(q.edges.size(), 0);
  b.sign.assign(q.edges.size(), 1);
  for (std::size_t s = 0; s < b.canonical.size(); ++s) {
    const std::size_t c = b.canonical[s];
    b.slot[c] = s;
    b.slot[q.edges[c].reverse] = s;
    b.sign[q.edges[c].reverse] = -1;
  }
  const std::size_t n_edges = b.canonical.size();
  const std::size_t n_vertices = q.orbit_count();
  b.delta_prime = n_edges + 1 - n_vertices;
  b.generators_empty = generators.empty();

  for (const auto& g : generators) {
    if (g.empty()) throw UsageError("empty generator cycle");
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (g[k] >= q.edges.size()) throw UsageError("generator uses unknown edge");
      if (q.edges[g[k]].to != q.edges[g[(k + 1) % g.size()]].from) {
        throw UsageError("generator is not a closed walk of the quotient");
      }
    }
  }

  SpanTracker span(n_edges);
  std::vector<bool> generator_edge(n_edges, false);
  std::vector<DirectedCycle> independent;
  for (const auto& g : generators) {
    for (auto e : g) generator_edge[b.slot[e]] = true;
    if (span.add(b.vector_of(g))) independent.push_back(g);
  }
  b.rho_prime = independent.size();
  b.generator_edges = static_cast<std::size_t>(std::count(generator_edge.begin(), generator_edge.end(), true));
  if (b.rho_prime >= b.delta_prime) {
    throw InvariantError("generator projections span the whole cycle space; no room for the distinguished cycle");
  }

  // distinguished cycle: shortest lattice vector independent of the generators
  const std::size_t dim = q.degree() / 2;
  std::int64_t cap = 0;
  for (const auto& row : q.lattice().basis()) {
    std::int64_t l1 = 0;
    for (auto x : row) l1 += std::abs(x);
    cap += l1;
  }
  SpanTracker with_c = span;
  for (std::int64_t norm = 1; norm <= cap && b.distinguished_ports.empty(); ++norm) {
    std::vector<std::vector<std::int64_t>> cands;
    std::vector<std::int64_t> cur;
    vectors_with_norm(dim, norm, cur, cands);
    std::erase_if(cands, [&](const auto& z) { return !q.lattice().contains(z); });
    auto key = [](const std::vector<std::int64_t>& z) {
      std::size_t negatives = 0, last = 0;
      for (std::size_t i = 0; i < z.size(); ++i) {
        if (z[i] < 0) ++negatives;
        if (z[i] != 0) last = i;
      }
      return std::make_tuple(negatives, z.size() - last, z);
    };
    std::sort(cands.begin(), cands.end(), [&](const auto& x, const auto& y) { return key(x) < key(y); });
    for (const auto& z : cands) {
      auto ports = staircase_ports(z);
      DirectedCycle c = q.follow(0, ports);
      if (q.edges[c.back()].to != 0) throw InvariantError("lattice vector does not close in the quotient");
      if (with_c.add(b.vector_of(c))) {
        b.distinguished_shift = z;
        b.distinguished_ports = std::move(ports);
        independent.push_back(std::move(c));
        break;
      }
    }
  }
  if (b.distinguished_ports.empty()) throw InvariantError("no lattice cycle independent of the generators");
  DirectedCycle distinguished = std::move(independent.back());
  independent.pop_back();

  // spanning tree extending the forest on generator edges
  std::vector<std::size_t> parent(n_vertices);
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<bool> in_tree(n_edges, false);
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t s = 0; s < n_edges; ++s) {
      if (generator_edge[s] != (pass == 0)) continue;
      const auto& e = q.edges[b.canonical[s]];
      const std::size_t ra = find_root(parent, e.from), rb = find_root(parent, e.to);
      if (ra == rb) continue;
      parent[ra] = rb;
      in_tree[s] = true;
    }
  }
  std::vector<std::vector<std::size_t>> tree_adj(n_vertices);
  for (std::size_t s = 0; s < n_edges; ++s) {
    if (!in_tree[s]) continue;
    tree_adj[q.edges[b.canonical[s]].from].push_back(s);
    tree_adj[q.edges[b.canonical[s]].to].push_back(s);
  }
  auto tree_path = [&](std::size_t from, std::size_t to) {
    std::vector<std::size_t> via(n_vertices, n_edges);
    std::vector<bool> seen(n_vertices, false);
    std::deque<std::size_t> queue{from};
    seen[from] = true;
    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop_front();
      for (auto s : tree_adj[x]) {
        const auto& e = q.edges[b.canonical[s]];
        const std::size_t y = e.from == x ? e.to : e.from;
        if (seen[y]) continue;
        seen[y] = true;
        via[y] = s;
        queue.push_back(y);
      }
    }
    std::vector<std::size_t> path;
    for (std::size_t y = to; y != from;) {
      const auto& e = q.edges[b.canonical[via[y]]];
      const std::size_t x = e.from == y ? e.to : e.from;
      path.push_back(orient(q, b, via[y], x));
      y = x;
    }
    std::reverse(path.begin(), path.end());
    return path;
  };

  for (std::size_t s = 0; s < n_edges && with_c.rank() < b.delta_prime; ++s) {
    if (in_tree[s]) continue;
    const std::size_t c = b.canonical[s];
    DirectedCycle cyc{c};
    auto back = tree_path(q.edges[c].to, q.edges[c].from);
    cyc.insert(cyc.end(), back.begin(), back.end());
    if (with_c.add(b.vector_of(cyc))) independent.push_back(std::move(cyc));
  }
  if (with_c.rank() != b.delta_prime) throw InvariantError("cycle basis incomplete");
  independent.push_back(std::move(distinguished));
  b.cycles = std::move(independent);
  return b;
}

// ---------------------------------------------------------------- increments

Rational EdgeIncrement::sum(const std::vector<std::size_t>& walk) const {
  Rational s = 0;
  for (auto e : walk) s += (*this)(e);
  return s;
}

Rational EdgeIncrement::max_abs() const {
  Rational m = 0;
  for (const auto& x : value) m = std::max<Rational>(m, abs(x));
  return m;
}

mpz_class EdgeIncrement::scale() const {
  mpz_class m = 1;
  for (const auto& x : value) mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), x.get_den_mpz_t());
  return m;
}

IncrementCheck check_increments(const EdgeIncrement& inc, const DirectedCycleBasis& basis,
                                const QuotientGraph& q) {
  IncrementCheck out;
  out.equations = true;
  for (std::size_t i = 0; i < basis.cycles.size(); ++i) {
    const Rational want = i + 1 == basis.cycles.size() ? 1 : 0;
    const Rational got = inc.sum(basis.cycles[i]);
    if (got != want) {
      out.equations = false;
      out.detail = "cycle " + std::to_string(i) + " sums to " + got.get_str();
      break;
    }
  }
  out.signs = true;
  for (std::size_t o = 0; o < q.orbit_count() && out.signs; ++o) {
    bool pos = false, neg = false;
    for (std::size_t p = 0; p < q.degree(); ++p) {
      const Rational x = inc(q.edge_id(o, p));
      pos |= x > 0;
      neg |= x < 0;
    }
    if (!pos || !neg) {
      out.signs = false;
      if (out.detail.empty()) out.detail = "orbit " + std::to_string(o) + " lacks a signed out-edge";
    }
  }
  return out;
}

namespace {

RatVector particular_solution(const DirectedCycleBasis& basis) {
  RatMatrix rows;
  for (const auto& c : basis.cycles) rows.push_back(basis.vector_of(c));
  RatVector rhs(rows.size(), 0);
  rhs.back() = 1;
  auto x = solve(rows, rhs, basis.edge_count());
  if (!x) throw InvariantError("cycle equations are inconsistent");
  return *x;
}

EdgeIncrement empty_increment(const DirectedCycleBasis& basis) {
  EdgeIncrement inc;
  inc.value.assign(basis.edge_count(), 0);
  inc.slot = basis.slot;
  inc.sign = basis.sign;
  inc.generators_empty = basis.generators_empty;
  return inc;
}

std::size_t sign_score(const EdgeIncrement& inc, const QuotientGraph& q) {
  std::size_t score = 0;
  for (std::size_t o = 0; o < q.orbit_count(); ++o) {
    bool pos = false, neg = false;
    for (std::size_t p = 0; p < q.degree(); ++p) {
      const Rational x = inc(q.edge_id(o, p));
      pos |= x > 0;
      neg |= x < 0;
    }
    score += (pos && neg) ? 1 : 0;
  }
  return score;
}

/// Staged exploration: cycles C(v) are explored segment by segment, keeping
/// every explored closed walk's sum equal to its C-coefficient.
class Stager {
 public:
  Stager(const DirectedCycleBasis& b, const QuotientGraph& q)
      : b_(b), q_(q), psi_(particular_solution(b)), inc_(empty_increment(b)),
        explored_(b.edge_count(), false), in_x_(q.orbit_count(), false) {}

  bool run() {
    const std::size_t n = q_.orbit_count();
    for (std::size_t v = 0; v < n; ++v) cycles_.push_back(q_.follow(v, b_.distinguished_ports));

    // components of the union U of all C(v)
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<bool> in_u(b_.edge_count(), false);
    for (const auto& c : cycles_) {
      for (auto e : c) {
        in_u[b_.slot[e]] = true;
        const std::size_t ra = find_root(parent, q_.edges[e].from), rb = find_root(parent, q_.edges[e].to);
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
      }
    }
    component_.resize(n);
    for (std::size_t v = 0; v < n; ++v) component_[v] = find_root(parent, v);

    std::vector<bool> done(n, false);
    in_x_[0] = true;
    if (!explore_component(0)) return false;
    mark_done(done, component_[0]);

    // Stage 4: bridge to the next component with a zero edge
    while (std::find(done.begin(), done.end(), false) != done.end()) {
      bool linked = false;
      for (std::size_t s = 0; s < b_.edge_count() && !linked; ++s) {
        if (explored_[s] || in_u[s]) continue;
        const auto& e = q_.edges[b_.canonical[s]];
        const bool from_done = done[e.from], to_done = done[e.to];
        if (from_done == to_done) continue;
        const std::size_t fresh = from_done ? e.to : e.from;
        set(b_.canonical[s], 0);
        in_x_[fresh] = true;
        if (!explore_component(fresh)) return false;
        mark_done(done, component_[fresh]);
        linked = true;
      }
      if (!linked) {
        failure_ = "no edge joins the explored components to the rest";
        return false;
      }
    }

    // Stage 5: remaining edges from explored potentials
    std::vector<Rational> g(n, 0);
    std::vector<bool> seen(n, false);
    std::deque<std::size_t> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop_front();
      for (std::size_t p = 0; p < q_.degree(); ++p) {
        const std::size_t e = q_.edge_id(x, p);
        if (!explored_[b_.slot[e]]) continue;
        const std::size_t y = q_.edges[e].to;
        if (seen[y]) continue;
        seen[y] = true;
        g[y] = g[x] + directed_psi(e) - inc_(e);
        queue.push_back(y);
      }
    }
    for (std::size_t s = 0; s < b_.edge_count(); ++s) {
      if (explored_[s]) continue;
      const auto& e = q_.edges[b_.canonical[s]];
      set(b_.canonical[s], psi_[s] - (g[e.to] - g[e.from]));
    }
    return true;
  }

  EdgeIncrement result() const { return inc_; }
  const std::string& failure() const { return failure_; }

 private:
  Rational directed_psi(std::size_t e) const { return b_.sign[e] * psi_[b_.slot[e]]; }
  void set(std::size_t e, const Rational& x) {
    inc_.value[b_.slot[e]] = b_.sign[e] > 0 ? x : Rational(-x);
    explored_[b_.slot[e]] = true;
  }
  void mark_done(std::vector<bool>& done, std::size_t comp) const {
    for (std::size_t v = 0; v < done.size(); ++v) {
      if (component_[v] == comp) done[v] = true;
    }
  }

  bool explore_component(std::size_t seed) {
    if (!explore_cycle(cycles_[seed])) return false;
    const std::size_t comp = component_[seed];
    while (true) {
      std::size_t next = q_.orbit_count();
      for (std::size_t v = 0; v < q_.orbit_count() && next == q_.orbit_count(); ++v) {
        if (component_[v] != comp) continue;
        bool open = false, touches = false;
        for (auto e : cycles_[v]) {
          open |= !explored_[b_.slot[e]];
          touches |= in_x_[q_.edges[e].from];
        }
        if (open && touches) next = v;
      }
      if (next == q_.orbit_count()) break;
      if (!explore_cycle(cycles_[next])) return false;
    }
    return true;
  }

  bool explore_cycle(const DirectedCycle& cyc) {
    const std::size_t len = cyc.size();
    while (true) {
      std::size_t start = len;
      for (std::size_t k = 0; k < len; ++k) {
        if (in_x_[q_.edges[cyc[k]].from] && !explored_[b_.slot[cyc[k]]]) {
          start = k;
          break;
        }
      }
      if (start == len) return true;
      std::vector<std::size_t> seg;
      std::size_t k = start;
      do {
        seg.push_back(cyc[k]);
        if (in_x_[q_.edges[cyc[k]].to]) break;
        k = (k + 1) % len;
      } while (k != start);
      if (!explore_segment(seg)) return false;
    }
  }

  bool explore_segment(const std::vector<std::size_t>& seg) {
    std::vector<std::size_t> slots;
    for (auto e : seg) slots.push_back(b_.slot[e]);
    std::sort(slots.begin(), slots.end());
    if (std::adjacent_find(slots.begin(), slots.end()) != slots.end()) {
      failure_ = "segment reuses an edge";
      return false;
    }
    const std::size_t a = q_.edges[seg.front()].from, b = q_.edges[seg.back()].to;
    Rational target = 0;
    for (auto e : seg) target += directed_psi(e);
    if (a != b) {
      auto r = path_with_fractional_sum(b, a);
      if (!r) {
        failure_ = "no explored path with non-integral sum";
        return false;
      }
      Rational psi_r = 0, sigma_r = 0;
      for (auto e : *r) {
        psi_r += directed_psi(e);
        sigma_r += inc_(e);
      }
      target += psi_r - sigma_r;
    }
    if (target == 0) {
      failure_ = "segment total is zero";
      return false;
    }

    const auto len = static_cast<long>(seg.size());
    const Rational base = target / len;
    const Rational eps(1, kPerturbationPrime * len);
    std::vector<std::size_t> interior;
    for (std::size_t k = 0; k + 1 < seg.size(); ++k) interior.push_back(q_.edges[seg[k]].to);

    // unperturbed first, then +-eps moved between neighbouring positions
    for (long variant = -1; variant < 2 * (len - 1); ++variant) {
      std::vector<Rational> vals(seg.size(), base);
      if (variant >= 0) {
        const auto pos = static_cast<std::size_t>(variant / 2);
        const Rational delta = variant % 2 == 0 ? eps : Rational(-eps);
        vals[pos] += delta;
        vals[pos + 1] -= delta;
      }
      if (std::any_of(vals.begin(), vals.end(), [&](const Rational& x) { return sgn(x) != sgn(target); })) continue;
      for (std::size_t k = 0; k < seg.size(); ++k) set(seg[k], vals[k]);
      for (auto v : interior) in_x_[v] = true;
      if (hypothesis_a(component_[a])) return true;
      for (auto e : seg) {
        explored_[b_.slot[e]] = false;
        inc_.value[b_.slot[e]] = 0;
      }
      for (auto v : interior) in_x_[v] = false;
    }
    failure_ = "no distribution keeps distinct explored vertices joined by a non-integral path";
    return false;
  }

  /// Lexicographically least explored SAW from -> to with non-integral sum.
  std::optional<std::vector<std::size_t>> path_with_fractional_sum(std::size_t from, std::size_t to) {
    std::vector<bool> visited(q_.orbit_count(), false);
    std::vector<std::size_t> path;
    std::uint64_t budget = kPathSearchBudget;
    std::function<bool(std::size_t, const Rational&)> dfs = [&](std::size_t x, const Rational& sum) {
      if (budget-- == 0) return false;
      for (std::size_t p = 0; p < q_.degree(); ++p) {
        const std::size_t e = q_.edge_id(x, p);
        if (!explored_[b_.slot[e]]) continue;
        const std::size_t y = q_.edges[e].to;
        if (visited[y]) continue;
        const Rational next = sum + inc_(e);
        path.push_back(e);
        if (y == to) {
          if (!is_integer(next)) return true;
        } else {
          visited[y] = true;
          if (dfs(y, next)) return true;
          visited[y] = false;
        }
        path.pop_back();
      }
      return false;
    };
    visited[from] = true;
    if (dfs(from, Rational(0))) return path;
    return std::nullopt;
  }

  bool hypothesis_a(std::size_t comp) {
    std::vector<std::size_t> members;
    for (std::size_t v = 0; v < q_.orbit_count(); ++v) {
      if (in_x_[v] && component_[v] == comp) members.push_back(v);
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
      std::vector<bool> need(q_.orbit_count(), false);
      std::size_t missing = 0;
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        need[members[j]] = true;
        ++missing;
      }
      if (missing == 0) continue;
      std::vector<bool> visited(q_.orbit_count(), false);
      std::uint64_t budget = kPathSearchBudget;
      std::function<void(std::size_t, const Rational&)> dfs = [&](std::size_t x, const Rational& sum) {
        if (missing == 0 || budget == 0) return;
        --budget;
        for (std::size_t p = 0; p < q_.degree() && missing > 0; ++p) {
          const std::size_t e = q_.edge_id(x, p);
          if (!explored_[b_.slot[e]]) continue;
          const std::size_t y = q_.edges[e].to;
          if (visited[y]) continue;
          const Rational next = sum + inc_(e);
          if (need[y] && !is_integer(next)) {
            need[y] = false;
            --missing;
          }
          visited[y] = true;
          dfs(y, next);
          visited[y] = false;
        }
      };
      visited[members[i]] = true;
      dfs(members[i], Rational(0));
      if (missing > 0) return false;
    }
    return true;
  }

  const DirectedCycleBasis& b_;
  const QuotientGraph& q_;
  RatVector psi_;
  EdgeIncrement inc_;
  std::vector<bool> explored_;
  std::vector<bool> in_x_;
  std::vector<DirectedCycle> cycles_;
  std::vector<std::size_t> component_;
  std::string failure_;
};

}  // namespace

EdgeIncrement solve_increments_fallback(const DirectedCycleBasis& basis, const QuotientGraph& q) {
  EdgeIncrement inc = empty_increment(basis);
  inc.value = particular_solution(basis);
  inc.used_fallback = true;

  // harmonic start: out-edge increments sum to zero at every orbit, so any
  // orbit with a nonzero out-edge has both signs
  const std::size_t nv = q.orbit_count();
  RatMatrix lap(nv, RatVector(nv, 0));
  RatVector rhs(nv, 0);
  for (std::size_t e = 0; e < q.edges.size(); ++e) {
    const auto& ed = q.edges[e];
    rhs[ed.from] -= inc(e);
    lap[ed.from][ed.to] += 1;
    lap[ed.from][ed.from] -= 1;
  }
  if (const auto g = solve(lap, rhs, nv)) {
    for (std::size_t s = 0; s < basis.edge_count(); ++s) {
      const auto& ed = q.edges[basis.canonical[s]];
      inc.value[s] += (*g)[ed.to] - (*g)[ed.from];
    }
  }

  RatMatrix rows;
  for (const auto& c : basis.cycles) rows.push_back(basis.vector_of(c));
  const RatMatrix kernel = nullspace(rows, basis.edge_count());

  std::size_t score = sign_score(inc, q);
  for (int pass = 0; pass < 32 && score < q.orbit_count(); ++pass) {
    const std::size_t before = score;
    for (const auto& dir : kernel) {
      if (score == q.orbit_count()) break;
      std::vector<Rational> breaks;
      for (std::size_t s = 0; s < dir.size(); ++s) {
        if (dir[s] != 0) breaks.push_back(-inc.value[s] / dir[s]);
      }
      if (breaks.empty()) continue;
      std::sort(breaks.begin(), breaks.end());
      breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
      std::vector<Rational> candidates{breaks.front() - 1, breaks.back() + 1};
      for (std::size_t i = 0; i + 1 < breaks.size(); ++i) candidates.push_back((breaks[i] + breaks[i + 1]) / 2);

      Rational best_t = 0;
      std::size_t best = score;
      for (const auto& t : candidates) {
        EdgeIncrement trial = inc;
        for (std::size_t s = 0; s < dir.size(); ++s) trial.value[s] += t * dir[s];
        const std::size_t sc = sign_score(trial, q);
        if (sc > best) {
          best = sc;
          best_t = t;
        }
      }
      if (best > score) {
        for (std::size_t s = 0; s < dir.size(); ++s) inc.value[s] += best_t * dir[s];
        score = best;
      }
    }
    if (score == before) break;
  }
  if (score < q.orbit_count()) throw InvariantError("sign repair over the nullspace did not converge");
  return inc;
}

EdgeIncrement solve_increments(const DirectedCycleBasis& basis, const QuotientGraph& q) {
  Stager stager(basis, q);
  std::string reason;
  if (stager.run()) {
    EdgeIncrement inc = stager.result();
    const auto check = check_increments(inc, basis, q);
    if (check.ok()) return inc;
    reason = "staged result failed its final check: " + check.detail;
  } else {
    reason = stager.failure();
  }
  EdgeIncrement inc = solve_increments_fallback(basis, q);
  inc.fallback_reason = reason;
  return inc;
}

// ---------------------------------------------------------------- lifting

LiftedHeight::LiftedHeight(const EdgeIncrement& inc, const QuotientGraph& q) : inc_(inc), q_(q) {
  const mpz_class m = inc.scale();
  if (!m.fits_slong_p()) throw ResourceError("height scale does not fit in 64 bits");
  scale_ = m.get_si();
  for (const auto& r : q_.representatives) rep_height_.push_back(staircase({r.begin(), r.end()}));
  for (const auto& row : q_.lattice().basis()) basis_height_.push_back(staircase(row));
  const Rational d = inc_.max_abs() * scale_;
  declared_d_ = static_cast<int>(d.get_num().get_si());
  declared_r_ = r_upper_bound(q_.orbit_count(), declared_d_);
}

std::int64_t LiftedHeight::staircase(const std::vector<std::int64_t>& z) const {
  Rational h = 0;
  for (auto e : q_.follow(0, staircase_ports(z))) h += inc_(e);
  h *= scale_;
  if (!is_integer(h)) throw InvariantError("scaled height is not an integer");
  return h.get_num().get_si();
}

std::string LiftedHeight::name() const {
  std::string out = "lifted:" + q_.subgroup.family + "/";
  for (std::size_t i = 0; i < q_.subgroup.shifts.size(); ++i) {
    if (i) out += ';';
    for (std::size_t k = 0; k < q_.subgroup.shifts[i].size(); ++k) {
      if (k) out += ',';
      out += std::to_string(q_.subgroup.shifts[i][k]);
    }
  }
  return out;
}

std::int64_t LiftedHeight::evaluate(const VertexLabel& v) const {
  std::vector<std::int64_t> coeff;
  const VertexLabel rep = q_.reduce(v, &coeff);
  std::int64_t h = rep_height_[q_.project(rep)];
  for (std::size_t i = 0; i < coeff.size(); ++i) h += coeff[i] * basis_height_[i];
  return h;
}

VertexLabel LiftedHeight::transport(const VertexLabel& v, const VertexLabel& x) const {
  const VertexLabel rep = q_.reduce(v);
  VertexLabel out = x;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= v[i] - rep[i];
  return out;
}

namespace {

std::size_t port_of(const GraphFamily& family, const VertexLabel& x, const VertexLabel& y,
                    std::vector<VertexLabel>& scratch) {
  family.neighbors_into(x, scratch);
  auto it = std::find(scratch.begin(), scratch.end(), y);
  if (it == scratch.end()) throw UsageError("walk step " + x.str() + " -> " + y.str() + " is not an edge");
  return static_cast<std::size_t>(it - scratch.begin());
}

}  // namespace

std::shared_ptr<const LiftedHeight> lift_height(const EdgeIncrement& inc, const GraphFamily& family,
                                                const QuotientGraph& q) {
  auto h = std::make_shared<const LiftedHeight>(inc, q);
  std::int64_t radius = 2;
  for (const auto& r : q.representatives) {
    std::int64_t l1 = 0;
    for (auto x : r) l1 += std::abs(x);
    radius = std::max(radius, l1 + 2);
  }
  const Ball region = ball(family, family.origin(), static_cast<int>(radius));
  std::unordered_map<VertexLabel, Rational, VertexLabelHash> value;
  value.emplace(region.root, 0);
  std::vector<VertexLabel> nbrs;
  for (const auto& x : region.vertices) {
    const Rational hx = value.at(x);
    family.neighbors_into(x, nbrs);
    const std::size_t ox = q.project(x);
    for (std::size_t p = 0; p < nbrs.size(); ++p) {
      if (!region.contains(nbrs[p])) continue;
      const Rational hy = hx + inc(q.edge_id(ox, p));
      auto [it, fresh] = value.emplace(nbrs[p], hy);
      if (!fresh && it->second != hy) {
        throw InvariantError("increments are path dependent near " + nbrs[p].str());
      }
    }
  }
  for (const auto& [v, hv] : value) {
    if (hv * h->scale() != h->evaluate(v)) {
      throw InvariantError("closed-form lift disagrees with propagation at " + v.str());
    }
  }
  return h;
}

CocycleResult verify_cocycle(const EdgeIncrement& inc, const GraphFamily& family,
                             const QuotientGraph& q, std::size_t trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<VertexLabel> nbrs, scratch;
  CocycleResult out;
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<VertexLabel> walk{family.origin()};
    const auto steps = std::uniform_int_distribution<int>(1, 10)(rng);
    for (int k = 0; k < steps; ++k) {
      family.neighbors_into(walk.back(), nbrs);
      walk.push_back(nbrs[std::uniform_int_distribution<std::size_t>(0, nbrs.size() - 1)(rng)]);
    }
    // straight back to the origin along a staircase
    VertexLabel at = walk.back();
    for (std::size_t i = 0; i < at.size(); ++i) {
      while (at[i] != 0) {
        at[i] += at[i] > 0 ? -1 : 1;
        walk.push_back(at);
      }
    }
    Rational sum = 0;
    for (std::size_t k = 0; k + 1 < walk.size(); ++k) {
      sum += inc(q.edge_id(q.project(walk[k]), port_of(family, walk[k], walk[k + 1], scratch)));
    }
    if (sum != 0) {
      out.ok = false;
      out.witness = std::move(walk);
      out.sum = sum;
      return out;
    }
  }
  return out;
}

nlohmann::json to_json(const EdgeIncrement& inc, const QuotientGraph& q) {
  nlohmann::json j;
  j["family"] = q.subgroup.family;
  j["shifts"] = q.subgroup.shifts;
  j["scale"] = inc.scale().get_str();
  j["fallback"] = inc.used_fallback;
  if (inc.used_fallback) j["fallback_reason"] = inc.fallback_reason;
  j["generators_empty"] = inc.generators_empty;
  auto rows = nlohmann::json::array();
  for (std::size_t e = 0; e < q.edges.size(); ++e) {
    const Rational x = inc(e);
    rows.push_back({{"edge", e},
                    {"from", q.edges[e].from},
                    {"to", q.edges[e].to},
                    {"port", q.edges[e].port},
                    {"numerator", x.get_num().get_str()},
                    {"denominator", x.get_den().get_str()}});
  }
  j["increments"] = rows;
  return j;
}

}  // namespace sawlab
