#include "sawlab/quotient.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "sawlab/error.hpp"
#include "sawlab/families.hpp"

namespace sawlab {

namespace {

std::vector<std::int64_t> to_vec(const VertexLabel& v) { return {v.begin(), v.end()}; }

VertexLabel to_label(const std::vector<std::int64_t>& z) {
  return VertexLabel(std::span<const std::int64_t>(z.data(), z.size()));
}

int lattice_dim(const std::string& name) {
  if (name.rfind("z:", 0) != 0) throw UsageError("quotients need a lattice family z:n, got " + name);
  try {
    return std::stoi(name.substr(2));
  } catch (const std::exception&) {
    throw UsageError("bad lattice family name " + name);
  }
}

}  // namespace

VertexLabel QuotientGraph::reduce(const VertexLabel& v, std::vector<std::int64_t>* coeff) const {
  auto z = to_vec(v);
  auto c = lattice_.reduce(z);
  if (coeff) *coeff = std::move(c);
  return to_label(z);
}

std::size_t QuotientGraph::project(const VertexLabel& v) const {
  auto it = orbit_index_.find(reduce(v));
  if (it == orbit_index_.end()) throw InvariantError("vertex " + v.str() + " outside known orbits");
  return it->second;
}

std::vector<std::size_t> QuotientGraph::follow(std::size_t start,
                                               const std::vector<std::size_t>& ports) const {
  std::vector<std::size_t> out;
  std::size_t at = start;
  for (auto p : ports) {
    const std::size_t e = edge_id(at, p);
    out.push_back(e);
    at = edges[e].to;
  }
  return out;
}

std::vector<std::size_t> QuotientGraph::undirected_edges() const {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (e < edges[e].reverse) out.push_back(e);
  }
  return out;
}

QuotientGraph build_quotient(FamilyPtr family, const SubgroupDescriptor& sub, const Limits& limits) {
  const auto* lattice = dynamic_cast<const LatticeFamily*>(family.get());
  if (!lattice) throw UsageError("only translation subgroups of Z^n are supported");
  const auto dim = static_cast<std::size_t>(lattice->dim());

  QuotientGraph q;
  q.subgroup = sub;
  q.subgroup.family = family->name();
  q.family_ = family;
  q.degree_ = family->max_degree();
  q.lattice_ = IntLattice(sub.shifts, dim);
  if (!q.lattice_.full_rank()) {
    throw ResourceError("subgroup has infinite index: orbit closure would not terminate");
  }
  q.subgroup.finite_index = true;
  if (static_cast<std::uint64_t>(q.lattice_.index()) > limits.vertex_budget) {
    throw ResourceError("quotient has " + std::to_string(q.lattice_.index()) +
                        " orbits, beyond the vertex budget");
  }

  const VertexLabel origin = family->origin();
  q.representatives.push_back(q.reduce(origin));
  q.orbit_index_.emplace(q.representatives[0], 0);
  std::vector<VertexLabel> nbrs;
  for (std::size_t head = 0; head < q.representatives.size(); ++head) {
    family->neighbors_into(q.representatives[head], nbrs);
    for (const auto& y : nbrs) {
      VertexLabel r = q.reduce(y);
      if (q.orbit_index_.contains(r)) continue;
      if (q.representatives.size() >= limits.vertex_budget) throw ResourceError("orbit explosion");
      q.orbit_index_.emplace(r, q.representatives.size());
      q.representatives.push_back(std::move(r));
    }
  }

  const std::size_t n = q.representatives.size();
  q.edges.resize(n * q.degree_);
  q.multiplicity.assign(n, std::vector<std::size_t>(n, 0));
  std::vector<VertexLabel> back;
  for (std::size_t o = 0; o < n; ++o) {
    const VertexLabel& r = q.representatives[o];
    family->neighbors_into(r, nbrs);
    if (nbrs.size() != q.degree_) throw InvariantError("irregular lattice degree");
    for (std::size_t p = 0; p < nbrs.size(); ++p) {
      std::vector<std::int64_t> shift;
      const VertexLabel rep_to = q.reduce(nbrs[p], &shift);
      const std::size_t to = q.orbit_index_.at(rep_to);
      // translate r by the same lattice vector that carries nbrs[p] to rep_to
      VertexLabel r_moved = r;
      for (std::size_t c = 0; c < dim; ++c) r_moved[c] += rep_to[c] - nbrs[p][c];
      family->neighbors_into(rep_to, back);
      auto it = std::find(back.begin(), back.end(), r_moved);
      if (it == back.end()) throw InvariantError("translation does not preserve adjacency");
      q.edges[q.edge_id(o, p)] = {o, to, p, q.edge_id(to, static_cast<std::size_t>(it - back.begin()))};
      ++q.multiplicity[o][to];
    }

    // second representative: r + sum of basis rows
    VertexLabel r2 = r;
    for (const auto& row : q.lattice_.basis()) {
      for (std::size_t c = 0; c < dim; ++c) r2[c] += row[c];
    }
    std::vector<std::size_t> counts(n, 0);
    family->neighbors_into(r2, nbrs);
    for (const auto& y : nbrs) ++counts[q.project(y)];
    if (counts != q.multiplicity[o]) {
      throw InvariantError("edge multiplicity depends on the representative at orbit " + std::to_string(o));
    }
  }
  return q;
}

bool check_symmetric(const std::vector<std::vector<std::size_t>>& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != m.size()) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if (m[i][j] != m[j][i]) return false;
    }
  }
  return true;
}

bool check_symmetric(const QuotientGraph& q) { return check_symmetric(q.multiplicity); }

nlohmann::json to_json(const QuotientGraph& q) {
  nlohmann::json j;
  j["family"] = q.subgroup.family;
  j["shifts"] = q.subgroup.shifts;
  j["orbit_count"] = q.orbit_count();
  auto reps = nlohmann::json::array();
  for (const auto& r : q.representatives) reps.push_back(to_vec(r));
  j["representatives"] = reps;
  j["multiplicity"] = q.multiplicity;
  j["symmetric"] = check_symmetric(q);
  auto edges = nlohmann::json::array();
  for (std::size_t e = 0; e < q.edges.size(); ++e) {
    const auto& x = q.edges[e];
    edges.push_back({{"id", e}, {"from", x.from}, {"to", x.to}, {"port", x.port}, {"reverse", x.reverse}});
  }
  j["edges"] = edges;
  return j;
}

QuotientGraph quotient_from_json(const nlohmann::json& j, const Limits& limits) {
  try {
    SubgroupDescriptor sub;
    sub.family = j.at("family").get<std::string>();
    sub.shifts = j.at("shifts").get<std::vector<std::vector<std::int64_t>>>();
    return build_quotient(make_lattice(lattice_dim(sub.family)), sub, limits);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed quotient description: ") + e.what());
  }
}

// ---------------------------------------------------------------- cylinders

CylinderFamily::CylinderFamily(int dim, std::vector<std::int64_t> shift)
    : dim_(dim), shift_(std::move(shift)) {
  if (dim < 2 || dim > 4) throw UsageError("cylinder dimension must be in [2, 4]");
  if (shift_.size() != static_cast<std::size_t>(dim)) throw UsageError("cylinder shift has wrong length");
  auto nz = std::find_if(shift_.begin(), shift_.end(), [](std::int64_t x) { return x != 0; });
  if (nz == shift_.end()) throw UsageError("cylinder shift must be nonzero");
  axis_ = static_cast<std::size_t>(nz - shift_.begin());
  if (*nz < 0) {
    for (auto& x : shift_) x = -x;
  }
}

std::string CylinderFamily::name() const {
  std::string out = "zcyl:" + std::to_string(dim_) + ":";
  for (std::size_t i = 0; i < shift_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(shift_[i]);
  }
  return out;
}

VertexLabel CylinderFamily::origin() const {
  VertexLabel z;
  z.resize(static_cast<std::size_t>(dim_));
  return z;
}

VertexLabel CylinderFamily::reduce(VertexLabel z) const {
  const std::int64_t q = floor_div(z[axis_], shift_[axis_]);
  if (q != 0) {
    for (std::size_t i = 0; i < z.size(); ++i) z[i] -= q * shift_[i];
  }
  return z;
}

void CylinderFamily::validate(const VertexLabel& v) const {
  if (v.size() != static_cast<std::size_t>(dim_)) throw UsageError("label " + v.str() + " has wrong length for " + name());
  if (v[axis_] < 0 || v[axis_] >= shift_[axis_]) throw UsageError("label " + v.str() + " is not reduced for " + name());
}

void CylinderFamily::neighbors_into(const VertexLabel& v, std::vector<VertexLabel>& out) const {
  out.clear();
  for (std::size_t i = 0; i < static_cast<std::size_t>(dim_); ++i) {
    for (std::int64_t s : {1, -1}) {
      VertexLabel w = v;
      w[i] += s;
      w = reduce(std::move(w));
      if (w == v || std::find(out.begin(), out.end(), w) != out.end()) continue;
      out.push_back(std::move(w));
    }
  }
}

std::shared_ptr<const CylinderFamily> cylinder(int dim, std::vector<std::int64_t> shift) {
  return std::make_shared<const CylinderFamily>(dim, std::move(shift));
}

CylinderHeight::CylinderHeight(std::shared_ptr<const CylinderFamily> family) : family_(std::move(family)) {
  const auto& v = family_->shift();
  weights_.assign(v.size(), 0);
  auto zero = std::find(v.begin(), v.end(), 0);
  if (v.size() > 2 && zero != v.end()) {
    weights_[static_cast<std::size_t>(zero - v.begin())] = 1;
    return;
  }
  const std::int64_t g = std::gcd(v[0], v[1]);
  weights_[0] = v[1] / g;
  weights_[1] = -v[0] / g;
}

std::string CylinderHeight::name() const {
  std::string out = "linear:";
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(weights_[i]);
  }
  return out;
}

std::int64_t CylinderHeight::evaluate(const VertexLabel& v) const {
  std::int64_t h = 0;
  for (std::size_t i = 0; i < weights_.size(); ++i) h += weights_[i] * v[i];
  return h;
}

int CylinderHeight::declared_d() const {
  std::int64_t d = 0;
  for (auto w : weights_) d = std::max(d, std::abs(w));
  return static_cast<int>(d);
}

std::vector<VertexLabel> CylinderHeight::orbit_representatives() const { return {family_->origin()}; }

VertexLabel CylinderHeight::transport(const VertexLabel& v, const VertexLabel& x) const {
  VertexLabel out = x;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= v[i];
  return family_->reduce(std::move(out));
}

}  // namespace sawlab
