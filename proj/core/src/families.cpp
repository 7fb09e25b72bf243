#include "sawlab/families.hpp"

#include "sawlab/error.hpp"

namespace sawlab {
namespace {

void require_size(const GraphFamily& family, const VertexLabel& v, std::size_t n) {
  if (v.size() != n) {
    throw UsageError("malformed label " + v.str() + " for family " + family.name() + ": expected " +
                     std::to_string(n) + " coordinates");
  }
}

}  // namespace

// ---------------------------------------------------------------- lattice

LatticeFamily::LatticeFamily(int dim) : dim_(dim) {
  if (dim < 1 || dim > 4) throw UsageError("lattice dimension must lie in [1, 4]");
}

std::string LatticeFamily::name() const { return "z:" + std::to_string(dim_); }

VertexLabel LatticeFamily::origin() const {
  VertexLabel v;
  v.resize(static_cast<std::size_t>(dim_));
  return v;
}

void LatticeFamily::validate(const VertexLabel& v) const {
  require_size(*this, v, static_cast<std::size_t>(dim_));
}

void LatticeFamily::neighbors_into(const VertexLabel& v, std::vector<VertexLabel>& out) const {
  out.clear();
  for (int i = 0; i < dim_; ++i) {
    out.push_back(v);
    out.back()[static_cast<std::size_t>(i)] += 1;
    out.push_back(v);
    out.back()[static_cast<std::size_t>(i)] -= 1;
  }
}

// ---------------------------------------------------------------- tree

TreeFamily::TreeFamily(int degree) : degree_(degree) {
  if (degree < 3 || degree > 6) throw UsageError("tree degree must lie in [3, 6]");
}

std::string TreeFamily::name() const { return "tree:" + std::to_string(degree_); }

void TreeFamily::validate(const VertexLabel& v) const {
  if (v.empty()) throw UsageError("malformed tree label: empty");
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] < 0 || v[i] > degree_ - 2) {
      throw UsageError("malformed tree label " + v.str() + ": child letter out of range");
    }
  }
  if (v.size() > 1 && v[1] == 0) {
    throw UsageError("non-canonical tree label " + v.str() + ": first letter 0 lies on the ray");
  }
}

VertexLabel TreeFamily::descend(std::int64_t k, std::span<const std::int64_t> word) {
  std::size_t skip = 0;
  while (skip < word.size() && word[skip] == 0) ++skip;
  VertexLabel out{k + static_cast<std::int64_t>(skip)};
  for (std::size_t i = skip; i < word.size(); ++i) out.push_back(word[i]);
  return out;
}

void TreeFamily::neighbors_into(const VertexLabel& v, std::vector<VertexLabel>& out) const {
  out.clear();
  if (v.size() == 1) {
    out.push_back(VertexLabel{v[0] - 1});
  } else {
    out.push_back(v);
    out.back().pop_back();
  }
  for (std::int64_t c = 0; c <= degree_ - 2; ++c) {
    if (v.size() == 1 && c == 0) {
      out.push_back(VertexLabel{v[0] + 1});
    } else {
      out.push_back(v);
      out.back().push_back(c);
    }
  }
}

// ---------------------------------------------------------------- hexagonal

void HexagonalFamily::validate(const VertexLabel& v) const { require_size(*this, v, 2); }

void HexagonalFamily::neighbors_into(const VertexLabel& v, std::vector<VertexLabel>& out) const {
  out.clear();
  out.push_back(VertexLabel{v[0] + 1, v[1]});
  out.push_back(VertexLabel{v[0] - 1, v[1]});
  const bool even = ((v[0] + v[1]) % 2) == 0;
  out.push_back(VertexLabel{v[0], even ? v[1] + 1 : v[1] - 1});
}

// ---------------------------------------------------------------- square/octagon

void SquareOctagonFamily::validate(const VertexLabel& v) const {
  require_size(*this, v, 3);
  if (v[2] < 0 || v[2] > 3) throw UsageError("malformed square/octagon label " + v.str());
}

void SquareOctagonFamily::neighbors_into(const VertexLabel& v, std::vector<VertexLabel>& out) const {
  out.clear();
  const std::int64_t i = v[0], j = v[1], c = v[2];
  const std::int64_t lo = std::min((c + 3) % 4, (c + 1) % 4);
  const std::int64_t hi = std::max((c + 3) % 4, (c + 1) % 4);
  out.push_back(VertexLabel{i, j, lo});
  out.push_back(VertexLabel{i, j, hi});
  switch (c) {
    case W: out.push_back(VertexLabel{i - 1, j, E}); break;
    case S: out.push_back(VertexLabel{i, j - 1, N}); break;
    case E: out.push_back(VertexLabel{i + 1, j, W}); break;
    default: out.push_back(VertexLabel{i, j + 1, S}); break;
  }
}

// ---------------------------------------------------------------- Heisenberg

void HeisenbergFamily::validate(const VertexLabel& v) const { require_size(*this, v, 3); }

VertexLabel HeisenbergFamily::multiply(const VertexLabel& a, const VertexLabel& b) {
  return VertexLabel{a[0] + b[0], a[1] + b[1], a[2] + b[2] + a[0] * b[1]};
}

VertexLabel HeisenbergFamily::inverse(const VertexLabel& a) {
  return VertexLabel{-a[0], -a[1], -a[2] + a[0] * a[1]};
}

void HeisenbergFamily::neighbors_into(const VertexLabel& v, std::vector<VertexLabel>& out) const {
  out.clear();
  const std::int64_t x = v[0], y = v[1], z = v[2];
  out.push_back(VertexLabel{x + 1, y, z});
  out.push_back(VertexLabel{x - 1, y, z});
  out.push_back(VertexLabel{x, y + 1, z + x});
  out.push_back(VertexLabel{x, y - 1, z - x});
  out.push_back(VertexLabel{x, y, z + 1});
  out.push_back(VertexLabel{x, y, z - 1});
}

FamilyPtr make_lattice(int dim) { return std::make_shared<LatticeFamily>(dim); }
FamilyPtr make_tree(int degree) { return std::make_shared<TreeFamily>(degree); }
FamilyPtr make_hexagonal() { return std::make_shared<HexagonalFamily>(); }
FamilyPtr make_square_octagon() { return std::make_shared<SquareOctagonFamily>(); }
FamilyPtr make_heisenberg() { return std::make_shared<HeisenbergFamily>(); }

}  // namespace sawlab
