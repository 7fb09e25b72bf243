#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>

#include <boost/container/small_vector.hpp>

namespace sawlab {

/// Canonical vertex token: a short integer tuple whose meaning is fixed by the
/// owning family (lattice coordinates, tree address, cell + corner, ...).
/// Two labels are equal iff they denote the same vertex of that family.
class VertexLabel {
 public:
  using value_type = std::int64_t;
  using storage_type = boost::container::small_vector<value_type, 4>;

  VertexLabel() = default;
  VertexLabel(std::initializer_list<value_type> coords) : coords_(coords) {}
  explicit VertexLabel(std::span<const value_type> coords)
      : coords_(coords.begin(), coords.end()) {}

  [[nodiscard]] std::size_t size() const { return coords_.size(); }
  [[nodiscard]] bool empty() const { return coords_.empty(); }
  value_type operator[](std::size_t i) const { return coords_[i]; }
  value_type& operator[](std::size_t i) { return coords_[i]; }
  [[nodiscard]] auto begin() const { return coords_.begin(); }
  [[nodiscard]] auto end() const { return coords_.end(); }
  [[nodiscard]] std::span<const value_type> coords() const {
    return {coords_.data(), coords_.size()};
  }
  void push_back(value_type x) { coords_.push_back(x); }
  void pop_back() { coords_.pop_back(); }
  void resize(std::size_t n, value_type fill = 0) { coords_.resize(n, fill); }
  value_type back() const { return coords_.back(); }

  friend bool operator==(const VertexLabel& a, const VertexLabel& b) {
    return a.coords_.size() == b.coords_.size() &&
           std::equal(a.coords_.begin(), a.coords_.end(), b.coords_.begin());
  }
  friend std::strong_ordering operator<=>(const VertexLabel& a, const VertexLabel& b) {
    return std::lexicographical_compare_three_way(a.coords_.begin(), a.coords_.end(),
                                                  b.coords_.begin(), b.coords_.end());
  }

  /// "(x,y,...)"
  [[nodiscard]] std::string str() const;
  [[nodiscard]] std::size_t hash() const;

 private:
  storage_type coords_;
};

struct VertexLabelHash {
  std::size_t operator()(const VertexLabel& v) const { return v.hash(); }
};

}  // namespace sawlab

template <>
struct std::hash<sawlab::VertexLabel> {
  std::size_t operator()(const sawlab::VertexLabel& v) const { return v.hash(); }
};
