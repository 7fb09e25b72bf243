#include "sawlab/label.hpp"

#include <boost/container_hash/hash.hpp>

namespace sawlab {

std::string VertexLabel::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(coords_[i]);
  }
  out += ')';
  return out;
}

std::size_t VertexLabel::hash() const {
  return boost::hash_range(coords_.begin(), coords_.end());
}

}  // namespace sawlab
