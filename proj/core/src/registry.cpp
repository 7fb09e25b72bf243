#include "sawlab/registry.hpp"

#include <sstream>

#include "sawlab/error.hpp"
#include "sawlab/families.hpp"
#include "sawlab/quotient.hpp"

namespace sawlab {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, sep)) out.push_back(part);
  return out;
}

std::int64_t to_int(const std::string& s, const std::string& context) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError("bad integer '" + s + "' in " + context);
  }
}

std::vector<std::int64_t> int_list(const std::string& s, const std::string& context) {
  std::vector<std::int64_t> out;
  for (const auto& p : split(s, ',')) out.push_back(to_int(p, context));
  return out;
}

}  // namespace

FamilyPtr parse_family(const std::string& spec) {
  const auto parts = split(spec, ':');
  if (parts.empty()) throw UsageError("empty family name");
  const std::string& kind = parts[0];
  if (kind == "z" && parts.size() == 2) return make_lattice(static_cast<int>(to_int(parts[1], spec)));
  if (kind == "tree" && parts.size() == 2) return make_tree(static_cast<int>(to_int(parts[1], spec)));
  if (kind == "hex" && parts.size() == 1) return make_hexagonal();
  if (kind == "sqoct" && parts.size() == 1) return make_square_octagon();
  if (kind == "heisenberg" && parts.size() == 1) return make_heisenberg();
  if (kind == "zcyl" && parts.size() == 3) {
    return cylinder(static_cast<int>(to_int(parts[1], spec)), int_list(parts[2], spec));
  }
  throw UsageError("unknown family '" + spec + "'");
}

HeightPtr default_height(const FamilyPtr& family) {
  if (auto z = std::dynamic_pointer_cast<const LatticeFamily>(family)) {
    std::vector<std::int64_t> w(static_cast<std::size_t>(z->dim()), 0);
    w[0] = 1;
    return std::make_shared<LinearHeight>(std::move(w));
  }
  if (auto t = std::dynamic_pointer_cast<const TreeFamily>(family)) return std::make_shared<TreeHeight>(t->degree());
  if (std::dynamic_pointer_cast<const HexagonalFamily>(family)) return std::make_shared<HexHeight>();
  if (std::dynamic_pointer_cast<const SquareOctagonFamily>(family)) return std::make_shared<SquareOctagonHeight>();
  if (std::dynamic_pointer_cast<const HeisenbergFamily>(family)) return std::make_shared<HeisenbergHeight>();
  if (auto c = std::dynamic_pointer_cast<const CylinderFamily>(family)) return std::make_shared<CylinderHeight>(c);
  throw UsageError("no built-in height for family " + family->name());
}

HeightPtr parse_height(const std::string& spec, const FamilyPtr& family) {
  if (spec.empty() || spec == "default") return default_height(family);
  if (spec.rfind("linear:", 0) == 0) {
    auto z = std::dynamic_pointer_cast<const LatticeFamily>(family);
    if (!z) throw UsageError("linear heights need a lattice family");
    auto w = int_list(spec.substr(7), spec);
    if (w.size() != static_cast<std::size_t>(z->dim())) throw UsageError("weight count must equal the dimension");
    return std::make_shared<LinearHeight>(std::move(w));
  }
  throw UsageError("unknown height '" + spec + "'");
}

std::vector<std::string> builtin_families() {
  return {"z:1", "z:2", "z:3", "z:4", "tree:3", "hex", "sqoct", "heisenberg"};
}

}  // namespace sawlab
