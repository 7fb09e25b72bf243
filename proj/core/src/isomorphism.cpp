#include "sawlab/isomorphism.hpp"

#include <algorithm>
#include <map>

#include "sawlab/error.hpp"

namespace sawlab {

namespace {

using Adjacency = std::vector<std::vector<std::size_t>>;

/// Refines colours of both graphs together so equal colours mean the same
/// thing on each side.
void refine(const Adjacency& ga, const Adjacency& gb, std::vector<std::size_t>& ca,
            std::vector<std::size_t>& cb) {
  std::size_t classes = 0;
  while (true) {
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> palette;
    auto recolour = [&](const Adjacency& g, const std::vector<std::size_t>& c) {
      std::vector<std::pair<std::size_t, std::vector<std::size_t>>> sig(g.size());
      for (std::size_t v = 0; v < g.size(); ++v) {
        sig[v].first = c[v];
        for (auto w : g[v]) sig[v].second.push_back(c[w]);
        std::sort(sig[v].second.begin(), sig[v].second.end());
        palette.emplace(sig[v], 0);
      }
      return sig;
    };
    auto sa = recolour(ga, ca);
    auto sb = recolour(gb, cb);
    std::size_t id = 0;
    for (auto& [key, value] : palette) value = id++;
    for (std::size_t v = 0; v < ga.size(); ++v) ca[v] = palette.at(sa[v]);
    for (std::size_t v = 0; v < gb.size(); ++v) cb[v] = palette.at(sb[v]);
    if (palette.size() == classes) return;
    classes = palette.size();
  }
}

}  // namespace

bool ball_isomorphic(const Ball& a, const Ball& b, std::uint64_t budget) {
  const std::size_t n = a.vertices.size();
  if (n != b.vertices.size() || a.edges.size() != b.edges.size()) return false;
  if (a.vertices.empty()) return true;
  const Adjacency ga = a.adjacency(), gb = b.adjacency();

  std::map<std::pair<int, std::size_t>, std::size_t> seed;
  auto initial = [&](const Ball& x, const Adjacency& g) {
    std::vector<std::pair<int, std::size_t>> keys;
    for (std::size_t v = 0; v < g.size(); ++v) {
      keys.emplace_back(x.dist.at(x.vertices[v]), g[v].size());
      seed.emplace(keys.back(), 0);
    }
    return keys;
  };
  const auto ka = initial(a, ga), kb = initial(b, gb);
  std::size_t id = 0;
  for (auto& [k, v] : seed) v = id++;
  std::vector<std::size_t> ca(n), cb(n);
  for (std::size_t v = 0; v < n; ++v) {
    ca[v] = seed.at(ka[v]);
    cb[v] = seed.at(kb[v]);
  }
  refine(ga, gb, ca, cb);
  {
    auto ha = ca, hb = cb;
    std::sort(ha.begin(), ha.end());
    std::sort(hb.begin(), hb.end());
    if (ha != hb) return false;
  }
  if (ca[0] != cb[0]) return false;

  // a's vertices are already in BFS order from the root
  std::map<std::size_t, std::vector<std::size_t>> bucket;
  for (std::size_t c = 0; c < n; ++c) bucket[cb[c]].push_back(c);
  std::vector<std::size_t> image(n, n), used_by(n, n);
  std::uint64_t nodes = 0;
  auto consistent = [&](std::size_t v, std::size_t c) {
    std::size_t mapped = 0;
    for (auto u : ga[v]) {
      if (image[u] == n) continue;
      ++mapped;
      if (!std::binary_search(gb[c].begin(), gb[c].end(), image[u])) return false;
    }
    std::size_t hit = 0;
    for (auto w : gb[c]) hit += used_by[w] != n ? 1 : 0;
    return hit == mapped;
  };
  auto search = [&](auto&& self, std::size_t v) -> bool {
    if (v == n) return true;
    if (++nodes > budget) throw ResourceError("ball isomorphism search exceeded budget");
    for (auto c : bucket.at(ca[v])) {
      if (used_by[c] != n || !consistent(v, c)) continue;
      image[v] = c;
      used_by[c] = v;
      if (self(self, v + 1)) return true;
      image[v] = n;
      used_by[c] = n;
    }
    return false;
  };
  image[0] = 0;
  used_by[0] = 0;
  return search(search, 1);
}

}  // namespace sawlab
