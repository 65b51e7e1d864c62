#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "sdbetti/complex.hpp"
#include "sdbetti/error.hpp"

namespace sdbetti {

namespace {

struct Profile {
  std::vector<std::uint64_t> adjacency;            // 1-skeleton as bit masks
  std::vector<std::vector<std::uint64_t>> counts;  // faces containing v, per dim, + neighbor degrees
  std::vector<std::vector<std::size_t>> facets_of;  // facet indices containing v
};

Profile profile(const SimplicialComplex& c) {
  const std::size_t n = c.num_vertices();
  Profile p;
  p.adjacency.assign(n, 0);
  p.counts.assign(n, {});
  p.facets_of.assign(n, {});
  const auto& table = c.faces();
  const int top = table.top_dim();
  for (std::size_t v = 0; v < n; ++v) p.counts[v].assign(static_cast<std::size_t>(std::max(top + 1, 0)), 0);
  for (int k = 0; k <= top; ++k) {
    const auto& list = table.of_dim(k);
    for (std::size_t i = 0; i < list.size(); ++i) {
      auto f = list[i];
      for (Vertex v : f) ++p.counts[v][static_cast<std::size_t>(k)];
      if (k == 1) {
        p.adjacency[f[0]] |= std::uint64_t{1} << f[1];
        p.adjacency[f[1]] |= std::uint64_t{1} << f[0];
      }
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<std::uint64_t> degs;
    for (std::size_t u = 0; u < n; ++u) {
      if (p.adjacency[v] >> u & 1) degs.push_back(static_cast<std::uint64_t>(std::popcount(p.adjacency[u])));
    }
    std::sort(degs.begin(), degs.end());
    p.counts[v].push_back(0xffffffffULL);  // separator
    p.counts[v].insert(p.counts[v].end(), degs.begin(), degs.end());
  }
  for (std::size_t i = 0; i < c.facets().size(); ++i) {
    for (Vertex v : c.facets()[i]) p.facets_of[v].push_back(i);
  }
  return p;
}

class Search {
 public:
  Search(const SimplicialComplex& a, const SimplicialComplex& b)
      : a_(a), b_(b), pa_(profile(a)), pb_(profile(b)), n_(a.num_vertices()) {}

  std::optional<std::vector<Vertex>> run() {
    for (std::size_t v = 0; v < n_; ++v) {
      std::vector<Vertex> cand;
      for (std::size_t w = 0; w < n_; ++w) {
        if (pa_.counts[v] == pb_.counts[w]) cand.push_back(static_cast<Vertex>(w));
      }
      if (cand.empty()) return std::nullopt;
      candidates_.push_back(std::move(cand));
    }
    order_ = build_order();
    phi_.assign(n_, kUnset);
    used_.assign(n_, false);
    if (!extend(0)) return std::nullopt;
    return phi_;
  }

 private:
  static constexpr Vertex kUnset = ~Vertex{0};

  // Vertices with few candidates first, then those adjacent to already ordered ones.
  std::vector<Vertex> build_order() const {
    std::vector<Vertex> order;
    std::vector<bool> placed(n_, false);
    for (std::size_t step = 0; step < n_; ++step) {
      std::size_t best = n_;
      int best_links = -1;
      std::size_t best_cands = 0;
      for (std::size_t v = 0; v < n_; ++v) {
        if (placed[v]) continue;
        int links = 0;
        for (Vertex u : order) links += static_cast<int>(pa_.adjacency[v] >> u & 1);
        const std::size_t cands = candidates_[v].size();
        if (best == n_ || links > best_links || (links == best_links && cands < best_cands)) {
          best = v;
          best_links = links;
          best_cands = cands;
        }
      }
      placed[best] = true;
      order.push_back(static_cast<Vertex>(best));
    }
    return order;
  }

  bool consistent(Vertex v, Vertex w) const {
    for (std::size_t u = 0; u < n_; ++u) {
      if (phi_[u] == kUnset) continue;
      const bool ea = pa_.adjacency[v] >> u & 1;
      const bool eb = pb_.adjacency[w] >> phi_[u] & 1;
      if (ea != eb) return false;
    }
    std::vector<Vertex> image;
    for (std::size_t fi : pa_.facets_of[v]) {
      const Face& f = a_.facets()[fi];
      image.clear();
      bool complete = true;
      for (Vertex x : f) {
        const Vertex y = (x == v) ? w : phi_[x];
        if (y == kUnset) {
          complete = false;
          break;
        }
        image.push_back(y);
      }
      if (!complete) continue;
      std::sort(image.begin(), image.end());
      if (!b_.contains(image)) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == n_) return true;
    const Vertex v = order_[depth];
    for (Vertex w : candidates_[v]) {
      if (used_[w] || !consistent(v, w)) continue;
      phi_[v] = w;
      used_[w] = true;
      if (extend(depth + 1)) return true;
      phi_[v] = kUnset;
      used_[w] = false;
    }
    return false;
  }

  const SimplicialComplex& a_;
  const SimplicialComplex& b_;
  Profile pa_;
  Profile pb_;
  std::size_t n_;
  std::vector<std::vector<Vertex>> candidates_;
  std::vector<Vertex> order_;
  std::vector<Vertex> phi_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const SimplicialComplex& a,
                                                    const SimplicialComplex& b) {
  if (a.num_vertices() > kIsomorphismGate || b.num_vertices() > kIsomorphismGate) {
    throw GateExceeded("isomorphism search is limited to 64 vertices");
  }
  if (a.num_vertices() != b.num_vertices()) return std::nullopt;
  if (a.facets().size() != b.facets().size()) return std::nullopt;
  if (a.f_vector() != b.f_vector()) return std::nullopt;
  return Search(a, b).run();
}

bool is_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
  return find_isomorphism(a, b).has_value();
}

}  // namespace sdbetti
