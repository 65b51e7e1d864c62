#include "sdbetti/subdivision.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <functional>
#include <numeric>

#include "sdbetti/error.hpp"
#include "sdbetti/standard.hpp"

namespace sdbetti {

EdgewiseVertex::EdgewiseVertex(std::vector<int> a) : composition(std::move(a)) {
  partial_sums.resize(composition.size());
  std::partial_sum(composition.begin(), composition.end(), partial_sums.begin());
}

bool edgewise_compatible(const std::vector<int>& a, const std::vector<int>& b) {
  bool pos = false;
  bool neg = false;
  int s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    s += a[k] - b[k];
    if (s == 1) {
      pos = true;
    } else if (s == -1) {
      neg = true;
    } else if (s != 0) {
      return false;
    }
    if (pos && neg) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Barycentric

SimplicialComplex barycentric(const SimplicialComplex& complex) {
  if (complex.is_void()) return SimplicialComplex::void_complex();
  const auto& table = complex.faces();
  const int top = table.top_dim();
  if (top < 0) return SimplicialComplex::empty_complex();

  // Vertex ids: nonempty faces by dimension then lexicographic order.
  std::vector<std::size_t> offset(static_cast<std::size_t>(top) + 2, 0);
  for (int k = 0; k <= top; ++k) {
    offset[static_cast<std::size_t>(k) + 1] = offset[static_cast<std::size_t>(k)] + table.count(k);
  }
  const std::size_t n = offset.back();
  std::vector<Label> labels;
  labels.reserve(n);
  for (int k = 0; k <= top; ++k) {
    const auto& list = table.of_dim(k);
    for (std::size_t i = 0; i < list.size(); ++i) {
      auto f = list[i];
      labels.emplace_back(SetLabel{std::vector<Vertex>(f.begin(), f.end())});
    }
  }

  std::vector<Face> facets;
  std::vector<Vertex> subset;
  std::vector<std::uint32_t> id_of_mask;
  std::vector<std::size_t> perm;
  for (const auto& g : complex.facets()) {
    const std::size_t k = g.size();
    if (k >= 24) throw GateExceeded("barycentric: facet too large");
    id_of_mask.assign(std::size_t{1} << k, 0);
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
      subset.clear();
      for (std::size_t b = 0; b < k; ++b) {
        if (mask >> b & 1) subset.push_back(g[b]);
      }
      const int dim = static_cast<int>(subset.size()) - 1;
      const auto idx = table.of_dim(dim).find(subset);
      id_of_mask[mask] = static_cast<std::uint32_t>(offset[static_cast<std::size_t>(dim)] + *idx);
    }
    perm.resize(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<Vertex> chain;
      chain.reserve(k);
      std::uint32_t mask = 0;
      for (std::size_t p : perm) {
        mask |= 1u << p;
        chain.push_back(id_of_mask[mask]);
      }
      // Chain ids increase with dimension, so the list is already sorted.
      facets.push_back(Face::from_sorted(std::move(chain)));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return SimplicialComplex::from_facets(std::move(facets), n).with_labels(std::move(labels));
}

std::uint64_t predicted_sd_face_count(const FVector& f) {
  // f_{j-1}(sd) = sum_i f_{i-1} * j! * S(i, j); j! S(i, j) counts ordered set partitions.
  const int d = f.d();
  if (d < 0) return 0;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  auto sat_mul = [](std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > kMax / a) return kMax;
    return a * b;
  };
  auto sat_add = [](std::uint64_t a, std::uint64_t b) { return a > kMax - b ? kMax : a + b; };
  // ordered[i][j] = number of ordered partitions of an i-set into j blocks.
  std::vector<std::vector<std::uint64_t>> ordered(static_cast<std::size_t>(d) + 1,
                                                  std::vector<std::uint64_t>(d + 1, 0));
  ordered[0][0] = 1;
  for (int i = 1; i <= d; ++i) {
    for (int j = 1; j <= i; ++j) {
      // j * (ordered[i-1][j-1] + ordered[i-1][j])
      ordered[i][j] = sat_mul(static_cast<std::uint64_t>(j),
                              sat_add(ordered[i - 1][j - 1], ordered[i - 1][j]));
    }
  }
  std::uint64_t total = 1;
  for (int i = 1; i <= d; ++i) {
    for (int j = 1; j <= i; ++j) total = sat_add(total, sat_mul(f.at(i - 1), ordered[i][j]));
  }
  return total;
}

SimplicialComplex barycentric_iter(const SimplicialComplex& complex, int r) {
  if (r < 0) throw InvalidArgument("barycentric_iter: r must be >= 0");
  SimplicialComplex current = complex;
  for (int round = 0; round < r; ++round) {
    if (predicted_sd_face_count(current.f_vector()) > kFaceGate) {
      throw GateExceeded("barycentric_iter: round " + std::to_string(round + 1) +
                         " exceeds the face gate");
    }
    current = barycentric(current);
  }
  return current;
}

// ---------------------------------------------------------------------------
// Edgewise

namespace {

void compositions(int r, std::size_t parts, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
  if (cur.size() + 1 == parts) {
    cur.push_back(r);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int first = r; first >= 0; --first) {
    cur.push_back(first);
    compositions(r - first, parts, cur, out);
    cur.pop_back();
  }
}

// All compositions of r into `parts` nonnegative parts, decreasing lexicographic order.
std::vector<std::vector<int>> all_compositions(int r, std::size_t parts) {
  std::vector<std::vector<int>> out;
  if (parts == 0) return out;
  std::vector<int> cur;
  compositions(r, parts, cur, out);
  return out;
}

class Bitset {
 public:
  explicit Bitset(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  [[nodiscard]] bool test(std::size_t i) const { return words_[i / 64] >> (i % 64) & 1; }
  [[nodiscard]] bool none() const {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
  }
  [[nodiscard]] Bitset operator&(const Bitset& o) const {
    Bitset r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
  }
  [[nodiscard]] std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        f(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

 private:
  std::vector<std::uint64_t> words_;
};

// Bron-Kerbosch with pivoting.
void maximal_cliques(const std::vector<Bitset>& adj, std::vector<std::size_t>& r, Bitset p,
                     Bitset x, std::vector<std::vector<std::size_t>>& out) {
  if (p.none() && x.none()) {
    out.push_back(r);
    return;
  }
  std::size_t pivot = 0;
  std::size_t best = 0;
  bool have = false;
  auto consider = [&](std::size_t u) {
    const std::size_t c = (p & adj[u]).count();
    if (!have || c > best) {
      pivot = u;
      best = c;
      have = true;
    }
  };
  p.for_each(consider);
  x.for_each(consider);
  std::vector<std::size_t> todo;
  p.for_each([&](std::size_t v) {
    if (!adj[pivot].test(v)) todo.push_back(v);
  });
  for (std::size_t v : todo) {
    r.push_back(v);
    maximal_cliques(adj, r, p & adj[v], x & adj[v], out);
    r.pop_back();
    p.reset(v);
    x.set(v);
  }
}

}  // namespace

SimplicialComplex edgewise(const SimplicialComplex& complex, int r) {
  if (r < 1) throw InvalidArgument("edgewise: r must be >= 1");
  if (complex.is_void()) return SimplicialComplex::void_complex();
  if (complex.dim() < 0) return SimplicialComplex::empty_complex();
  const std::size_t n = complex.num_vertices();

  // Per facet: local compositions embedded into length-n vectors.
  std::vector<std::vector<std::vector<int>>> local(complex.facets().size());
  std::vector<std::vector<int>> all;
  for (std::size_t fi = 0; fi < complex.facets().size(); ++fi) {
    const Face& g = complex.facets()[fi];
    for (const auto& c : all_compositions(r, g.size())) {
      std::vector<int> full(n, 0);
      for (std::size_t k = 0; k < g.size(); ++k) full[g[k]] = c[k];
      local[fi].push_back(full);
      all.push_back(std::move(full));
    }
  }
  std::sort(all.begin(), all.end(), std::greater<>());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  const std::size_t nv = all.size();
  if (nv > std::numeric_limits<Vertex>::max()) throw GateExceeded("edgewise: too many vertices");
  auto id_of = [&](const std::vector<int>& a) {
    auto it = std::lower_bound(all.begin(), all.end(), a, std::greater<>());
    return static_cast<Vertex>(it - all.begin());
  };

  std::vector<Face> facets;
  for (const auto& verts : local) {
    const std::size_t m = verts.size();
    std::vector<Bitset> adj(m, Bitset(m));
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = a + 1; b < m; ++b) {
        if (edgewise_compatible(verts[a], verts[b])) {
          adj[a].set(b);
          adj[b].set(a);
        }
      }
    }
    Bitset p(m);
    for (std::size_t a = 0; a < m; ++a) p.set(a);
    std::vector<std::vector<std::size_t>> cliques;
    std::vector<std::size_t> cur;
    maximal_cliques(adj, cur, p, Bitset(m), cliques);
    for (const auto& c : cliques) {
      std::vector<Vertex> ids;
      for (std::size_t i : c) ids.push_back(id_of(verts[i]));
      facets.emplace_back(std::move(ids));
    }
  }

  std::vector<Label> labels;
  labels.reserve(nv);
  for (auto& a : all) labels.emplace_back(LatticeLabel{std::move(a)});
  return SimplicialComplex::from_facets(std::move(facets), nv).with_labels(std::move(labels));
}

// ---------------------------------------------------------------------------
// Interior faces

namespace {

bool interior_in(const SimplicialComplex& boundary, const Face& face) {
  if (boundary.contains(face)) return false;
  const std::size_t k = face.size();
  if (k > 20) throw GateExceeded("interior_face_check: face too large");
  std::vector<Vertex> subset;
  for (std::uint32_t mask = 1; mask + 1 < (1u << k); ++mask) {
    subset.clear();
    for (std::size_t b = 0; b < k; ++b) {
      if (mask >> b & 1) subset.push_back(face[b]);
    }
    if (!boundary.contains(subset)) return false;
  }
  return true;
}

}  // namespace

bool interior_face_check(const SimplicialComplex& sub, const Face& face) {
  if (!sub.contains(face)) throw InvalidArgument("interior_face_check: face is not in the complex");
  return interior_in(boundary_complex(sub), face);
}

InteriorWitness interior_face_witness(int d, int r, int s) {
  if (d < 2 || r < d || s < 1 || s > d - 1) {
    throw InvalidArgument("interior_face_witness: need d >= 2, r >= d, 1 <= s <= d-1");
  }
  SimplicialComplex sub = edgewise(simplex(d - 1), r);
  const SimplicialComplex boundary = boundary_complex(sub);
  const auto rest = static_cast<std::size_t>(d - s);

  // P = {0, ..., s-1}; v runs over strictly positive compositions of r-1 on the rest.
  for (const auto& shifted : all_compositions(r - 1 - static_cast<int>(rest), rest)) {
    std::vector<Vertex> ids;
    bool ok = true;
    for (int p = 0; p < s && ok; ++p) {
      std::vector<int> a(static_cast<std::size_t>(d), 0);
      a[static_cast<std::size_t>(p)] = 1;
      for (std::size_t k = 0; k < rest; ++k) a[static_cast<std::size_t>(s) + k] = shifted[k] + 1;
      const auto id = sub.find_label(LatticeLabel{a});
      if (!id) ok = false;
      else ids.push_back(*id);
    }
    if (!ok) continue;
    Face face(std::move(ids));
    if (sub.contains(face) && interior_in(boundary, face)) return {sub, face};
  }

  // Fallback: first interior face of the right size in canonical order.
  const auto& list = sub.faces().of_dim(s - 1);
  for (std::size_t i = 0; i < list.size(); ++i) {
    Face face = list.face(i);
    if (interior_in(boundary, face)) return {sub, face};
  }
  throw InternalError("interior_face_witness: no interior face found");
}

}  // namespace sdbetti
