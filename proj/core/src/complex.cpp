#include "sdbetti/complex.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "sdbetti/error.hpp"

namespace sdbetti {

// ---------------------------------------------------------------------------
// Face

Face::Face(std::initializer_list<Vertex> vertices) : Face(std::vector<Vertex>(vertices)) {}

Face::Face(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw InvalidArgument("face contains a repeated vertex");
  }
}

Face Face::from_sorted(std::vector<Vertex> vertices) noexcept {
  Face f;
  f.vertices_ = std::move(vertices);
  return f;
}

bool Face::contains(Vertex v) const noexcept {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Face::is_subset_of(const Face& other) const noexcept {
  return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                       vertices_.end());
}

Face Face::without(std::size_t position) const {
  std::vector<Vertex> rest;
  rest.reserve(vertices_.size() - 1);
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i != position) rest.push_back(vertices_[i]);
  }
  return from_sorted(std::move(rest));
}

std::size_t FaceHash::operator()(const Face& f) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Vertex v : f) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h ^ f.size();
}

// ---------------------------------------------------------------------------
// Labels and f-vectors

namespace {

template <typename T>
std::string join_ints(const std::vector<T>& xs, char open, char close) {
  std::ostringstream os;
  os << open;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << ',';
    os << xs[i];
  }
  os << close;
  return os.str();
}

}  // namespace

std::string to_string(const Label& label) {
  return std::visit(
      [](const auto& l) -> std::string {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return "";
        } else if constexpr (std::is_same_v<T, SetLabel>) {
          return join_ints(l.members, '{', '}');
        } else if constexpr (std::is_same_v<T, LatticeLabel>) {
          return join_ints(l.coords, '(', ')');
        } else {
          return l.text;
        }
      },
      label);
}

FVector::FVector(std::vector<std::uint64_t> entries) : entries_(std::move(entries)) {}

std::uint64_t FVector::at(int k) const noexcept {
  const int idx = k + 1;
  if (idx < 0 || idx >= static_cast<int>(entries_.size())) return 0;
  return entries_[static_cast<std::size_t>(idx)];
}

std::int64_t FVector::reduced_euler_characteristic() const noexcept {
  std::int64_t chi = 0;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    // entries_[i] is f_{i-1}; sign (-1)^{i-1}
    const auto v = static_cast<std::int64_t>(entries_[i]);
    chi += (i % 2 == 1) ? v : -v;
  }
  return chi;
}

std::int64_t FVector::euler_characteristic() const noexcept {
  return reduced_euler_characteristic() + static_cast<std::int64_t>(at(-1));
}

std::string to_string(const FVector& f) { return join_ints(f.entries(), '(', ')'); }

// ---------------------------------------------------------------------------
// FaceList / FaceTable

FaceList::FaceList(std::size_t face_size, std::vector<Vertex> flat, std::size_t count)
    : face_size_(face_size), count_(count), data_(std::move(flat)) {}

Face FaceList::face(std::size_t i) const {
  auto s = (*this)[i];
  return Face::from_sorted(std::vector<Vertex>(s.begin(), s.end()));
}

std::optional<std::size_t> FaceList::find(std::span<const Vertex> face) const noexcept {
  if (face.size() != face_size_ || count_ == 0) return std::nullopt;
  if (face_size_ == 0) return std::size_t{0};
  std::size_t lo = 0;
  std::size_t hi = count_;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    auto m = (*this)[mid];
    if (std::lexicographical_compare(m.begin(), m.end(), face.begin(), face.end())) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo < count_ && std::equal(face.begin(), face.end(), (*this)[lo].begin())) return lo;
  return std::nullopt;
}

const FaceList& FaceTable::of_dim(int k) const {
  if (k < -1 || k > top_dim()) throw InvalidArgument("face dimension out of range");
  return by_dim_[static_cast<std::size_t>(k + 1)];
}

std::size_t FaceTable::count(int k) const noexcept {
  if (k < -1 || k > top_dim()) return 0;
  return by_dim_[static_cast<std::size_t>(k + 1)].size();
}

std::size_t FaceTable::total() const noexcept {
  std::size_t t = 0;
  for (const auto& l : by_dim_) t += l.size();
  return t;
}

namespace detail {

struct FaceCache {
  std::once_flag once;
  FaceTable table;
};

namespace {

FaceList sorted_unique(std::size_t face_size, std::vector<Vertex>& flat) {
  const std::size_t m = flat.size() / face_size;
  std::vector<std::uint32_t> order(m);
  std::iota(order.begin(), order.end(), 0u);
  auto at = [&](std::uint32_t i) { return flat.data() + std::size_t{i} * face_size; };
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return std::lexicographical_compare(at(a), at(a) + face_size, at(b), at(b) + face_size);
  });
  auto last = std::unique(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return std::equal(at(a), at(a) + face_size, at(b));
  });
  order.erase(last, order.end());
  std::vector<Vertex> out;
  out.reserve(order.size() * face_size);
  for (auto i : order) out.insert(out.end(), at(i), at(i) + face_size);
  return FaceList(face_size, std::move(out), order.size());
}

FaceTable build_face_table(const std::vector<Face>& facets) {
  if (facets.empty()) return FaceTable{};
  std::size_t max_size = 0;
  double generated = 0;
  for (const auto& f : facets) {
    max_size = std::max(max_size, f.size());
    generated += std::ldexp(1.0, static_cast<int>(f.size()));
  }
  if (max_size >= 31 || generated > static_cast<double>(kFaceGate) * 8) {
    throw GateExceeded("complex has too many faces to enumerate");
  }
  std::vector<std::vector<Vertex>> flat(max_size + 1);
  for (const auto& f : facets) {
    const std::uint32_t k = static_cast<std::uint32_t>(f.size());
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
      auto& bucket = flat[static_cast<std::size_t>(std::popcount(mask))];
      for (std::uint32_t b = 0; b < k; ++b) {
        if (mask & (1u << b)) bucket.push_back(f[b]);
      }
    }
  }
  std::vector<FaceList> by_dim;
  by_dim.reserve(max_size + 1);
  by_dim.emplace_back(0, std::vector<Vertex>{}, 1);
  std::size_t total = 1;
  for (std::size_t s = 1; s <= max_size; ++s) {
    by_dim.push_back(sorted_unique(s, flat[s]));
    flat[s].clear();
    flat[s].shrink_to_fit();
    total += by_dim.back().size();
    if (total > kFaceGate) throw GateExceeded("complex exceeds the face gate");
  }
  return FaceTable(std::move(by_dim));
}

}  // namespace
}  // namespace detail

// ---------------------------------------------------------------------------
// SimplicialComplex

SimplicialComplex::SimplicialComplex() : cache_(std::make_shared<detail::FaceCache>()) {}

SimplicialComplex::SimplicialComplex(std::size_t n, std::vector<Face> canonical_facets)
    : n_(n), facets_(std::move(canonical_facets)), cache_(std::make_shared<detail::FaceCache>()) {
  dim_ = -2;
  for (const auto& f : facets_) dim_ = std::max(dim_, f.dim());
}

namespace {

// Removes facets contained in other facets (and duplicates); sorts the rest.
std::vector<Face> reduce_to_antichain(std::vector<Face> faces) {
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());

  std::vector<Face> kept;
  std::unordered_map<Vertex, std::vector<std::size_t>> containing;
  for (auto& f : faces) {
    bool dominated = false;
    if (f.empty()) {
      dominated = !kept.empty();
    } else {
      const std::vector<std::size_t>* shortest = nullptr;
      for (Vertex v : f) {
        auto it = containing.find(v);
        if (it == containing.end()) {
          shortest = nullptr;
          break;
        }
        if (!shortest || it->second.size() < shortest->size()) shortest = &it->second;
      }
      if (shortest) {
        for (std::size_t idx : *shortest) {
          if (f.is_subset_of(kept[idx])) {
            dominated = true;
            break;
          }
        }
      }
    }
    if (dominated) continue;
    for (Vertex v : f) containing[v].push_back(kept.size());
    kept.push_back(std::move(f));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::vector<Vertex>> facets,
                                                 std::size_t n) {
  std::vector<Face> faces;
  faces.reserve(facets.size());
  for (auto& f : facets) faces.emplace_back(std::move(f));
  return from_facets(std::move(faces), n);
}

SimplicialComplex SimplicialComplex::from_facets(
    std::initializer_list<std::initializer_list<Vertex>> facets, std::size_t n) {
  std::vector<Face> faces;
  faces.reserve(facets.size());
  for (const auto& f : facets) faces.emplace_back(std::vector<Vertex>(f));
  return from_facets(std::move(faces), n);
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<Face> facets, std::size_t n) {
  for (const auto& f : facets) {
    for (Vertex v : f) {
      if (v >= n) {
        throw InvalidArgument("vertex id " + std::to_string(v) + " out of range for n = " +
                              std::to_string(n));
      }
    }
  }
  return SimplicialComplex(n, reduce_to_antichain(std::move(facets)));
}

SimplicialComplex SimplicialComplex::void_complex(std::size_t n) {
  return SimplicialComplex(n, {});
}

SimplicialComplex SimplicialComplex::empty_complex(std::size_t n) {
  return SimplicialComplex(n, {Face{}});
}

bool SimplicialComplex::is_pure() const noexcept {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Face& f) { return f.dim() == dim_; });
}

bool SimplicialComplex::is_full_simplex() const noexcept {
  return facets_.size() == 1 && facets_.front().size() == n_;
}

const FaceTable& SimplicialComplex::faces() const {
  std::call_once(cache_->once, [&] { cache_->table = detail::build_face_table(facets_); });
  return cache_->table;
}

FVector SimplicialComplex::f_vector() const {
  const auto& t = faces();
  std::vector<std::uint64_t> f;
  for (int k = -1; k <= t.top_dim(); ++k) f.push_back(t.count(k));
  return FVector(std::move(f));
}

bool SimplicialComplex::contains(std::span<const Vertex> face) const {
  const auto& t = faces();
  const int k = static_cast<int>(face.size()) - 1;
  if (k > t.top_dim()) return false;
  return t.of_dim(k).find(face).has_value();
}

std::vector<Vertex> SimplicialComplex::vertex_faces() const {
  std::vector<Vertex> out;
  if (dim_ < 0) return out;
  const auto& l = faces().of_dim(0);
  out.reserve(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) out.push_back(l[i][0]);
  return out;
}

const Label& SimplicialComplex::label(Vertex v) const {
  static const Label kNone{};
  if (labels_.empty()) return kNone;
  return labels_.at(v);
}

std::optional<Vertex> SimplicialComplex::find_label(const Label& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<Vertex>(i);
  }
  return std::nullopt;
}

SimplicialComplex SimplicialComplex::with_labels(std::vector<Label> labels) const {
  if (!labels.empty()) {
    if (labels.size() != n_) throw InvalidArgument("label count differs from vertex count");
    std::vector<const Label*> sorted;
    for (const auto& l : labels) {
      if (!std::holds_alternative<std::monostate>(l)) sorted.push_back(&l);
    }
    std::sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) { return *a < *b; });
    for (std::size_t i = 1; i < sorted.size(); ++i) {
      if (*sorted[i] == *sorted[i - 1]) throw InvalidArgument("labels are not pairwise distinct");
    }
  }
  SimplicialComplex copy = *this;
  copy.labels_ = std::move(labels);
  return copy;
}

SimplicialComplex SimplicialComplex::with_parent_vertices(std::vector<Vertex> parent) const {
  if (!parent.empty() && parent.size() != n_) {
    throw InvalidArgument("parent map size differs from vertex count");
  }
  SimplicialComplex copy = *this;
  copy.parent_ = std::move(parent);
  return copy;
}

// ---------------------------------------------------------------------------
// Derived complexes

namespace {

std::vector<Label> carry_labels(const SimplicialComplex& src, const std::vector<Vertex>& ids) {
  if (!src.has_labels()) return {};
  std::vector<Label> out;
  out.reserve(ids.size());
  for (Vertex v : ids) out.push_back(src.label(v));
  return out;
}

}  // namespace

SimplicialComplex induced(const SimplicialComplex& complex, std::span<const Vertex> subset) {
  std::vector<Vertex> w(subset.begin(), subset.end());
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  std::vector<std::int64_t> local(complex.num_vertices(), -1);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] >= complex.num_vertices()) throw InvalidArgument("induced: vertex out of range");
    local[w[i]] = static_cast<std::int64_t>(i);
  }
  std::vector<Face> pieces;
  pieces.reserve(complex.facets().size());
  for (const auto& f : complex.facets()) {
    std::vector<Vertex> kept;
    for (Vertex v : f) {
      if (local[v] >= 0) kept.push_back(static_cast<Vertex>(local[v]));
    }
    pieces.push_back(Face::from_sorted(std::move(kept)));
  }
  auto out = SimplicialComplex::from_facets(std::move(pieces), w.size());
  return out.with_labels(carry_labels(complex, w)).with_parent_vertices(std::move(w));
}

SimplicialComplex link(const SimplicialComplex& complex, const Face& face) {
  if (!complex.contains(face)) throw InvalidArgument("link: face is not in the complex");
  if (face.empty()) return complex;
  std::vector<Face> pieces;
  for (const auto& g : complex.facets()) {
    if (!face.is_subset_of(g)) continue;
    std::vector<Vertex> rest;
    std::set_difference(g.begin(), g.end(), face.begin(), face.end(), std::back_inserter(rest));
    pieces.push_back(Face::from_sorted(std::move(rest)));
  }
  std::vector<Vertex> used;
  for (const auto& p : pieces) used.insert(used.end(), p.begin(), p.end());
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  std::unordered_map<Vertex, Vertex> local;
  for (std::size_t i = 0; i < used.size(); ++i) local[used[i]] = static_cast<Vertex>(i);
  for (auto& p : pieces) {
    std::vector<Vertex> mapped;
    for (Vertex v : p) mapped.push_back(local[v]);
    p = Face::from_sorted(std::move(mapped));
  }
  auto out = SimplicialComplex::from_facets(std::move(pieces), used.size());
  return out.with_labels(carry_labels(complex, used)).with_parent_vertices(std::move(used));
}

SimplicialComplex star(const SimplicialComplex& complex, const Face& face) {
  if (!complex.contains(face)) throw InvalidArgument("star: face is not in the complex");
  std::vector<Face> pieces;
  for (const auto& g : complex.facets()) {
    if (face.is_subset_of(g)) pieces.push_back(g);
  }
  return SimplicialComplex::from_facets(std::move(pieces), complex.num_vertices())
      .with_labels(complex.labels());
}

std::vector<Face> minimal_non_faces(const SimplicialComplex& complex) {
  std::vector<Face> out;
  const std::size_t n = complex.num_vertices();
  if (complex.is_void()) {
    // Every ground set is a non-face; only ∅ is minimal.
    out.emplace_back();
    return out;
  }
  const auto& table = complex.faces();
  std::vector<Vertex> candidate;
  std::vector<Vertex> probe;
  for (int k = -1; k <= table.top_dim(); ++k) {
    const auto& list = table.of_dim(k);
    for (std::size_t i = 0; i < list.size(); ++i) {
      auto f = list[i];
      const Vertex start = f.empty() ? 0 : f.back() + 1;
      for (Vertex v = start; v < n; ++v) {
        candidate.assign(f.begin(), f.end());
        candidate.push_back(v);
        if (complex.contains(candidate)) continue;
        bool minimal = true;
        for (std::size_t drop = 0; drop + 1 < candidate.size() && minimal; ++drop) {
          probe.clear();
          for (std::size_t t = 0; t < candidate.size(); ++t) {
            if (t != drop) probe.push_back(candidate[t]);
          }
          minimal = complex.contains(probe);
        }
        if (minimal) out.push_back(Face::from_sorted(candidate));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t max_minimal_non_face_size(const SimplicialComplex& complex) {
  std::size_t best = 0;
  for (const auto& f : minimal_non_faces(complex)) best = std::max(best, f.size());
  return best;
}

bool is_flag(const SimplicialComplex& complex) {
  if (complex.is_full_simplex()) return true;
  const auto nf = minimal_non_faces(complex);
  return std::all_of(nf.begin(), nf.end(), [](const Face& f) { return f.size() == 2; });
}

SimplicialComplex boundary_complex(const SimplicialComplex& complex) {
  if (!complex.is_pure()) throw InvalidArgument("boundary_complex: complex is not pure");
  const std::size_t n = complex.num_vertices();
  if (complex.dim() < 0) return SimplicialComplex::void_complex(n).with_labels(complex.labels());
  std::unordered_map<Face, int, FaceHash> count;
  for (const auto& g : complex.facets()) {
    for (std::size_t i = 0; i < g.size(); ++i) ++count[g.without(i)];
  }
  std::vector<Face> ridges;
  for (auto& [f, c] : count) {
    if (c == 1) ridges.push_back(f);
  }
  return SimplicialComplex::from_facets(std::move(ridges), n).with_labels(complex.labels());
}

SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b) {
  const auto shift = static_cast<Vertex>(a.num_vertices());
  std::vector<Face> facets;
  for (const auto& f : a.facets()) facets.push_back(f);
  for (const auto& f : b.facets()) {
    std::vector<Vertex> v;
    for (Vertex x : f) v.push_back(x + shift);
    facets.push_back(Face::from_sorted(std::move(v)));
  }
  return SimplicialComplex::from_facets(std::move(facets), a.num_vertices() + b.num_vertices());
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  const auto shift = static_cast<Vertex>(a.num_vertices());
  std::vector<Face> facets;
  for (const auto& f : a.facets()) {
    for (const auto& g : b.facets()) {
      std::vector<Vertex> v(f.begin(), f.end());
      for (Vertex x : g) v.push_back(x + shift);
      facets.push_back(Face::from_sorted(std::move(v)));
    }
  }
  return SimplicialComplex::from_facets(std::move(facets), a.num_vertices() + b.num_vertices());
}

SimplicialComplex cone(const SimplicialComplex& complex) {
  const auto apex = static_cast<Vertex>(complex.num_vertices());
  std::vector<Face> facets;
  for (const auto& f : complex.facets()) {
    std::vector<Vertex> v(f.begin(), f.end());
    v.push_back(apex);
    facets.push_back(Face::from_sorted(std::move(v)));
  }
  return SimplicialComplex::from_facets(std::move(facets), complex.num_vertices() + 1);
}

}  // namespace sdbetti
