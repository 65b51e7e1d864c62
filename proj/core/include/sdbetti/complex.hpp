#pragma once

// Finite abstract simplicial complexes stored by their facets.
//
// A complex lives on the ambient vertex set {0, ..., n-1}. Vertices that are
// not faces ("ghost" vertices) are allowed and behave as variables of the
// Stanley-Reisner ring that lie in the ideal. Two degenerate complexes are
// distinguished: the void complex (no faces at all) and the empty complex
// {∅}, whose only face is the empty set.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace sdbetti {

using Vertex = std::uint32_t;

/// A face: strictly increasing vertex sequence. The empty face is allowed.
class Face {
 public:
  Face() = default;
  Face(std::initializer_list<Vertex> vertices);
  /// Sorts the input; throws InvalidArgument on a repeated vertex.
  explicit Face(std::vector<Vertex> vertices);

  /// No validation; the caller guarantees strictly increasing input.
  static Face from_sorted(std::vector<Vertex> vertices) noexcept;

  [[nodiscard]] std::size_t size() const noexcept { return vertices_.size(); }
  [[nodiscard]] bool empty() const noexcept { return vertices_.empty(); }
  [[nodiscard]] int dim() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
  [[nodiscard]] const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  [[nodiscard]] std::span<const Vertex> span() const noexcept { return vertices_; }
  [[nodiscard]] Vertex operator[](std::size_t i) const noexcept { return vertices_[i]; }
  [[nodiscard]] auto begin() const noexcept { return vertices_.begin(); }
  [[nodiscard]] auto end() const noexcept { return vertices_.end(); }

  [[nodiscard]] bool contains(Vertex v) const noexcept;
  [[nodiscard]] bool is_subset_of(const Face& other) const noexcept;
  /// The face with the vertex at `position` removed.
  [[nodiscard]] Face without(std::size_t position) const;

  friend auto operator<=>(const Face&, const Face&) = default;
  friend bool operator==(const Face&, const Face&) = default;

 private:
  std::vector<Vertex> vertices_;
};

struct FaceHash {
  std::size_t operator()(const Face& f) const noexcept;
};

/// Vertex of a barycentric subdivision: the face of the parent it stands for.
struct SetLabel {
  std::vector<Vertex> members;
  friend auto operator<=>(const SetLabel&, const SetLabel&) = default;
};

/// Vertex of an edgewise subdivision: a composition a with sum r.
struct LatticeLabel {
  std::vector<int> coords;
  friend auto operator<=>(const LatticeLabel&, const LatticeLabel&) = default;
};

struct PlainLabel {
  std::string text;
  friend auto operator<=>(const PlainLabel&, const PlainLabel&) = default;
};

using Label = std::variant<std::monostate, SetLabel, LatticeLabel, PlainLabel>;

std::string to_string(const Label& label);

/// (f_{-1}, ..., f_{d-1}). Empty for the void complex.
class FVector {
 public:
  FVector() = default;
  explicit FVector(std::vector<std::uint64_t> entries);

  /// dim + 1.
  [[nodiscard]] int d() const noexcept { return static_cast<int>(entries_.size()) - 1; }
  /// f_k for -1 <= k <= d-1; zero outside that range.
  [[nodiscard]] std::uint64_t at(int k) const noexcept;
  [[nodiscard]] const std::vector<std::uint64_t>& entries() const noexcept { return entries_; }

  /// Sum_{k >= 0} (-1)^k f_k.
  [[nodiscard]] std::int64_t euler_characteristic() const noexcept;
  /// Sum_{k >= -1} (-1)^k f_k.
  [[nodiscard]] std::int64_t reduced_euler_characteristic() const noexcept;

  friend bool operator==(const FVector&, const FVector&) = default;

 private:
  std::vector<std::uint64_t> entries_;
};

std::string to_string(const FVector& f);

/// Faces of one dimension, stored flat and sorted lexicographically.
class FaceList {
 public:
  FaceList() = default;
  FaceList(std::size_t face_size, std::vector<Vertex> flat, std::size_t count);

  [[nodiscard]] std::size_t size() const noexcept { return count_; }
  [[nodiscard]] std::size_t face_size() const noexcept { return face_size_; }
  [[nodiscard]] std::span<const Vertex> operator[](std::size_t i) const noexcept {
    return {data_.data() + i * face_size_, face_size_};
  }
  [[nodiscard]] Face face(std::size_t i) const;
  /// Index of `face` in this list, if present.
  [[nodiscard]] std::optional<std::size_t> find(std::span<const Vertex> face) const noexcept;

 private:
  std::size_t face_size_ = 0;
  std::size_t count_ = 0;
  std::vector<Vertex> data_;
};

/// All faces of a complex, grouped by dimension -1, 0, ..., dim.
class FaceTable {
 public:
  FaceTable() = default;
  explicit FaceTable(std::vector<FaceList> by_dim) : by_dim_(std::move(by_dim)) {}

  /// Highest dimension present; -2 for the void complex.
  [[nodiscard]] int top_dim() const noexcept { return static_cast<int>(by_dim_.size()) - 2; }
  [[nodiscard]] const FaceList& of_dim(int k) const;
  [[nodiscard]] std::size_t count(int k) const noexcept;
  [[nodiscard]] std::size_t total() const noexcept;

 private:
  std::vector<FaceList> by_dim_;
};

/// Upper limit on the number of faces a complex may materialize.
inline constexpr std::size_t kFaceGate = std::size_t{1} << 24;

namespace detail {
struct FaceCache;
}

class SimplicialComplex {
 public:
  /// The void complex on zero vertices.
  SimplicialComplex();

  /// Downward closure of `facets` on ground set {0..n-1}. Dominated facets are
  /// dropped and the remaining facets are sorted lexicographically.
  static SimplicialComplex from_facets(std::vector<std::vector<Vertex>> facets, std::size_t n);
  static SimplicialComplex from_facets(std::vector<Face> facets, std::size_t n);
  static SimplicialComplex from_facets(std::initializer_list<std::initializer_list<Vertex>> facets,
                                       std::size_t n);
  static SimplicialComplex void_complex(std::size_t n = 0);
  /// {∅} on n (ghost) vertices.
  static SimplicialComplex empty_complex(std::size_t n = 0);

  [[nodiscard]] std::size_t num_vertices() const noexcept { return n_; }
  [[nodiscard]] const std::vector<Face>& facets() const noexcept { return facets_; }
  /// -1 for {∅}, -2 for the void complex.
  [[nodiscard]] int dim() const noexcept { return dim_; }
  [[nodiscard]] bool is_void() const noexcept { return facets_.empty(); }
  [[nodiscard]] bool is_pure() const noexcept;
  /// True iff the complex is 2^V for its whole ground set V.
  [[nodiscard]] bool is_full_simplex() const noexcept;

  /// Lazily built; throws GateExceeded above kFaceGate faces.
  [[nodiscard]] const FaceTable& faces() const;
  [[nodiscard]] FVector f_vector() const;
  [[nodiscard]] bool contains(std::span<const Vertex> face) const;
  [[nodiscard]] bool contains(const Face& face) const { return contains(face.span()); }
  /// Vertices v with {v} a face.
  [[nodiscard]] std::vector<Vertex> vertex_faces() const;

  [[nodiscard]] bool has_labels() const noexcept { return !labels_.empty(); }
  [[nodiscard]] const std::vector<Label>& labels() const noexcept { return labels_; }
  [[nodiscard]] const Label& label(Vertex v) const;
  [[nodiscard]] std::optional<Vertex> find_label(const Label& label) const;
  /// Copy carrying `labels` (size n, pairwise distinct) or no labels if empty.
  [[nodiscard]] SimplicialComplex with_labels(std::vector<Label> labels) const;

  /// For complexes produced by induced()/link(): id of each vertex in the source.
  [[nodiscard]] const std::vector<Vertex>& parent_vertices() const noexcept { return parent_; }
  [[nodiscard]] SimplicialComplex with_parent_vertices(std::vector<Vertex> parent) const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.n_ == b.n_ && a.facets_ == b.facets_;
  }

 private:
  SimplicialComplex(std::size_t n, std::vector<Face> canonical_facets);

  std::size_t n_ = 0;
  int dim_ = -2;
  std::vector<Face> facets_;
  std::vector<Label> labels_;
  std::vector<Vertex> parent_;
  std::shared_ptr<detail::FaceCache> cache_;
};

/// Δ_W = {F ∈ Δ : F ⊆ W}, relabeled onto 0..|W|-1 (sorted order of W).
SimplicialComplex induced(const SimplicialComplex& complex, std::span<const Vertex> subset);

/// lk(F) = {G : G ∩ F = ∅, G ∪ F ∈ Δ}, relabeled onto the vertices it uses.
/// link(Δ, ∅) returns Δ unchanged. Throws InvalidArgument if F ∉ Δ.
SimplicialComplex link(const SimplicialComplex& complex, const Face& face);

/// 2^F * lk(F) on the ambient vertex set of Δ.
SimplicialComplex star(const SimplicialComplex& complex, const Face& face);

/// Inclusion-minimal subsets of {0..n-1} that are not faces, sorted.
std::vector<Face> minimal_non_faces(const SimplicialComplex& complex);

/// Largest cardinality of a minimal non-face (0 for a full simplex).
std::size_t max_minimal_non_face_size(const SimplicialComplex& complex);

bool is_flag(const SimplicialComplex& complex);

/// Closure of the codimension-one faces lying in exactly one facet. Same
/// ground set and labels as the input. Throws InvalidArgument if not pure.
SimplicialComplex boundary_complex(const SimplicialComplex& complex);

SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);
/// Cone with apex n (a new vertex).
SimplicialComplex cone(const SimplicialComplex& complex);

/// Largest ground set accepted by the isomorphism search.
inline constexpr std::size_t kIsomorphismGate = 64;

/// A vertex bijection phi (phi[v] is the image of v) mapping the faces of `a`
/// onto the faces of `b`, or nullopt. Throws GateExceeded above 64 vertices.
std::optional<std::vector<Vertex>> find_isomorphism(const SimplicialComplex& a,
                                                    const SimplicialComplex& b);
bool is_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b);

}  // namespace sdbetti
