#pragma once

// Reduced simplicial homology with field coefficients.
//
// Orientation: faces are sorted ascending and the boundary of
// (v_0, ..., v_k) is sum_i (-1)^i (v_0, ..., v̂_i, ..., v_k). The map from
// vertices to the empty face (augmentation) is included, so homology is
// reduced and {∅} has b̃_{-1} = 1.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "sdbetti/complex.hpp"
#include "sdbetti/field.hpp"
#include "sdbetti/linalg.hpp"

namespace sdbetti {

/// ∂_k : C_k -> C_{k-1}. Rows are (k-1)-faces, columns k-faces, both in the
/// canonical face order of the complex.
struct BoundaryMatrix {
  int k = 0;
  SparseMatrix matrix;
};

/// Defined for -1 <= k <= dim + 1 (zero-sized outside the face range).
BoundaryMatrix boundary_matrix(const SimplicialComplex& complex, int k);

std::size_t rank_exact(const BoundaryMatrix& m, const FieldSpec& field);

/// b̃_{-1}, ..., b̃_{dim}. Empty for the void complex.
class ReducedBetti {
 public:
  ReducedBetti() = default;
  explicit ReducedBetti(std::vector<std::uint64_t> values) : values_(std::move(values)) {}

  /// b̃_k; zero outside the stored range.
  [[nodiscard]] std::uint64_t operator[](int k) const noexcept;
  [[nodiscard]] const std::vector<std::uint64_t>& values() const noexcept { return values_; }
  [[nodiscard]] bool is_zero() const noexcept;
  [[nodiscard]] std::int64_t euler_characteristic() const noexcept;

  friend bool operator==(const ReducedBetti&, const ReducedBetti&) = default;

 private:
  std::vector<std::uint64_t> values_;
};

ReducedBetti reduced_betti(const SimplicialComplex& complex, const FieldSpec& field);

/// A top-dimensional cycle: the faces with nonzero coefficient, in canonical
/// order, with their coefficients (residues 0..p-1 over GF(p)).
struct CycleVector {
  FieldSpec field;
  std::vector<Face> support;
  std::vector<mpq_class> coefficients;
};

/// Kernel basis of ∂_{dim}. Every top cycle is a homology class since there
/// are no boundaries in the top dimension.
std::vector<CycleVector> top_cycle_space(const SimplicialComplex& complex, const FieldSpec& field);

/// ∂ applied to the chain is zero.
bool is_cycle(const SimplicialComplex& complex, const CycleVector& cycle);

}  // namespace sdbetti
