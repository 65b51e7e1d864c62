#pragma once

// Barycentric and edgewise subdivision.

#include <cstdint>
#include <vector>

#include "sdbetti/complex.hpp"

namespace sdbetti {

/// A vertex of an edgewise subdivision: composition a of r (zeros allowed)
/// together with its partial sums i(a)_k = a_0 + ... + a_k.
struct EdgewiseVertex {
  std::vector<int> composition;
  std::vector<int> partial_sums;

  explicit EdgewiseVertex(std::vector<int> a);
  [[nodiscard]] int r() const noexcept { return partial_sums.empty() ? 0 : partial_sums.back(); }
};

/// Pairwise condition of the edgewise subdivision: the partial sums of a - b
/// are all in {0, 1} or all in {-1, 0}.
bool edgewise_compatible(const std::vector<int>& a, const std::vector<int>& b);

/// Order complex of the nonempty faces. Vertex k carries a SetLabel with the
/// face it represents; vertices are ordered by dimension, then lexicographically.
SimplicialComplex barycentric(const SimplicialComplex& complex);

/// Face count of sd(Δ) predicted from f(Δ) (total, including the empty face).
/// Saturates at UINT64_MAX.
std::uint64_t predicted_sd_face_count(const FVector& f);

/// r-fold barycentric subdivision; throws GateExceeded if a round would
/// exceed kFaceGate faces.
SimplicialComplex barycentric_iter(const SimplicialComplex& complex, int r);

/// r-th edgewise subdivision. Vertices carry LatticeLabels (length n, sum r)
/// ordered by decreasing lexicographic order, so r = 1 reproduces Δ.
SimplicialComplex edgewise(const SimplicialComplex& complex, int r);

/// F is interior to the pure complex: F is not in the boundary complex while
/// every proper nonempty subset of F is. Throws if F is not a face.
bool interior_face_check(const SimplicialComplex& sub, const Face& face);

struct InteriorWitness {
  SimplicialComplex complex;  // edgewise(simplex(d-1), r)
  Face face;
};

/// An s-vertex interior face of the r-th edgewise subdivision of the
/// (d-1)-simplex. Candidates {e_p + v : p in P} (|P| = s, v a strictly
/// positive composition of r-1 on the remaining coordinates) are validated;
/// an exhaustive search is the fallback. Requires r >= d and 1 <= s <= d-1.
InteriorWitness interior_face_witness(int d, int r, int s);

}  // namespace sdbetti
