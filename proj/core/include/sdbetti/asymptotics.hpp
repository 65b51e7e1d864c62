#pragma once

// Face numbers of iterated subdivisions and the limiting behaviour of the
// last Betti strand.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "sdbetti/complex.hpp"
#include "sdbetti/field.hpp"
#include "sdbetti/formulas.hpp"
#include "sdbetti/hochster.hpp"
#include "sdbetti/rational_matrix.hpp"

namespace sdbetti {

/// Λ_d, rows and columns indexed by -1..d-1 (matrix index = dimension + 1).
/// Entry (i, j) counts the interior j-faces of sd(Δ_i), so that
/// f(sd Δ) = f(Δ) Λ_d for a (d-1)-dimensional Δ.
struct LambdaMatrix {
  int d = 0;
  QMatrix matrix;
};

/// Built from explicit subdivisions of simplices. Requires 1 <= d <= 8.
LambdaMatrix lambda_matrix(int d);

/// (f_{-1}, ..., f_{d-1}) of sd^r Δ from f(Δ), exactly.
std::vector<mpz_class> f_iterate_sd(const FVector& f, int r);

/// Λ_d = P D P^{-1} with D = diag(0!, 1!, ..., d!). Columns of P are
/// eigenvectors in that order; the two eigenvalue-1 columns form the
/// echelon kernel basis of Λ_d - I, and the last column is e_{d}.
struct EigenData {
  int d = 0;
  QMatrix p;
  QMatrix diagonal;
  QMatrix p_inv;
};

EigenData eigendecompose(const LambdaMatrix& lambda);

/// Coefficients c_{-1..d-1} with f_j(sd^r Δ) / (d!)^r -> c_j, computed as
/// (f P) M P^{-1} where M keeps only the d! eigenspace. Works for any
/// eigenbasis whose d! eigenvector is the last column of P.
std::vector<mpq_class> limit_polynomial(const FVector& f, const EigenData& eigen);

/// p^{-1}_{d-1,2}: lim f_0(sd^r Δ) / ((d!)^r f_{d-1}(Δ)).
mpq_class limit_vertex_constant(int d);

/// f_0 of the r-th edgewise subdivision: Σ_i f_{i-1} C(r-1, i-1).
mpz_class f0_edgewise(const FVector& f, int r);

/// A top-dimensional cycle minimizing its closure's f-vector (compared from
/// f_{d-1} downward, ties broken by the lexicographically smallest support).
struct MinimalCycle {
  FieldSpec field;
  std::vector<Face> support;
  SimplicialComplex closure;  // σ̃ on the ground set of Δ
  FVector f;
};

/// Exhaustive over the top cycle space over GF(p) (GF(2) when `field` is Q,
/// after checking the top Betti numbers over Q and GF(2) agree). Throws
/// InvalidArgument if there is no top homology, GateExceeded if p^k > 2^20.
MinimalCycle minimal_top_cycle(const SimplicialComplex& complex, const FieldSpec& field);

/// 1 - f_{d-1}(σ̃) / f_{d-1}(Δ).
mpq_class last_strand_limit(const SimplicialComplex& complex, const FieldSpec& field);

/// A (d-1)-sphere with c(q-p) facets plus c·p stacked facets on one ridge;
/// its last-strand limit is p/q. Requires d >= 2, 0 <= p < q, c >= 1 and a
/// realizable sphere size (c(q-p) >= 3 for d = 2).
SimplicialComplex build_limit_example(int d, int p, int q, int c);

/// Checks β_{i,i+d}(K[sub]) != 0 on [#V(σ̃ subdivided) - d, pdim] against the
/// full table of sd^r Δ or Δ^{<r>}; zeros below the window are OBSERVED.
VerificationReport verify_last_strand_small_r(const SimplicialComplex& complex, int r,
                                             const FieldSpec& field, const SubdivisionMode& mode,
                                             const HochsterOptions& options = {});

/// N(d): interior vertices of sd^3(Δ_{d-1}). Built explicitly for d <= 4,
/// from the f-vector recursion above that.
std::uint64_t interior_vertex_count_sd3(int d);

struct StrandWindow {
  int j = 0;
  mpz_class begin;
  mpz_class end;
};

/// Nonvanishing windows of the strands 1..d-1 for large r: barycentric needs
/// r >= 3, edgewise r >= 2d. The window ends are pdim + depth + const, and
/// pdim + depth is the vertex count of the subdivision, so no table is needed.
std::vector<StrandWindow> asymptotic_window(const SimplicialComplex& complex,
                                            const SubdivisionMode& mode);

}  // namespace sdbetti
