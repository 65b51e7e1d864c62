#pragma once

// Independent reference computations for the test suites. Nothing here calls
// into the homology or Hochster engines; complexes are read through their
// facet lists only.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "sdbetti/complex.hpp"
#include "sdbetti/field.hpp"

namespace sdbetti::oracle {

using Mask = std::uint32_t;

/// Every face (including the empty one) as a vertex bitmask. n <= 20.
std::set<Mask> face_masks(const SimplicialComplex& complex);

/// Rank of a dense integer matrix over Q (p = 0) or GF(p).
std::size_t dense_rank(std::vector<std::vector<long long>> rows, std::uint32_t p);

/// Reduced Betti numbers b̃_{-1}, ..., b̃_{dim} from dense boundary matrices.
std::vector<std::uint64_t> reduced_betti(const SimplicialComplex& complex, const FieldSpec& field);

struct KoszulTable {
  /// β_{i,i+j} keyed by (i, j), nonzero entries only.
  std::map<std::pair<int, int>, std::uint64_t> entries;
  /// True if every multidegree with an exponent >= 2 had vanishing Koszul homology.
  bool nonsquarefree_vanish = true;
};

/// Graded Betti numbers of K[Δ] as the homology of the Koszul complex
/// K(x_1..x_n; K[Δ]) in each multidegree a ∈ {0,..,max_exponent}^n. n <= 6, or
/// n <= 10 with max_exponent = 1.
KoszulTable koszul_betti(const SimplicialComplex& complex, const FieldSpec& field,
                         int max_exponent = 2);

/// Minimal non-faces by exhaustion over all vertex subsets.
std::vector<Mask> minimal_non_faces(const SimplicialComplex& complex);

/// Stirling numbers of the second kind.
mpz_class stirling2(int n, int k);

/// Random complex on n vertices: `count` random subsets of size 1..max_size
/// plus all singletons.
SimplicialComplex random_complex(std::size_t n, std::size_t count, std::size_t max_size,
                                 std::mt19937_64& rng);

}  // namespace sdbetti::oracle
