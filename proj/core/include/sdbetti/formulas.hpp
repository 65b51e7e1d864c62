#pragma once

// Closed forms for the Betti strands of subdivided simplices, their
// brute-force oracles, and prediction-vs-computation reports.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sdbetti/complex.hpp"
#include "sdbetti/field.hpp"
#include "sdbetti/hochster.hpp"

namespace sdbetti {

// ---------------------------------------------------------------------------
// m_j(d)

/// j if 2j <= d; otherwise 2^{a+2}(c+d-j) - 2d + j where 2j - d = a(d-j) + c,
/// 0 <= c < d-j. Requires 1 <= j <= d-1 and d <= 60.
std::int64_t m_closed(int d, int j);

/// min Σ_ℓ (2^{i_ℓ+2} - 2) - j over nondecreasing (i_1..i_r) with
/// i_1+..+i_r + (r-1) = j-1 and i_1+..+i_r + 2r <= d, by exhaustion.
std::int64_t m_bruteforce(int d, int j);

/// Every nondecreasing sequence admissible for (d, j) in the sense above.
std::vector<std::vector<int>> admissible_sequences(int d, int j);

// ---------------------------------------------------------------------------
// Strand predictions

enum class Claim { Zero, Nonzero, Unknown };

const char* to_string(Claim c) noexcept;

struct StrandPrediction {
  int d = 0;
  int j = 0;
  int pdim = 0;
  std::vector<Claim> claims;  // index i = 0..pdim
  std::string source;

  /// Zero above pdim.
  [[nodiscard]] Claim at(int i) const noexcept;
  [[nodiscard]] std::vector<int> indices(Claim c) const;
};

/// Strand j of K[sd(Δ_{d-1})], 1 <= j <= d-1, pdim = 2^d - d - 1.
StrandPrediction predict_strand_bar(int d, int j);

/// Strand j of K[Δ_{d-1}^{<r>}] with pdim = n_vertices - d. Requires r >= d.
StrandPrediction predict_strand_edgewise(int d, int j, int r, std::size_t n_vertices);

/// t_1 of K[Δ^{<r>}] for r >= 2 from the minimal non-faces of Δ.
int predict_t1_edgewise(const SimplicialComplex& complex, int r);

struct SubdivisionMode {
  enum class Kind { Barycentric, Edgewise };
  Kind kind = Kind::Barycentric;
  int r = 1;

  static SubdivisionMode barycentric(int r = 1) { return {Kind::Barycentric, r}; }
  static SubdivisionMode edgewise(int r) { return {Kind::Edgewise, r}; }
};

struct RegPrediction {
  int value = 0;
  /// False when only the lower bound max(reg K[Δ], r-1) is known.
  bool exact = true;
};

/// reg of K[sd^r Δ] (r >= 1) or K[Δ^{<r>}]. The inexact edgewise branch
/// computes reg K[Δ] with Hochster's formula under `options`.
RegPrediction predict_reg(const SimplicialComplex& complex, const FieldSpec& field,
                          const SubdivisionMode& mode, const HochsterOptions& options = {});

// ---------------------------------------------------------------------------
// Induced spheres in sd(Δ_{d-1})

struct SphereFamily {
  int d = 0;
  int j = 0;
  std::vector<int> sequence;
  /// W_1, ..., W_r: each a list of subsets of {0..d-1}.
  std::vector<std::vector<std::vector<Vertex>>> w;
  /// C(i_1..i_r); empty when r = 1.
  std::vector<std::vector<Vertex>> c;

  [[nodiscard]] std::vector<std::vector<Vertex>> w_union() const;
};

/// Throws InvalidArgument if the sequence violates the admissibility constraints.
SphereFamily sphere_family(int d, const std::vector<int>& sequence);

/// Vertex ids in `sd` (labelled by barycentric()) of the given subsets.
std::vector<Vertex> vertices_of(const SimplicialComplex& sd,
                                const std::vector<std::vector<Vertex>>& subsets);

/// Perturbation inequalities behind the upper-half strand bounds. With
/// T = (2^{i_r+2}-2) 2^{i_2+..+i_{r-1}+2r-4} and S = Σ (2^{i_ℓ+2}-2):
///   i_1 = 0:           T + S >= 2^{j+1} - 2
///   i_1 >= 1, r >= 2:  T + S >= Σ (2^{j_ℓ+2}-2), j_1 = i_1-1, j_2 = i_2+1.
/// Throws InvalidArgument unless d >= 3, d/2 < j <= d-1 and the sequence is
/// nondecreasing, admissible and (for i_1 >= 1) has r >= 2.
bool appendix_inequalities(int d, int j, const std::vector<int>& sequence);

/// True if (d, j, sequence) satisfies the hypotheses of appendix_inequalities.
bool appendix_hypotheses_hold(int d, int j, const std::vector<int>& sequence);

// ---------------------------------------------------------------------------
// Reports

enum class CheckStatus { Pass, Fail, Observed };

const char* to_string(CheckStatus s) noexcept;

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

struct VerificationReport {
  std::string suite;
  std::vector<Check> checks;

  void add(std::string name, CheckStatus status, std::string detail = {});
  void expect(std::string name, bool ok, std::string detail = {});
  void append(const VerificationReport& other);
  [[nodiscard]] bool ok() const noexcept;
  [[nodiscard]] std::size_t count(CheckStatus s) const noexcept;
};

/// Compares a complete table against predictions: Zero/Nonzero claims give
/// PASS or FAIL, Unknown cells give OBSERVED with the computed value.
VerificationReport compare_strands(const BettiTable& table,
                                   const std::vector<StrandPrediction>& predictions);

/// Full Hochster table of sd(Δ_{d-1}) against predict_strand_bar(d, ·), plus
/// vanishing of strands >= d and the pdim identity.
VerificationReport verify_bar_simplex(int d, const FieldSpec& field,
                                      const HochsterOptions& options = {});

/// Δ_{d-1}^{<r>} against predict_strand_edgewise. Uses the full table within
/// the vertex gate; above it, Nonzero claims are certified by witnesses
/// W = V(lk F) ∪ B around interior faces F, and everything else is OBSERVED.
VerificationReport verify_edgewise_simplex(int d, int r, const FieldSpec& field,
                                           const HochsterOptions& options = {});

}  // namespace sdbetti
