#pragma once

// Graded Betti numbers of Stanley-Reisner rings via Hochster's formula
//
//   β_{i,i+j}(K[Δ]) = Σ_{W ⊆ V, #W = i+j} dim_K H̃_{j-1}(Δ_W; K).
//
// Tables are indexed by homological position i and strand j.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sdbetti/complex.hpp"
#include "sdbetti/field.hpp"

namespace sdbetti {

class BettiTable {
 public:
  BettiTable() = default;
  BettiTable(std::size_t n, FieldSpec field, bool complete)
      : n_(n), field_(field), complete_(complete) {}

  [[nodiscard]] std::size_t num_vertices() const noexcept { return n_; }
  [[nodiscard]] const FieldSpec& field() const noexcept { return field_; }
  /// False for witness tables, which only record certified nonzero entries.
  [[nodiscard]] bool complete() const noexcept { return complete_; }

  /// Nonzero entries keyed by (i, j).
  [[nodiscard]] const std::map<std::pair<int, int>, std::uint64_t>& entries() const noexcept {
    return entries_;
  }

  /// β_{i,i+j}. Throws InvalidArgument on a partial table.
  [[nodiscard]] std::uint64_t at(int i, int j) const;
  /// Complete: the value. Partial: a certified lower bound if one is
  /// recorded, nullopt otherwise (never zero).
  [[nodiscard]] std::optional<std::uint64_t> lookup(int i, int j) const;

  void add(int i, int j, std::uint64_t value);
  void merge(const BettiTable& other);

  /// Largest i with a nonzero entry (complete tables only).
  [[nodiscard]] int pdim() const;
  /// Largest j with a nonzero entry (complete tables only).
  [[nodiscard]] int reg() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  void require_complete(const char* what) const;

  std::size_t n_ = 0;
  FieldSpec field_;
  bool complete_ = true;
  std::map<std::pair<int, int>, std::uint64_t> entries_;
};

struct HochsterOptions {
  std::size_t vertex_gate = 22;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned workers = 0;
  /// Enumerate only W in [range_begin, range_end) of the Gray-code sequence
  /// (testing hook for partition independence); end = 0 means 2^n.
  std::uint64_t range_begin = 0;
  std::uint64_t range_end = 0;
};

/// Largest ground set the bitmask engine supports regardless of the gate.
inline constexpr std::size_t kHochsterHardLimit = 30;

/// Complete table. Throws GateExceeded if n > options.vertex_gate.
BettiTable graded_betti_table(const SimplicialComplex& complex, const FieldSpec& field,
                              const HochsterOptions& options = {});

/// Reduced Betti numbers of Δ_W from the bitmask engine (W as a mask).
std::vector<std::uint64_t> induced_reduced_betti(const SimplicialComplex& complex,
                                                 const FieldSpec& field, std::uint64_t w);

struct BettiWitness {
  int i;
  int j;
  std::uint64_t multiplicity;  // dim H̃_{j-1}(Δ_W), a lower bound for β_{i,i+j}
};

/// Certificates β_{#W-j, #W} != 0 from the homology of Δ_W.
std::vector<BettiWitness> betti_witness(const SimplicialComplex& complex, const FieldSpec& field,
                                        std::span<const Vertex> w);

/// Partial table collecting the witnesses of several subsets.
BettiTable witness_table(const SimplicialComplex& complex, const FieldSpec& field,
                         const std::vector<std::vector<Vertex>>& subsets);

struct StrandProfile {
  int j = 0;
  std::optional<int> l;  // min i with β_{i,i+j} != 0
  std::optional<int> u;  // max such i
  std::vector<int> zero_set;  // zeros strictly between l and u
};

StrandProfile strand_profile(const BettiTable& table, int j);

struct RingInvariants {
  int reg = 0;
  int pdim = 0;
  int depth = 0;  // n - pdim
  int t1 = 0;     // largest minimal non-face
  int krull_dim = 0;  // dim Δ + 1
};

RingInvariants ring_invariants(const BettiTable& table, const SimplicialComplex& complex);

/// β_{i,i+j} = β_{2^d-d-1-i, 2^d-2-i-j} for every (i, j).
bool gorenstein_symmetry_check(const BettiTable& table, int d);
/// β_{i,i+j} = β_{p-i, p+r-i-j} with p = pdim and r = reg of the table.
bool gorenstein_symmetry_check(const BettiTable& table);

}  // namespace sdbetti
