#include "sdbetti/hochster.hpp"

#include <algorithm>
#include <bit>
#include <thread>

#include "sdbetti/error.hpp"
#include "sdbetti/homology.hpp"
#include "sdbetti/linalg.hpp"

namespace sdbetti {

// ---------------------------------------------------------------------------
// BettiTable

void BettiTable::require_complete(const char* what) const {
  if (!complete_) throw InvalidArgument(std::string(what) + " needs a complete Betti table");
}

std::uint64_t BettiTable::at(int i, int j) const {
  require_complete("BettiTable::at");
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

std::optional<std::uint64_t> BettiTable::lookup(int i, int j) const {
  auto it = entries_.find({i, j});
  if (it != entries_.end()) return it->second;
  if (complete_) return std::uint64_t{0};
  return std::nullopt;
}

void BettiTable::add(int i, int j, std::uint64_t value) {
  if (value == 0) return;
  entries_[{i, j}] += value;
}

void BettiTable::merge(const BettiTable& other) {
  for (const auto& [key, value] : other.entries_) entries_[key] += value;
}

int BettiTable::pdim() const {
  require_complete("pdim");
  int best = 0;
  for (const auto& [key, value] : entries_) best = std::max(best, key.first);
  return best;
}

int BettiTable::reg() const {
  require_complete("reg");
  int best = 0;
  for (const auto& [key, value] : entries_) best = std::max(best, key.second);
  return best;
}

// ---------------------------------------------------------------------------
// Bitmask engine

namespace {

using Mask = std::uint32_t;

struct MaskComplex {
  std::size_t n = 0;
  std::vector<std::vector<Mask>> by_dim;  // sorted ascending; by_dim[k] = k-faces
  bool is_void = false;
};

MaskComplex to_masks(const SimplicialComplex& complex) {
  if (complex.num_vertices() > kHochsterHardLimit) {
    throw GateExceeded("Hochster engine supports at most 30 vertices");
  }
  MaskComplex mc;
  mc.n = complex.num_vertices();
  mc.is_void = complex.is_void();
  if (mc.is_void) return mc;
  const auto& table = complex.faces();
  for (int k = 0; k <= table.top_dim(); ++k) {
    const auto& list = table.of_dim(k);
    std::vector<Mask> masks;
    masks.reserve(list.size());
    for (std::size_t i = 0; i < list.size(); ++i) {
      Mask m = 0;
      for (Vertex v : list[i]) m |= Mask{1} << v;
      masks.push_back(m);
    }
    std::sort(masks.begin(), masks.end());
    mc.by_dim.push_back(std::move(masks));
  }
  return mc;
}

class InducedHomology {
 public:
  InducedHomology(const MaskComplex& mc, const FieldSpec& field) : mc_(mc), field_(field) {
    faces_.resize(mc.by_dim.size());
  }

  bool is_face(Mask w) const {
    const int k = std::popcount(w) - 1;
    if (k < 0) return true;
    if (k >= static_cast<int>(mc_.by_dim.size())) return false;
    const auto& list = mc_.by_dim[static_cast<std::size_t>(k)];
    return std::binary_search(list.begin(), list.end(), w);
  }

  // Reduced Betti numbers b̃_{-1..top} of Δ_W into `out`.
  void compute(Mask w, std::vector<std::uint64_t>& out) {
    out.clear();
    if (mc_.is_void) return;
    int top = -1;
    for (std::size_t k = 0; k < mc_.by_dim.size(); ++k) {
      auto& dst = faces_[k];
      dst.clear();
      for (Mask f : mc_.by_dim[k]) {
        if ((f & ~w) == 0) dst.push_back(f);
      }
      if (dst.empty()) break;
      top = static_cast<int>(k);
    }
    out.assign(static_cast<std::size_t>(top) + 2, 0);
    if (top < 0) {
      out[0] = 1;
      return;
    }
    // ranks[k+1] = rank ∂_k
    ranks_.assign(static_cast<std::size_t>(top) + 3, 0);
    ranks_[1] = 1;
    for (int k = 1; k <= top; ++k) ranks_[static_cast<std::size_t>(k) + 1] = boundary_rank(k);
    for (int k = -1; k <= top; ++k) {
      const std::size_t idx = static_cast<std::size_t>(k + 1);
      const std::size_t count = k < 0 ? 1 : faces_[static_cast<std::size_t>(k)].size();
      out[idx] = count - ranks_[idx] - ranks_[idx + 1];
    }
  }

 private:
  std::size_t row_of(int k, Mask f) const {
    const auto& rows = faces_[static_cast<std::size_t>(k)];
    return static_cast<std::size_t>(std::lower_bound(rows.begin(), rows.end(), f) - rows.begin());
  }

  std::size_t boundary_rank(int k) {
    const auto& cols = faces_[static_cast<std::size_t>(k)];
    const std::size_t nrows = faces_[static_cast<std::size_t>(k) - 1].size();
    if (field_.characteristic() == 2) {
      // Columns as bit rows; rank is invariant under transposition.
      const std::size_t words = (nrows + 63) / 64;
      bits_.assign(cols.size(), std::vector<std::uint64_t>(words, 0));
      for (std::size_t c = 0; c < cols.size(); ++c) {
        Mask rest = cols[c];
        while (rest) {
          const Mask bit = rest & (~rest + 1);
          rest ^= bit;
          const std::size_t r = row_of(k - 1, cols[c] ^ bit);
          bits_[c][r / 64] |= std::uint64_t{1} << (r % 64);
        }
      }
      return linalg::rank_gf2(bits_, nrows);
    }
    sparse_.assign(cols.size(), {});
    for (std::size_t c = 0; c < cols.size(); ++c) {
      Mask rest = cols[c];
      std::int64_t sign = 1;
      auto& col = sparse_[c];
      while (rest) {
        const Mask bit = rest & (~rest + 1);
        rest ^= bit;
        col.emplace_back(static_cast<std::uint32_t>(row_of(k - 1, cols[c] ^ bit)), sign);
        sign = -sign;
      }
      std::sort(col.begin(), col.end());
    }
    if (auto r = linalg::rank_sparse_columns(sparse_, nrows, field_)) return *r;
    std::vector<std::vector<mpz_class>> dense(nrows, std::vector<mpz_class>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) {
      Mask rest = cols[c];
      long sign = 1;
      while (rest) {
        const Mask bit = rest & (~rest + 1);
        rest ^= bit;
        dense[row_of(k - 1, cols[c] ^ bit)][c] = sign;
        sign = -sign;
      }
    }
    return linalg::rank_rational_big(dense);
  }

  const MaskComplex& mc_;
  FieldSpec field_;
  std::vector<std::vector<Mask>> faces_;
  std::vector<std::size_t> ranks_;
  std::vector<std::vector<std::uint64_t>> bits_;
  std::vector<linalg::SparseColumn> sparse_;
};

void accumulate(BettiTable& table, Mask w, const std::vector<std::uint64_t>& betti) {
  const int size = std::popcount(w);
  for (std::size_t idx = 0; idx < betti.size(); ++idx) {
    if (betti[idx] == 0) continue;
    const int j = static_cast<int>(idx);  // b̃_{j-1}
    table.add(size - j, j, betti[idx]);
  }
}

}  // namespace

BettiTable graded_betti_table(const SimplicialComplex& complex, const FieldSpec& field,
                              const HochsterOptions& options) {
  const std::size_t n = complex.num_vertices();
  if (n > options.vertex_gate) {
    throw GateExceeded("Hochster enumeration over " + std::to_string(n) +
                       " vertices exceeds the vertex gate of " +
                       std::to_string(options.vertex_gate));
  }
  const MaskComplex mc = to_masks(complex);
  const std::uint64_t total = std::uint64_t{1} << n;
  const std::uint64_t begin = std::min(options.range_begin, total);
  const std::uint64_t end = options.range_end == 0 ? total : std::min(options.range_end, total);

  unsigned workers = options.workers ? options.workers : std::thread::hardware_concurrency();
  workers = std::max(1u, workers);
  const std::uint64_t span = end > begin ? end - begin : 0;
  if (span < 4096) workers = 1;

  std::vector<BettiTable> partial(workers, BettiTable(n, field, true));
  auto run = [&](unsigned worker) {
    const std::uint64_t lo = begin + span * worker / workers;
    const std::uint64_t hi = begin + span * (worker + 1) / workers;
    InducedHomology engine(mc, field);
    std::vector<std::uint64_t> betti;
    for (std::uint64_t k = lo; k < hi; ++k) {
      const Mask w = static_cast<Mask>(k ^ (k >> 1));
      // Induced subcomplexes on faces are simplices: acyclic unless W = ∅.
      if (w != 0 && engine.is_face(w)) continue;
      engine.compute(w, betti);
      accumulate(partial[worker], w, betti);
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < workers; ++t) threads.emplace_back(run, t);
    for (auto& t : threads) t.join();
  }
  BettiTable result(n, field, true);
  for (const auto& p : partial) result.merge(p);
  return result;
}

std::vector<std::uint64_t> induced_reduced_betti(const SimplicialComplex& complex,
                                                 const FieldSpec& field, std::uint64_t w) {
  const MaskComplex mc = to_masks(complex);
  if (mc.n < 64 && (w >> mc.n) != 0) throw InvalidArgument("induced_reduced_betti: W out of range");
  InducedHomology engine(mc, field);
  std::vector<std::uint64_t> out;
  engine.compute(static_cast<Mask>(w), out);
  return out;
}

std::vector<BettiWitness> betti_witness(const SimplicialComplex& complex, const FieldSpec& field,
                                        std::span<const Vertex> w) {
  std::vector<Vertex> ws(w.begin(), w.end());
  std::sort(ws.begin(), ws.end());
  ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
  std::vector<BettiWitness> out;
  std::vector<std::uint64_t> betti;
  if (complex.num_vertices() <= kHochsterHardLimit) {
    Mask m = 0;
    for (Vertex v : ws) {
      if (v >= complex.num_vertices()) throw InvalidArgument("betti_witness: vertex out of range");
      m |= Mask{1} << v;
    }
    betti = induced_reduced_betti(complex, field, m);
  } else {
    // Large ground sets: build Δ_W explicitly.
    betti = reduced_betti(induced(complex, ws), field).values();
  }
  const int size = static_cast<int>(ws.size());
  for (std::size_t idx = 0; idx < betti.size(); ++idx) {
    if (betti[idx] == 0) continue;
    const int j = static_cast<int>(idx);
    out.push_back({size - j, j, betti[idx]});
  }
  return out;
}

BettiTable witness_table(const SimplicialComplex& complex, const FieldSpec& field,
                         const std::vector<std::vector<Vertex>>& subsets) {
  BettiTable table(complex.num_vertices(), field, false);
  // Keep, per cell, the best single-subset lower bound; different W of the
  // same size add up only if they are distinct, which callers do not promise.
  std::map<std::pair<int, int>, std::uint64_t> best;
  for (const auto& w : subsets) {
    for (const auto& wit : betti_witness(complex, field, w)) {
      auto& b = best[{wit.i, wit.j}];
      b = std::max(b, wit.multiplicity);
    }
  }
  for (const auto& [key, value] : best) table.add(key.first, key.second, value);
  return table;
}

// ---------------------------------------------------------------------------
// Derived invariants

StrandProfile strand_profile(const BettiTable& table, int j) {
  if (!table.complete()) throw InvalidArgument("strand_profile needs a complete Betti table");
  StrandProfile p;
  p.j = j;
  std::vector<int> nonzero;
  for (const auto& [key, value] : table.entries()) {
    if (key.second == j && value != 0) nonzero.push_back(key.first);
  }
  if (nonzero.empty()) return p;
  std::sort(nonzero.begin(), nonzero.end());
  p.l = nonzero.front();
  p.u = nonzero.back();
  for (int i = *p.l + 1; i < *p.u; ++i) {
    if (!std::binary_search(nonzero.begin(), nonzero.end(), i)) p.zero_set.push_back(i);
  }
  return p;
}

RingInvariants ring_invariants(const BettiTable& table, const SimplicialComplex& complex) {
  if (!table.complete()) throw InvalidArgument("ring_invariants needs a complete Betti table");
  RingInvariants inv;
  inv.reg = table.reg();
  inv.pdim = table.pdim();
  inv.depth = static_cast<int>(complex.num_vertices()) - inv.pdim;
  inv.t1 = static_cast<int>(max_minimal_non_face_size(complex));
  inv.krull_dim = complex.dim() + 1;
  return inv;
}

namespace {

bool symmetric(const BettiTable& table, int p, int c) {
  // (i, j) <-> (p - i, c - p - j): the total degree i + j maps to c - i - j.
  for (const auto& [key, value] : table.entries()) {
    const int i2 = p - key.first;
    const int j2 = c - p - key.second;
    if (i2 < 0 || j2 < 0) return false;
    if (table.at(i2, j2) != value) return false;
  }
  return true;
}

}  // namespace

bool gorenstein_symmetry_check(const BettiTable& table, int d) {
  if (d < 1 || d > 30) throw InvalidArgument("gorenstein_symmetry_check: d out of range");
  const int p = (1 << d) - d - 1;
  const int c = (1 << d) - 2;
  return symmetric(table, p, c);
}

bool gorenstein_symmetry_check(const BettiTable& table) {
  const int p = table.pdim();
  return symmetric(table, p, p + table.reg());
}

}  // namespace sdbetti
