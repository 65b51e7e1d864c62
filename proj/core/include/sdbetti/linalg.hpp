#pragma once

// Exact rank and kernel computations for small-integer sparse matrices.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "sdbetti/field.hpp"

namespace sdbetti {

/// Column-sparse matrix with small integer entries.
struct SparseMatrix {
  struct Entry {
    std::uint32_t row;
    std::int32_t value;
  };

  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<Entry>> columns;

  SparseMatrix() = default;
  SparseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), columns(c) {}

  [[nodiscard]] std::size_t nonzeros() const noexcept;
};

/// Rank over the field. Rationals: fraction-free elimination on int64 rows
/// with content reduction, restarted in GMP integers on overflow.
std::size_t rank(const SparseMatrix& m, const FieldSpec& field);

/// Kernel basis (right null space) over the field, entries as rationals
/// (canonical residues 0..p-1 for GF(p)). One vector per free column.
std::vector<std::vector<mpq_class>> kernel(const SparseMatrix& m, const FieldSpec& field);

namespace linalg {

/// Dense kernels. Each operates in place on its input.
std::size_t rank_gf2(std::vector<std::vector<std::uint64_t>>& rows, std::size_t cols);
std::size_t rank_mod_p(std::vector<std::vector<std::uint32_t>>& rows, std::uint32_t p);
std::size_t rank_rational(std::vector<std::vector<std::int64_t>>& rows);
std::size_t rank_rational_big(std::vector<std::vector<mpz_class>>& rows);

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);

/// Sparse column (row, value), sorted by row.
using SparseColumn = std::vector<std::pair<std::uint32_t, std::int64_t>>;

/// Left-to-right column reduction by lowest nonzero row. Over the rationals
/// the update is fraction-free; returns nullopt on int64 overflow so the
/// caller can fall back to GMP. Destroys the input.
std::optional<std::size_t> rank_sparse_columns(std::vector<SparseColumn>& columns,
                                               std::size_t rows, const FieldSpec& field);

}  // namespace linalg
}  // namespace sdbetti
