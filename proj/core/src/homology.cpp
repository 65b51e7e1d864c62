#include "sdbetti/homology.hpp"

#include <algorithm>

#include "sdbetti/error.hpp"

namespace sdbetti {

BoundaryMatrix boundary_matrix(const SimplicialComplex& complex, int k) {
  BoundaryMatrix out;
  out.k = k;
  if (complex.is_void()) return out;
  const auto& table = complex.faces();
  if (k < -1 || k > table.top_dim() + 1) {
    throw InvalidArgument("boundary_matrix: k out of range");
  }
  const std::size_t rows = table.count(k - 1);
  const std::size_t cols = table.count(k);
  out.matrix = SparseMatrix(rows, cols);
  if (k <= -1 || cols == 0) return out;
  const auto& col_faces = table.of_dim(k);
  const auto& row_faces = table.of_dim(k - 1);
  std::vector<Vertex> sub;
  for (std::size_t c = 0; c < cols; ++c) {
    auto f = col_faces[c];
    auto& column = out.matrix.columns[c];
    for (std::size_t i = 0; i < f.size(); ++i) {
      sub.clear();
      for (std::size_t t = 0; t < f.size(); ++t) {
        if (t != i) sub.push_back(f[t]);
      }
      const auto row = row_faces.find(sub);
      column.push_back({static_cast<std::uint32_t>(*row), (i % 2 == 0) ? 1 : -1});
    }
    std::sort(column.begin(), column.end(), [](auto a, auto b) { return a.row < b.row; });
  }
  return out;
}

std::size_t rank_exact(const BoundaryMatrix& m, const FieldSpec& field) {
  return rank(m.matrix, field);
}

std::uint64_t ReducedBetti::operator[](int k) const noexcept {
  const int idx = k + 1;
  if (idx < 0 || idx >= static_cast<int>(values_.size())) return 0;
  return values_[static_cast<std::size_t>(idx)];
}

bool ReducedBetti::is_zero() const noexcept {
  return std::all_of(values_.begin(), values_.end(), [](auto v) { return v == 0; });
}

std::int64_t ReducedBetti::euler_characteristic() const noexcept {
  std::int64_t chi = 0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const auto v = static_cast<std::int64_t>(values_[i]);
    chi += (i % 2 == 1) ? v : -v;
  }
  return chi;
}

ReducedBetti reduced_betti(const SimplicialComplex& complex, const FieldSpec& field) {
  if (complex.is_void()) return ReducedBetti{};
  const auto& table = complex.faces();
  const int top = table.top_dim();
  // ranks[k+1] = rank ∂_k for k = -1..top+1
  std::vector<std::size_t> ranks(static_cast<std::size_t>(top) + 3, 0);
  for (int k = 0; k <= top; ++k) {
    ranks[static_cast<std::size_t>(k) + 1] = rank_exact(boundary_matrix(complex, k), field);
  }
  std::vector<std::uint64_t> values;
  for (int k = -1; k <= top; ++k) {
    const std::size_t idx = static_cast<std::size_t>(k + 1);
    values.push_back(table.count(k) - ranks[idx] - ranks[idx + 1]);
  }
  return ReducedBetti(std::move(values));
}

std::vector<CycleVector> top_cycle_space(const SimplicialComplex& complex, const FieldSpec& field) {
  std::vector<CycleVector> out;
  if (complex.is_void()) return out;
  const int top = complex.dim();
  const auto m = boundary_matrix(complex, top);
  const auto& faces = complex.faces().of_dim(top);
  for (auto& v : kernel(m.matrix, field)) {
    CycleVector c;
    c.field = field;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] == 0) continue;
      c.support.push_back(faces.face(i));
      c.coefficients.push_back(v[i]);
    }
    out.push_back(std::move(c));
  }
  return out;
}

bool is_cycle(const SimplicialComplex& complex, const CycleVector& cycle) {
  if (cycle.support.empty()) return true;
  const int k = cycle.support.front().dim();
  const auto& rows = complex.faces().of_dim(k - 1);
  std::vector<mpq_class> image(rows.size());
  std::vector<Vertex> sub;
  for (std::size_t s = 0; s < cycle.support.size(); ++s) {
    const Face& f = cycle.support[s];
    for (std::size_t i = 0; i < f.size(); ++i) {
      sub.clear();
      for (std::size_t t = 0; t < f.size(); ++t) {
        if (t != i) sub.push_back(f[t]);
      }
      const auto row = rows.find(sub);
      if (!row) return false;
      if (i % 2 == 0) image[*row] += cycle.coefficients[s];
      else image[*row] -= cycle.coefficients[s];
    }
  }
  const auto p = cycle.field.characteristic();
  for (auto& x : image) {
    if (p == 0) {
      if (x != 0) return false;
    } else {
      mpz_class num = x.get_num();
      mpz_class r = num % p;
      if (r != 0) return false;
    }
  }
  return true;
}

}  // namespace sdbetti
