#include "sdbetti/linalg.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "sdbetti/error.hpp"
#include "sdbetti/rational_matrix.hpp"

namespace sdbetti {

std::size_t SparseMatrix::nonzeros() const noexcept {
  std::size_t n = 0;
  for (const auto& c : columns) n += c.size();
  return n;
}

namespace linalg {

std::size_t rank_gf2(std::vector<std::vector<std::uint64_t>>& rows, std::size_t cols) {
  std::size_t rank = 0;
  const std::size_t m = rows.size();
  for (std::size_t c = 0; c < cols && rank < m; ++c) {
    const std::size_t w = c / 64;
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    std::size_t p = rank;
    while (p < m && !(rows[p][w] & bit)) ++p;
    if (p == m) continue;
    std::swap(rows[p], rows[rank]);
    const auto& pivot = rows[rank];
    for (std::size_t i = rank + 1; i < m; ++i) {
      if (rows[i][w] & bit) {
        for (std::size_t k = w; k < pivot.size(); ++k) rows[i][k] ^= pivot[k];
      }
    }
    ++rank;
  }
  return rank;
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw InvalidArgument("inverse_mod: not invertible");
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

std::size_t rank_mod_p(std::vector<std::vector<std::uint32_t>>& rows, std::uint32_t p) {
  std::size_t rank = 0;
  const std::size_t m = rows.size();
  const std::size_t cols = m ? rows[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < m; ++c) {
    std::size_t piv = rank;
    while (piv < m && rows[piv][c] == 0) ++piv;
    if (piv == m) continue;
    std::swap(rows[piv], rows[rank]);
    auto& pivot = rows[rank];
    const std::uint64_t inv = inverse_mod(pivot[c], p);
    for (std::size_t k = c; k < cols; ++k) pivot[k] = static_cast<std::uint32_t>(pivot[k] * inv % p);
    for (std::size_t i = rank + 1; i < m; ++i) {
      const std::uint64_t f = rows[i][c];
      if (f == 0) continue;
      for (std::size_t k = c; k < cols; ++k) {
        const std::uint64_t sub = f * pivot[k] % p;
        rows[i][k] = static_cast<std::uint32_t>((rows[i][k] + p - sub) % p);
      }
    }
    ++rank;
  }
  return rank;
}

namespace {

struct Overflow {};

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}

void reduce_content(std::vector<std::int64_t>& row, std::size_t from) {
  std::int64_t g = 0;
  for (std::size_t k = from; k < row.size(); ++k) {
    g = std::gcd(g, row[k]);
    if (g == 1) return;
  }
  if (g > 1) {
    for (std::size_t k = from; k < row.size(); ++k) row[k] /= g;
  }
}

std::size_t rank_rational_small(std::vector<std::vector<std::int64_t>>& rows) {
  std::size_t rank = 0;
  const std::size_t m = rows.size();
  const std::size_t cols = m ? rows[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < m; ++c) {
    // Prefer a unit pivot to keep entries small.
    std::size_t piv = m;
    for (std::size_t i = rank; i < m; ++i) {
      if (rows[i][c] == 0) continue;
      if (piv == m) piv = i;
      if (rows[i][c] == 1 || rows[i][c] == -1) {
        piv = i;
        break;
      }
    }
    if (piv == m) continue;
    std::swap(rows[piv], rows[rank]);
    const auto& pivot = rows[rank];
    const std::int64_t a = pivot[c];
    for (std::size_t i = rank + 1; i < m; ++i) {
      const std::int64_t b = rows[i][c];
      if (b == 0) continue;
      const std::int64_t g = std::gcd(a, b);
      const std::int64_t ma = a / g;
      const std::int64_t mb = b / g;
      for (std::size_t k = c; k < cols; ++k) {
        rows[i][k] = checked_sub(checked_mul(ma, rows[i][k]), checked_mul(mb, pivot[k]));
      }
      reduce_content(rows[i], c + 1);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t rank_rational_big(std::vector<std::vector<mpz_class>>& rows) {
  std::size_t rank = 0;
  const std::size_t m = rows.size();
  const std::size_t cols = m ? rows[0].size() : 0;
  mpz_class g, ma, mb;
  for (std::size_t c = 0; c < cols && rank < m; ++c) {
    std::size_t piv = rank;
    while (piv < m && rows[piv][c] == 0) ++piv;
    if (piv == m) continue;
    std::swap(rows[piv], rows[rank]);
    const auto& pivot = rows[rank];
    for (std::size_t i = rank + 1; i < m; ++i) {
      if (rows[i][c] == 0) continue;
      mpz_gcd(g.get_mpz_t(), pivot[c].get_mpz_t(), rows[i][c].get_mpz_t());
      ma = pivot[c] / g;
      mb = rows[i][c] / g;
      for (std::size_t k = c; k < cols; ++k) rows[i][k] = ma * rows[i][k] - mb * pivot[k];
      g = 0;
      for (std::size_t k = c + 1; k < cols; ++k) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), rows[i][k].get_mpz_t());
      }
      if (g > 1) {
        for (std::size_t k = c + 1; k < cols; ++k) mpz_divexact(rows[i][k].get_mpz_t(), rows[i][k].get_mpz_t(), g.get_mpz_t());
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_rational(std::vector<std::vector<std::int64_t>>& rows) {
  std::vector<std::vector<std::int64_t>> backup = rows;
  try {
    return rank_rational_small(rows);
  } catch (const Overflow&) {
    std::vector<std::vector<mpz_class>> big(backup.size());
    for (std::size_t i = 0; i < backup.size(); ++i) {
      big[i].reserve(backup[i].size());
      for (auto x : backup[i]) big[i].emplace_back(static_cast<long>(x));
    }
    return rank_rational_big(big);
  }
}

namespace {

// a*x - b*y over sorted sparse columns, dropping zeros. Returns false on overflow.
bool combine_rational(const SparseColumn& x, std::int64_t a, const SparseColumn& y,
                      std::int64_t b, SparseColumn& out) {
  out.clear();
  std::size_t i = 0, k = 0;
  std::int64_t t1, t2, v;
  while (i < x.size() || k < y.size()) {
    if (k == y.size() || (i < x.size() && x[i].first < y[k].first)) {
      if (__builtin_mul_overflow(a, x[i].second, &v)) return false;
      out.emplace_back(x[i].first, v);
      ++i;
    } else if (i == x.size() || y[k].first < x[i].first) {
      if (__builtin_mul_overflow(b, y[k].second, &v)) return false;
      out.emplace_back(y[k].first, -v);
      ++k;
    } else {
      if (__builtin_mul_overflow(a, x[i].second, &t1)) return false;
      if (__builtin_mul_overflow(b, y[k].second, &t2)) return false;
      if (__builtin_sub_overflow(t1, t2, &v)) return false;
      if (v != 0) out.emplace_back(x[i].first, v);
      ++i;
      ++k;
    }
  }
  std::int64_t g = 0;
  for (const auto& e : out) {
    g = std::gcd(g, e.second);
    if (g == 1) break;
  }
  if (g > 1) {
    for (auto& e : out) e.second /= g;
  }
  return true;
}

// x - f*y mod p.
void combine_mod(const SparseColumn& x, const SparseColumn& y, std::int64_t f, std::int64_t p,
                 SparseColumn& out) {
  out.clear();
  std::size_t i = 0, k = 0;
  while (i < x.size() || k < y.size()) {
    if (k == y.size() || (i < x.size() && x[i].first < y[k].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[k].first < x[i].first) {
      out.emplace_back(y[k].first, (p - f * y[k].second % p) % p);
      ++k;
    } else {
      const std::int64_t v = ((x[i].second - f * y[k].second) % p + p) % p;
      if (v != 0) out.emplace_back(x[i].first, v);
      ++i;
      ++k;
    }
  }
}

}  // namespace

std::optional<std::size_t> rank_sparse_columns(std::vector<SparseColumn>& columns,
                                               std::size_t rows, const FieldSpec& field) {
  const std::int64_t p = field.characteristic();
  if (p != 0) {
    for (auto& col : columns) {
      SparseColumn kept;
      for (auto [r, v] : col) {
        const std::int64_t m = (v % p + p) % p;
        if (m != 0) kept.emplace_back(r, m);
      }
      col.swap(kept);
    }
  }
  std::vector<std::int64_t> pivot_of_row(rows, -1);
  std::size_t rank = 0;
  SparseColumn scratch;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    auto& col = columns[c];
    while (!col.empty()) {
      const auto [low, lv] = col.back();
      const std::int64_t pc = pivot_of_row[low];
      if (pc < 0) {
        pivot_of_row[low] = static_cast<std::int64_t>(c);
        ++rank;
        break;
      }
      const auto& piv = columns[static_cast<std::size_t>(pc)];
      const std::int64_t pv = piv.back().second;
      if (p == 0) {
        const std::int64_t g = std::gcd(pv, lv);
        if (!combine_rational(col, pv / g, piv, lv / g, scratch)) return std::nullopt;
      } else {
        const std::int64_t f = lv * inverse_mod(static_cast<std::uint32_t>(pv), static_cast<std::uint32_t>(p)) % p;
        combine_mod(col, piv, f, p, scratch);
      }
      col.swap(scratch);
    }
  }
  return rank;
}

}  // namespace linalg

namespace {

// Orient so that the smaller dimension indexes rows: rank is invariant.
bool prefer_transpose(const SparseMatrix& m) { return m.cols < m.rows; }

}  // namespace

std::size_t rank(const SparseMatrix& m, const FieldSpec& field) {
  if (m.rows == 0 || m.cols == 0 || m.nonzeros() == 0) return 0;
  const bool t = prefer_transpose(m);
  const std::size_t nr = t ? m.cols : m.rows;
  const std::size_t nc = t ? m.rows : m.cols;
  auto place = [&](auto&& set) {
    for (std::size_t c = 0; c < m.cols; ++c) {
      for (const auto& e : m.columns[c]) {
        if (t) set(c, e.row, e.value);
        else set(e.row, c, e.value);
      }
    }
  };
  const std::uint32_t p = field.characteristic();
  if (p != 2) {
    std::vector<linalg::SparseColumn> cols(m.cols);
    for (std::size_t c = 0; c < m.cols; ++c) {
      for (const auto& e : m.columns[c]) cols[c].emplace_back(e.row, e.value);
      std::sort(cols[c].begin(), cols[c].end());
    }
    if (auto r = linalg::rank_sparse_columns(cols, m.rows, field)) return *r;
    std::vector<std::vector<mpz_class>> rows(m.rows, std::vector<mpz_class>(m.cols));
    for (std::size_t c = 0; c < m.cols; ++c) {
      for (const auto& e : m.columns[c]) rows[e.row][c] += e.value;
    }
    return linalg::rank_rational_big(rows);
  }
  const std::size_t words = (nc + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows(nr, std::vector<std::uint64_t>(words, 0));
  place([&](std::size_t r, std::size_t c, std::int32_t v) {
    if (v & 1) rows[r][c / 64] ^= std::uint64_t{1} << (c % 64);
  });
  return linalg::rank_gf2(rows, nc);
}

std::vector<std::vector<mpq_class>> kernel(const SparseMatrix& m, const FieldSpec& field) {
  if (field.is_rationals()) {
    QMatrix q(m.rows, m.cols);
    for (std::size_t c = 0; c < m.cols; ++c) {
      for (const auto& e : m.columns[c]) q(e.row, c) += e.value;
    }
    return q.kernel();
  }
  // RREF mod p.
  const std::uint32_t p = field.characteristic();
  const std::int64_t pp = p;
  std::vector<std::vector<std::uint64_t>> a(m.rows, std::vector<std::uint64_t>(m.cols, 0));
  for (std::size_t c = 0; c < m.cols; ++c) {
    for (const auto& e : m.columns[c]) {
      a[e.row][c] = static_cast<std::uint64_t>(((static_cast<std::int64_t>(a[e.row][c]) + e.value) % pp + pp) % pp);
    }
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t piv = r;
    while (piv < m.rows && a[piv][c] == 0) ++piv;
    if (piv == m.rows) continue;
    std::swap(a[piv], a[r]);
    const std::uint64_t inv = linalg::inverse_mod(static_cast<std::uint32_t>(a[r][c]), p);
    for (std::size_t k = c; k < m.cols; ++k) a[r][k] = a[r][k] * inv % p;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const std::uint64_t f = a[i][c];
      for (std::size_t k = c; k < m.cols; ++k) a[i][k] = (a[i][k] + p - f * a[r][k] % p) % p;
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<mpq_class>> basis;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<mpq_class> v(m.cols);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      v[pivots[i]] = static_cast<unsigned long>((p - a[i][free]) % p);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace sdbetti
