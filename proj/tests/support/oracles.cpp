#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace sdbetti::oracle {

namespace {

std::vector<Mask> masks_of_size(const std::set<Mask>& faces, int size) {
  std::vector<Mask> out;
  for (Mask m : faces) {
    if (std::popcount(m) == size) out.push_back(m);
  }
  return out;
}

// Sign of removing vertex v from face m: (-1)^(number of vertices of m below v).
int removal_sign(Mask m, int v) { return std::popcount(m & ((Mask{1} << v) - 1)) % 2 ? -1 : 1; }

}  // namespace

std::set<Mask> face_masks(const SimplicialComplex& complex) {
  if (complex.num_vertices() > 20) throw std::invalid_argument("oracle: too many vertices");
  std::set<Mask> out;
  for (const auto& facet : complex.facets()) {
    const auto& v = facet.vertices();
    for (Mask sub = 0; sub < (Mask{1} << v.size()); ++sub) {
      Mask m = 0;
      for (std::size_t k = 0; k < v.size(); ++k) {
        if (sub >> k & 1) m |= Mask{1} << v[k];
      }
      out.insert(m);
    }
  }
  return out;
}

std::size_t dense_rank(std::vector<std::vector<long long>> rows, std::uint32_t p) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  if (p == 0) {
    std::vector<std::vector<mpq_class>> a(rows.size(), std::vector<mpq_class>(cols));
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::size_t c = 0; c < cols; ++c) a[r][c] = static_cast<long>(rows[r][c]);
    }
    for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
      std::size_t pivot = rank;
      while (pivot < a.size() && a[pivot][c] == 0) ++pivot;
      if (pivot == a.size()) continue;
      std::swap(a[pivot], a[rank]);
      for (std::size_t r = rank + 1; r < a.size(); ++r) {
        if (a[r][c] == 0) continue;
        mpq_class factor = a[r][c] / a[rank][c];
        for (std::size_t k = c; k < cols; ++k) a[r][k] -= factor * a[rank][k];
      }
      ++rank;
    }
    return rank;
  }
  const long long q = p;
  for (auto& row : rows) {
    for (auto& x : row) x = ((x % q) + q) % q;
  }
  auto inv = [q](long long x) {
    long long result = 1, e = q - 2;
    while (e > 0) {
      if (e & 1) result = result * x % q;
      x = x * x % q;
      e >>= 1;
    }
    return result;
  };
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    const long long pinv = inv(rows[rank][c]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const long long factor = rows[r][c] * pinv % q;
      for (std::size_t k = c; k < cols; ++k) {
        rows[r][k] = ((rows[r][k] - factor * rows[rank][k]) % q + q) % q;
      }
    }
    ++rank;
  }
  return rank;
}

std::vector<std::uint64_t> reduced_betti(const SimplicialComplex& complex, const FieldSpec& field) {
  const auto faces = face_masks(complex);
  const std::uint32_t p = field.is_rationals() ? 0 : field.characteristic();
  const int top = complex.dim();
  if (top < -1) return {};
  // ranks[k]: rank of the map from k-faces to (k-1)-faces, k = 0..top.
  std::vector<std::size_t> ranks(top + 2, 0);
  for (int k = 0; k <= top; ++k) {
    const auto src = masks_of_size(faces, k + 1);
    const auto dst = masks_of_size(faces, k);
    std::vector<std::vector<long long>> rows(dst.size(), std::vector<long long>(src.size(), 0));
    for (std::size_t c = 0; c < src.size(); ++c) {
      for (int v = 0; v < 32; ++v) {
        if (!(src[c] >> v & 1)) continue;
        const Mask g = src[c] & ~(Mask{1} << v);
        const auto it = std::lower_bound(dst.begin(), dst.end(), g);
        rows[it - dst.begin()][c] = removal_sign(src[c], v);
      }
    }
    ranks[k] = dense_rank(std::move(rows), p);
  }
  std::vector<std::uint64_t> out;
  for (int k = -1; k <= top; ++k) {
    const std::size_t count = masks_of_size(faces, k + 1).size();
    // ranks[0] is the augmentation.
    const std::size_t rank_out = k >= 0 ? ranks[k] : 0;
    const std::size_t rank_in = k + 1 <= top ? ranks[k + 1] : 0;
    out.push_back(count - rank_out - rank_in);
  }
  return out;
}

KoszulTable koszul_betti(const SimplicialComplex& complex, const FieldSpec& field,
                         int max_exponent) {
  const int n = static_cast<int>(complex.num_vertices());
  if (n > (max_exponent >= 2 ? 6 : 10)) throw std::invalid_argument("koszul oracle: too many vertices");
  const auto faces = face_masks(complex);
  const std::uint32_t p = field.is_rationals() ? 0 : field.characteristic();
  KoszulTable table;

  std::vector<int> a(n, 0);
  const int base = max_exponent + 1;
  int total_degrees = 1;
  for (int k = 0; k < n; ++k) total_degrees *= base;
  for (int code = 0; code < total_degrees; ++code) {
    int rest = code;
    Mask support = 0, ones = 0;
    int degree = 0;
    bool squarefree = true;
    for (int k = 0; k < n; ++k) {
      a[k] = rest % base;
      rest /= base;
      degree += a[k];
      if (a[k] > 0) support |= Mask{1} << k;
      if (a[k] == 1) ones |= Mask{1} << k;
      if (a[k] > 1) squarefree = false;
    }
    // K_i(a) has basis e_F, F ⊆ supp(a), |F| = i, with x^{a - e_F} ∉ I.
    auto alive = [&](Mask f) { return faces.count(support & ~(f & ones)) > 0; };
    std::vector<std::vector<Mask>> basis(n + 2);
    for (Mask f = support;; f = (f - 1) & support) {
      if (alive(f)) basis[std::popcount(f)].push_back(f);
      if (f == 0) break;
    }
    for (auto& b : basis) std::sort(b.begin(), b.end());
    std::vector<std::size_t> ranks(n + 2, 0);  // ranks[i]: rank of d_i: K_i -> K_{i-1}
    for (int i = 1; i <= n; ++i) {
      const auto& src = basis[i];
      const auto& dst = basis[i - 1];
      if (src.empty() || dst.empty()) continue;
      std::vector<std::vector<long long>> rows(dst.size(), std::vector<long long>(src.size(), 0));
      for (std::size_t c = 0; c < src.size(); ++c) {
        for (int v = 0; v < n; ++v) {
          if (!(src[c] >> v & 1)) continue;
          const Mask g = src[c] & ~(Mask{1} << v);
          const auto it = std::lower_bound(dst.begin(), dst.end(), g);
          if (it == dst.end() || *it != g) continue;  // x_v m vanishes in K[Δ]
          rows[it - dst.begin()][c] = removal_sign(src[c], v);
        }
      }
      ranks[i] = dense_rank(std::move(rows), p);
    }
    for (int i = 0; i <= n; ++i) {
      const std::size_t h = basis[i].size() - ranks[i] - ranks[i + 1];
      if (h == 0) continue;
      if (!squarefree) {
        table.nonsquarefree_vanish = false;
        continue;
      }
      table.entries[{i, degree - i}] += h;
    }
  }
  return table;
}

std::vector<Mask> minimal_non_faces(const SimplicialComplex& complex) {
  const auto faces = face_masks(complex);
  const std::size_t n = complex.num_vertices();
  std::vector<Mask> out;
  for (Mask m = 1; m < (Mask{1} << n); ++m) {
    if (faces.count(m)) continue;
    bool minimal = true;
    for (std::size_t v = 0; v < n && minimal; ++v) {
      if ((m >> v & 1) && !faces.count(m & ~(Mask{1} << v))) minimal = false;
    }
    if (minimal) out.push_back(m);
  }
  return out;
}

mpz_class stirling2(int n, int k) {
  std::vector<std::vector<mpz_class>> s(n + 1, std::vector<mpz_class>(n + 1, 0));
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= i; ++j) s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
  }
  return k <= n && k >= 0 ? s[n][k] : mpz_class(0);
}

SimplicialComplex random_complex(std::size_t n, std::size_t count, std::size_t max_size,
                                 std::mt19937_64& rng) {
  std::vector<std::vector<Vertex>> facets;
  for (Vertex v = 0; v < n; ++v) facets.push_back({v});
  std::uniform_int_distribution<std::size_t> size_dist(1, max_size);
  for (std::size_t c = 0; c < count; ++c) {
    std::vector<Vertex> all(n);
    for (Vertex v = 0; v < n; ++v) all[v] = v;
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(std::min(n, size_dist(rng)));
    std::sort(all.begin(), all.end());
    facets.push_back(all);
  }
  return SimplicialComplex::from_facets(facets, n);
}

}  // namespace sdbetti::oracle
