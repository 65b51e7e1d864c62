#include "sdbetti/asymptotics.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <set>

#include "sdbetti/error.hpp"
#include "sdbetti/homology.hpp"
#include "sdbetti/standard.hpp"
#include "sdbetti/subdivision.hpp"

namespace sdbetti {

namespace {

constexpr int kLambdaMax = 8;

LambdaMatrix build_lambda(int d) {
  const auto n = static_cast<std::size_t>(d) + 1;
  LambdaMatrix out{d, QMatrix(n, n)};
  out.matrix(0, 0) = 1;
  for (int i = 0; i < d; ++i) {
    const auto sd = barycentric(simplex(i));
    const auto fs = sd.f_vector();
    const auto fb = boundary_complex(sd).f_vector();
    for (int j = 0; j <= i; ++j) {
      out.matrix(static_cast<std::size_t>(i) + 1, static_cast<std::size_t>(j) + 1) =
          mpz_class(static_cast<unsigned long>(fs.at(j) - fb.at(j)));
    }
  }
  return out;
}

mpz_class factorial(int k) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(k));
  return out;
}

mpz_class binomial(long n, long k) {
  mpz_class out;
  if (n < 0 || k < 0 || k > n) return 0;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

mpz_class from_u64(std::uint64_t v) {
  mpz_class out;
  mpz_import(out.get_mpz_t(), 1, 1, sizeof v, 0, 0, &v);
  return out;
}

int dimension_count(const SimplicialComplex& complex, const char* what) {
  if (complex.is_void() || complex.dim() < 0) throw InvalidArgument(std::string(what) + ": empty complex");
  return complex.dim() + 1;
}

// Lexicographic comparison of f-vectors from the top dimension down.
bool f_less(const FVector& a, const FVector& b) {
  const int top = std::max(a.d(), b.d()) - 1;
  for (int k = top; k >= -1; --k) {
    if (a.at(k) != b.at(k)) return a.at(k) < b.at(k);
  }
  return false;
}

}  // namespace

LambdaMatrix lambda_matrix(int d) {
  if (d < 1 || d > kLambdaMax) throw GateExceeded("lambda_matrix: need 1 <= d <= 8");
  static std::array<std::once_flag, kLambdaMax + 1> flags;
  static std::array<LambdaMatrix, kLambdaMax + 1> cache;
  const auto idx = static_cast<std::size_t>(d);
  std::call_once(flags[idx], [&] { cache[idx] = build_lambda(d); });
  return cache[idx];
}

std::vector<mpz_class> f_iterate_sd(const FVector& f, int r) {
  if (r < 0) throw InvalidArgument("f_iterate_sd: negative r");
  const int d = f.d();
  std::vector<mpz_class> cur;
  for (int k = -1; k < d; ++k) cur.push_back(from_u64(f.at(k)));
  if (d < 1 || r == 0) return cur;
  const auto lambda = lambda_matrix(d);
  const auto n = static_cast<std::size_t>(d) + 1;
  std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = lambda.matrix(i, j).get_num();
  }
  for (int step = 0; step < r; ++step) {
    std::vector<mpz_class> next(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (cur[i] == 0) continue;
      for (std::size_t j = 0; j <= i; ++j) next[j] += cur[i] * m[i][j];
    }
    cur = std::move(next);
  }
  return cur;
}

EigenData eigendecompose(const LambdaMatrix& lambda) {
  const int d = lambda.d;
  const auto n = static_cast<std::size_t>(d) + 1;
  EigenData out;
  out.d = d;
  out.p = QMatrix(n, n);
  out.diagonal = QMatrix(n, n);

  // Eigenvalues k! for k = 0..d; 0! = 1! gives a double eigenvalue 1.
  std::size_t column = 0;
  for (int k = 0; k <= d; ++k) {
    const mpq_class value(factorial(k));
    if (k == 1) continue;  // handled together with k = 0
    const std::size_t mult = (k == 0 && d >= 1) ? 2 : 1;
    QMatrix shifted = lambda.matrix;
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= value;
    const auto basis = shifted.kernel();
    if (basis.size() != mult) throw InternalError("eigendecompose: Λ is not diagonalizable");
    for (const auto& v : basis) {
      for (std::size_t i = 0; i < n; ++i) out.p(i, column) = v[i];
      out.diagonal(column, column) = value;
      ++column;
    }
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (out.p(i, n - 1) != 0) throw InternalError("eigendecompose: top eigenvector is not e_d");
  }
  if (out.p(n - 1, n - 1) != 1) throw InternalError("eigendecompose: top eigenvector is not e_d");
  out.p_inv = out.p.inverse();
  if (!(out.p * out.diagonal * out.p_inv == lambda.matrix)) {
    throw InternalError("eigendecompose: P D P^-1 != Λ");
  }
  return out;
}

std::vector<mpq_class> limit_polynomial(const FVector& f, const EigenData& eigen) {
  const auto n = static_cast<std::size_t>(eigen.d) + 1;
  if (f.d() != eigen.d) throw InvalidArgument("limit_polynomial: dimension mismatch");
  std::vector<mpq_class> row;
  for (int k = -1; k < eigen.d; ++k) row.emplace_back(from_u64(f.at(k)));
  auto fp = row * eigen.p;
  const mpq_class top(factorial(eigen.d));
  for (std::size_t c = 0; c < n; ++c) {
    if (eigen.diagonal(c, c) != top) fp[c] = 0;
  }
  return fp * eigen.p_inv;
}

mpq_class limit_vertex_constant(int d) {
  const auto eigen = eigendecompose(lambda_matrix(d));
  return eigen.p_inv(static_cast<std::size_t>(d), 1);
}

mpz_class f0_edgewise(const FVector& f, int r) {
  if (r < 1) throw InvalidArgument("f0_edgewise: need r >= 1");
  mpz_class total = 0;
  for (int i = 1; i <= f.d(); ++i) total += from_u64(f.at(i - 1)) * binomial(r - 1, i - 1);
  return total;
}

MinimalCycle minimal_top_cycle(const SimplicialComplex& complex, const FieldSpec& field) {
  const int d = dimension_count(complex, "minimal_top_cycle");
  FieldSpec search = field;
  if (field.is_rationals()) {
    search = FieldSpec::gf(2);
    const auto q = reduced_betti(complex, field)[d - 1];
    const auto two = reduced_betti(complex, search)[d - 1];
    if (q != two) {
      throw InvalidArgument("minimal_top_cycle: top homology over Q and GF(2) differ; pass a prime field");
    }
  }
  const std::uint32_t p = search.characteristic();
  const auto bm = boundary_matrix(complex, d - 1);
  const auto basis = kernel(bm.matrix, search);
  if (basis.empty()) throw InvalidArgument("minimal_top_cycle: no top-dimensional homology");

  double budget = 1;
  for (std::size_t t = 0; t < basis.size(); ++t) {
    budget *= p;
    if (budget > double(1 << 20)) throw GateExceeded("minimal_top_cycle: p^k exceeds 2^20");
  }

  const std::size_t m = bm.matrix.cols;
  std::vector<std::vector<std::uint32_t>> vecs(basis.size(), std::vector<std::uint32_t>(m));
  for (std::size_t t = 0; t < basis.size(); ++t) {
    for (std::size_t i = 0; i < m; ++i) vecs[t][i] = static_cast<std::uint32_t>(basis[t][i].get_num().get_ui());
  }

  // Odometer over GF(p)^k; raising one digit by 1 always adds its basis vector.
  std::vector<std::uint32_t> digits(basis.size(), 0);
  std::vector<std::uint32_t> acc(m, 0);
  std::size_t best_size = m + 1;
  std::set<std::vector<std::uint32_t>> candidates;
  std::vector<std::uint32_t> support;
  while (true) {
    std::size_t t = 0;
    for (; t < digits.size(); ++t) {
      for (std::size_t i = 0; i < m; ++i) {
        acc[i] += vecs[t][i];
        if (acc[i] >= p) acc[i] -= p;
      }
      if (++digits[t] < p) break;
      digits[t] = 0;
    }
    if (t == digits.size()) break;
    support.clear();
    for (std::size_t i = 0; i < m; ++i) {
      if (acc[i] != 0) support.push_back(static_cast<std::uint32_t>(i));
    }
    if (support.empty() || support.size() > best_size) continue;
    if (support.size() < best_size) {
      best_size = support.size();
      candidates.clear();
    }
    candidates.insert(support);
  }

  const auto& faces = complex.faces().of_dim(d - 1);
  MinimalCycle best;
  bool have = false;
  for (const auto& cand : candidates) {  // std::set order: lexicographic support
    std::vector<Face> chosen;
    for (auto i : cand) chosen.push_back(faces.face(i));
    auto closure = SimplicialComplex::from_facets(chosen, complex.num_vertices());
    auto f = closure.f_vector();
    if (!have || f_less(f, best.f)) {
      best = MinimalCycle{search, std::move(chosen), std::move(closure), std::move(f)};
      have = true;
    }
  }
  return best;
}

mpq_class last_strand_limit(const SimplicialComplex& complex, const FieldSpec& field) {
  const int d = dimension_count(complex, "last_strand_limit");
  const auto cyc = minimal_top_cycle(complex, field);
  mpq_class ratio(from_u64(cyc.f.at(d - 1)), from_u64(complex.f_vector().at(d - 1)));
  ratio.canonicalize();
  return 1 - ratio;
}

SimplicialComplex build_limit_example(int d, int p, int q, int c) {
  if (d < 2 || p < 0 || q <= p || c < 1) {
    throw InvalidArgument("build_limit_example: need d >= 2, 0 <= p < q, c >= 1");
  }
  const auto sphere_facets = static_cast<std::size_t>(c) * static_cast<std::size_t>(q - p);
  if (d == 2 && sphere_facets < 3) throw InvalidArgument("build_limit_example: cycle needs >= 3 edges");
  const auto sphere = d == 2 ? cycle(sphere_facets) : stacked_sphere(d - 1, sphere_facets);
  const Face ridge = sphere.facets().front().without(sphere.facets().front().size() - 1);
  return stacked_attach(sphere, static_cast<std::size_t>(c) * static_cast<std::size_t>(p), ridge);
}

VerificationReport verify_last_strand_small_r(const SimplicialComplex& complex, int r,
                                             const FieldSpec& field, const SubdivisionMode& mode,
                                             const HochsterOptions& options) {
  const int d = dimension_count(complex, "verify_last_strand_small_r");
  if (r < 1) throw InvalidArgument("verify_last_strand_small_r: need r >= 1");
  const bool bary = mode.kind == SubdivisionMode::Kind::Barycentric;
  const auto sub = bary ? barycentric_iter(complex, r) : edgewise(complex, r);
  const auto cyc = minimal_top_cycle(complex, field);
  const auto sigma = bary ? barycentric_iter(cyc.closure, r) : edgewise(cyc.closure, r);
  const auto sigma_vertices = static_cast<int>(sigma.f_vector().at(0));
  const auto table = graded_betti_table(sub, field, options);

  VerificationReport rep;
  rep.suite = "last-strand";
  const int begin = sigma_vertices - d;
  const int end = table.pdim();
  rep.add("window", CheckStatus::Observed,
          "[" + std::to_string(begin) + ", " + std::to_string(end) + "], cycle field " + cyc.field.name());
  for (int i = 0; i <= end; ++i) {
    const auto value = table.at(i, d);
    const std::string name = "beta(" + std::to_string(i) + "," + std::to_string(i + d) + ")";
    if (i >= begin) {
      rep.expect(name, value != 0, "value " + std::to_string(value));
    } else if (value != 0) {
      rep.add(name, CheckStatus::Observed, "nonzero below window, value " + std::to_string(value));
    } else {
      rep.add(name, CheckStatus::Observed, "zero below window");
    }
  }
  return rep;
}

std::uint64_t interior_vertex_count_sd3(int d) {
  if (d < 1) throw InvalidArgument("interior_vertex_count_sd3: need d >= 1");
  if (d <= 4) {
    const auto sd3 = barycentric_iter(simplex(d - 1), 3);
    return sd3.f_vector().at(0) - boundary_complex(sd3).f_vector().at(0);
  }
  const auto whole = f_iterate_sd(simplex(d - 1).f_vector(), 3);
  const auto rim = f_iterate_sd(simplex_boundary(d - 1).f_vector(), 3);
  const mpz_class diff = whole[1] - rim[1];
  return diff.get_ui();
}

std::vector<StrandWindow> asymptotic_window(const SimplicialComplex& complex, const SubdivisionMode& mode) {
  const int d = dimension_count(complex, "asymptotic_window");
  if (d < 2) throw InvalidArgument("asymptotic_window: need dimension >= 1");
  const auto f = complex.f_vector();
  const mpz_class two_d = mpz_class(1) << static_cast<unsigned>(d);
  std::vector<StrandWindow> out;
  auto start = [&](int j) -> mpz_class {
    if (j == d - 1) return two_d - d - 1;
    if (2 * j <= d) return j;
    return mpz_class(static_cast<long>(m_closed(d, j)));
  };

  if (mode.kind == SubdivisionMode::Kind::Barycentric) {
    if (mode.r < 3) throw InvalidArgument("asymptotic_window: barycentric mode needs r >= 3");
    const mpz_class vertices = f_iterate_sd(f, mode.r)[1];
    const mpz_class base = vertices - from_u64(interior_vertex_count_sd3(d));
    for (int j = 1; j <= d - 1; ++j) {
      mpz_class tail;
      if (j == d - 1) tail = two_d - d - 1;
      else if (2 * j <= d) tail = two_d - d - 1 - static_cast<long>(m_closed(d, d - j - 1));
      else tail = two_d - 2 * d + j;
      out.push_back({j, start(j), base + tail});
    }
    return out;
  }

  if (mode.r < 2 * d) throw InvalidArgument("asymptotic_window: edgewise mode needs r >= 2d");
  const mpz_class vertices = f0_edgewise(f, mode.r);
  const mpz_class end = vertices + binomial(2 * d - 1, d - 1) - d - binomial(3 * d - 1, d - 1);
  for (int j = 1; j <= d - 1; ++j) out.push_back({j, start(j), end});
  return out;
}

}  // namespace sdbetti
