#include "sdbetti/formulas.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include <gmpxx.h>

#include "sdbetti/error.hpp"
#include "sdbetti/homology.hpp"
#include "sdbetti/standard.hpp"
#include "sdbetti/subdivision.hpp"

namespace sdbetti {

namespace {

void require_dj(int d, int j, const char* what) {
  if (d < 2 || d > 60 || j < 1 || j > d - 1) {
    throw InvalidArgument(std::string(what) + ": need 2 <= d <= 60 and 1 <= j <= d-1");
  }
}

std::int64_t pow2(int e) {
  if (e < 0 || e > 62) throw InvalidArgument("exponent out of range");
  return std::int64_t{1} << e;
}

mpz_class pow2z(long e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return out;
}

// Nondecreasing sequences of `parts` nonnegative integers summing to `total`.
void for_each_partition(int total, int parts, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> seq;
  std::function<void(int, int, int)> rec = [&](int left, int slots, int min_part) {
    if (slots == 0) {
      if (left == 0) fn(seq);
      return;
    }
    for (int v = min_part; v * slots <= left; ++v) {
      seq.push_back(v);
      rec(left - v, slots - 1, v);
      seq.pop_back();
    }
  };
  rec(total, parts, 0);
}

StrandPrediction make_prediction(int d, int j, int pdim, std::string source) {
  StrandPrediction p;
  p.d = d;
  p.j = j;
  p.pdim = pdim;
  p.claims.assign(static_cast<std::size_t>(pdim) + 1, Claim::Zero);
  p.source = std::move(source);
  return p;
}

void fill(StrandPrediction& p, std::int64_t lo, std::int64_t hi, Claim c) {
  lo = std::max<std::int64_t>(lo, 0);
  hi = std::min<std::int64_t>(hi, p.pdim);
  for (std::int64_t i = lo; i <= hi; ++i) p.claims[static_cast<std::size_t>(i)] = c;
}

std::string cell_name(int i, int j) {
  return "beta(" + std::to_string(i) + "," + std::to_string(i + j) + ")";
}

}  // namespace

// ---------------------------------------------------------------------------
// m_j(d)

std::int64_t m_closed(int d, int j) {
  require_dj(d, j, "m_closed");
  if (2 * j <= d) return j;
  const int gap = d - j;
  const int a = (2 * j - d) / gap;
  const int c = (2 * j - d) % gap;
  return pow2(a + 2) * (c + gap) - 2 * d + j;
}

std::vector<std::vector<int>> admissible_sequences(int d, int j) {
  require_dj(d, j, "admissible_sequences");
  std::vector<std::vector<int>> out;
  for (int r = 1; r <= std::min(j, d - j); ++r) {
    for_each_partition(j - r, r, [&](const std::vector<int>& seq) { out.push_back(seq); });
  }
  return out;
}

std::int64_t m_bruteforce(int d, int j) {
  require_dj(d, j, "m_bruteforce");
  if (d > 40) throw GateExceeded("m_bruteforce: d > 40");
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (const auto& seq : admissible_sequences(d, j)) {
    std::int64_t total = 0;
    for (int i : seq) total += pow2(i + 2) - 2;
    best = std::min(best, total - j);
  }
  return best;
}

// ---------------------------------------------------------------------------
// Strand predictions

const char* to_string(Claim c) noexcept {
  switch (c) {
    case Claim::Zero: return "zero";
    case Claim::Nonzero: return "nonzero";
    case Claim::Unknown: return "unknown";
  }
  return "?";
}

Claim StrandPrediction::at(int i) const noexcept {
  if (i < 0 || i > pdim) return Claim::Zero;
  return claims[static_cast<std::size_t>(i)];
}

std::vector<int> StrandPrediction::indices(Claim c) const {
  std::vector<int> out;
  for (int i = 0; i <= pdim; ++i) {
    if (claims[static_cast<std::size_t>(i)] == c) out.push_back(i);
  }
  return out;
}

StrandPrediction predict_strand_bar(int d, int j) {
  require_dj(d, j, "predict_strand_bar");
  if (d > 20) throw GateExceeded("predict_strand_bar: d > 20");
  const int pdim = static_cast<int>(pow2(d)) - d - 1;
  const std::int64_t upper = pow2(d) - 2 * d + j;
  if (j == d - 1) {
    auto p = make_prediction(d, j, pdim, "barycentric:last");
    fill(p, pdim, pdim, Claim::Nonzero);
    return p;
  }
  if (2 * j <= d) {
    auto p = make_prediction(d, j, pdim, "barycentric:lower");
    const std::int64_t a = pdim - m_closed(d, d - j - 1);
    fill(p, j, a, Claim::Nonzero);
    fill(p, a + 1, upper, Claim::Unknown);
    return p;
  }
  auto p = make_prediction(d, j, pdim, "barycentric:upper");
  const std::int64_t m = m_closed(d, j);
  fill(p, j, m - 1, Claim::Unknown);
  fill(p, m, upper, Claim::Nonzero);
  return p;
}

StrandPrediction predict_strand_edgewise(int d, int j, int r, std::size_t n_vertices) {
  require_dj(d, j, "predict_strand_edgewise");
  if (r < d) throw InvalidArgument("predict_strand_edgewise: need r >= d");
  if (n_vertices < static_cast<std::size_t>(d)) throw InvalidArgument("predict_strand_edgewise: too few vertices");
  const int pdim = static_cast<int>(n_vertices) - d;
  if (j == d - 1) {
    auto p = make_prediction(d, j, pdim, "edgewise:last");
    const std::int64_t start = pow2(d) - d - 1;
    fill(p, j, start - 1, Claim::Unknown);
    fill(p, start, pdim, Claim::Nonzero);
    return p;
  }
  if (2 * j <= d) {
    auto p = make_prediction(d, j, pdim, "edgewise:lower");
    fill(p, j, pdim, Claim::Nonzero);
    return p;
  }
  auto p = make_prediction(d, j, pdim, "edgewise:upper");
  const std::int64_t m = m_closed(d, j);
  fill(p, j, m - 1, Claim::Unknown);
  fill(p, m, pdim, Claim::Nonzero);
  return p;
}

int predict_t1_edgewise(const SimplicialComplex& complex, int r) {
  if (r < 2) throw InvalidArgument("predict_t1_edgewise: need r >= 2");
  if (complex.is_void() || complex.dim() < 0) throw InvalidArgument("predict_t1_edgewise: empty complex");
  if (complex.is_full_simplex() || is_flag(complex)) return 2;

  const auto non_faces = minimal_non_faces(complex);
  std::size_t t1 = 0;
  for (const auto& f : non_faces) t1 = std::max(t1, f.size());
  const auto vertices = complex.vertex_faces();
  for (const auto& f : non_faces) {
    if (f.size() != t1) continue;
    for (Vertex v : vertices) {
      if (f.contains(v)) continue;
      bool all = true;
      for (std::size_t pos = 0; pos < f.size() && all; ++pos) {
        std::vector<Vertex> g = f.without(pos).vertices();
        g.push_back(v);
        std::sort(g.begin(), g.end());
        all = complex.contains(g);
      }
      if (all) return static_cast<int>(t1);
    }
  }
  return static_cast<int>(t1) - 1;
}

RegPrediction predict_reg(const SimplicialComplex& complex, const FieldSpec& field,
                          const SubdivisionMode& mode, const HochsterOptions& options) {
  if (complex.is_void() || complex.dim() < 0) throw InvalidArgument("predict_reg: empty complex");
  if (mode.r < 1) throw InvalidArgument("predict_reg: need r >= 1");
  const int d = complex.dim() + 1;
  const bool top = reduced_betti(complex, field)[d - 1] != 0;
  if (mode.kind == SubdivisionMode::Kind::Barycentric) return {top ? d : d - 1, true};
  if (top) return {d, true};
  if (mode.r >= d) return {d - 1, true};
  const int base = graded_betti_table(complex, field, options).reg();
  return {std::max(base, mode.r - 1), mode.r == 1};
}

// ---------------------------------------------------------------------------
// Induced spheres

std::vector<std::vector<Vertex>> SphereFamily::w_union() const {
  std::vector<std::vector<Vertex>> out;
  for (const auto& part : w) out.insert(out.end(), part.begin(), part.end());
  return out;
}

SphereFamily sphere_family(int d, const std::vector<int>& sequence) {
  if (sequence.empty()) throw InvalidArgument("sphere_family: empty sequence");
  const int r = static_cast<int>(sequence.size());
  int sum = 0;
  for (int i : sequence) {
    if (i < 0) throw InvalidArgument("sphere_family: negative entry");
    sum += i;
  }
  if (sum + 2 * r > d) throw InvalidArgument("sphere_family: sum + 2r exceeds d");
  if (d > 20) throw GateExceeded("sphere_family: d > 20");

  SphereFamily fam;
  fam.d = d;
  fam.j = sum + r;
  fam.sequence = sequence;
  std::vector<int> s(static_cast<std::size_t>(r) + 1, 0);  // s[0] = 0
  for (int l = 1; l <= r; ++l) s[static_cast<std::size_t>(l)] = s[static_cast<std::size_t>(l) - 1] + sequence[static_cast<std::size_t>(l) - 1] + 2;

  // Proper nonempty subsets of [lo, hi), each united with [0, base).
  auto block = [](int lo, int hi, std::vector<Vertex> prefix) {
    std::vector<std::vector<Vertex>> out;
    const int width = hi - lo;
    for (std::uint32_t mask = 1; mask + 1 < (1u << width); ++mask) {
      std::vector<Vertex> a = prefix;
      for (int b = 0; b < width; ++b) {
        if (mask >> b & 1) a.push_back(static_cast<Vertex>(lo + b));
      }
      std::sort(a.begin(), a.end());
      out.push_back(std::move(a));
    }
    return out;
  };
  auto range = [](int lo, int hi) {
    std::vector<Vertex> v;
    for (int x = lo; x < hi; ++x) v.push_back(static_cast<Vertex>(x));
    return v;
  };

  for (int l = 1; l <= r; ++l) {
    const int lo = s[static_cast<std::size_t>(l) - 1];
    fam.w.push_back(block(lo, s[static_cast<std::size_t>(l)], range(0, lo)));
  }
  if (r >= 2) {
    const int lo = s[static_cast<std::size_t>(r) - 1];
    const int hi = s[static_cast<std::size_t>(r)];
    const auto free = range(s[1], lo);
    for (std::uint32_t bmask = 0; bmask < (1u << free.size()); ++bmask) {
      std::vector<Vertex> b;
      for (std::size_t t = 0; t < free.size(); ++t) {
        if (bmask >> t & 1) b.push_back(free[t]);
      }
      auto part = block(lo, hi, b);
      fam.c.insert(fam.c.end(), part.begin(), part.end());
    }
  }
  return fam;
}

std::vector<Vertex> vertices_of(const SimplicialComplex& sd,
                                const std::vector<std::vector<Vertex>>& subsets) {
  std::vector<Vertex> out;
  out.reserve(subsets.size());
  for (const auto& a : subsets) {
    const auto id = sd.find_label(SetLabel{a});
    if (!id) throw InvalidArgument("vertices_of: subset is not a vertex of the subdivision");
    out.push_back(*id);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool appendix_hypotheses_hold(int d, int j, const std::vector<int>& seq) {
  if (d < 3 || 2 * j <= d || j > d - 1 || seq.empty()) return false;
  if (!std::is_sorted(seq.begin(), seq.end())) return false;
  const int r = static_cast<int>(seq.size());
  int sum = 0;
  for (int i : seq) {
    if (i < 0) return false;
    sum += i;
  }
  if (sum + (r - 1) != j - 1 || sum + 2 * r > d) return false;
  if (seq.front() >= 1 && r < 2) return false;
  return true;
}

bool appendix_inequalities(int d, int j, const std::vector<int>& seq) {
  if (!appendix_hypotheses_hold(d, j, seq)) {
    throw InvalidArgument("appendix_inequalities: hypotheses not satisfied");
  }
  const long r = static_cast<long>(seq.size());
  auto term = [](long i) -> mpz_class { return pow2z(i + 2) - 2; };

  mpz_class s_total = 0;
  for (int i : seq) s_total += term(i);
  mpz_class t = 0;
  if (r >= 2) {
    long middle = 2 * r - 4;
    for (long l = 1; l + 1 < r; ++l) middle += seq[static_cast<std::size_t>(l)];
    t = term(seq.back()) * pow2z(middle);
  }
  const mpz_class lhs = t + s_total;
  if (seq.front() == 0) return lhs >= pow2z(j + 1) - 2;

  std::vector<int> moved = seq;
  moved[0] -= 1;
  moved[1] += 1;
  mpz_class rhs = 0;
  for (int i : moved) rhs += term(i);
  return lhs >= rhs;
}

// ---------------------------------------------------------------------------
// Reports

const char* to_string(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Observed: return "OBSERVED";
  }
  return "?";
}

void VerificationReport::add(std::string name, CheckStatus status, std::string detail) {
  checks.push_back({std::move(name), status, std::move(detail)});
}

void VerificationReport::expect(std::string name, bool ok, std::string detail) {
  add(std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail));
}

void VerificationReport::append(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

bool VerificationReport::ok() const noexcept { return count(CheckStatus::Fail) == 0; }

std::size_t VerificationReport::count(CheckStatus s) const noexcept {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [s](const Check& c) { return c.status == s; }));
}

VerificationReport compare_strands(const BettiTable& table,
                                   const std::vector<StrandPrediction>& predictions) {
  if (!table.complete()) throw InvalidArgument("compare_strands: table is partial");
  VerificationReport rep;
  const int observed_pdim = table.pdim();
  for (const auto& pred : predictions) {
    const int j = pred.j;
    const int last = std::max(pred.pdim, observed_pdim);
    for (int i = 0; i <= last; ++i) {
      const std::uint64_t value = table.at(i, j);
      const Claim claim = pred.at(i);
      std::string detail = std::string(to_string(claim)) + " predicted, value " + std::to_string(value);
      if (claim == Claim::Unknown) {
        rep.add(cell_name(i, j), CheckStatus::Observed, std::move(detail));
      } else {
        rep.expect(cell_name(i, j), (claim == Claim::Nonzero) == (value != 0), std::move(detail));
      }
    }
  }
  return rep;
}

VerificationReport verify_bar_simplex(int d, const FieldSpec& field, const HochsterOptions& options) {
  if (d < 2) throw InvalidArgument("verify_bar_simplex: need d >= 2");
  const auto sd = barycentric(simplex(d - 1));
  const auto table = graded_betti_table(sd, field, options);
  std::vector<StrandPrediction> preds;
  for (int j = 1; j <= d - 1; ++j) preds.push_back(predict_strand_bar(d, j));
  VerificationReport rep = compare_strands(table, preds);
  rep.suite = "thm-bar";
  const int pdim = static_cast<int>(pow2(d)) - d - 1;
  rep.expect("pdim", table.pdim() == pdim,
             "expected " + std::to_string(pdim) + ", got " + std::to_string(table.pdim()));
  rep.expect("reg", table.reg() == d - 1,
             "expected " + std::to_string(d - 1) + ", got " + std::to_string(table.reg()));
  return rep;
}

namespace {

// Greedy growth of W = V(lk F) by vertices that keep H̃_{j-1}(Δ_W) nonzero.
// Returns, for every size reached, the witness set of that size.
std::map<std::size_t, std::vector<Vertex>> grow_witnesses(const SimplicialComplex& sub, const Face& face,
                                                         int j, const FieldSpec& field, std::uint64_t seed) {
  std::map<std::size_t, std::vector<Vertex>> out;
  const auto lk = link(sub, face);
  std::vector<Vertex> w = lk.parent_vertices();
  std::sort(w.begin(), w.end());
  auto nonzero = [&](const std::vector<Vertex>& set) {
    return reduced_betti(induced(sub, set), field)[j - 1] != 0;
  };
  if (!nonzero(w)) return out;
  out[w.size()] = w;

  std::vector<Vertex> rest;
  for (Vertex v = 0; v < sub.num_vertices(); ++v) {
    if (!face.contains(v) && !std::binary_search(w.begin(), w.end(), v)) rest.push_back(v);
  }
  std::mt19937_64 rng(seed);
  std::shuffle(rest.begin(), rest.end(), rng);
  for (Vertex v : rest) {
    auto next = w;
    next.insert(std::upper_bound(next.begin(), next.end(), v), v);
    if (nonzero(next)) {
      w = std::move(next);
      out[w.size()] = w;
    }
  }
  return out;
}

}  // namespace

VerificationReport verify_edgewise_simplex(int d, int r, const FieldSpec& field,
                                           const HochsterOptions& options) {
  if (d < 2 || r < d) throw InvalidArgument("verify_edgewise_simplex: need d >= 2 and r >= d");
  VerificationReport rep;
  rep.suite = "edgewise";
  const auto sub = edgewise(simplex(d - 1), r);
  const std::size_t n = sub.num_vertices();
  std::vector<StrandPrediction> preds;
  for (int j = 1; j <= d - 1; ++j) preds.push_back(predict_strand_edgewise(d, j, r, n));

  if (n <= options.vertex_gate) {
    const auto table = graded_betti_table(sub, field, options);
    rep.append(compare_strands(table, preds));
    rep.expect("pdim", table.pdim() == static_cast<int>(n) - d,
               "expected " + std::to_string(n - static_cast<std::size_t>(d)) + ", got " + std::to_string(table.pdim()));
    rep.expect("reg", table.reg() == d - 1,
               "expected " + std::to_string(d - 1) + ", got " + std::to_string(table.reg()));
    return rep;
  }

  // Witness mode: only Nonzero claims can be certified.
  for (const auto& pred : preds) {
    const int j = pred.j;
    const auto wit = interior_face_witness(d, r, d - j);
    std::map<std::size_t, std::vector<Vertex>> found;
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      for (auto& [size, set] : grow_witnesses(wit.complex, wit.face, j, field, 0x5eed + seed)) {
        found.emplace(size, std::move(set));
      }
    }
    for (int i = 0; i <= pred.pdim; ++i) {
      const Claim claim = pred.at(i);
      const auto it = found.find(static_cast<std::size_t>(i + j));
      if (claim == Claim::Nonzero) {
        if (it != found.end()) {
          rep.add(cell_name(i, j), CheckStatus::Pass, "witness W of size " + std::to_string(i + j));
        } else {
          rep.add(cell_name(i, j), CheckStatus::Observed, "nonzero predicted, no witness found");
        }
      } else if (claim == Claim::Unknown && it != found.end()) {
        rep.add(cell_name(i, j), CheckStatus::Observed, "unknown predicted, witness found");
      }
    }
  }
  return rep;
}

}  // namespace sdbetti
