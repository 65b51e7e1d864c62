#include "suites.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include <gmpxx.h>

#include "sdbetti/asymptotics.hpp"
#include "sdbetti/error.hpp"
#include "sdbetti/homology.hpp"
#include "sdbetti/json_io.hpp"
#include "sdbetti/standard.hpp"
#include "sdbetti/subdivision.hpp"

namespace sdbetti::cli {

namespace {

std::string join_ints(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string show(const mpq_class& q) { return q.get_str(); }

SimplicialComplex subdivide(const SimplicialComplex& c, const SubdivisionMode& mode) {
  return mode.kind == SubdivisionMode::Kind::Barycentric ? barycentric_iter(c, mode.r) : edgewise(c, mode.r);
}

std::string mode_name(const SubdivisionMode& m) {
  return std::string(m.kind == SubdivisionMode::Kind::Barycentric ? "sd^" : "edge^") + std::to_string(m.r);
}

VerificationReport suite_mj(const SuiteParams& p) {
  VerificationReport rep;
  const int dmax = p.dmax > 0 ? p.dmax : 16;
  for (int d = 2; d <= dmax; ++d) {
    for (int j = 1; j < d; ++j) {
      const auto closed = m_closed(d, j);
      const auto brute = m_bruteforce(d, j);
      rep.expect("m_" + std::to_string(j) + "(" + std::to_string(d) + ")", closed == brute,
                 "closed " + std::to_string(closed) + ", brute force " + std::to_string(brute));
    }
  }
  return rep;
}

VerificationReport suite_gorenstein(const SuiteParams& p) {
  VerificationReport rep;
  const int d = p.d.value_or(4);
  if (d < 2) throw InvalidArgument("gorenstein: need d >= 2");
  // sd(Δ_{d-1}) is a cone over sd(∂Δ_{d-1}); both tables are symmetric.
  const std::pair<const char*, SimplicialComplex> cases[] = {
      {"sd(simplex)", barycentric(simplex(d - 1))}, {"sd(simplex boundary)", barycentric(simplex_boundary(d - 1))}};
  for (const auto& [name, complex] : cases) {
    const auto table = graded_betti_table(complex, p.field, p.options);
    rep.expect(std::string(name) + " symmetry (2^d-d-1, 2^d-2)", gorenstein_symmetry_check(table, d));
    rep.expect(std::string(name) + " symmetry (pdim, pdim+reg)", gorenstein_symmetry_check(table));
    rep.expect(std::string(name) + " top entry", table.at((1 << d) - d - 1, d - 1) == 1,
               "beta(" + std::to_string((1 << d) - d - 1) + "," + std::to_string((1 << d) - 2) + ")");
  }
  return rep;
}

VerificationReport suite_link(const SuiteParams& p) {
  VerificationReport rep;
  const int d = p.d.value_or(4);
  const int r = p.r.value_or(d);
  for (int s = 1; s <= d - 1; ++s) {
    const auto wit = interior_face_witness(d, r, s);
    const std::string tag = "s=" + std::to_string(s);
    rep.expect(tag + " interior", interior_face_check(wit.complex, wit.face));
    const auto lk = link(wit.complex, wit.face);
    const auto target = barycentric(simplex_boundary(d - s));
    rep.expect(tag + " link is sd of simplex boundary", is_isomorphic(lk, target),
               "link " + to_string(lk.f_vector()) + ", target " + to_string(target.f_vector()));
  }
  return rep;
}

struct RegCase {
  std::string descriptor;
  SubdivisionMode mode;
};

std::vector<RegCase> default_reg_cases() {
  using M = SubdivisionMode;
  return {{"cycle:6", M::barycentric(1)},     {"cycle:6", M::edgewise(2)},
          {"cycle:5", M::edgewise(3)},        {"path:4", M::barycentric(2)},
          {"path:4", M::edgewise(2)},         {"simplex:2", M::barycentric(1)},
          {"simplex:2", M::edgewise(2)},      {"simplex:2", M::edgewise(3)},
          {"simplex_boundary:3", M::barycentric(1)}, {"simplex_boundary:3", M::edgewise(2)},
          {"stacked_sphere:2,6", M::edgewise(2)}, {"cone:cycle:4", M::edgewise(2)}};
}

VerificationReport suite_reg(const SuiteParams& p) {
  VerificationReport rep;
  std::vector<std::pair<std::string, SimplicialComplex>> inputs;
  std::vector<SubdivisionMode> modes;
  if (p.input) {
    const int r = p.r.value_or(2);
    inputs.emplace_back("input", *p.input);
    modes.push_back(p.mode == "edge" ? SubdivisionMode::edgewise(r) : SubdivisionMode::barycentric(r));
  } else {
    for (const auto& c : default_reg_cases()) {
      inputs.emplace_back(c.descriptor, standard_complex(c.descriptor));
      modes.push_back(c.mode);
    }
  }
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    const auto& [name, complex] = inputs[k];
    const auto& mode = modes[k];
    const auto sub = subdivide(complex, mode);
    const std::string tag = name + " " + mode_name(mode);
    const auto pred = predict_reg(complex, p.field, mode, p.options);
    const int reg = graded_betti_table(sub, p.field, p.options).reg();
    if (pred.exact) {
      rep.expect(tag + " reg", reg == pred.value,
                 "predicted " + std::to_string(pred.value) + ", computed " + std::to_string(reg));
    } else {
      rep.expect(tag + " reg lower bound", reg >= pred.value,
                 "bound " + std::to_string(pred.value) + ", computed " + std::to_string(reg));
    }
    if (mode.kind == SubdivisionMode::Kind::Edgewise && mode.r >= 2) {
      const int t1 = predict_t1_edgewise(complex, mode.r);
      const auto actual = static_cast<int>(max_minimal_non_face_size(sub));
      rep.expect(tag + " t1", t1 == actual,
                 "predicted " + std::to_string(t1) + ", computed " + std::to_string(actual));
    }
  }
  return rep;
}

VerificationReport suite_depth(const SuiteParams& p) {
  VerificationReport rep;
  std::vector<std::pair<std::string, SimplicialComplex>> inputs;
  if (p.input) {
    inputs.emplace_back("input", *p.input);
  } else {
    for (const char* descriptor : {"cycle:5", "path:4", "simplex:2", "simplex_boundary:3", "cone:path:3"}) {
      inputs.emplace_back(descriptor, standard_complex(descriptor));
    }
    const auto two_edges = disjoint_union(path(2), path(2));
    inputs.emplace_back("two edges", two_edges);
    inputs.emplace_back("triangle with pendant", stacked_attach(simplex(2), 1, Face{0}));
  }
  for (const auto& [name, complex] : inputs) {
    const int depth = ring_invariants(graded_betti_table(complex, p.field, p.options), complex).depth;
    for (const auto mode : {SubdivisionMode::barycentric(1), SubdivisionMode::edgewise(2), SubdivisionMode::edgewise(3)}) {
      const auto sub = subdivide(complex, mode);
      if (sub.num_vertices() > p.options.vertex_gate) {
        rep.add(name + " " + mode_name(mode), CheckStatus::Observed, "skipped above the vertex gate");
        continue;
      }
      const int sub_depth = ring_invariants(graded_betti_table(sub, p.field, p.options), sub).depth;
      rep.expect(name + " " + mode_name(mode), sub_depth == depth,
                 "depth " + std::to_string(depth) + " vs " + std::to_string(sub_depth));
    }
  }
  return rep;
}

VerificationReport suite_appendix(const SuiteParams& p) {
  VerificationReport rep;
  const int dmax = p.dmax > 0 ? p.dmax : 14;
  for (int d = 3; d <= dmax; ++d) {
    for (int j = d / 2 + 1; j <= d - 1; ++j) {
      for (const auto& seq : admissible_sequences(d, j)) {
        if (!appendix_hypotheses_hold(d, j, seq)) continue;
        rep.expect("d=" + std::to_string(d) + " j=" + std::to_string(j) + " " + join_ints(seq),
                   appendix_inequalities(d, j, seq));
      }
    }
  }
  return rep;
}

VerificationReport suite_last_strand(const SuiteParams& p) {
  VerificationReport rep;
  if (p.input) {
    const int r = p.r.value_or(1);
    const auto mode = p.mode == "edge" ? SubdivisionMode::edgewise(r) : SubdivisionMode::barycentric(r);
    return verify_last_strand_small_r(*p.input, r, p.field, mode, p.options);
  }
  struct Case {
    std::array<int, 4> example;
    SubdivisionMode mode;
  };
  const std::vector<Case> cases = {{{2, 2, 5, 1}, SubdivisionMode::barycentric(1)},
                                   {{2, 1, 2, 3}, SubdivisionMode::barycentric(1)},
                                   {{2, 2, 5, 1}, SubdivisionMode::edgewise(2)},
                                   {{2, 0, 1, 4}, SubdivisionMode::barycentric(1)}};
  for (const auto& c : cases) {
    const auto [d, pp, q, scale] = c.example;
    const auto complex = build_limit_example(d, pp, q, scale);
    const std::string tag = "example(" + std::to_string(d) + "," + std::to_string(pp) + "," +
                            std::to_string(q) + "," + std::to_string(scale) + ") " + mode_name(c.mode);
    const auto limit = last_strand_limit(complex, p.field);
    rep.expect(tag + " limit", limit == mpq_class(pp) / q, "limit " + show(limit));
    auto sub = verify_last_strand_small_r(complex, c.mode.r, p.field, c.mode, p.options);
    for (auto& check : sub.checks) check.name = tag + " " + check.name;
    rep.append(sub);
  }
  return rep;
}

mpz_class stirling2(int n, int k) {
  std::vector<std::vector<mpz_class>> s(static_cast<std::size_t>(n) + 1,
                                        std::vector<mpz_class>(static_cast<std::size_t>(n) + 1, 0));
  s[0][0] = 1;
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= a; ++b) {
      s[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          b * s[static_cast<std::size_t>(a) - 1][static_cast<std::size_t>(b)] +
          s[static_cast<std::size_t>(a) - 1][static_cast<std::size_t>(b) - 1];
    }
  }
  return s[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

VerificationReport suite_limits(const SuiteParams& p) {
  VerificationReport rep;
  const int dmax = p.dmax > 0 ? std::min(p.dmax, 6) : 5;
  for (int d = 1; d <= dmax; ++d) {
    const auto lambda = lambda_matrix(d);
    bool match = true;
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j <= i; ++j) {
        mpz_class fact;
        mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(j) + 1);
        match = match && lambda.matrix(static_cast<std::size_t>(i) + 1, static_cast<std::size_t>(j) + 1) ==
                             mpq_class(fact * stirling2(i + 1, j + 1));
      }
    }
    rep.expect("lambda d=" + std::to_string(d) + " vs (j+1)! S(i+1,j+1)", match);
    const auto eigen = eigendecompose(lambda);
    rep.expect("eigendecomposition d=" + std::to_string(d),
               eigen.p * eigen.diagonal * eigen.p_inv == lambda.matrix);
    rep.add("p^-1 d=" + std::to_string(d), CheckStatus::Observed, show(limit_vertex_constant(d)));
  }

  std::vector<std::pair<std::string, SimplicialComplex>> inputs;
  if (p.input) {
    inputs.emplace_back("input", *p.input);
  } else {
    for (const char* descriptor : {"cycle:7", "simplex:2", "stacked_sphere:2,8", "simplex_boundary:4"}) {
      inputs.emplace_back(descriptor, standard_complex(descriptor));
    }
  }
  const mpq_class tol(1, 1000000);
  for (const auto& [name, complex] : inputs) {
    const auto f = complex.f_vector();
    const int d = f.d();
    if (d < 1 || d > 8) continue;
    const auto limit = limit_polynomial(f, eigendecompose(lambda_matrix(d)));
    const int r = 30;
    const auto iterated = f_iterate_sd(f, r);
    mpz_class scale;
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(d));
    mpz_pow_ui(scale.get_mpz_t(), fact.get_mpz_t(), static_cast<unsigned long>(r));
    mpq_class worst = 0;
    for (std::size_t k = 0; k < iterated.size(); ++k) {
      mpq_class ratio(iterated[k], scale);
      ratio.canonicalize();
      worst = std::max(worst, mpq_class(abs(ratio - limit[k])));
    }
    rep.expect(name + " limit polynomial at r=30", worst < tol, "max error " + std::to_string(worst.get_d()));

    for (int re = 1; re <= 4; ++re) {
      const auto actual = edgewise(complex, re).f_vector().at(0);
      rep.expect(name + " f0 edgewise r=" + std::to_string(re), f0_edgewise(f, re) == mpz_class(static_cast<unsigned long>(actual)));
    }
  }
  return rep;
}

using SuiteFn = std::function<VerificationReport(const SuiteParams&)>;

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> suites = {
      {"mj", suite_mj},
      {"thm-bar", [](const SuiteParams& p) { return verify_bar_simplex(p.d.value_or(4), p.field, p.options); }},
      {"edgewise",
       [](const SuiteParams& p) {
         const int d = p.d.value_or(3);
         return verify_edgewise_simplex(d, p.r.value_or(d), p.field, p.options);
       }},
      {"gorenstein", suite_gorenstein},
      {"link", suite_link},
      {"reg", suite_reg},
      {"depth-invariance", suite_depth},
      {"appendix", suite_appendix},
      {"last-strand", suite_last_strand},
      {"limits", suite_limits},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

VerificationReport run_suite(const std::string& name, const SuiteParams& params) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw InvalidArgument("unknown suite '" + name + "'");
  auto rep = it->second(params);
  rep.suite = name;
  return rep;
}

VerificationReport fixture_checks(const std::filesystem::path& dir, const FieldSpec& field,
                                  const HochsterOptions& options) {
  VerificationReport rep;
  rep.suite = "fixtures";
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw InvalidArgument("no fixtures in " + dir.string());
  for (const auto& file : files) {
    const std::string tag = file.filename().string();
    const auto complex = load_complex(file);
    rep.expect(tag + " json round trip", complex_from_json(complex_to_json(complex)) == complex);
    const auto betti = reduced_betti(complex, field);
    std::int64_t alternating = 0;
    for (int k = -1; k <= complex.dim(); ++k) {
      alternating += (k % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(betti[k]);
    }
    rep.expect(tag + " euler characteristic", alternating == complex.f_vector().reduced_euler_characteristic());
    if (complex.num_vertices() <= options.vertex_gate) {
      const auto table = graded_betti_table(complex, field, options);
      std::map<std::size_t, std::uint64_t> by_size;
      for (const auto& f : minimal_non_faces(complex)) ++by_size[f.size()];
      bool ok = true;
      for (int j = 0; j <= static_cast<int>(complex.num_vertices()); ++j) {
        const auto it = by_size.find(static_cast<std::size_t>(j) + 1);
        ok = ok && table.at(1, j) == (it == by_size.end() ? 0 : it->second);
      }
      rep.expect(tag + " beta_1 vs minimal non-faces", ok);
    }
  }
  return rep;
}

}  // namespace sdbetti::cli
