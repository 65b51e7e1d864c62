#include <gtest/gtest.h>

#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <set>

#include "oracles.hpp"
#include "sdbetti/complex.hpp"
#include "sdbetti/error.hpp"
#include "sdbetti/formulas.hpp"
#include "sdbetti/hochster.hpp"
#include "sdbetti/homology.hpp"
#include "sdbetti/standard.hpp"
#include "sdbetti/subdivision.hpp"

using namespace sdbetti;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec GF2 = FieldSpec::gf(2);

std::vector<int> range(int lo, int hi) {
  std::vector<int> out;
  for (int i = lo; i <= hi; ++i) out.push_back(i);
  return out;
}

// Minimum over every sequence (any order, r >= 1) of nonnegative integers
// with Σi + (r-1) = j-1 and Σi + 2r <= d.
std::int64_t m_unordered(int d, int j) {
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::vector<int> seq;
  std::function<void(int)> go = [&](int remaining) {
    // remaining = j - 1 - (Σi + (r-1)) for the current prefix
    if (!seq.empty() && remaining == 0) {
      const int sum = std::accumulate(seq.begin(), seq.end(), 0);
      if (sum + 2 * static_cast<int>(seq.size()) <= d) {
        std::int64_t total = 0;
        for (int i : seq) total += (std::int64_t{1} << (i + 2)) - 2;
        best = std::min(best, total - j);
      }
    }
    const int cost_sep = seq.empty() ? 0 : 1;
    for (int i = 0; i + cost_sep <= remaining; ++i) {
      seq.push_back(i);
      go(remaining - i - cost_sep);
      seq.pop_back();
    }
  };
  go(j - 1);
  return best;
}

}  // namespace

TEST(MClosed, Examples) {
  EXPECT_EQ(m_closed(4, 2), 2);
  EXPECT_EQ(m_closed(5, 3), 5);
  EXPECT_EQ(m_closed(4, 3), 11);
  EXPECT_EQ(m_bruteforce(3, 2), 4);
  EXPECT_EQ(m_bruteforce(5, 3), 5);
  for (int d = 2; d <= 20; ++d) EXPECT_EQ(m_bruteforce(d, 1), 1);
}

TEST(MClosed, AgreesWithOracles) {
  for (int d = 2; d <= 16; ++d) {
    for (int j = 1; j <= d - 1; ++j) {
      EXPECT_EQ(m_closed(d, j), m_bruteforce(d, j)) << d << "," << j;
      if (d <= 12) EXPECT_EQ(m_closed(d, j), m_unordered(d, j)) << d << "," << j;
    }
    EXPECT_EQ(m_closed(d, d - 1), (std::int64_t{1} << d) - d - 1);
  }
}

TEST(MClosed, Preconditions) {
  EXPECT_THROW(m_closed(4, 0), InvalidArgument);
  EXPECT_THROW(m_closed(4, 4), InvalidArgument);
  EXPECT_THROW(m_closed(61, 3), InvalidArgument);
}

TEST(AdmissibleSequences, SatisfyConstraints) {
  for (int d = 2; d <= 12; ++d) {
    for (int j = 1; j < d; ++j) {
      const auto seqs = admissible_sequences(d, j);
      EXPECT_FALSE(seqs.empty());
      for (const auto& s : seqs) {
        const int sum = std::accumulate(s.begin(), s.end(), 0);
        const int r = static_cast<int>(s.size());
        EXPECT_EQ(sum + r - 1, j - 1);
        EXPECT_LE(sum + 2 * r, d);
        EXPECT_TRUE(std::is_sorted(s.begin(), s.end()));
      }
    }
  }
}

TEST(PredictStrandBar, Examples) {
  const auto a = predict_strand_bar(3, 1);
  EXPECT_EQ(a.pdim, 4);
  EXPECT_EQ(a.indices(Claim::Nonzero), range(1, 3));
  EXPECT_EQ(a.indices(Claim::Zero), (std::vector<int>{0, 4}));
  EXPECT_TRUE(a.indices(Claim::Unknown).empty());

  const auto b = predict_strand_bar(4, 2);
  EXPECT_EQ(b.indices(Claim::Nonzero), range(2, 10));
  EXPECT_EQ(b.indices(Claim::Zero), (std::vector<int>{0, 1, 11}));
  EXPECT_TRUE(b.indices(Claim::Unknown).empty());

  // Nonzero runs from m_3(5) = 5 to 2^5 - 2·5 + 3 = 25; pdim = 26.
  const auto c = predict_strand_bar(5, 3);
  EXPECT_EQ(c.pdim, 26);
  EXPECT_EQ(c.indices(Claim::Zero), (std::vector<int>{0, 1, 2, 26}));
  EXPECT_EQ(c.indices(Claim::Unknown), (std::vector<int>{3, 4}));
  EXPECT_EQ(c.indices(Claim::Nonzero), range(5, 25));

  const auto top = predict_strand_bar(4, 3);
  EXPECT_EQ(top.indices(Claim::Nonzero), (std::vector<int>{11}));
  EXPECT_EQ(top.at(100), Claim::Zero);
}

TEST(PredictStrandEdgewise, Examples) {
  const auto a = predict_strand_edgewise(3, 1, 3, 10);
  EXPECT_EQ(a.pdim, 7);
  EXPECT_EQ(a.indices(Claim::Nonzero), range(1, 7));
  EXPECT_EQ(a.indices(Claim::Zero), (std::vector<int>{0}));

  const auto b = predict_strand_edgewise(3, 2, 3, 10);
  EXPECT_EQ(b.indices(Claim::Nonzero), range(4, 7));

  const auto c = predict_strand_edgewise(4, 3, 4, 35);
  EXPECT_EQ(c.pdim, 31);
  EXPECT_EQ(c.indices(Claim::Nonzero), range(11, 31));

  EXPECT_THROW(predict_strand_edgewise(4, 1, 3, 20), InvalidArgument);
}

TEST(PredictT1, Examples) {
  EXPECT_EQ(predict_t1_edgewise(simplex_boundary(2), 2), 2);
  const auto cone_hollow = SimplicialComplex::from_facets({{0, 1, 3}, {0, 2, 3}, {1, 2, 3}}, 4);
  EXPECT_EQ(predict_t1_edgewise(cone_hollow, 2), 3);
  EXPECT_EQ(predict_t1_edgewise(cycle(6), 2), 2);
  EXPECT_EQ(predict_t1_edgewise(simplex(3), 3), 2);
}

TEST(PredictT1, MatchesSubdividedNonFaces) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 12; ++trial) {
    const auto c = oracle::random_complex(5, 3, 3, rng);
    for (int r : {2, 3}) {
      const auto sub = edgewise(c, r);
      if (sub.num_vertices() > 20) continue;
      std::size_t t1 = 0;
      for (auto m : oracle::minimal_non_faces(sub)) t1 = std::max<std::size_t>(t1, std::popcount(m));
      EXPECT_EQ(predict_t1_edgewise(c, r), static_cast<int>(t1)) << trial << " r=" << r;
    }
  }
}

TEST(PredictReg, Examples) {
  for (int r = 1; r <= 4; ++r) {
    const auto p = predict_reg(simplex_boundary(2), Q, SubdivisionMode::edgewise(r));
    EXPECT_EQ(p.value, 2);
    EXPECT_TRUE(p.exact);
  }
  EXPECT_EQ(predict_reg(simplex(1), Q, SubdivisionMode::edgewise(3)).value, 1);
  EXPECT_EQ(predict_reg(rp2_six(), GF2, SubdivisionMode::barycentric()).value, 3);
  EXPECT_EQ(predict_reg(rp2_six(), Q, SubdivisionMode::barycentric()).value, 2);

  const auto bound = predict_reg(simplex(3), Q, SubdivisionMode::edgewise(2));
  EXPECT_FALSE(bound.exact);
  EXPECT_EQ(bound.value, 1);
}

TEST(PredictReg, MatchesTables) {
  for (const auto& c : {path(3), cycle(5), simplex_boundary(2), simplex(2)}) {
    for (const auto& field : {Q, GF2}) {
      EXPECT_EQ(graded_betti_table(barycentric(c), field).reg(),
                predict_reg(c, field, SubdivisionMode::barycentric()).value);
      const int d = c.dim() + 1;
      const auto sub = edgewise(c, d);
      if (sub.num_vertices() <= 18) {
        EXPECT_EQ(graded_betti_table(sub, field).reg(),
                  predict_reg(c, field, SubdivisionMode::edgewise(d)).value);
      }
    }
  }
}

TEST(SphereFamily, Examples) {
  const auto a = sphere_family(5, {0, 1});
  EXPECT_EQ(a.j, 3);
  ASSERT_EQ(a.w.size(), 2u);
  EXPECT_EQ(a.w[0].size(), 2u);
  EXPECT_EQ(a.w[1].size(), 6u);
  EXPECT_EQ(a.c.size(), 6u);
  const auto sd4 = barycentric(simplex(4));
  const auto h = reduced_betti(induced(sd4, vertices_of(sd4, a.w_union())), Q);
  EXPECT_EQ(h[2], 1u);
  EXPECT_EQ(h.euler_characteristic(), 1);

  const auto b = sphere_family(4, {0, 0});
  ASSERT_EQ(b.w.size(), 2u);
  EXPECT_EQ(b.w[0].size(), 2u);
  EXPECT_EQ(b.w[1].size(), 2u);
  const auto sd3 = barycentric(simplex(3));
  EXPECT_TRUE(is_isomorphic(induced(sd3, vertices_of(sd3, b.w_union())), cycle(4)));

  const auto c = sphere_family(3, {1});
  ASSERT_EQ(c.w.size(), 1u);
  EXPECT_EQ(c.w[0].size(), 6u);
  EXPECT_TRUE(c.c.empty());
  const auto sd2 = barycentric(simplex(2));
  EXPECT_TRUE(is_isomorphic(induced(sd2, vertices_of(sd2, c.w_union())), cycle(6)));

  EXPECT_THROW(sphere_family(3, {1, 1}), InvalidArgument);
  EXPECT_THROW(sphere_family(4, {-1}), InvalidArgument);
}

TEST(SphereFamily, SizesMatchFormula) {
  for (int d = 2; d <= 7; ++d) {
    for (int j = 1; j < d; ++j) {
      for (const auto& seq : admissible_sequences(d, j)) {
        const auto fam = sphere_family(d, seq);
        std::size_t expected = 0;
        for (int i : seq) expected += (std::size_t{1} << (i + 2)) - 2;
        const auto w = fam.w_union();
        EXPECT_EQ(w.size(), expected);
        std::set<std::vector<Vertex>> distinct(w.begin(), w.end());
        EXPECT_EQ(distinct.size(), expected);
        if (seq.size() >= 2) {
          int exponent = 2 * static_cast<int>(seq.size()) - 4;
          for (std::size_t l = 1; l + 1 < seq.size(); ++l) exponent += seq[l];
          EXPECT_EQ(fam.c.size(), ((std::size_t{1} << (seq.back() + 2)) - 2) << exponent);
        }
      }
    }
  }
}

TEST(Appendix, Examples) {
  EXPECT_TRUE(appendix_inequalities(5, 3, {0, 1}));
  EXPECT_TRUE(appendix_inequalities(8, 5, {0, 1, 1}));
  EXPECT_TRUE(appendix_inequalities(6, 4, {1, 1}));
  // Neither satisfies Σi + (r-1) = j-1 with Σi + 2r <= d.
  EXPECT_THROW(appendix_inequalities(6, 4, {0, 1, 1}), InvalidArgument);
  EXPECT_THROW(appendix_inequalities(6, 4, {1, 2}), InvalidArgument);
  EXPECT_FALSE(appendix_hypotheses_hold(6, 4, {1, 2}));
}

TEST(Appendix, ExhaustiveSmall) {
  std::size_t checked = 0;
  for (int d = 3; d <= 10; ++d) {
    for (int j = d / 2 + 1; j <= d - 1; ++j) {
      for (const auto& seq : admissible_sequences(d, j)) {
        if (!appendix_hypotheses_hold(d, j, seq)) continue;
        EXPECT_TRUE(appendix_inequalities(d, j, seq));
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 0u);
}

TEST(Reports, CompareStrandsStatuses) {
  BettiTable table(7, Q, true);
  table.add(0, 0, 1);
  table.add(1, 1, 3);
  StrandPrediction p;
  p.d = 3;
  p.j = 1;
  p.pdim = 2;
  p.claims = {Claim::Zero, Claim::Nonzero, Claim::Unknown};
  const auto report = compare_strands(table, {p});
  EXPECT_EQ(report.count(CheckStatus::Pass), 2u);
  EXPECT_EQ(report.count(CheckStatus::Observed), 1u);
  EXPECT_TRUE(report.ok());

  p.claims = {Claim::Nonzero, Claim::Nonzero, Claim::Zero};
  EXPECT_FALSE(compare_strands(table, {p}).ok());
}

TEST(Reports, BarAndEdgewiseSimplices) {
  const auto bar = verify_bar_simplex(3, Q);
  EXPECT_TRUE(bar.ok());
  EXPECT_EQ(bar.count(CheckStatus::Fail), 0u);
  const auto edge = verify_edgewise_simplex(3, 3, GF2);
  EXPECT_TRUE(edge.ok());
}

TEST(Reports, WitnessModeAboveGate) {
  HochsterOptions opts;
  opts.vertex_gate = 12;
  const auto report = verify_edgewise_simplex(3, 4, Q, opts);
  EXPECT_TRUE(report.ok());
  EXPECT_GT(report.count(CheckStatus::Pass), 0u);
}

TEST(SphereFamily, VerticesOf) {
  const auto sd = barycentric(simplex(2));
  const auto v = vertices_of(sd, {{0}, {0, 1, 2}});
  ASSERT_EQ(v.size(), 2u);
  EXPECT_EQ(std::get<SetLabel>(sd.label(v[0])).members, (std::vector<Vertex>{0}));
  EXPECT_EQ(std::get<SetLabel>(sd.label(v[1])).members, (std::vector<Vertex>{0, 1, 2}));
}
