#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sdbetti/complex.hpp"
#include "sdbetti/error.hpp"
#include "sdbetti/formulas.hpp"
#include "sdbetti/hochster.hpp"
#include "sdbetti/standard.hpp"
#include "sdbetti/subdivision.hpp"

using namespace sdbetti;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec GF2 = FieldSpec::gf(2);

std::string describe(const SimplicialComplex& c) {
  std::string out;
  for (const auto& f : c.facets()) {
    out += "{";
    for (auto v : f) out += std::to_string(v);
    out += "}";
  }
  return out;
}

void expect_matches_koszul(const SimplicialComplex& c, const FieldSpec& field) {
  const auto want = oracle::koszul_betti(c, field);
  EXPECT_TRUE(want.nonsquarefree_vanish);
  const auto got = graded_betti_table(c, field);
  EXPECT_EQ(got.entries(), want.entries) << describe(c);
}

}  // namespace

TEST(Hochster, Examples) {
  const auto p = graded_betti_table(barycentric(simplex(1)), Q);
  EXPECT_EQ(p.entries().size(), 2u);
  EXPECT_EQ(p.at(0, 0), 1u);
  EXPECT_EQ(p.at(1, 1), 1u);

  const auto c6 = graded_betti_table(cycle(6), Q);
  EXPECT_EQ(c6.at(1, 1), 9u);
  EXPECT_EQ(c6.at(4, 2), 1u);
  EXPECT_EQ(c6.pdim(), 4);

  const auto sd = graded_betti_table(barycentric(simplex(2)), Q);
  for (int i = 0; i <= 5; ++i) {
    EXPECT_EQ(sd.at(i, 1) != 0, i >= 1 && i <= 3) << i;
    EXPECT_EQ(sd.at(i, 2) != 0, i == 4) << i;
  }
}

TEST(Hochster, KoszulOracleOnFixtures) {
  for (const auto& c : {cycle(6), cycle(5), simplex_boundary(2), path(4), rp2_six(),
                        barycentric(simplex(1)), cone(cycle(4)), simplex(3)}) {
    expect_matches_koszul(c, Q);
    expect_matches_koszul(c, GF2);
  }
}

TEST(Hochster, KoszulOracleOnRandomComplexes) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 4 + trial % 3;
    const auto c = oracle::random_complex(n, 3 + trial % 4, 4, rng);
    expect_matches_koszul(c, trial % 2 ? Q : GF2);
  }
}

TEST(Hochster, WorkerCountInvariance) {
  const auto c = barycentric(simplex_boundary(3));
  HochsterOptions one;
  one.workers = 1;
  const auto reference = graded_betti_table(c, Q, one);
  for (unsigned w : {2u, 3u, 7u}) {
    HochsterOptions opts;
    opts.workers = w;
    EXPECT_EQ(graded_betti_table(c, Q, opts), reference) << w;
  }
}

TEST(Hochster, RangePartitionInvariance) {
  const auto c = rp2_six();
  const auto reference = graded_betti_table(c, GF2);
  const std::uint64_t total = std::uint64_t{1} << c.num_vertices();
  BettiTable merged(c.num_vertices(), GF2, true);
  const std::vector<std::uint64_t> cuts{0, 5, 17, 40, total};
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    HochsterOptions opts;
    opts.range_begin = cuts[k];
    opts.range_end = cuts[k + 1];
    merged.merge(graded_betti_table(c, GF2, opts));
  }
  EXPECT_EQ(merged.entries(), reference.entries());
}

TEST(Hochster, GateThrows) {
  HochsterOptions opts;
  opts.vertex_gate = 10;
  EXPECT_THROW(graded_betti_table(cycle(11), Q, opts), GateExceeded);
  opts.vertex_gate = 64;
  EXPECT_THROW(graded_betti_table(cycle(31), Q, opts), GateExceeded);
}

TEST(Hochster, FieldDependentRegularity) {
  const auto c = rp2_six();
  EXPECT_EQ(graded_betti_table(c, GF2).reg(), 3);
  EXPECT_EQ(graded_betti_table(c, Q).reg(), 2);
}

TEST(Hochster, FlagComplexesHaveLinearStart) {
  // A flag complex has β_{i,i+j} = 0 for i < j.
  std::mt19937_64 rng(99);
  int flag_seen = 0;
  for (int trial = 0; trial < 60 && flag_seen < 10; ++trial) {
    const auto c = oracle::random_complex(7, 6, 3, rng);
    if (!is_flag(c)) continue;
    ++flag_seen;
    for (const auto& [key, value] : graded_betti_table(c, Q).entries()) {
      EXPECT_GE(key.first, key.second);
    }
  }
  for (const auto& [key, value] : graded_betti_table(barycentric(simplex(3)), GF2).entries()) {
    EXPECT_GE(key.first, key.second);
  }
}

TEST(Hochster, Sd3TableIsCharacteristicFree) {
  const auto sd3 = barycentric(simplex(3));
  EXPECT_EQ(graded_betti_table(sd3, Q).entries(), graded_betti_table(sd3, GF2).entries());
}

TEST(Hochster, InducedReducedBetti) {
  const auto c6 = cycle(6);
  const auto h = induced_reduced_betti(c6, Q, 0b001001);
  ASSERT_GE(h.size(), 2u);
  EXPECT_EQ(h[1], 1u);  // index k+1 holds b̃_k
}

TEST(Hochster, Witnesses) {
  const auto c6 = cycle(6);
  const std::vector<Vertex> apart{0, 2};
  const auto w = betti_witness(c6, Q, apart);
  ASSERT_EQ(w.size(), 1u);
  EXPECT_EQ(w[0].i, 1);
  EXPECT_EQ(w[0].j, 1);

  const auto s = simplex(2);
  for (const std::vector<Vertex> subset : {std::vector<Vertex>{0}, {0, 2}, {0, 1, 2}}) {
    EXPECT_TRUE(betti_witness(s, Q, subset).empty());
  }

  const auto sd = barycentric(simplex(4));
  const auto family = sphere_family(5, {0, 1});
  const auto vertices = vertices_of(sd, family.w_union());
  const auto cert = betti_witness(sd, Q, vertices);
  ASSERT_EQ(cert.size(), 1u);
  EXPECT_EQ(cert[0].i, 5);
  EXPECT_EQ(cert[0].j, 3);
  EXPECT_EQ(cert[0].multiplicity, 1u);

  const auto table = witness_table(c6, Q, {apart, {0, 1, 2, 3, 4, 5}});
  EXPECT_FALSE(table.complete());
  EXPECT_EQ(table.lookup(1, 1), std::optional<std::uint64_t>(1));
  EXPECT_EQ(table.lookup(4, 2), std::optional<std::uint64_t>(1));
  EXPECT_FALSE(table.lookup(2, 1).has_value());
  EXPECT_THROW(table.pdim(), InvalidArgument);
}

TEST(Hochster, StrandProfiles) {
  const auto sd = graded_betti_table(barycentric(simplex(2)), Q);
  const auto s1 = strand_profile(sd, 1);
  EXPECT_EQ(s1.l, 1);
  EXPECT_EQ(s1.u, 3);
  EXPECT_TRUE(s1.zero_set.empty());
  const auto s2 = strand_profile(sd, 2);
  EXPECT_EQ(s2.l, 4);
  EXPECT_EQ(s2.u, 4);
  const auto c6 = strand_profile(graded_betti_table(cycle(6), Q), 2);
  EXPECT_EQ(c6.l, 4);
  EXPECT_EQ(c6.u, 4);
}

TEST(Hochster, RingInvariants) {
  const auto c6 = cycle(6);
  const auto inv = ring_invariants(graded_betti_table(c6, Q), c6);
  EXPECT_EQ(inv.reg, 2);
  EXPECT_EQ(inv.pdim, 4);
  EXPECT_EQ(inv.depth, 2);
  EXPECT_EQ(inv.t1, 2);

  const auto sd = barycentric(simplex(2));
  const auto sdi = ring_invariants(graded_betti_table(sd, Q), sd);
  EXPECT_EQ(sdi.reg, 2);
  EXPECT_EQ(sdi.pdim, 4);
  EXPECT_EQ(sdi.depth, 3);
  EXPECT_EQ(sdi.krull_dim, 3);

  const auto rp2 = rp2_six();
  EXPECT_EQ(ring_invariants(graded_betti_table(rp2, GF2), rp2).reg, 3);
  EXPECT_EQ(ring_invariants(graded_betti_table(rp2, Q), rp2).reg, 2);
}

TEST(Hochster, GorensteinSymmetry) {
  EXPECT_TRUE(gorenstein_symmetry_check(graded_betti_table(barycentric(simplex(2)), Q), 3));
  EXPECT_TRUE(gorenstein_symmetry_check(graded_betti_table(cycle(6), Q)));
  EXPECT_FALSE(gorenstein_symmetry_check(graded_betti_table(path(4), Q)));
}
