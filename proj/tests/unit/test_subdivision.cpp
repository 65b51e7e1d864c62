#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sdbetti/complex.hpp"
#include "sdbetti/error.hpp"
#include "sdbetti/standard.hpp"
#include "sdbetti/subdivision.hpp"

using namespace sdbetti;

namespace {

FVector fv(std::vector<std::uint64_t> e) { return FVector(std::move(e)); }

// f_{j-1}(sd Δ) = Σ_i f_{i-1}(Δ) j! S(i, j).
std::vector<std::uint64_t> sd_f_vector_formula(const FVector& f) {
  const int d = f.d();
  std::vector<std::uint64_t> out(d + 1, 0);
  out[0] = 1;
  for (int j = 1; j <= d; ++j) {
    mpz_class total = 0;
    mpz_class fact = 1;
    for (int k = 2; k <= j; ++k) fact *= k;
    for (int i = j; i <= d; ++i) total += mpz_class(static_cast<unsigned long>(f.at(i - 1))) *
                                        fact * oracle::stirling2(i, j);
    out[j] = total.get_ui();
  }
  return out;
}

}  // namespace

TEST(Barycentric, Examples) {
  const auto edge = barycentric(simplex(1));
  EXPECT_EQ(edge.f_vector(), fv({1, 3, 2}));
  EXPECT_TRUE(is_isomorphic(edge, path(3)));

  const auto tri = barycentric(simplex(2));
  EXPECT_EQ(tri.f_vector(), fv({1, 7, 12, 6}));
  const auto apex = tri.find_label(SetLabel{{0, 1, 2}});
  ASSERT_TRUE(apex.has_value());
  EXPECT_TRUE(is_isomorphic(link(tri, Face{*apex}), cycle(6)));

  EXPECT_TRUE(is_isomorphic(barycentric(simplex_boundary(2)), cycle(6)));
}

TEST(Barycentric, FVectorFormula) {
  for (const auto& c : {simplex(3), rp2_six(), stacked_sphere(2, 8), cone(cycle(5)), path(5)}) {
    EXPECT_EQ(barycentric(c).f_vector(), fv(sd_f_vector_formula(c.f_vector())));
  }
}

TEST(Barycentric, PredictedFaceCount) {
  const auto c = rp2_six();
  std::uint64_t total = 0;
  const auto f = barycentric(c).f_vector();
  for (auto x : f.entries()) total += x;
  EXPECT_EQ(predicted_sd_face_count(c.f_vector()), total);
}

TEST(Barycentric, Iterates) {
  const auto p = barycentric_iter(simplex(1), 3);
  EXPECT_EQ(p.f_vector(), fv({1, 9, 8}));
  EXPECT_EQ(barycentric_iter(rp2_six(), 0), rp2_six());
  EXPECT_TRUE(is_isomorphic(barycentric_iter(cycle(3), 2), cycle(12)));
}

TEST(Barycentric, GateThrows) { EXPECT_THROW(barycentric_iter(simplex(6), 4), GateExceeded); }

TEST(Edgewise, Examples) {
  const auto four = edgewise(simplex(2), 2);
  EXPECT_EQ(four.f_vector(), fv({1, 6, 9, 4}));
  for (int r = 1; r <= 5; ++r) {
    EXPECT_TRUE(is_isomorphic(edgewise(simplex_boundary(2), r), cycle(3 * r))) << "r=" << r;
  }
  EXPECT_EQ(edgewise(rp2_six(), 1), rp2_six());
  EXPECT_EQ(edgewise(simplex(2), 1), simplex(2));
}

TEST(Edgewise, SimplexFVectors) {
  // Δ_{d-1}^{<r>} has C(r+d-1, d-1) vertices and r^{d-1} facets.
  EXPECT_EQ(edgewise(simplex(2), 3).f_vector().at(0), 10u);
  EXPECT_EQ(edgewise(simplex(2), 3).f_vector().at(2), 9u);
  EXPECT_EQ(edgewise(simplex(3), 4).f_vector().at(0), 35u);
  EXPECT_EQ(edgewise(simplex(3), 4).f_vector().at(3), 64u);
}

TEST(Edgewise, Compatibility) {
  EXPECT_TRUE(edgewise_compatible({1, 1, 1}, {2, 1, 0}));
  EXPECT_TRUE(edgewise_compatible({1, 1, 1}, {1, 2, 0}));
  EXPECT_FALSE(edgewise_compatible({3, 0, 0}, {0, 0, 3}));
  EXPECT_FALSE(edgewise_compatible({2, 0, 1}, {0, 2, 1}));
  EXPECT_EQ(EdgewiseVertex({1, 2, 0}).partial_sums, (std::vector<int>{1, 3, 3}));
  EXPECT_EQ(EdgewiseVertex({1, 2, 0}).r(), 3);
}

TEST(Edgewise, EveryEdgeIsCompatible) {
  const auto sub = edgewise(simplex(3), 3);
  for (const auto& facet : sub.facets()) {
    for (std::size_t a = 0; a < facet.size(); ++a) {
      for (std::size_t b = a + 1; b < facet.size(); ++b) {
        const auto& la = std::get<LatticeLabel>(sub.label(facet[a])).coords;
        const auto& lb = std::get<LatticeLabel>(sub.label(facet[b])).coords;
        EXPECT_TRUE(edgewise_compatible(la, lb));
      }
    }
  }
}

TEST(InteriorFace, Check) {
  const auto sub = edgewise(simplex(2), 3);
  const auto center = *sub.find_label(LatticeLabel{{1, 1, 1}});
  const auto side = *sub.find_label(LatticeLabel{{2, 1, 0}});
  EXPECT_TRUE(interior_face_check(sub, Face{center}));
  EXPECT_FALSE(interior_face_check(sub, Face{side}));
  EXPECT_FALSE(interior_face_check(sub, Face{std::min(center, side), std::max(center, side)}));
}

TEST(InteriorFace, Witness) {
  const auto w1 = interior_face_witness(3, 3, 1);
  ASSERT_EQ(w1.face.size(), 1u);
  EXPECT_EQ(std::get<LatticeLabel>(w1.complex.label(w1.face[0])).coords,
            (std::vector<int>{1, 1, 1}));

  for (auto [d, r, s] : {std::tuple{3, 3, 2}, std::tuple{4, 4, 2}, std::tuple{4, 4, 3}}) {
    const auto w = interior_face_witness(d, r, s);
    ASSERT_EQ(static_cast<int>(w.face.size()), s);
    EXPECT_TRUE(w.complex.contains(w.face));
    EXPECT_TRUE(interior_face_check(w.complex, w.face));
  }
  EXPECT_THROW(interior_face_witness(3, 2, 1), InvalidArgument);
}
