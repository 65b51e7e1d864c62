#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sdbetti/complex.hpp"
#include "sdbetti/error.hpp"
#include "sdbetti/json_io.hpp"
#include "sdbetti/standard.hpp"
#include "sdbetti/subdivision.hpp"

using namespace sdbetti;

namespace {

FVector fv(std::vector<std::uint64_t> e) { return FVector(std::move(e)); }

}  // namespace

TEST(Complex, FromFacets) {
  EXPECT_EQ(SimplicialComplex::from_facets({{0, 1, 2}}, 3).f_vector(), fv({1, 3, 3, 1}));
  const auto hollow = SimplicialComplex::from_facets({{0, 1}, {1, 2}, {0, 2}}, 3);
  EXPECT_EQ(hollow.f_vector(), fv({1, 3, 3}));
  const auto reduced = SimplicialComplex::from_facets({{0, 1}, {0, 1, 2}}, 3);
  ASSERT_EQ(reduced.facets().size(), 1u);
  EXPECT_EQ(reduced.facets()[0], (Face{0, 1, 2}));
}

TEST(Complex, RejectsVertexOutOfRange) {
  EXPECT_THROW(SimplicialComplex::from_facets({{0, 3}}, 3), Error);
}

TEST(Complex, FVectors) {
  EXPECT_EQ(simplex(2).f_vector(), fv({1, 3, 3, 1}));
  EXPECT_EQ(barycentric(simplex(2)).f_vector(), fv({1, 7, 12, 6}));
  EXPECT_EQ(cycle(6).f_vector(), fv({1, 6, 6}));
  EXPECT_EQ(stacked_sphere(2, 6).f_vector(), fv({1, 5, 9, 6}));
  EXPECT_EQ(stacked_attach(cycle(3), 2, Face{0}).f_vector(), fv({1, 5, 5}));
  EXPECT_EQ(rp2_six().f_vector(), fv({1, 6, 15, 10}));
}

TEST(Complex, FVectorMatchesFaceEnumeration) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const auto c = oracle::random_complex(8, 5, 4, rng);
    const auto masks = oracle::face_masks(c);
    std::vector<std::uint64_t> counts(c.dim() + 2, 0);
    for (auto m : masks) ++counts[std::popcount(m)];
    EXPECT_EQ(c.f_vector(), fv(counts));
  }
}

TEST(Complex, Induced) {
  const auto two_points = induced(cycle(6), std::vector<Vertex>{0, 3});
  EXPECT_EQ(two_points.f_vector(), fv({1, 2}));

  const auto sd = barycentric(simplex(2));
  std::vector<Vertex> proper;
  for (Vertex v = 0; v < sd.num_vertices(); ++v) {
    if (std::get<SetLabel>(sd.label(v)).members.size() < 3) proper.push_back(v);
  }
  EXPECT_TRUE(is_isomorphic(induced(sd, proper), cycle(6)));

  const auto c = rp2_six();
  std::vector<Vertex> all{0, 1, 2, 3, 4, 5};
  EXPECT_EQ(induced(c, all), c);
}

TEST(Complex, Link) {
  const auto l = link(simplex(2), Face{0});
  // Relabeled onto the vertices it uses; the parent map keeps the originals.
  EXPECT_EQ(l.facets(), (std::vector<Face>{Face{0, 1}}));
  EXPECT_EQ(l.parent_vertices(), (std::vector<Vertex>{1, 2}));

  const auto sub = edgewise(simplex(2), 3);
  const auto center = sub.find_label(LatticeLabel{{1, 1, 1}});
  ASSERT_TRUE(center.has_value());
  const auto hex = link(sub, Face{*center});
  EXPECT_EQ(hex.f_vector().at(0), 6u);
  EXPECT_TRUE(is_isomorphic(hex, cycle(6)));

  const auto neighbours = link(cycle(6), Face{0});
  EXPECT_EQ(neighbours.facets(), (std::vector<Face>{Face{0}, Face{1}}));
  EXPECT_EQ(neighbours.parent_vertices(), (std::vector<Vertex>{1, 5}));
}

TEST(Complex, Star) {
  const auto s = star(cycle(6), Face{0});
  EXPECT_EQ(s.facets(), (std::vector<Face>{Face{0, 1}, Face{0, 5}}));
}

TEST(Complex, MinimalNonFaces) {
  const auto hollow = simplex_boundary(2);
  EXPECT_EQ(minimal_non_faces(hollow), (std::vector<Face>{Face{0, 1, 2}}));
  EXPECT_EQ(max_minimal_non_face_size(hollow), 3u);

  const auto c6 = cycle(6);
  EXPECT_EQ(minimal_non_faces(c6).size(), 9u);
  EXPECT_EQ(max_minimal_non_face_size(c6), 2u);

  EXPECT_TRUE(minimal_non_faces(simplex(2)).empty());
}

TEST(Complex, MinimalNonFacesMatchExhaustion) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const auto c = oracle::random_complex(7, 6, 4, rng);
    std::vector<oracle::Mask> got;
    for (const auto& f : minimal_non_faces(c)) {
      oracle::Mask m = 0;
      for (auto v : f) m |= oracle::Mask{1} << v;
      got.push_back(m);
    }
    std::sort(got.begin(), got.end());
    auto want = oracle::minimal_non_faces(c);
    std::sort(want.begin(), want.end());
    EXPECT_EQ(got, want);
  }
}

TEST(Complex, Flag) {
  EXPECT_TRUE(is_flag(barycentric(simplex(2))));
  EXPECT_FALSE(is_flag(simplex_boundary(2)));
  EXPECT_TRUE(is_flag(cycle(6)));
}

TEST(Complex, BoundaryComplex) {
  EXPECT_TRUE(is_isomorphic(boundary_complex(edgewise(simplex(2), 2)), cycle(6)));
  EXPECT_TRUE(boundary_complex(simplex_boundary(2)).facets().empty());
  // The barycenter of the triangle stays in the ground set as an unused vertex.
  const auto bd = boundary_complex(barycentric(simplex(2)));
  EXPECT_EQ(bd.num_vertices(), 7u);
  std::vector<Vertex> used;
  for (Vertex v = 0; v < bd.num_vertices(); ++v) {
    if (bd.contains(Face{v})) used.push_back(v);
  }
  EXPECT_EQ(used.size(), 6u);
  EXPECT_TRUE(is_isomorphic(induced(bd, used), cycle(6)));
}

TEST(Complex, Isomorphism) {
  const auto sub = edgewise(simplex(2), 3);
  const auto center = *sub.find_label(LatticeLabel{{1, 1, 1}});
  EXPECT_TRUE(is_isomorphic(link(sub, Face{center}), barycentric(simplex_boundary(2))));

  const auto c5_point = disjoint_union(cycle(5), SimplicialComplex::from_facets({{0}}, 1));
  EXPECT_FALSE(is_isomorphic(cycle(6), c5_point));

  const auto c = rp2_six();
  const auto witness = find_isomorphism(c, c);
  ASSERT_TRUE(witness.has_value());
  // The witness maps facets onto facets.
  for (const auto& f : c.facets()) {
    std::vector<Vertex> image;
    for (auto v : f) image.push_back((*witness)[v]);
    EXPECT_TRUE(c.contains(Face(image)));
  }
}

TEST(Complex, JoinAndCone) {
  const auto square = join(SimplicialComplex::from_facets({{0}, {1}}, 2),
                           SimplicialComplex::from_facets({{0}, {1}}, 2));
  EXPECT_TRUE(is_isomorphic(square, cycle(4)));
  const auto c = cone(simplex_boundary(2));
  EXPECT_EQ(c.f_vector(), fv({1, 4, 6, 3}));
}

TEST(Complex, StandardComplexParser) {
  EXPECT_EQ(standard_complex("cycle:6"), cycle(6));
  EXPECT_EQ(standard_complex("stacked_sphere:2,6"), stacked_sphere(2, 6));
  EXPECT_EQ(standard_complex("cone:path:3"), cone(path(3)));
  EXPECT_THROW(standard_complex("nonsense"), InvalidArgument);
  EXPECT_THROW(standard_complex("cycle:2"), InvalidArgument);
  EXPECT_THROW(standard_complex("cycle:x"), InvalidArgument);
}

TEST(Complex, JsonRoundTrip) {
  for (const auto& c : {cycle(6), rp2_six(), stacked_sphere(2, 6), path(4)}) {
    EXPECT_EQ(complex_from_json(complex_to_json(c)), c);
    EXPECT_EQ(complex_from_json(complex_to_json(c, 2)), c);
  }
  EXPECT_THROW(complex_from_json("{\"facets\": [[0, 9]], \"n\": 3}"), Error);
  EXPECT_THROW(complex_from_json("not json"), Error);
}

TEST(Complex, LoadsFixtures) {
  const std::filesystem::path dir = SDBETTI_FIXTURE_DIR;
  EXPECT_EQ(load_complex(dir / "c6.json"), cycle(6));
  EXPECT_EQ(load_complex(dir / "rp2_six.json"), rp2_six());
  EXPECT_EQ(load_complex(dir / "tri.json"), simplex(2));
}
