#include "sdbetti/standard.hpp"

#include <charconv>
#include <string>
#include <vector>

#include "sdbetti/error.hpp"

namespace sdbetti {

SimplicialComplex simplex(int k) {
  if (k < -1) throw InvalidArgument("simplex: dimension must be >= -1");
  std::vector<Vertex> all(static_cast<std::size_t>(k + 1));
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Vertex>(i);
  return SimplicialComplex::from_facets({all}, all.size());
}

SimplicialComplex simplex_boundary(int k) {
  if (k < 0) throw InvalidArgument("simplex_boundary: dimension must be >= 0");
  const auto n = static_cast<std::size_t>(k + 1);
  std::vector<std::vector<Vertex>> facets;
  for (std::size_t skip = 0; skip < n; ++skip) {
    std::vector<Vertex> f;
    for (std::size_t v = 0; v < n; ++v) {
      if (v != skip) f.push_back(static_cast<Vertex>(v));
    }
    facets.push_back(std::move(f));
  }
  return SimplicialComplex::from_facets(std::move(facets), n);
}

SimplicialComplex cycle(std::size_t m) {
  if (m < 3) throw InvalidArgument("cycle: need at least 3 vertices");
  std::vector<std::vector<Vertex>> facets;
  for (std::size_t v = 0; v < m; ++v) {
    facets.push_back({static_cast<Vertex>(v), static_cast<Vertex>((v + 1) % m)});
  }
  return SimplicialComplex::from_facets(std::move(facets), m);
}

SimplicialComplex path(std::size_t m) {
  if (m < 1) throw InvalidArgument("path: need at least 1 vertex");
  if (m == 1) return SimplicialComplex::from_facets(std::vector<std::vector<Vertex>>{{0}}, 1);
  std::vector<std::vector<Vertex>> facets;
  for (std::size_t v = 0; v + 1 < m; ++v) {
    facets.push_back({static_cast<Vertex>(v), static_cast<Vertex>(v + 1)});
  }
  return SimplicialComplex::from_facets(std::move(facets), m);
}

SimplicialComplex stacked_sphere(int dim, std::size_t n_facets) {
  if (dim < 1) throw InvalidArgument("stacked_sphere: dimension must be >= 1");
  const auto d = static_cast<std::size_t>(dim);
  if (n_facets < d + 2 || (n_facets - (d + 2)) % d != 0) {
    throw InvalidArgument("stacked_sphere: " + std::to_string(n_facets) +
                          " facets is not reachable by stacking in dimension " +
                          std::to_string(dim));
  }
  auto base = simplex_boundary(dim + 1);
  std::vector<Face> facets = base.facets();
  std::size_t n = base.num_vertices();
  while (facets.size() < n_facets) {
    // Stack on the most recently created facet.
    Face target = facets.back();
    facets.pop_back();
    const auto apex = static_cast<Vertex>(n++);
    for (std::size_t i = 0; i < target.size(); ++i) {
      auto v = target.without(i).vertices();
      v.push_back(apex);
      facets.push_back(Face::from_sorted(std::move(v)));
    }
  }
  return SimplicialComplex::from_facets(std::move(facets), n);
}

SimplicialComplex rp2_six() {
  std::vector<std::vector<Vertex>> facets = {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6},
                                             {1, 2, 6}, {2, 3, 5}, {3, 4, 6}, {2, 4, 5},
                                             {3, 5, 6}, {2, 4, 6}};
  for (auto& f : facets) {
    for (auto& v : f) --v;
  }
  return SimplicialComplex::from_facets(std::move(facets), 6);
}

SimplicialComplex stacked_attach(const SimplicialComplex& base, std::size_t k, const Face& ridge) {
  if (!base.contains(ridge)) throw InvalidArgument("stacked_attach: ridge is not a face");
  std::vector<Face> facets = base.facets();
  std::size_t n = base.num_vertices();
  for (std::size_t i = 0; i < k; ++i) {
    auto v = ridge.vertices();
    v.push_back(static_cast<Vertex>(n++));
    facets.push_back(Face::from_sorted(std::move(v)));
  }
  return SimplicialComplex::from_facets(std::move(facets), n);
}

namespace {

std::vector<long> parse_ints(std::string_view args) {
  std::vector<long> out;
  while (!args.empty()) {
    const auto comma = args.find(',');
    auto token = args.substr(0, comma);
    long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw InvalidArgument("bad integer '" + std::string(token) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    args.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

SimplicialComplex standard_complex(std::string_view descriptor) {
  const auto colon = descriptor.find(':');
  const auto name = descriptor.substr(0, colon);
  const auto rest = colon == std::string_view::npos ? std::string_view{} : descriptor.substr(colon + 1);
  if (name == "cone") return cone(standard_complex(rest));
  if (name == "rp2_six") return rp2_six();
  const auto args = parse_ints(rest);
  auto need = [&](std::size_t count) {
    if (args.size() != count) {
      throw InvalidArgument("'" + std::string(name) + "' expects " + std::to_string(count) +
                            " argument(s)");
    }
  };
  if (name == "simplex") {
    need(1);
    return simplex(static_cast<int>(args[0]));
  }
  if (name == "simplex_boundary") {
    need(1);
    return simplex_boundary(static_cast<int>(args[0]));
  }
  if (name == "cycle") {
    need(1);
    if (args[0] < 3) throw InvalidArgument("cycle: need at least 3 vertices");
    return cycle(static_cast<std::size_t>(args[0]));
  }
  if (name == "path") {
    need(1);
    if (args[0] < 1) throw InvalidArgument("path: need at least 1 vertex");
    return path(static_cast<std::size_t>(args[0]));
  }
  if (name == "stacked_sphere") {
    need(2);
    if (args[1] < 0) throw InvalidArgument("stacked_sphere: negative facet count");
    return stacked_sphere(static_cast<int>(args[0]), static_cast<std::size_t>(args[1]));
  }
  throw InvalidArgument("unknown complex '" + std::string(descriptor) + "'");
}

}  // namespace sdbetti
