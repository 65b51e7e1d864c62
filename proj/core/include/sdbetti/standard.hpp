#pragma once

// Named complexes used as fixtures and generators.

#include <cstddef>
#include <string_view>

#include "sdbetti/complex.hpp"

namespace sdbetti {

/// The full k-simplex on k+1 vertices.
SimplicialComplex simplex(int k);
/// Boundary of the k-simplex (k+1 vertices, dimension k-1).
SimplicialComplex simplex_boundary(int k);
/// Cycle graph on m >= 3 vertices.
SimplicialComplex cycle(std::size_t m);
/// Path graph on m >= 1 vertices.
SimplicialComplex path(std::size_t m);
/// Stacked sphere of dimension `dim` with `n_facets` facets, grown from the
/// boundary of the (dim+1)-simplex. Each stacking step adds dim facets.
SimplicialComplex stacked_sphere(int dim, std::size_t n_facets);
/// Six-vertex real projective plane (10 triangles).
SimplicialComplex rp2_six();
/// Adds k facets ridge ∪ {apex_i} with fresh apices.
SimplicialComplex stacked_attach(const SimplicialComplex& base, std::size_t k, const Face& ridge);

/// Parses "simplex:3", "simplex_boundary:2", "cycle:6", "path:4",
/// "stacked_sphere:2,6", "rp2_six", "cone:<descriptor>".
SimplicialComplex standard_complex(std::string_view descriptor);

}  // namespace sdbetti
