#pragma once

// JSON complex format:
//   {"n": 3, "labels": [...], "facets": [[0,1],[1,2]]}
// "labels" is optional. Each label is a string, {"set": [...]} or
// {"lattice": [...]}. Facets are written in canonical (sorted) order.

#include <filesystem>
#include <string>
#include <string_view>

#include "sdbetti/complex.hpp"

namespace sdbetti {

SimplicialComplex complex_from_json(std::string_view text);
/// Pretty-printed with `indent` spaces; compact when indent < 0.
std::string complex_to_json(const SimplicialComplex& complex, int indent = -1);

SimplicialComplex load_complex(const std::filesystem::path& path);
void save_complex(const std::filesystem::path& path, const SimplicialComplex& complex);

}  // namespace sdbetti
