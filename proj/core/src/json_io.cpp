#include "sdbetti/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sdbetti/error.hpp"

namespace sdbetti {

using nlohmann::json;

namespace {

Label label_from_json(const json& j) {
  if (j.is_null()) return std::monostate{};
  if (j.is_string()) return PlainLabel{j.get<std::string>()};
  if (j.is_object() && j.contains("set")) return SetLabel{j.at("set").get<std::vector<Vertex>>()};
  if (j.is_object() && j.contains("lattice")) {
    return LatticeLabel{j.at("lattice").get<std::vector<int>>()};
  }
  throw InvalidArgument("unrecognized vertex label: " + j.dump());
}

json label_to_json(const Label& label) {
  return std::visit(
      [](const auto& l) -> json {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return nullptr;
        } else if constexpr (std::is_same_v<T, SetLabel>) {
          return json{{"set", l.members}};
        } else if constexpr (std::is_same_v<T, LatticeLabel>) {
          return json{{"lattice", l.coords}};
        } else {
          return l.text;
        }
      },
      label);
}

}  // namespace

SimplicialComplex complex_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed JSON: ") + e.what());
  }
  try {
    if (!doc.is_object()) throw InvalidArgument("complex JSON must be an object");
    const auto n = doc.at("n").get<std::int64_t>();
    if (n < 0) throw InvalidArgument("\"n\" must be nonnegative");
    std::vector<std::vector<Vertex>> facets;
    for (const auto& f : doc.at("facets")) {
      std::vector<Vertex> face;
      for (const auto& v : f) {
        const auto id = v.get<std::int64_t>();
        if (id < 0 || id >= n) throw InvalidArgument("vertex id out of range: " + v.dump());
        face.push_back(static_cast<Vertex>(id));
      }
      facets.push_back(std::move(face));
    }
    auto complex = SimplicialComplex::from_facets(std::move(facets), static_cast<std::size_t>(n));
    if (doc.contains("labels") && !doc.at("labels").is_null()) {
      std::vector<Label> labels;
      for (const auto& l : doc.at("labels")) labels.push_back(label_from_json(l));
      complex = complex.with_labels(std::move(labels));
    }
    return complex;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("bad complex JSON: ") + e.what());
  }
}

std::string complex_to_json(const SimplicialComplex& complex, int indent) {
  json doc = json::object();
  doc["n"] = complex.num_vertices();
  if (complex.has_labels()) {
    json labels = json::array();
    for (const auto& l : complex.labels()) labels.push_back(label_to_json(l));
    doc["labels"] = std::move(labels);
  }
  json facets = json::array();
  for (const auto& f : complex.facets()) facets.push_back(f.vertices());
  doc["facets"] = std::move(facets);
  return doc.dump(indent);
}

SimplicialComplex load_complex(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return complex_from_json(buf.str());
}

void save_complex(const std::filesystem::path& path, const SimplicialComplex& complex) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write " + path.string());
  out << complex_to_json(complex, 2) << '\n';
}

}  // namespace sdbetti
