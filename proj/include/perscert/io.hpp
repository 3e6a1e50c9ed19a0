#pragma once

#include <map>
#include <string>
#include <string_view>

#include "json.hpp"
#include "perscert/distances.hpp"
#include "perscert/rectify.hpp"

namespace perscert::io {

using nlohmann::json;

inline constexpr std::string_view kObjectFormat = "perscert.persistent/1";
inline constexpr std::string_view kCertFormat = "perscert.certificate/1";
inline constexpr std::string_view kFilteredFormat = "perscert.filtered/1";
inline constexpr std::string_view kMetricFormat = "perscert.metric/1";
inline constexpr std::string_view kBarcodeFormat = "perscert.barcode/1";
inline constexpr std::string_view kMatchingFormat = "perscert.matching/1";
inline constexpr std::string_view kZigzagFormat = "perscert.zigzag/1";
inline constexpr std::string_view kSquareFormat = "perscert.square/1";
inline constexpr std::string_view kReportFormat = "perscert.report/1";

// Lookup helpers that raise SchemaError instead of json exceptions.
const json& field(const json& j, std::string_view key);
void expect_format(const json& j, std::string_view format);
std::string category_of(const json& j);

json to_json(const Rational& r);
Rational rational_from_json(const json& j);
json to_json(const Grade& g);
Grade grade_from_json(const json& j);
json to_json(const Extended& v);
Extended extended_from_json(const json& j);
json to_json(const Grid& g);
Grid grid_from_json(const json& j);

json to_json(const SimplicialComplex& k);
SimplicialComplex complex_from_json(const json& j);
json to_json(const VertexMap& f);
VertexMap vertex_map_from_json(const json& j);
json to_json(const F2Matrix& m);
F2Matrix matrix_from_json(const json& j);

// Per-category encoding of objects and maps.
template <class C>
struct CategoryIO;

template <>
struct CategoryIO<FinSet> {
  static json object(const std::size_t& n) { return n; }
  static std::size_t object(const json& j);
  static json map(const FinSet::Map& f) { return f; }
  static FinSet::Map map(const json& j);
};

template <>
struct CategoryIO<F2Vec> {
  static json object(const std::size_t& n) { return n; }
  static std::size_t object(const json& j) { return CategoryIO<FinSet>::object(j); }
  static json map(const F2Matrix& m) { return to_json(m); }
  static F2Matrix map(const json& j) { return matrix_from_json(j); }
};

template <>
struct CategoryIO<Complex> {
  static json object(const SimplicialComplex& k) { return to_json(k); }
  static SimplicialComplex object(const json& j) { return complex_from_json(j); }
  static json map(const VertexMap& f) { return to_json(f); }
  static VertexMap map(const json& j) { return vertex_map_from_json(j); }
};

// Wraps library errors raised while decoding into SchemaError.
template <class F>
auto decoding(std::string_view what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const SchemaError&) {
    throw;
  } catch (const std::exception& e) {
    throw SchemaError(std::string(what) + ": " + e.what());
  }
}

template <Category C>
json to_json(const PersistentObject<C>& x) {
  json objects = json::array();
  for (const auto& o : x.objects()) objects.push_back(CategoryIO<C>::object(o));
  json edges = json::array();
  for (std::size_t a = 0; a < x.arity(); ++a) {
    json axis = json::array();
    for (std::size_t p = 0; p < x.grid().size(); ++p)
      axis.push_back(x.grid().has_successor(p, a) ? CategoryIO<C>::map(x.edge(p, a)) : json(nullptr));
    edges.push_back(std::move(axis));
  }
  return {{"format", kObjectFormat},
          {"category", std::string(C::kName)},
          {"m", x.arity()},
          {"indexing", x.indexing() == Indexing::Integer ? "integer" : "real"},
          {"axes", to_json(x.grid())},
          {"objects", std::move(objects)},
          {"edge_maps", std::move(edges)}};
}

template <Category C>
PersistentObject<C> object_from_json(const json& j) {
  expect_format(j, kObjectFormat);
  if (category_of(j) != C::kName) throw SchemaError("expected a " + std::string(C::kName) + " object, got " + category_of(j));
  const Grid grid = grid_from_json(field(j, "axes"));
  if (field(j, "m").get<std::size_t>() != grid.arity()) throw SchemaError("m does not match the number of axes");
  const std::string indexing = field(j, "indexing").get<std::string>();
  if (indexing != "real" && indexing != "integer") throw SchemaError("indexing must be \"real\" or \"integer\"");
  const json& objs = field(j, "objects");
  const json& edges = field(j, "edge_maps");
  if (!objs.is_array() || objs.size() != grid.size()) throw SchemaError("objects: expected one entry per grid point");
  if (!edges.is_array() || edges.size() != grid.arity()) throw SchemaError("edge_maps: expected one list per axis");
  std::vector<typename C::Object> objects;
  for (const auto& o : objs) objects.push_back(CategoryIO<C>::object(o));
  std::vector<std::vector<typename C::Map>> maps(grid.arity());
  for (std::size_t a = 0; a < grid.arity(); ++a) {
    if (!edges[a].is_array() || edges[a].size() != grid.size()) throw SchemaError("edge_maps: wrong length");
    for (std::size_t p = 0; p < grid.size(); ++p)
      maps[a].push_back(edges[a][p].is_null() ? typename C::Map{} : CategoryIO<C>::map(edges[a][p]));
  }
  return decoding("persistent object", [&] {
    return PersistentObject<C>(grid, std::move(objects), std::move(maps),
                               indexing == "integer" ? Indexing::Integer : Indexing::Real);
  });
}

template <Category C>
json components_to_json(const DeltaMorphism<C>& f) {
  json out = json::array();
  for (std::size_t p = 0; p < f.grid().size(); ++p)
    out.push_back({{"at", to_json(f.grid().point(p))}, {"map", CategoryIO<C>::map(f.components()[p])}});
  return out;
}

template <Category C>
DeltaMorphism<C> morphism_from_components(const PersistentObject<C>& src, const PersistentObject<C>& tgt,
                                          const Grade& shift, const json& comps) {
  if (!comps.is_array()) throw SchemaError("components must be an array");
  std::map<Grade, typename C::Map> by_grade;
  for (const auto& c : comps) by_grade[grade_from_json(field(c, "at"))] = CategoryIO<C>::map(field(c, "map"));
  return decoding("morphism", [&] {
    return DeltaMorphism<C>::build(src, tgt, shift, [&](const Grade& r) {
      auto it = by_grade.find(r);
      if (it == by_grade.end()) throw SchemaError("missing component at " + r.str());
      return it->second;
    });
  });
}

template <Category C>
json to_json(const InterleavingCert<C>& cert) {
  return {{"format", kCertFormat},
          {"category", std::string(C::kName)},
          {"epsilon", to_json(cert.epsilon())},
          {"delta", to_json(cert.delta())},
          {"X", to_json(cert.x())},
          {"Y", to_json(cert.y())},
          {"f_components", components_to_json(cert.f)},
          {"g_components", components_to_json(cert.g)}};
}

template <Category C>
InterleavingCert<C> cert_from_json(const json& j) {
  expect_format(j, kCertFormat);
  if (category_of(j) != C::kName) throw SchemaError("expected a " + std::string(C::kName) + " certificate");
  const auto x = object_from_json<C>(field(j, "X"));
  const auto y = object_from_json<C>(field(j, "Y"));
  const Grade eps = grade_from_json(field(j, "epsilon"));
  const Grade delta = grade_from_json(field(j, "delta"));
  return {morphism_from_components(x, y, eps, field(j, "f_components")),
          morphism_from_components(y, x, delta, field(j, "g_components"))};
}

json to_json(const CheckReport& r);

json to_json(const FilteredComplex& f);
FilteredComplex filtered_from_json(const json& j);
json to_json(const ValidationReport& r);
json to_json(const FilteredCheck& r);

json to_json(const MetricInput& m);
MetricInput metric_from_json(const json& j);

json to_json(const Barcode& b);
Barcode barcode_from_json(const json& j);
json to_json(const Matching& m, const Barcode& a, const Barcode& b, const Extended& value);

json to_json(const SquareDiagram& d);
SquareDiagram square_from_json(const json& j);

template <Category C>
json to_json(const ZigzagResult<C>& z) {
  const Grade total = z.composite.epsilon();
  return {{"format", kZigzagFormat},
          {"category", std::string(C::kName)},
          {"m", z.m},
          {"window", {z.window_lo, z.window_hi}},
          {"C", to_json(z.c)},
          {"even_witness", z.even_witness},
          {"odd_witness", z.odd_witness},
          {"pieces",
           {{"A_to_even", to_json(z.a_to_even)}, {"even_to_odd", to_json(z.even_to_odd)}, {"odd_to_B", to_json(z.odd_to_b)}}},
          {"composite", to_json(z.composite)},
          {"composite_shifts", {to_json(z.composite.epsilon()), to_json(z.composite.delta())}}};
}

}  // namespace perscert::io
