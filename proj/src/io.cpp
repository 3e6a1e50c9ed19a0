#include "perscert/io.hpp"

namespace perscert::io {

const json& field(const json& j, std::string_view key) {
  if (!j.is_object()) throw SchemaError("expected a JSON object while looking for \"" + std::string(key) + "\"");
  auto it = j.find(std::string(key));
  if (it == j.end()) throw SchemaError("missing field \"" + std::string(key) + "\"");
  return *it;
}

void expect_format(const json& j, std::string_view format) {
  const json& f = field(j, "format");
  if (!f.is_string() || f.get<std::string>() != format)
    throw SchemaError("expected format \"" + std::string(format) + "\", got " + f.dump());
}

std::string category_of(const json& j) {
  const json& c = field(j, "category");
  if (!c.is_string()) throw SchemaError("category must be a string");
  return c.get<std::string>();
}

json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) throw SchemaError("rational must be a string \"p/q\" or an integer, got " + j.dump());
  return Rational::parse(j.get<std::string>());
}

json to_json(const Grade& g) {
  json out = json::array();
  for (const auto& c : g) out.push_back(to_json(c));
  return out;
}

Grade grade_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw SchemaError("grade must be a nonempty array");
  std::vector<Rational> c;
  for (const auto& v : j) c.push_back(rational_from_json(v));
  return Grade(std::move(c));
}

json to_json(const Extended& v) { return v ? to_json(*v) : json("inf"); }

Extended extended_from_json(const json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return std::nullopt;
  return rational_from_json(j);
}

json to_json(const Grid& g) {
  json out = json::array();
  for (const auto& axis : g.axes()) {
    json a = json::array();
    for (const auto& v : axis) a.push_back(to_json(v));
    out.push_back(std::move(a));
  }
  return out;
}

Grid grid_from_json(const json& j) {
  if (!j.is_array()) throw SchemaError("axes must be an array of arrays");
  std::vector<std::vector<Rational>> axes;
  for (const auto& a : j) {
    if (!a.is_array()) throw SchemaError("axes must be an array of arrays");
    std::vector<Rational> axis;
    for (const auto& v : a) axis.push_back(rational_from_json(v));
    axes.push_back(std::move(axis));
  }
  return decoding("axes", [&] { return Grid(std::move(axes)); });
}

json to_json(const SimplicialComplex& k) { return {{"simplices", k.simplices()}}; }

SimplicialComplex complex_from_json(const json& j) {
  const json& s = field(j, "simplices");
  return decoding("complex", [&] { return SimplicialComplex(s.get<std::vector<Simplex>>()); });
}

json to_json(const VertexMap& f) {
  json out = json::array();
  for (const auto& [v, w] : f.pairs()) out.push_back({v, w});
  return out;
}

VertexMap vertex_map_from_json(const json& j) {
  if (!j.is_array()) throw SchemaError("vertex map must be an array of [v, w] pairs");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2) throw SchemaError("vertex map entries must be [v, w]");
    pairs.emplace_back(p[0].get<Vertex>(), p[1].get<Vertex>());
  }
  return decoding("vertex map", [&] { return VertexMap(std::move(pairs)); });
}

json to_json(const F2Matrix& m) { return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", m.row_strings()}}; }

F2Matrix matrix_from_json(const json& j) {
  const auto rows = field(j, "rows").get<std::size_t>();
  const auto cols = field(j, "cols").get<std::size_t>();
  const auto entries = field(j, "entries").get<std::vector<std::string>>();
  return decoding("matrix", [&] { return F2Matrix::from_rows(rows, cols, entries); });
}

std::size_t CategoryIO<FinSet>::object(const json& j) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    throw SchemaError("object must be a nonnegative integer, got " + j.dump());
  return j.get<std::size_t>();
}

FinSet::Map CategoryIO<FinSet>::map(const json& j) {
  if (!j.is_array()) throw SchemaError("FinSet map must be an array of indices");
  FinSet::Map out;
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<long long>() < 0) throw SchemaError("FinSet map entries must be nonnegative integers");
    out.push_back(v.get<std::uint32_t>());
  }
  return out;
}

json to_json(const CheckReport& r) {
  json out = {{"format", kReportFormat}, {"valid", r.valid}};
  if (!r.valid) {
    out["identity"] = r.identity;
    out["at"] = r.at ? to_json(*r.at) : json(nullptr);
    out["detail"] = r.detail;
  }
  return out;
}

json to_json(const FilteredComplex& f) {
  json simplices = json::array();
  for (const auto& s : f.simplices()) simplices.push_back({{"v", s.vertices}, {"grade", to_json(s.grade)}});
  return {{"format", kFilteredFormat}, {"m", f.arity()}, {"vertices", f.vertices()}, {"simplices", std::move(simplices)}};
}

FilteredComplex filtered_from_json(const json& j) {
  expect_format(j, kFilteredFormat);
  const auto m = field(j, "m").get<std::size_t>();
  const auto vertices = field(j, "vertices").get<std::vector<Vertex>>();
  std::vector<FilteredSimplex> simplices;
  for (const auto& s : field(j, "simplices"))
    simplices.push_back({field(s, "v").get<Simplex>(), grade_from_json(field(s, "grade"))});
  return decoding("filtered complex", [&] { return FilteredComplex(m, vertices, std::move(simplices)); });
}

json to_json(const ValidationReport& r) {
  json out = {{"format", kReportFormat}, {"valid", r.valid}};
  if (!r.valid) out["violation"] = r.violation;
  return out;
}

json to_json(const FilteredCheck& r) {
  json out = {{"format", kReportFormat}, {"filtered", r.filtered}};
  if (r.filtered) {
    out["beta"] = to_json(*r.witness);
  } else {
    out["condition"] = r.violated_condition;
    out["simplex"] = r.simplex ? json(*r.simplex) : json(nullptr);
    out["detail"] = r.detail;
  }
  return out;
}

json to_json(const MetricInput& m) {
  json rows = json::array();
  for (const auto& row : m.distances) {
    json r = json::array();
    for (const auto& v : row) r.push_back(to_json(v));
    rows.push_back(std::move(r));
  }
  json out = {{"format", kMetricFormat}, {"distances", std::move(rows)}};
  if (m.function) {
    json f = json::array();
    for (const auto& v : *m.function) f.push_back(to_json(v));
    out["function"] = std::move(f);
  }
  return out;
}

MetricInput metric_from_json(const json& j) {
  expect_format(j, kMetricFormat);
  MetricInput m;
  for (const auto& row : field(j, "distances")) {
    std::vector<Rational> r;
    for (const auto& v : row) r.push_back(rational_from_json(v));
    m.distances.push_back(std::move(r));
  }
  if (j.contains("function")) {
    std::vector<Rational> f;
    for (const auto& v : j["function"]) f.push_back(rational_from_json(v));
    m.function = std::move(f);
  }
  decoding("metric", [&] {
    m.check();
    return 0;
  });
  return m;
}

json to_json(const Barcode& b) {
  json intervals = json::array();
  for (const auto& i : b) intervals.push_back({{"birth", to_json(i.birth)}, {"death", to_json(i.death)}});
  return {{"format", kBarcodeFormat}, {"intervals", std::move(intervals)}};
}

Barcode barcode_from_json(const json& j) {
  expect_format(j, kBarcodeFormat);
  Barcode out;
  for (const auto& i : field(j, "intervals")) {
    Interval iv{rational_from_json(field(i, "birth")), extended_from_json(field(i, "death"))};
    if (iv.death && !(iv.birth < *iv.death)) throw SchemaError("interval " + to_string(iv) + " is empty");
    out.push_back(std::move(iv));
  }
  sort_barcode(out);
  return out;
}

json to_json(const Matching& m, const Barcode& a, const Barcode& b, const Extended& value) {
  json pairs = json::array();
  for (const auto& [i, k] : m.pairs) {
    json p;
    p["left"] = i ? json(to_string(a[*i])) : json("diagonal");
    p["right"] = k ? json(to_string(b[*k])) : json("diagonal");
    pairs.push_back(std::move(p));
  }
  return {{"format", kMatchingFormat}, {"distance", to_json(value)}, {"pairs", std::move(pairs)}};
}

json to_json(const SquareDiagram& d) {
  return {{"format", kSquareFormat},
          {"objects", {{"00", to_json(d.d00)}, {"01", to_json(d.d01)}, {"10", to_json(d.d10)}, {"11", to_json(d.d11)}}},
          {"maps",
           {{"00->10", to_json(d.m00_10)},
            {"00->01", to_json(d.m00_01)},
            {"10->11", to_json(d.m10_11)},
            {"01->11", to_json(d.m01_11)}}}};
}

SquareDiagram square_from_json(const json& j) {
  expect_format(j, kSquareFormat);
  const json& o = field(j, "objects");
  const json& m = field(j, "maps");
  return {complex_from_json(field(o, "00")),       complex_from_json(field(o, "01")),
          complex_from_json(field(o, "10")),       complex_from_json(field(o, "11")),
          vertex_map_from_json(field(m, "00->10")), vertex_map_from_json(field(m, "00->01")),
          vertex_map_from_json(field(m, "10->11")), vertex_map_from_json(field(m, "01->11"))};
}

}  // namespace perscert::io
