#include "strata/io.hpp"

#include <utility>
#include <vector>

namespace strata {

namespace {

const json& field_or_throw(const json& doc, const char* key, const char* context) {
  if (!doc.is_object() || !doc.contains(key))
    throw parse_error(std::string(context) + " must carry \"" + key + "\"");
  return doc.at(key);
}

int int_from_json(const json& v, const char* what) {
  if (!v.is_number_integer())
    throw parse_error(std::string(what) + " must be an integer, got " + v.dump());
  return v.get<int>();
}

}  // namespace

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(e.what());
  }
}

std::string write_document(const json& doc) { return doc.dump(2) + "\n"; }

rational rational_from_json(const json& v) {
  if (v.is_string()) {
    if (auto r = parse_rational(v.get<std::string>())) return *r;
    throw parse_error("not an exact rational: \"" + v.get<std::string>() + "\"");
  }
  if (v.is_number_integer()) return rational(v.get<long long>());
  if (v.is_number_unsigned()) return rational(v.get<unsigned long long>());
  if (v.is_number_float())
    throw parse_error("floating-point value " + v.dump() +
                      " rejected; write it as an exact string like \"1/2\"");
  throw parse_error("expected a rational, got " + v.dump());
}

json json_of(const rational& x) { return to_string(x); }

simplicial_complex complex_from_json(const json& doc) {
  const json& vertices = field_or_throw(doc, "vertices", "a complex document");
  const json& simplices = field_or_throw(doc, "simplices", "a complex document");
  if (!vertices.is_array()) throw parse_error("\"vertices\" must be an array");
  if (!simplices.is_array()) throw parse_error("\"simplices\" must be an array");

  std::map<int, rational> heights;
  for (const json& v : vertices) {
    const int id = int_from_json(field_or_throw(v, "id", "a vertex"), "a vertex id");
    if (id < 0) throw parse_error("vertex id " + std::to_string(id) + " is negative");
    const rational h = rational_from_json(field_or_throw(v, "height", "a vertex"));
    if (!heights.emplace(id, h).second)
      throw parse_error("vertex id " + std::to_string(id) + " appears twice");
  }

  std::vector<simplex> maximal;
  for (const json& s : simplices) {
    if (!s.is_array()) throw parse_error("each simplex must be an array of vertex ids");
    std::vector<int> ids;
    for (const json& v : s) ids.push_back(int_from_json(v, "a simplex entry"));
    for (int v : ids)
      if (heights.count(v) == 0)
        throw parse_error("simplex uses vertex " + std::to_string(v) +
                          " which is not in \"vertices\"");
    maximal.push_back(make_simplex(std::move(ids)));
  }
  return simplicial_complex::from_maximal(heights, maximal);
}

json json_of(const simplicial_complex& K) {
  json vertices = json::array();
  for (const auto& [v, h] : K.heights()) vertices.push_back({{"id", v}, {"height", json_of(h)}});
  json simplices = json::array();
  for (const simplex& s : K.simplices()) simplices.push_back(s);
  return {{"vertices", std::move(vertices)}, {"simplices", std::move(simplices)}};
}

filtration filtration_from_json(const json& doc) {
  const json& stages = field_or_throw(doc, "stages", "a filtration document");
  const json& indices = field_or_throw(doc, "indices", "a filtration document");
  if (!stages.is_array() || !indices.is_array())
    throw parse_error("\"stages\" and \"indices\" must be arrays");
  if (stages.size() != indices.size())
    throw parse_error("filtration has " + std::to_string(stages.size()) + " stages but " +
                      std::to_string(indices.size()) + " indices");

  std::vector<simplicial_complex> cs;
  for (const json& s : stages) cs.push_back(complex_from_json(s));
  std::vector<rational> is;
  for (const json& v : indices) is.push_back(rational_from_json(v));
  return filtration::make(std::move(cs), std::move(is));
}

json json_of(const filtration& F) {
  json stages = json::array();
  for (const simplicial_complex& K : F.stages()) stages.push_back(json_of(K));
  json indices = json::array();
  for (const rational& i : F.indices()) indices.push_back(json_of(i));
  return {{"stages", std::move(stages)}, {"indices", std::move(indices)}};
}

json json_of(const matrix& m) {
  json entries = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(to_string(m.entry(r, c)));
    entries.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

json json_of(const barcode& b) {
  json bars = json::array();
  for (const bar& x : b.bars)
    bars.push_back({{"degree", b.degree},
                    {"birth_index", x.birth},
                    {"death_index", x.death},
                    {"multiplicity", x.multiplicity}});
  return bars;
}

}  // namespace strata
