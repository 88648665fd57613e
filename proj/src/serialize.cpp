#include "gorconf/serialize.hpp"

#include <sstream>

namespace gorconf {

namespace {

template <typename T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::InvalidArgument, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw Error(ErrorCode::InvalidArgument, std::string("field '") + key + "' has the wrong type");
  }
}

}  // namespace

json to_json(const Configuration& x) {
  json params = {{"c", x.params().c}, {"s", nullptr}, {"t", x.params().t}};
  if (x.params().s) params["s"] = *x.params().s;
  json comps = json::array();
  for (const auto& p : x.components()) {
    json row = json::array();
    for (const auto& l : p) row.push_back(l.to_string());
    comps.push_back(std::move(row));
  }
  return {{"params", params},
          {"universe", {{"M", x.universe().m_count}, {"L", x.universe().l_count}}},
          {"components", comps}};
}

Configuration configuration_from_json(const json& j) {
  const json params = field<json>(j, "params");
  ConfigParams p;
  p.c = field<int>(params, "c");
  p.t = field<int>(params, "t");
  if (params.contains("s") && !params["s"].is_null()) p.s = field<int>(params, "s");
  const json universe = field<json>(j, "universe");
  Universe u{field<int>(universe, "M"), field<int>(universe, "L")};
  std::vector<PrimeComponent> comps;
  for (const auto& row : field<json>(j, "components")) {
    std::vector<Label> labels;
    for (const auto& l : row) {
      if (!l.is_string()) throw Error(ErrorCode::InvalidArgument, "labels must be strings like \"M0\"");
      labels.push_back(Label::parse(l.get<std::string>()));
    }
    comps.push_back(std::move(labels));
  }
  return Configuration(p, u, std::move(comps));
}

json to_json(const SimplicialComplex& delta) {
  json facets = json::array();
  for (auto f : delta.facets()) facets.push_back(vertices_of(f));
  return {{"n", delta.vertex_count()}, {"facets", facets}};
}

SimplicialComplex complex_from_json(const json& j) {
  std::vector<VertexSet> facets;
  for (const auto& f : field<json>(j, "facets")) facets.push_back(vertex_set(f.get<std::vector<int>>()));
  return SimplicialComplex(field<int>(j, "n"), std::move(facets));
}

json to_json(const BettiTable& table) {
  json entries = json::array();
  for (const auto& [key, r] : table.entries()) entries.push_back({key.first, key.second, r});
  return {{"entries", entries}};
}

BettiTable betti_from_json(const json& j) {
  BettiTable table;
  for (const auto& e : field<json>(j, "entries")) {
    if (!e.is_array() || e.size() != 3) throw Error(ErrorCode::InvalidArgument, "Betti entries are [i, j, rank]");
    table.add(e[0].get<int>(), e[1].get<int>(), e[2].get<std::int64_t>());
  }
  return table;
}

json to_json(const std::vector<Monomial>& monomials) {
  json out = json::array();
  for (const auto& m : monomials) out.push_back(m.exps);
  return out;
}

json to_json(const HVector& h) { return h.entries(); }

std::string export_m2(const Configuration& x) {
  int top = 0;
  for (const auto& l : x.universe().labels()) top = std::max(top, l.position());
  std::ostringstream out;
  out << "R = QQ[x0..x" << top << "];\n";
  if (x.empty()) {
    out << "I = ideal(1_R);\n";
    return out.str();
  }
  out << "I = intersect(";
  for (std::size_t k = 0; k < x.components().size(); ++k) {
    if (k) out << ",\n  ";
    out << "ideal(";
    const auto& p = x.components()[k];
    for (std::size_t i = 0; i < p.size(); ++i) out << (i ? "," : "") << 'x' << p[i].position();
    out << ')';
  }
  out << ");\n";
  return out.str();
}

}  // namespace gorconf
