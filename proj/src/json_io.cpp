#include "trident/json_io.hpp"

#include <stdexcept>

namespace trident {

json to_json(const Rat& q) { return to_string(q); }

Rat rat_from_json(const json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  throw std::invalid_argument("expected a rational string, got " + j.dump());
}

json to_json(const PointQ& P) {
  if (P.inf) return "O";
  return json::array({to_json(P.x), to_json(P.y)});
}

PointQ point_from_json(const json& j) {
  if (j.is_string() && j.get<std::string>() == "O") return PointQ::infinity();
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("expected [x, y] or \"O\", got " + j.dump());
  return {rat_from_json(j[0]), rat_from_json(j[1])};
}

std::vector<PointQ> points_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a list of points");
  std::vector<PointQ> out;
  for (const auto& p : j) out.push_back(point_from_json(p));
  return out;
}

json to_json(const CurveQ& E) {
  return {{"a1", to_json(E.a1())}, {"a2", to_json(E.a2())}, {"a3", to_json(E.a3())},
          {"a4", to_json(E.a4())}, {"a6", to_json(E.a6())}};
}

CurveQ curve_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("expected a curve object");
  if (j.contains("A") && j.contains("B")) return CurveQ::from_ab(rat_from_json(j.at("A")), rat_from_json(j.at("B")));
  auto get = [&j](const char* k) { return j.contains(k) ? rat_from_json(j.at(k)) : Rat(0); };
  return CurveQ(get("a1"), get("a2"), get("a3"), get("a4"), get("a6"));
}

json to_json(const DiophTriple& T) {
  return {{"a", to_json(T.a)}, {"b", to_json(T.b)}, {"c", to_json(T.c)},
          {"r", to_json(T.r)}, {"s", to_json(T.s)}, {"t", to_json(T.t)}};
}

namespace {

std::string bits(const std::vector<bool>& row) {
  std::string s;
  s.reserve(row.size());
  for (bool b : row) s.push_back(b ? '1' : '0');
  return s;
}

std::vector<bool> unbits(const std::string& s) {
  std::vector<bool> row;
  row.reserve(s.size());
  for (char c : s) {
    if (c != '0' && c != '1') throw std::invalid_argument("bad bit row: " + s);
    row.push_back(c == '1');
  }
  return row;
}

}  // namespace

json to_json(const IndependenceCertificate& c) {
  json j;
  j["curve_id"] = c.curve_id;
  j["roots"] = json::array({to_json(c.split.e1), to_json(c.split.e2), to_json(c.split.e3)});
  j["input_points"] = json::array();
  for (const auto& P : c.input_points) j["input_points"].push_back(to_json(P));
  j["halvings"] = json::array();
  for (const auto& h : c.halvings) {
    j["halvings"].push_back({{"combo", h.combo},
                             {"torsion", to_json(h.torsion)},
                             {"sum", to_json(h.sum)},
                             {"half", to_json(h.half)},
                             {"replaced", h.replaced}});
  }
  j["points"] = json::array();
  for (const auto& P : c.points) j["points"].push_back(to_json(P));
  j["torsion"] = json::array();
  for (const auto& P : c.torsion) j["torsion"].push_back(to_json(P));
  j["basis"] = json::array();
  for (const auto& b : c.basis) j["basis"].push_back(to_string(b));
  j["rows"] = json::array();
  for (const auto& r : c.rows) j["rows"].push_back(bits(r));
  j["torsion_rows"] = json::array();
  for (const auto& r : c.torsion_rows) j["torsion_rows"].push_back(bits(r));
  j["torsion_rank"] = c.torsion_rank;
  j["bound"] = c.bound;
  j["dependency"] = c.dependency;
  j["dependency_is_torsion"] = c.dependency_is_torsion ? json(*c.dependency_is_torsion) : json(nullptr);
  return j;
}

IndependenceCertificate certificate_from_json(const json& j) {
  const auto& r = j.at("roots");
  IndependenceCertificate c{j.value("curve_id", std::string()),
                            SplitCurve(rat_from_json(r.at(0)), rat_from_json(r.at(1)), rat_from_json(r.at(2))),
                            {},
                            {},
                            points_from_json(j.at("points")),
                            points_from_json(j.at("torsion")),
                            {},
                            {},
                            {},
                            j.at("torsion_rank").get<int>(),
                            j.at("bound").get<int>(),
                            j.value("dependency", std::vector<int>{}),
                            std::nullopt};
  c.input_points = j.contains("input_points") ? points_from_json(j["input_points"]) : c.points;
  if (j.contains("halvings")) {
    for (const auto& h : j["halvings"]) {
      c.halvings.push_back({h.at("combo").get<std::vector<int>>(), point_from_json(h.at("torsion")),
                            point_from_json(h.at("sum")), point_from_json(h.at("half")),
                            h.at("replaced").get<int>()});
    }
  }
  for (const auto& b : j.at("basis")) c.basis.emplace_back(b.get<std::string>(), 10);
  for (const auto& row : j.at("rows")) c.rows.push_back(unbits(row.get<std::string>()));
  for (const auto& row : j.at("torsion_rows")) c.torsion_rows.push_back(unbits(row.get<std::string>()));
  if (j.contains("dependency_is_torsion") && !j["dependency_is_torsion"].is_null()) {
    c.dependency_is_torsion = j["dependency_is_torsion"].get<bool>();
  }
  return c;
}

}  // namespace trident
