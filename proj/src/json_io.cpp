#include "lieform/json_io.hpp"

namespace lieform {

std::string label_str(const BasisLabel& l, const RootSystem& rs) {
  switch (l.kind) {
    case BasisLabel::Kind::H:
      return "H" + std::to_string(l.index + 1);
    case BasisLabel::Kind::K:
      return "K" + std::to_string(l.index + 1);
    case BasisLabel::Kind::E: {
      std::string s = "E[";
      const auto& coords = rs.roots()[static_cast<std::size_t>(l.index)].coords;
      for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(coords[i]);
      }
      return s + "]";
    }
  }
  throw Error("Internal", "unknown basis label kind");
}

Json rat_json(const Rat& q) { return rat_str(q); }

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return rat(j.get<long>());
  throw ParseError("expected a rational as \"p/q\" string or integer");
}

std::vector<std::vector<int>> cartan_grid_from_json(const Json& j) {
  const Json& grid = j.is_object() && j.contains("cartan") ? j.at("cartan") : j;
  if (!grid.is_array()) throw ParseError("Cartan matrix must be an array of integer rows");
  std::vector<std::vector<int>> out;
  for (const Json& row : grid) {
    if (!row.is_array()) throw ParseError("Cartan matrix row must be an array");
    std::vector<int> r;
    for (const Json& x : row) {
      if (!x.is_number_integer()) throw ParseError("Cartan entries must be integers");
      r.push_back(x.get<int>());
    }
    out.push_back(std::move(r));
  }
  return out;
}

Json cartan_json(const CartanMatrix& c) {
  Json j = Json::object();
  j["cartan"] = c.grid();
  return j;
}

Json u_json(const UMatrix& u) {
  Json rows = Json::array();
  for (int i = 0; i < u.n(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < u.n(); ++j) row.push_back(rat_json(u.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

UMatrix u_from_json(const Json& j) {
  const Json& grid = j.is_object() && j.contains("u") ? j.at("u") : j;
  if (!grid.is_array()) throw ParseError("u matrix must be an array of rows");
  std::vector<RatVec> rows;
  for (const Json& row : grid) {
    if (!row.is_array()) throw ParseError("u matrix row must be an array");
    RatVec r;
    for (const Json& x : row) r.push_back(rat_from_json(x));
    rows.push_back(std::move(r));
  }
  return UMatrix::from_grid(rows);
}

Json roots_json(const RootSystem& rs) {
  Json j = Json::object();
  j["count"] = rs.size();
  j["positive_count"] = rs.positive_count();
  Json arr = Json::array();
  for (const Root& r : rs.roots()) {
    Json e = Json::object();
    e["coords"] = r.coords;
    e["height"] = r.height;
    e["positive"] = r.positive;
    arr.push_back(std::move(e));
  }
  j["roots"] = std::move(arr);
  return j;
}

Json subspace_json(const Subspace& s) {
  Json j = Json::object();
  j["dim"] = s.dim();
  Json rows = Json::array();
  for (const auto& row : s.basis()) {
    Json r = Json::array();
    for (const Rat& x : row) r.push_back(rat_json(x));
    rows.push_back(std::move(r));
  }
  j["basis"] = std::move(rows);
  return j;
}

Json report_json(const Report& r) {
  Json j = Json::object();
  j["name"] = r.check;
  j["ok"] = r.ok();
  j["cases_checked"] = r.cases_checked;
  j["violations"] = r.violations;
  return j;
}

namespace {

Json gram_rows(const RatMatrix& gram) {
  Json rows = Json::array();
  for (int i = 0; i < gram.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < gram.cols(); ++j) row.push_back(rat_json(gram.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json bracket_rows(const BracketTable& t, const RootSystem& rs) {
  Json arr = Json::array();
  for (const auto& [key, value] : t.entries()) {
    Json e = Json::object();
    e["left"] = label_str(t.basis()[static_cast<std::size_t>(key.first)], rs);
    e["right"] = label_str(t.basis()[static_cast<std::size_t>(key.second)], rs);
    Json val = Json::object();
    for (const auto& [pos, c] : value.terms())
      val[label_str(t.basis()[static_cast<std::size_t>(pos)], rs)] = rat_json(c);
    e["value"] = std::move(val);
    arr.push_back(std::move(e));
  }
  return arr;
}

Json basis_names(const BracketTable& t, const RootSystem& rs) {
  Json arr = Json::array();
  for (const BasisLabel& l : t.basis()) arr.push_back(label_str(l, rs));
  return arr;
}

}  // namespace

Json table_json(const GAlgebra& g) {
  Json j = Json::object();
  j["algebra"] = "g";
  j["cartan"] = g.cartan().grid();
  j["symmetrizer"] = g.cartan().symmetrizer();
  j["dim"] = g.dim();
  j["basis"] = basis_names(g.table(), g.root_system());
  j["brackets"] = bracket_rows(g.table(), g.root_system());
  j["gram"] = gram_rows(g.gram());
  j["gram_det"] = rat_json(determinant(g.gram()));
  return j;
}

Json table_json(const DAlgebra& d) {
  Json j = Json::object();
  j["algebra"] = "d";
  j["cartan"] = d.cartan().grid();
  j["symmetrizer"] = d.cartan().symmetrizer();
  j["u"] = u_json(d.u());
  j["dim"] = d.dim();
  j["basis"] = basis_names(d.table(), d.root_system());
  j["brackets"] = bracket_rows(d.table(), d.root_system());
  j["gram"] = gram_rows(d.gram());
  j["gram_det"] = rat_json(d.gram_det());
  return j;
}

DAlgebra d_from_table_json(const Json& j) {
  if (!j.is_object() || j.value("algebra", "") != "d")
    throw ParseError("not a deformed-algebra table export");
  const CartanMatrix c = CartanMatrix::validate(cartan_grid_from_json(j.at("cartan")));
  const GAlgebra g(c);
  DAlgebra d(g, u_from_json(j.at("u")));

  const Json round = table_json(d);
  for (const char* key : {"symmetrizer", "dim", "basis", "brackets", "gram", "gram_det"}) {
    if (!j.contains(key)) throw ParseError(std::string("table export is missing '") + key + "'");
    if (j.at(key) != round.at(key))
      throw ParseError(std::string("table export field '") + key +
                       "' does not match the reconstructed algebra");
  }
  return d;
}

}  // namespace lieform
