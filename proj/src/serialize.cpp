#include "rahman/serialize.hpp"

#include <fstream>
#include <sstream>

#include "rahman/errors.hpp"
#include "rahman/lattice.hpp"

namespace rahman {

namespace {

Json triple(const std::array<Rational, 3>& a) {
  return Json::array({a[0].str(), a[1].str(), a[2].str()});
}

Json index_json(const MultiIndex& m) { return Json::array({m.r, m.s, m.t}); }

Rational rational_field(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw ParseError("parameter entries must be integers or rational strings");
}

}  // namespace

Json to_json(const Matrix3& m) {
  Json out = Json::array();
  for (int i = 0; i < 3; ++i) {
    Json row = Json::array();
    for (int j = 0; j < 3; ++j) row.push_back(m(i, j).str());
    out.push_back(row);
  }
  return out;
}

Json to_json(const Poly3& xi) {
  Json out = Json::array();
  for (const auto& [idx, c] : xi.terms())
    out.push_back(Json{{"index", index_json(idx)}, {"coeff", c.str()}});
  return out;
}

Json to_json(const Report& r) {
  Json out{{"name", r.name()}, {"passed", r.passed()}, {"checked", r.checked()}};
  out["first_failure"] = r.first_failure() ? Json(*r.first_failure()) : Json(nullptr);
  if (r.note()) out["note"] = *r.note();
  return out;
}

Json to_json(const std::vector<Report>& reports) {
  Json out = Json::array();
  for (const auto& r : reports) out.push_back(to_json(r));
  return out;
}

Json to_json(const DerivedParams& d) {
  return Json{{"t", d.t.str()},
              {"u", d.u.str()},
              {"v", d.v.str()},
              {"w", d.w.str()},
              {"nu", d.nu.str()},
              {"eta", triple(d.eta)},
              {"eta_tilde", triple(d.eta_tilde)},
              {"k", triple(d.k)},
              {"k_tilde", triple(d.k_tilde)},
              {"theta", d.theta.str()},
              {"theta_tilde", d.theta_tilde.str()}};
}

Json gram_to_json(const BilinearForm& f) {
  Json out = Json::array();
  for (const auto& g : f.gram()) out.push_back(g.str());
  return out;
}

Json table_to_json(const RahmanTable& table) {
  const auto idx = lattice(table.degree());
  Json rows = Json::array();
  for (const auto& a : idx) {
    Json row = Json::array();
    for (const auto& b : idx) row.push_back(table.at(a.s, a.t, b.s, b.t).str());
    rows.push_back(row);
  }
  Json labels = Json::array();
  for (const auto& a : idx) labels.push_back(index_json(a));
  return Json{{"N", table.degree()}, {"index", labels}, {"values", rows}};
}

std::string table_to_csv(const RahmanTable& table) {
  const auto idx = lattice(table.degree());
  std::vector<std::vector<Rational>> rows;
  for (const auto& a : idx) {
    std::vector<Rational> row;
    for (const auto& b : idx) row.push_back(table.at(a.s, a.t, b.s, b.t));
    rows.push_back(std::move(row));
  }
  return rows_to_csv(rows);
}

std::string rows_to_csv(const std::vector<std::vector<Rational>>& rows) {
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += ',';
      out += row[j].str();
    }
    out += '\n';
  }
  return out;
}

ParameterFile parse_parameter_file(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("parameter file is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("p") || !j["p"].is_array() || j["p"].size() != 4)
    throw ParseError("parameter file needs \"p\": an array of four entries");
  const auto& p = j["p"];
  ParameterFile out{{rational_field(p[0]), rational_field(p[1]), rational_field(p[2]), rational_field(p[3])},
                    std::nullopt};
  if (j.contains("N")) {
    if (!j["N"].is_number_integer() || j["N"].get<long>() < 0)
      throw ParseError("\"N\" must be a nonnegative integer");
    out.N = j["N"].get<int>();
  }
  return out;
}

ParameterFile load_parameter_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read parameter file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_parameter_file(buf.str());
}

ParameterSet parse_parameter_list(const std::string& text) {
  std::vector<Rational> vals;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    vals.push_back(Rational::parse(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (vals.size() != 4) throw ParseError("expected four comma-separated parameters, got " + std::to_string(vals.size()));
  return {vals[0], vals[1], vals[2], vals[3]};
}

}  // namespace rahman
