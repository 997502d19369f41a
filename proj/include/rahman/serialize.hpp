#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rahman/form.hpp"
#include "rahman/matrix3.hpp"
#include "rahman/params.hpp"
#include "rahman/poly3.hpp"
#include "rahman/rahman_poly.hpp"
#include "rahman/report.hpp"
#include "rahman/sl3.hpp"

namespace rahman {

using Json = nlohmann::ordered_json;

/// Row-major array of rational strings.
Json to_json(const Matrix3& m);
/// [{"index":[r,s,t],"coeff":"num/den"}, ...] in lattice order.
Json to_json(const Poly3& xi);
Json to_json(const Report& r);
Json to_json(const std::vector<Report>& reports);
Json to_json(const DerivedParams& d);

/// Gram diagonal as a list of rational strings in lattice order.
Json gram_to_json(const BilinearForm& f);

/// The D x D matrix P(s, t, sigma, tau), rows indexed by (r,s,t) and columns by
/// (rho,sigma,tau), both in lattice order.
Json table_to_json(const RahmanTable& table);
std::string table_to_csv(const RahmanTable& table);

/// One CSV row per line, cells are rational strings.
std::string rows_to_csv(const std::vector<std::vector<Rational>>& rows);

struct ParameterFile {
  ParameterSet params;
  std::optional<int> N;
};

/// {"p": ["1","2","3","5"], "N": 4}. Entries of "p" may be strings or
/// integers. Throws ParseError.
ParameterFile parse_parameter_file(const std::string& text);
ParameterFile load_parameter_file(const std::filesystem::path& path);

/// "1,2,3,5" or "1/2,-3,4,5". Throws ParseError.
ParameterSet parse_parameter_list(const std::string& text);

}  // namespace rahman
