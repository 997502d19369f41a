// Command-line front end: check, eval, table, verify, export.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "rahman/errors.hpp"
#include "rahman/form.hpp"
#include "rahman/lattice.hpp"
#include "rahman/params.hpp"
#include "rahman/polymodule.hpp"
#include "rahman/rahman_poly.hpp"
#include "rahman/serialize.hpp"
#include "rahman/sl3.hpp"
#include "rahman/suites.hpp"

namespace {

using namespace rahman;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInvalid = 2;
constexpr int kDefaultMaxN = 12;

struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string p;
  std::string params_file;
  std::optional<int> N;
  std::string format = "json";
  std::string out;
  std::string suite;
  std::string suite_positional;
  std::string what = "all";
  int a = 0, b = 0, c = 0, d = 0;
};

int max_N() {
  const char* env = std::getenv("RAHMAN_MAX_N");
  if (!env) return kDefaultMaxN;
  try {
    std::size_t used = 0;
    const int v = std::stoi(env, &used);
    if (used != std::string(env).size() || v < 0) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw InvalidInput(std::string("RAHMAN_MAX_N is not a nonnegative integer: ") + env);
  }
}

ParameterFile load_params(const Options& o) {
  if (!o.p.empty() && !o.params_file.empty()) throw InvalidInput("give either --p or --params-file, not both");
  if (!o.p.empty()) return {parse_parameter_list(o.p), std::nullopt};
  if (!o.params_file.empty()) return load_parameter_file(o.params_file);
  throw InvalidInput("parameters are required (--p or --params-file)");
}

int require_N(const Options& o, const ParameterFile& pf) {
  const std::optional<int> N = o.N ? o.N : pf.N;
  if (!N) throw InvalidInput("--N is required");
  if (*N < 0) throw InvalidInput("N must be nonnegative");
  const int ceiling = max_N();
  if (*N > ceiling)
    throw InvalidInput("N = " + std::to_string(*N) + " exceeds the ceiling " + std::to_string(ceiling) +
                       " (set RAHMAN_MAX_N to raise it)");
  return *N;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw InvalidInput("cannot write " + o.out);
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

int cmd_check(const Options& o) {
  const ParameterFile pf = load_params(o);
  if (auto bad = first_zero_denominator(pf.params)) {
    std::cerr << "invalid parameters: " << *bad << " = 0\n";
    return kExitInvalid;
  }
  emit(o, dump(Json{{"valid", true}, {"derived", to_json(derive(pf.params))}}));
  return kExitOk;
}

int cmd_eval(const Options& o) {
  const ParameterFile pf = load_params(o);
  const int N = require_N(o, pf);
  if (!RahmanTable::in_range(o.a, o.b, N) || !RahmanTable::in_range(o.c, o.d, N))
    throw InvalidInput("arguments must satisfy a,b,c,d >= 0, a+b <= N and c+d <= N");
  emit(o, eval_P(o.a, o.b, o.c, o.d, derive(pf.params), N).str() + "\n");
  return kExitOk;
}

int cmd_table(const Options& o) {
  const ParameterFile pf = load_params(o);
  const int N = require_N(o, pf);
  const RahmanTable table(derive(pf.params), N);
  emit(o, o.format == "csv" ? table_to_csv(table) : dump(table_to_json(table)));
  return kExitOk;
}

int cmd_verify(const Options& o) {
  if (!o.suite.empty() && !o.suite_positional.empty() && o.suite != o.suite_positional)
    throw InvalidInput("conflicting suite names");
  std::string name = !o.suite.empty() ? o.suite : o.suite_positional;
  if (name.empty()) name = "all";
  if (name != "all" && !is_suite_name(name)) throw InvalidInput("unknown suite: " + name);
  if (o.format != "json") throw InvalidInput("verify only writes json");
  const ParameterFile pf = load_params(o);
  const int N = require_N(o, pf);
  const auto reports = run_suite(name, build_structure(pf.params), N);
  emit(o, dump(to_json(reports)));
  return all_passed(reports) ? kExitOk : kExitFailed;
}

Json bases_json(const StructureSet& s) {
  Json plain = Json::object(), tilde = Json::object();
  for (const auto& nm : sl3_basis(s)) plain[nm.name] = to_json(nm.m);
  for (const auto& nm : sl3_tilde_basis(s)) tilde[nm.name] = to_json(nm.m);
  const TildeVariables tv = tilde_variables(s);
  const char* names[] = {"x", "y", "z"};
  Json tilde_vars = Json::object(), plain_vars = Json::object();
  for (int i = 0; i < 3; ++i) {
    tilde_vars[std::string(names[i]) + "~"] = to_json(tv.tilde_in_plain[i]);
    plain_vars[names[i]] = to_json(tv.plain_in_tilde[i]);
  }
  return Json{{"sl3", plain}, {"sl3_tilde", tilde}, {"tilde_in_plain", tilde_vars}, {"plain_in_tilde", plain_vars}};
}

Json structure_json(const StructureSet& s) {
  return Json{{"derived", to_json(s.derived)}, {"U", to_json(s.U)},         {"W", to_json(s.W)},
              {"W_tilde", to_json(s.W_tilde)}, {"R", to_json(s.R)},         {"R_inv", to_json(s.R_inv)},
              {"h_y", to_json(s.h_y)},         {"h_z", to_json(s.h_z)},     {"ht_y", to_json(s.ht_y)},
              {"ht_z", to_json(s.ht_z)}};
}

int cmd_export(const Options& o) {
  const ParameterFile pf = load_params(o);
  const StructureSet s = build_structure(pf.params);
  const bool needs_N = o.what == "gram" || o.what == "lattice" || o.what == "all";
  const int N = needs_N ? require_N(o, pf) : 0;

  if (o.format == "csv") {
    if (o.what != "gram" && o.what != "lattice") throw InvalidInput("csv export supports gram and lattice only");
    const BilinearForm f(s, N);
    std::string text;
    const auto idx = lattice(N);
    for (std::size_t n = 0; n < idx.size(); ++n) {
      text += std::to_string(idx[n].r) + "," + std::to_string(idx[n].s) + "," + std::to_string(idx[n].t);
      if (o.what == "gram") text += "," + f.gram()[n].str();
      text += "\n";
    }
    emit(o, text);
    return kExitOk;
  }

  auto lattice_json = [&] {
    Json out = Json::array();
    for (const auto& m : lattice(N)) out.push_back(Json::array({m.r, m.s, m.t}));
    return out;
  };
  Json j;
  if (o.what == "structure") {
    j = structure_json(s);
  } else if (o.what == "bases") {
    j = bases_json(s);
  } else if (o.what == "gram") {
    j = Json{{"N", N}, {"index", lattice_json()}, {"gram", gram_to_json(BilinearForm(s, N))}};
  } else if (o.what == "lattice") {
    j = Json{{"N", N}, {"index", lattice_json()}};
  } else {
    j = Json{{"N", N},
             {"structure", structure_json(s)},
             {"bases", bases_json(s)},
             {"index", lattice_json()},
             {"gram", gram_to_json(BilinearForm(s, N))}};
  }
  emit(o, dump(j));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rahman polynomials and the sl3 structure around them, in exact arithmetic"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&o](CLI::App* sub) {
    sub->add_option("--p", o.p, "p1,p2,p3,p4 as integers or fractions");
    sub->add_option("--params-file", o.params_file, "JSON file {\"p\": [...], \"N\": n}");
    sub->add_option("--N", o.N, "degree");
    sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", o.out, "write output to PATH instead of stdout");
  };

  auto* check = app.add_subcommand("check", "validate parameters and print derived constants");
  add_common(check);
  auto* eval = app.add_subcommand("eval", "evaluate P(a,b,c,d)");
  add_common(eval);
  eval->add_option("a", o.a)->required();
  eval->add_option("b", o.b)->required();
  eval->add_option("c", o.c)->required();
  eval->add_option("d", o.d)->required();
  auto* table = app.add_subcommand("table", "the D x D matrix of P(s,t,sigma,tau)");
  add_common(table);
  auto* verify = app.add_subcommand("verify", "run verification suites");
  add_common(verify);
  verify->add_option("name", o.suite_positional, "all or a suite name");
  verify->add_option("--suite", o.suite, "all or a suite name");
  auto* exp = app.add_subcommand("export", "export matrices, bases, Gram diagonal or lattice");
  add_common(exp);
  exp->add_option("what", o.what, "structure, bases, gram, lattice or all")
      ->check(CLI::IsMember({"structure", "bases", "gram", "lattice", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*check) return cmd_check(o);
    if (*eval) return cmd_eval(o);
    if (*table) return cmd_table(o);
    if (*verify) return cmd_verify(o);
    return cmd_export(o);
  } catch (const ValidationError& e) {
    std::cerr << "invalid parameters: " << e.expression() << " = 0\n";
    return kExitInvalid;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
}
