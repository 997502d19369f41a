#include "rahman/suites.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <memory>
#include <future>
#include <stdexcept>
#include <string>

#include "rahman/form.hpp"
#include "rahman/polymodule.hpp"
#include "rahman/theorems.hpp"

namespace rahman {

namespace {

constexpr std::array<std::string_view, 8> kNames{
    "params", "structure", "module", "form", "transitions", "orthogonality", "recurrence", "operators"};

using Verifier = std::function<Report()>;

// A throwing verifier yields a failing report under its own name.
Report guarded(const std::string& name, const Verifier& v) {
  try {
    return v();
  } catch (const std::exception& e) {
    Report r(name);
    r.fail(std::string("exception: ") + e.what());
    return r;
  }
}

std::vector<Report> run_one(std::string_view name, const StructureSet& s, int N) {
  std::vector<std::pair<std::string, Verifier>> plan;
  auto add = [&plan](std::string n, Verifier v) { plan.emplace_back(std::move(n), std::move(v)); };
  if (name == "params") {
    add("params.derived", [&] { return verify_derived(s); });
  } else if (name == "structure") {
    add("structure.matrices", [&] { return verify_matrix_identities(s); });
    add("structure.dagger", [&] { return verify_dagger(s); });
    add("structure.expansions", [&] { return verify_expansions(s); });
    add("structure.generation", [&] { return verify_generation(s); });
  } else if (name == "module") {
    add("module.action_tables", [&] { return verify_action_tables(s, N); });
    add("module.representation_law", [&] { return verify_representation_law(s, N); });
    add("module.weights", [&] { return verify_weight_diagonality(s, N); });
    add("module.block_structure", [&] { return verify_block_structure(s, N); });
    add("module.irreducibility", [&] { return irreducibility_probe(s, N); });
  } else if (name == "form") {
    auto f = std::make_shared<const BilinearForm>(s, N);
    add("form.gram", [&, f] { return verify_gram(*f, s); });
    add("form.adjointness", [&, f] { return verify_adjointness(*f, s); });
    add("form.tilde_norms", [&, f] { return verify_tilde_norms(*f, s); });
    add("form.dual_pairing", [&, f] { return verify_dual_pairing(*f, s); });
    add("form.dual_sum_plain", [&, f] { return verify_dual_sum_plain(*f, s); });
    add("form.dual_sum_tilde", [&, f] { return verify_dual_sum_tilde(*f, s); });
  } else if (name == "transitions") {
    add("transitions.trans1", [&] { return verify_trans1(s, N); });
    add("transitions.trans2", [&] { return verify_trans2(s, N); });
    add("transitions.pcosines", [&] { return verify_pcosines(s, BilinearForm(s, N), N); });
  } else if (name == "orthogonality") {
    add("orthogonality", [&] { return verify_orthogonality(s, N); });
  } else if (name == "recurrence") {
    add("recurrence", [&] { return verify_recurrences(s, N); });
  } else if (name == "operators") {
    add("operators", [&] { return verify_operator_identities(s, N); });
  } else {
    throw std::invalid_argument("unknown suite: " + std::string(name));
  }
  std::vector<Report> out;
  for (const auto& [n, v] : plan) out.push_back(guarded(n, v));
  return out;
}

}  // namespace

std::span<const std::string_view> suite_names() { return kNames; }

bool is_suite_name(std::string_view name) {
  return std::find(kNames.begin(), kNames.end(), name) != kNames.end();
}

std::vector<Report> run_suite(std::string_view name, const StructureSet& s, int N) {
  if (name != "all") {
    if (!is_suite_name(name)) throw std::invalid_argument("unknown suite: " + std::string(name));
    return run_one(name, s, N);
  }
  std::vector<std::future<std::vector<Report>>> jobs;
  for (std::string_view n : kNames)
    jobs.push_back(std::async(std::launch::async, [n, &s, N] { return run_one(n, s, N); }));
  std::vector<Report> out;
  for (auto& job : jobs) {
    auto part = job.get();
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

}  // namespace rahman
