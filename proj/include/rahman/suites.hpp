#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rahman/params.hpp"
#include "rahman/report.hpp"
#include "rahman/sl3.hpp"

namespace rahman {

/// params, structure, module, form, transitions, orthogonality, recurrence,
/// operators.
std::span<const std::string_view> suite_names();

bool is_suite_name(std::string_view name);

/// Runs one named suite, or every suite for "all". Suites run concurrently;
/// reports come back in suite order. Throws std::invalid_argument on an
/// unknown name.
std::vector<Report> run_suite(std::string_view name, const StructureSet& s, int N);

}  // namespace rahman
