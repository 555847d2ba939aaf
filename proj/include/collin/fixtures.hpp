#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "collin/dataset.hpp"

namespace collin {

/// Names of the embedded datasets: "theil" (textile consumption, 1923-1939) and "kg"
/// (Klein-Goldberger consumption and incomes, 1936-1952 without 1942-1944).
std::vector<std::string> fixture_names();

/// The embedded table as CSV text, including its Year column.
std::string_view fixture_csv(std::string_view name);

/// Default roles: the consumption column is the response, Year is skipped, Theil's
/// "twenties" is a dummy and every other column is quantitative.
RoleMap fixture_roles(std::string_view name);

Dataset fixture(std::string_view name);
Dataset fixture(std::string_view name, const RoleMap& roles, bool add_intercept = true);

}  // namespace collin
