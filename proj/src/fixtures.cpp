#include "collin/fixtures.hpp"

#include <sstream>

namespace collin {

namespace {

constexpr std::string_view kTheil =
    "year,consumption,income,relprice,twenties\n"
    "1923,99.2,96.7,101.0,1\n"
    "1924,99.0,98.1,100.1,1\n"
    "1925,100.0,100.0,100.0,1\n"
    "1926,111.6,104.9,90.6,1\n"
    "1927,122.2,104.9,86.5,1\n"
    "1928,117.6,109.5,89.7,1\n"
    "1929,121.1,110.8,90.6,1\n"
    "1930,136.0,112.3,82.8,0\n"
    "1931,154.2,109.3,70.1,0\n"
    "1932,153.6,105.3,65.4,0\n"
    "1933,158.5,101.7,61.3,0\n"
    "1934,140.6,95.4,62.5,0\n"
    "1935,136.2,96.4,63.6,0\n"
    "1936,168.0,97.6,52.6,0\n"
    "1937,154.3,102.4,59.7,0\n"
    "1938,149.0,101.6,59.5,0\n"
    "1939,165.5,103.8,61.3,0\n";

constexpr std::string_view kKleinGoldberger =
    "year,consumption,wage.income,non.farm.income,farm.income\n"
    "1936,62.8,43.41,17.1,3.96\n"
    "1937,65,46.44,18.65,5.48\n"
    "1938,63.9,44.35,17.09,4.37\n"
    "1939,67.5,47.82,19.28,4.51\n"
    "1940,71.3,51.02,23.24,4.88\n"
    "1941,76.6,58.71,28.11,6.37\n"
    "1945,86.3,87.69,30.29,8.96\n"
    "1946,95.7,76.73,28.26,9.76\n"
    "1947,98.3,75.91,27.91,9.31\n"
    "1948,100.3,77.62,32.3,9.85\n"
    "1949,103.2,78.01,31.39,7.21\n"
    "1950,108.9,83.57,35.61,7.39\n"
    "1951,108.5,90.59,37.58,7.98\n"
    "1952,111.4,95.47,35.17,7.42\n";

std::string unknown(std::string_view name) {
  std::string msg = "unknown fixture '" + std::string(name) + "'; valid names:";
  for (const auto& n : fixture_names()) msg += " " + n;
  return msg;
}

}  // namespace

std::vector<std::string> fixture_names() { return {"theil", "kg"}; }

std::string_view fixture_csv(std::string_view name) {
  if (name == "theil") return kTheil;
  if (name == "kg") return kKleinGoldberger;
  throw DataError(unknown(name));
}

RoleMap fixture_roles(std::string_view name) {
  using enum ColumnRole;
  if (name == "theil")
    return {{"consumption", Response}, {"income", Quantitative}, {"relprice", Quantitative}, {"twenties", Dummy}};
  if (name == "kg")
    return {{"consumption", Response},
            {"wage.income", Quantitative},
            {"non.farm.income", Quantitative},
            {"farm.income", Quantitative}};
  throw DataError(unknown(name));
}

Dataset fixture(std::string_view name) { return fixture(name, fixture_roles(name)); }

Dataset fixture(std::string_view name, const RoleMap& roles, bool add_intercept) {
  std::istringstream in{std::string(fixture_csv(name))};
  return read_csv(in, roles, add_intercept, std::string(name));
}

}  // namespace collin
