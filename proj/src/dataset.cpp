#include "collin/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

namespace collin {

std::string_view to_string(ColumnRole role) {
  switch (role) {
    case ColumnRole::Response: return "response";
    case ColumnRole::Quantitative: return "quantitative";
    case ColumnRole::Dummy: return "dummy";
  }
  return "?";
}

ColumnRole parse_role(std::string_view text) {
  if (text == "response") return ColumnRole::Response;
  if (text == "quantitative" || text == "quant") return ColumnRole::Quantitative;
  if (text == "dummy") return ColumnRole::Dummy;
  throw DataError("unknown column role '" + std::string(text) + "'");
}

namespace {

bool is_binary(std::span<const double> v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0 || x == 1.0; });
}

bool is_constant(std::span<const double> v) {
  return std::all_of(v.begin(), v.end(), [&](double x) { return x == v.front(); });
}

}  // namespace

Dataset::Dataset(std::string name, std::vector<Column> columns, bool add_intercept,
                 std::vector<std::string> skipped)
    : name_(std::move(name)),
      columns_(std::move(columns)),
      add_intercept_(add_intercept),
      skipped_(std::move(skipped)) {
  if (columns_.empty()) throw DataError("dataset '" + name_ + "' has no columns");
  n_ = columns_.front().values.size();
  std::set<std::string, std::less<>> seen;
  for (const auto& c : columns_) {
    if (!seen.insert(c.label).second) throw DataError("duplicate column label '" + c.label + "'");
    if (c.values.size() != n_)
      throw DataError("column '" + c.label + "' has " + std::to_string(c.values.size()) +
                      " values, expected " + std::to_string(n_));
    for (double v : c.values)
      if (!std::isfinite(v)) throw DataError("column '" + c.label + "' contains a non-finite value");
    if (c.role == ColumnRole::Dummy && !is_binary(c.values))
      throw DataError("dummy column '" + c.label + "' contains a value other than 0/1");
  }
  if (n_ < 2) throw DataError("dataset '" + name_ + "' needs at least 2 observations");
  if (count(ColumnRole::Response) > 1) throw DataError("more than one response column declared");
}

const Column& Dataset::column(std::string_view label) const {
  auto it = std::find_if(columns_.begin(), columns_.end(),
                         [&](const Column& c) { return c.label == label; });
  if (it == columns_.end()) throw DataError("no column '" + std::string(label) + "'");
  return *it;
}

std::size_t Dataset::count(ColumnRole role) const {
  return static_cast<std::size_t>(std::count_if(
      columns_.begin(), columns_.end(), [&](const Column& c) { return c.role == role; }));
}

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  std::string out(s.substr(first, last - first + 1));
  if (out.size() >= 2 && out.front() == '"' && out.back() == '"') out = out.substr(1, out.size() - 2);
  return out;
}

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> out;
  std::string_view rest = line;
  while (true) {
    const auto comma = rest.find(',');
    out.push_back(trim(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

bool parse_double(const std::string& cell, double& out) {
  if (cell.empty()) return false;
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last && std::isfinite(out);
}

}  // namespace

std::vector<std::string> read_csv_header(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    if (!trim(line).empty()) return split_row(line);
  }
  throw DataError("no header");
}

Dataset read_csv(std::istream& in, const RoleMap& roles, bool add_intercept, std::string name) {
  const auto header = read_csv_header(in);
  std::string line;
  for (const auto& [label, role] : roles) {
    if (std::find(header.begin(), header.end(), label) == header.end())
      throw DataError("unknown label '" + label + "' in roles: not present in header");
  }

  std::vector<Column> columns;
  std::vector<std::size_t> source_index;
  std::vector<std::string> skipped;
  for (std::size_t j = 0; j < header.size(); ++j) {
    auto it = roles.find(header[j]);
    if (it == roles.end()) {
      skipped.push_back(header[j]);
      continue;
    }
    columns.push_back(Column{header[j], it->second, {}});
    source_index.push_back(j);
  }

  std::size_t row = 1;  // header is row 1
  while (std::getline(in, line)) {
    ++row;
    if (trim(line).empty()) continue;
    const auto cells = split_row(line);
    if (cells.size() != header.size())
      throw DataError("ragged row " + std::to_string(row) + ": " + std::to_string(cells.size()) +
                      " cells, header has " + std::to_string(header.size()));
    for (std::size_t c = 0; c < columns.size(); ++c) {
      const auto& cell = cells[source_index[c]];
      double v = 0.0;
      if (!parse_double(cell, v)) {
        throw DataError("row " + std::to_string(row) + ", column '" + columns[c].label + "': " +
                        (cell.empty() ? std::string("missing value")
                                      : "non-numeric value '" + cell + "'"));
      }
      columns[c].values.push_back(v);
    }
  }
  return Dataset(std::move(name), std::move(columns), add_intercept, std::move(skipped));
}

Dataset load_csv(const std::filesystem::path& path, const RoleMap& roles, bool add_intercept) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path.string() + "': missing file");
  return read_csv(in, roles, add_intercept, path.stem().string());
}

DesignMatrix::DesignMatrix(Matrix x, bool intercept_present, std::vector<std::size_t> dummy_positions,
                           std::vector<std::string> labels)
    : x_(std::move(x)), intercept_(intercept_present), dummy_(std::move(dummy_positions)),
      labels_(std::move(labels)) {
  const std::size_t k = x_.cols();
  if (k == 0 || x_.rows() < 2) throw DataError("design matrix needs at least one column and two rows");
  if (labels_.empty()) {
    for (std::size_t j = 0; j < k; ++j)
      labels_.push_back(intercept_ && j == 0 ? "(Intercept)" : "x" + std::to_string(j));
  }
  if (labels_.size() != k) throw DataError("design matrix: label count differs from column count");
  for (double v : x_.values())
    if (!std::isfinite(v)) throw DataError("design matrix contains a non-finite value");

  std::sort(dummy_.begin(), dummy_.end());
  if (std::adjacent_find(dummy_.begin(), dummy_.end()) != dummy_.end())
    throw DataError("design matrix: repeated dummy position");
  if (intercept_) {
    const Vector first = x_.column(0);
    if (!std::all_of(first.begin(), first.end(), [](double v) { return v == 1.0; }))
      throw DataError("design matrix: first column must be all ones when an intercept is present");
  }
  for (std::size_t p : dummy_) {
    if (p >= k) throw DataError("design matrix: dummy position out of range");
    if (intercept_ && p == 0) throw DataError("design matrix: the intercept cannot be a dummy");
    if (!is_binary(x_.column(p)))
      throw DataError("dummy column '" + labels_[p] + "' contains a value other than 0/1");
  }
  for (std::size_t j = intercept_ ? 1 : 0; j < k; ++j) {
    if (std::binary_search(dummy_.begin(), dummy_.end(), j)) continue;
    quantitative_.push_back(j);
    if (is_constant(x_.column(j)))
      throw DataError("quantitative column '" + labels_[j] +
                      "' has zero variance (a constant regressor duplicates the intercept)");
  }
}

bool DesignMatrix::is_dummy(std::size_t position) const {
  return std::binary_search(dummy_.begin(), dummy_.end(), position);
}

DesignMatrix DesignMatrix::subset(std::span<const std::size_t> positions) const {
  std::vector<std::size_t> dummies;
  std::vector<std::string> labels;
  bool intercept = false;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    const std::size_t p = positions[i];
    if (p >= k()) throw DataError("subset: column position out of range");
    if (intercept_ && p == 0) {
      if (i != 0) throw DataError("subset: the intercept must be the first selected column");
      intercept = true;
    }
    if (is_dummy(p)) dummies.push_back(i);
    labels.push_back(labels_[p]);
  }
  return DesignMatrix(x_.select_columns(positions), intercept, std::move(dummies), std::move(labels));
}

DesignMatrix DesignMatrix::without_intercept() const {
  if (!intercept_) return *this;
  std::vector<std::size_t> keep;
  for (std::size_t j = 1; j < k(); ++j) keep.push_back(j);
  return subset(keep);
}

DesignMatrix design_matrix(const Dataset& d) {
  std::vector<Vector> cols;
  std::vector<std::string> labels;
  std::vector<std::size_t> dummies;
  if (d.add_intercept()) {
    cols.emplace_back(d.n(), 1.0);
    labels.emplace_back("(Intercept)");
  }
  for (const auto& c : d.columns()) {
    if (c.role == ColumnRole::Response) continue;
    if (c.role == ColumnRole::Dummy) dummies.push_back(cols.size());
    cols.push_back(c.values);
    labels.push_back(c.label);
  }
  if (labels.size() == (d.add_intercept() ? 1u : 0u))
    throw DataError("dataset '" + d.name() + "' has no regressor columns");
  return DesignMatrix(Matrix::from_columns(cols), d.add_intercept(), std::move(dummies), std::move(labels));
}

namespace {

const Column& the_response(const Dataset& d) {
  const std::size_t count = d.count(ColumnRole::Response);
  if (count != 1)
    throw DataError("exactly one response column is required, found " + std::to_string(count));
  return *std::find_if(d.columns().begin(), d.columns().end(),
                       [](const Column& c) { return c.role == ColumnRole::Response; });
}

}  // namespace

Vector response_vector(const Dataset& d) { return the_response(d).values; }

std::string response_label(const Dataset& d) { return the_response(d).label; }

}  // namespace collin
