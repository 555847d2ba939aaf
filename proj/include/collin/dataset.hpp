#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "collin/linalg.hpp"

namespace collin {

enum class ColumnRole { Response, Quantitative, Dummy };

std::string_view to_string(ColumnRole role);
ColumnRole parse_role(std::string_view text);

struct Column {
  std::string label;
  ColumnRole role = ColumnRole::Quantitative;
  Vector values;
};

using RoleMap = std::map<std::string, ColumnRole, std::less<>>;

/// Named columns with declared roles. Validated on construction and immutable afterwards.
class Dataset {
 public:
  Dataset(std::string name, std::vector<Column> columns, bool add_intercept = true,
          std::vector<std::string> skipped = {});

  const std::string& name() const { return name_; }
  const std::vector<Column>& columns() const { return columns_; }
  std::size_t n() const { return n_; }
  bool add_intercept() const { return add_intercept_; }
  /// Labels present in the source file but not given a role.
  const std::vector<std::string>& skipped() const { return skipped_; }

  const Column& column(std::string_view label) const;
  std::size_t count(ColumnRole role) const;

 private:
  std::string name_;
  std::vector<Column> columns_;
  std::size_t n_ = 0;
  bool add_intercept_ = true;
  std::vector<std::string> skipped_;
};

/// Parses CSV text (comma separated, header row, '.' decimal mark). Only columns named in
/// `roles` are parsed; the rest are recorded as skipped.
Dataset read_csv(std::istream& in, const RoleMap& roles, bool add_intercept = true,
                 std::string name = "data");
Dataset load_csv(const std::filesystem::path& path, const RoleMap& roles, bool add_intercept = true);

/// Column labels from the first non-blank line. Throws DataError("no header") on empty input.
std::vector<std::string> read_csv_header(std::istream& in);

/// Regression design: n x k matrix, optional leading intercept column, and the
/// role of every column. Positions are 0-based column indices into X.
class DesignMatrix {
 public:
  DesignMatrix(Matrix x, bool intercept_present, std::vector<std::size_t> dummy_positions,
               std::vector<std::string> labels = {});

  const Matrix& x() const { return x_; }
  std::size_t n() const { return x_.rows(); }
  std::size_t k() const { return x_.cols(); }
  bool intercept_present() const { return intercept_; }
  const std::vector<std::size_t>& quantitative_positions() const { return quantitative_; }
  const std::vector<std::size_t>& dummy_positions() const { return dummy_; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool is_dummy(std::size_t position) const;
  /// Keeps the given columns (in order) with their roles. The intercept, when kept, must come first.
  DesignMatrix subset(std::span<const std::size_t> positions) const;
  DesignMatrix without_intercept() const;

 private:
  Matrix x_;
  bool intercept_;
  std::vector<std::size_t> quantitative_;
  std::vector<std::size_t> dummy_;
  std::vector<std::string> labels_;
};

DesignMatrix design_matrix(const Dataset& d);
Vector response_vector(const Dataset& d);
std::string response_label(const Dataset& d);

}  // namespace collin
