#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "collin/diagnostics.hpp"
#include "collin/ols.hpp"
#include "collin/perturb.hpp"

namespace collin {

/// Version of the JSON envelope written by the CLI. Bump on any breaking schema change.
inline constexpr int kJsonSchemaVersion = 1;

/// Formats with 7 significant digits, as used throughout the text reports.
std::string format_number(double v);

nlohmann::json to_json(const CorrelationReport& r);
nlohmann::json to_json(const std::vector<LabeledValue>& values, const char* value_key);
nlohmann::json to_json(const CnReport& r);
nlohmann::json to_json(const StewartReport& r);
nlohmann::json to_json(const SlmReport& r);
nlohmann::json to_json(const DiagnosticsReport& r);
nlohmann::json to_json(const OLSFit& fit);
nlohmann::json to_json(const ContradictionVerdict& v);
nlohmann::json to_json(const SampleSummary& s);

// Text renderers. Each section is headed by its label and followed by verdict lines.
void write_text(std::ostream& os, const CorrelationReport& r);
void write_vif_text(std::ostream& os, const std::vector<LabeledValue>& vifs, const Thresholds& t);
void write_cn_text(std::ostream& os, double cn, bool include_intercept, const Thresholds& t);
void write_text(std::ostream& os, const CnReport& r, const Thresholds& t);
void write_text(std::ostream& os, const StewartReport& r);
void write_cv_text(std::ostream& os, const std::vector<LabeledValue>& cvs, const Thresholds& t);
void write_ones_text(std::ostream& os, const std::vector<LabeledValue>& ones);
void write_text(std::ostream& os, const SlmReport& r, const Thresholds& t);
void write_text(std::ostream& os, const DiagnosticsReport& r, const Thresholds& t);
void write_text(std::ostream& os, const OLSFit& fit);
void write_text(std::ostream& os, const ContradictionVerdict& v);
void write_text(std::ostream& os, const PerturbResult& r, const PerturbConfig& cfg);

/// True when any measure in the report crosses its threshold.
bool is_problematic(const CorrelationReport& r);
bool is_problematic(const std::vector<LabeledValue>& vifs, const Thresholds& t);
bool is_problematic(const SlmReport& r, const Thresholds& t);
bool is_problematic(const DiagnosticsReport& r, const Thresholds& t);

}  // namespace collin
