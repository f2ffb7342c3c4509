#pragma once

#include <string>
#include <vector>

#include "composig/bounds.hpp"
#include "composig/classification.hpp"
#include "composig/recovery.hpp"

namespace composig {

/// Shortest decimal representation that round-trips the double (17 significant
/// digits at most), independent of locale.
std::string format_double(double value);

/// Named CSV columns of equal length.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> columns;
};

std::string render_csv(const Table& table);
void write_file(const std::string& path, const std::string& content);

/// Minimal SVG polyline plot of the table's columns against its first column.
std::string render_svg(const Table& table, const std::string& title);

std::string classification_report(const CurveClassification& cls);
std::string recovery_report(const RecoveryResult& result);
std::string frequency_recovery_report(const FrequencyRecovery& result);

Table envelope_table(const BoundEnvelope& env);
Table series_table(const TimeSeries& series, const std::string& value_name = "value");

}  // namespace composig
