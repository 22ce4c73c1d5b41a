#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "remanlca/buyback.hpp"
#include "remanlca/impact.hpp"
#include "remanlca/scenario.hpp"

namespace remanlca::report {

enum class Format { Csv, Markdown };
Format parse_format(std::string_view s);

enum class DocumentKind { BreakdownTable, ComparisonTable, SweepSeries, ScenarioTable, SchemeTable, QualitySummary };
std::string_view to_string(DocumentKind k);

/// A rendered table: metadata lines (emitted as '#' comments in CSV), a header
/// and string cells. Numbers are formatted when rows are built, so rendering is
/// a pure layout step.
struct ReportDocument {
  DocumentKind kind = DocumentKind::BreakdownTable;
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::vector<std::string>> footer;
};

/// Fixed-point with five decimals, "-0.00000" normalised to "0.00000".
std::string fmt5(double v);
std::string fmt_int(long long v);

std::string render(const ReportDocument& doc, Format format);

ReportDocument breakdown_document(const EmissionBreakdown& bd);
ReportDocument comparison_document(const Comparison& cmp, std::string_view name_a, std::string_view name_b);
ReportDocument sweep_document(SweepParam param, const std::vector<SweepPoint>& series);
ReportDocument scenario_document(const std::vector<ScenarioResult>& results);

struct SchemeRow {
  SchemeSpec spec;
  SchemeResult result;
  double saving = 0.0;
  const FleetSimulation* simulation = nullptr;
};
ReportDocument scheme_document(const std::vector<SchemeRow>& rows);

ReportDocument quality_document(const ProductSystem& sys);

/// Parses the data rows of a CSV rendered by `render` (comment lines skipped).
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

}  // namespace remanlca::report
