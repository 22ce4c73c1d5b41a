#include "remanlca/report.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <sstream>

#include "remanlca/errors.hpp"

namespace remanlca::report {

Format parse_format(std::string_view s) {
  if (s == "csv") return Format::Csv;
  if (s == "md" || s == "markdown") return Format::Markdown;
  throw InputError("unknown format '" + std::string(s) + "' (expected csv or md)");
}

std::string_view to_string(DocumentKind k) {
  switch (k) {
    case DocumentKind::BreakdownTable: return "breakdown-table";
    case DocumentKind::ComparisonTable: return "comparison-table";
    case DocumentKind::SweepSeries: return "sweep-series";
    case DocumentKind::ScenarioTable: return "scenario-table";
    case DocumentKind::SchemeTable: return "scheme-table";
    case DocumentKind::QualitySummary: return "quality-summary";
  }
  return "?";
}

std::string fmt5(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.5f", v);
  std::string s(buf);
  if (s == "-0.00000") s = "0.00000";
  return s;
}

std::string fmt_int(long long v) { return std::to_string(v); }

namespace {

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string md_cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

void csv_line(std::ostringstream& os, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_cell(cells[i]);
  os << '\n';
}

void md_line(std::ostringstream& os, const std::vector<std::string>& cells) {
  os << '|';
  for (const auto& c : cells) os << ' ' << md_cell(c) << " |";
  os << '\n';
}

}  // namespace

namespace {

bool is_number(const std::string& cell) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  return ec == std::errc{} && ptr == cell.data() + cell.size();
}

// Right-align a column when every non-empty body cell is a number.
bool numeric_column(const ReportDocument& doc, std::size_t col) {
  bool any = false;
  for (const auto& r : doc.rows) {
    if (col >= r.size() || r[col].empty()) continue;
    if (!is_number(r[col])) return false;
    any = true;
  }
  return any;
}

}  // namespace

std::string render(const ReportDocument& doc, Format format) {
  std::ostringstream os;
  if (format == Format::Csv) {
    os << "# remanlca " << to_string(doc.kind) << '\n';
    for (const auto& [k, v] : doc.metadata) os << "# " << k << ": " << v << '\n';
    csv_line(os, doc.header);
    for (const auto& r : doc.rows) csv_line(os, r);
    for (const auto& r : doc.footer) csv_line(os, r);
  } else {
    os << "<!-- remanlca " << to_string(doc.kind) << " -->\n";
    for (const auto& [k, v] : doc.metadata) os << "<!-- " << k << ": " << v << " -->\n";
    md_line(os, doc.header);
    os << '|';
    for (std::size_t i = 0; i < doc.header.size(); ++i) os << (numeric_column(doc, i) ? " ---: |" : " --- |");
    os << '\n';
    for (const auto& r : doc.rows) md_line(os, r);
    for (const auto& r : doc.footer) md_line(os, r);
  }
  return os.str();
}

ReportDocument breakdown_document(const EmissionBreakdown& bd) {
  ReportDocument doc;
  doc.kind = DocumentKind::BreakdownTable;
  doc.metadata.emplace_back("system", bd.system);
  doc.header = {"stage", "flow", "category", "kg_co2eq", "proportion"};
  for (const auto& f : bd.per_flow) doc.rows.push_back({f.stage, f.flow, f.category, fmt5(f.kg_co2eq), fmt5(f.proportion)});
  doc.footer.push_back({"total", "", "", fmt5(bd.total), fmt5(bd.total > 0.0 ? 1.0 : 0.0)});
  return doc;
}

ReportDocument comparison_document(const Comparison& cmp, std::string_view name_a, std::string_view name_b) {
  ReportDocument doc;
  doc.kind = DocumentKind::ComparisonTable;
  doc.metadata.emplace_back("a", std::string(name_a));
  doc.metadata.emplace_back("b", std::string(name_b));
  doc.header = {"category", "a_kg_co2eq", "b_kg_co2eq", "delta_kg_co2eq"};
  for (const auto& r : cmp.rows) doc.rows.push_back({r.category, fmt5(r.a), fmt5(r.b), fmt5(r.delta)});
  doc.footer.push_back({"total", fmt5(cmp.total_a), fmt5(cmp.total_b), fmt5(cmp.total_delta)});
  doc.footer.push_back({"relative_saving", "", "", fmt5(cmp.relative_saving)});
  return doc;
}

ReportDocument sweep_document(SweepParam param, const std::vector<SweepPoint>& series) {
  ReportDocument doc;
  doc.kind = DocumentKind::SweepSeries;
  doc.header = {"param", "value", "total_kg_co2eq", "per_life", "per_turn"};
  for (const auto& p : series) {
    std::string value;
    switch (param) {
      case SweepParam::Location: value = p.label; break;
      case SweepParam::RejectionRate: value = fmt5(p.value); break;
      case SweepParam::Turns: value = fmt_int(static_cast<long long>(p.value)); break;
    }
    doc.rows.push_back({std::string(to_string(param)), value, fmt5(p.total), fmt5(p.per_life), fmt5(p.per_turn)});
  }
  return doc;
}

ReportDocument scenario_document(const std::vector<ScenarioResult>& results) {
  ReportDocument doc;
  doc.kind = DocumentKind::ScenarioTable;
  doc.header = {"scenario", "location", "rejection_rate", "turns", "rejection_mode", "e_virgin",
                "e_reman", "per_life", "per_turn", "virgin_equivalent", "life_saving"};
  for (const auto& r : results) {
    doc.rows.push_back({r.name, std::string(to_string(r.params.location)), fmt5(r.params.rejection_rate),
                        fmt_int(r.params.turns), std::string(to_string(r.params.rejection_mode)), fmt5(r.e_virgin),
                        fmt5(r.e_reman), fmt5(r.per_life), fmt5(r.per_turn), fmt5(r.params.turns * r.e_virgin),
                        fmt5(r.life_saving)});
  }
  return doc;
}

ReportDocument scheme_document(const std::vector<SchemeRow>& rows) {
  ReportDocument doc;
  doc.kind = DocumentKind::SchemeTable;
  const bool simulated = std::any_of(rows.begin(), rows.end(), [](const SchemeRow& r) { return r.simulation; });
  doc.header = {"scheme", "turns", "rejection_rate", "injection", "uses", "reman_uses",
                "total_kg_co2eq", "per_turn", "all_virgin_kg_co2eq", "saving"};
  if (simulated) {
    doc.header.insert(doc.header.end(), {"sim_seed", "sim_replications", "sim_mean_uses", "sim_uses_ci_low",
                                         "sim_uses_ci_high", "sim_mean_kg_co2eq"});
    const auto& s = *std::find_if(rows.begin(), rows.end(), [](const SchemeRow& r) { return r.simulation; });
    doc.metadata.emplace_back("simulation", "seed " + std::to_string(s.simulation->seed) + ", replications " +
                                                std::to_string(s.simulation->replications));
  }
  for (const auto& r : rows) {
    std::vector<std::string> row{r.spec.name,
                                 fmt_int(r.spec.turns),
                                 fmt5(r.spec.rejection_rate),
                                 fmt_int(r.result.injection),
                                 fmt_int(r.spec.uses),
                                 fmt_int(r.spec.uses - r.result.injection),
                                 fmt5(r.result.total),
                                 fmt5(r.result.per_turn),
                                 fmt5(static_cast<double>(r.spec.uses) * r.spec.e_virgin),
                                 fmt5(r.saving)};
    if (simulated) {
      if (r.simulation) {
        const auto& s = *r.simulation;
        row.insert(row.end(), {std::to_string(s.seed), fmt_int(s.replications), fmt5(s.uses.mean),
                               fmt5(s.uses.ci_low), fmt5(s.uses.ci_high), fmt5(s.emissions.mean)});
      } else {
        row.insert(row.end(), 6, "");
      }
    }
    doc.rows.push_back(std::move(row));
  }
  return doc;
}

ReportDocument quality_document(const ProductSystem& sys) {
  ReportDocument doc;
  doc.kind = DocumentKind::QualitySummary;
  doc.metadata.emplace_back("system", sys.name);
  doc.header = {"stage", "flow", "region", "boundary", "technology", "age",
                "geography", "completeness", "reliability", "overall"};
  for (const auto& stage : sys.stages)
    for (const auto& f : stage.flows) {
      const auto& d = f.quality.dims;
      doc.rows.push_back({stage.name, f.name, f.region, std::string(to_string(f.boundary)),
                          std::string(to_string(d.technology)), std::string(to_string(d.age)),
                          std::string(to_string(d.geography)), std::string(to_string(d.completeness)),
                          std::string(to_string(d.reliability)), std::string(to_string(f.quality.overall))});
    }
  return doc;
}

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      ++i;
      continue;
    }
    std::vector<std::string> row;
    std::string cell;
    bool quoted = false;
    for (; i < text.size(); ++i) {
      char c = text[i];
      if (quoted) {
        if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
          cell += '"';
          ++i;
        } else if (c == '"') {
          quoted = false;
        } else {
          cell += c;
        }
      } else if (c == '"') {
        quoted = true;
      } else if (c == ',') {
        row.push_back(std::move(cell));
        cell.clear();
      } else if (c == '\n') {
        ++i;
        break;
      } else {
        cell += c;
      }
    }
    row.push_back(std::move(cell));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace remanlca::report
