#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "minkflow/closed_form.hpp"
#include "minkflow/flow.hpp"
#include "minkflow/inequalities.hpp"
#include "minkflow/surface.hpp"

namespace minkflow {

using Json = nlohmann::json;

/// Shortest round-trip decimal: 17 significant digits, '.' separator.
std::string format_double(double value);

// {"space": "euclidean"|"hyperbolic"|"spherical", "base_radius": number,
//  "perturbations": [{"basis": int, "amplitude": number}], "subdivision": int}
// The center is always the canonical basepoint and is not serialized.
RadialGraphSpec spec_from_json(const Json& doc);
Json spec_to_json(const RadialGraphSpec& spec);
RadialGraphSpec load_spec(const std::filesystem::path& path);

Json summary_to_json(const GeometricSummary& s);
GeometricSummary summary_from_json(const Json& doc);

// {"name", "deficit", "holds", "equality", "tol", "inputs": {...}}
Json deficit_report_to_json(const DeficitReport& report);
DeficitReport deficit_report_from_json(const Json& doc);

Json comparison_to_json(const ComparisonReport& report);

/// CSV with header "t,area,volume,provenance".
void write_flow_series_csv(std::ostream& out, const FlowSeries& series);
FlowSeries read_flow_series_csv(std::istream& in);

/// Minimal CSV table writer; numeric cells go through format_double.
class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header);
    CsvTable& cell(const std::string& text);
    CsvTable& cell(double value);
    CsvTable& cell(int value);
    void end_row();
    void write(std::ostream& out) const;
    std::size_t rows() const noexcept { return rows_.size(); }

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
    std::vector<std::string> current_;
};

void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace minkflow
