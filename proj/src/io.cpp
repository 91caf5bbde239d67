#include "minkflow/io.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <limits>
#include <locale>
#include <sstream>

#include "minkflow/errors.hpp"

namespace minkflow {

std::string format_double(double value) {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os << std::setprecision(std::numeric_limits<double>::max_digits10) << value;
    return os.str();
}

RadialGraphSpec spec_from_json(const Json& doc) {
    try {
        if (!doc.is_object()) throw InputError("surface spec must be a JSON object");
        RadialGraphSpec spec;
        spec.space = parse_space(doc.at("space").get<std::string>());
        spec.center = basepoint(spec.space);
        spec.base_radius = doc.at("base_radius").get<double>();
        if (!(spec.base_radius > 0.0)) throw InputError("base_radius must be positive");
        if (doc.contains("perturbations")) {
            for (const Json& p : doc.at("perturbations")) {
                Perturbation pert;
                pert.basis = p.at("basis").get<int>();
                pert.amplitude = p.at("amplitude").get<double>();
                if (pert.basis < 0 || pert.basis >= kPerturbationBasisSize) {
                    throw InputError("perturbation basis must be in [0, 8]");
                }
                spec.perturbations.push_back(pert);
            }
        }
        if (doc.contains("subdivision")) spec.subdivision = doc.at("subdivision").get<int>();
        return spec;
    } catch (const Json::exception& e) {
        throw InputError(std::string("malformed surface spec: ") + e.what());
    }
}

Json spec_to_json(const RadialGraphSpec& spec) {
    Json perts = Json::array();
    for (const Perturbation& p : spec.perturbations) perts.push_back({{"basis", p.basis}, {"amplitude", p.amplitude}});
    return {{"space", std::string(space_name(spec.space))},
            {"base_radius", spec.base_radius},
            {"perturbations", perts},
            {"subdivision", spec.subdivision}};
}

RadialGraphSpec load_spec(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open surface spec '" + path.string() + "'");
    try {
        return spec_from_json(Json::parse(in));
    } catch (const Json::parse_error& e) {
        throw InputError("surface spec '" + path.string() + "' is not valid JSON: " + e.what());
    }
}

Json summary_to_json(const GeometricSummary& s) {
    return {{"area", s.area}, {"total_mean_curvature", s.total_mean_curvature}, {"volume", s.volume}};
}

GeometricSummary summary_from_json(const Json& doc) {
    return {doc.at("area").get<double>(), doc.at("total_mean_curvature").get<double>(), doc.at("volume").get<double>()};
}

Json deficit_report_to_json(const DeficitReport& report) {
    Json j = {{"name", report.name},         {"deficit", report.deficit}, {"holds", report.holds},
              {"equality", report.equality}, {"tol", report.tol},         {"inputs", summary_to_json(report.inputs)}};
    if (!report.asserted) j["asserted"] = false;
    if (!report.note.empty()) j["note"] = report.note;
    return j;
}

DeficitReport deficit_report_from_json(const Json& doc) {
    DeficitReport r;
    r.name = doc.at("name").get<std::string>();
    r.deficit = doc.at("deficit").get<double>();
    r.holds = doc.at("holds").get<bool>();
    r.equality = doc.at("equality").get<bool>();
    r.tol = doc.at("tol").get<double>();
    r.inputs = summary_from_json(doc.at("inputs"));
    r.asserted = doc.value("asserted", true);
    r.note = doc.value("note", std::string());
    return r;
}

Json comparison_to_json(const ComparisonReport& report) {
    return {{"max_rel_area_err", report.max_rel_area_err},
            {"max_rel_vol_err", report.max_rel_vol_err},
            {"summary", summary_to_json(report.summary)},
            {"t", report.analytic.t_values}};
}

void write_flow_series_csv(std::ostream& out, const FlowSeries& series) {
    CsvTable table({"t", "area", "volume", "provenance"});
    const std::string prov(provenance_name(series.provenance));
    for (std::size_t i = 0; i < series.t_values.size(); ++i) {
        table.cell(series.t_values[i]).cell(series.areas[i]).cell(series.volumes[i]).cell(prov);
        table.end_row();
    }
    table.write(out);
}

namespace {

double parse_number(const std::string& field) {
    double value = 0.0;
    const char* end = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(field.data(), end, value);
    if (ec != std::errc() || ptr != end) throw InputError("not a number: '" + field + "'");
    return value;
}

}  // namespace

FlowSeries read_flow_series_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "t,area,volume,provenance") {
        throw InputError("flow series CSV must start with header 't,area,volume,provenance'");
    }
    FlowSeries series;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        row.imbue(std::locale::classic());
        std::string t, a, v, prov;
        if (!std::getline(row, t, ',') || !std::getline(row, a, ',') || !std::getline(row, v, ',') ||
            !std::getline(row, prov)) {
            throw InputError("flow series CSV row has fewer than four fields");
        }
        const Provenance p = prov == "analytic" ? Provenance::Analytic
                           : prov == "discrete" ? Provenance::Discrete
                                                : throw InputError("unknown provenance '" + prov + "'");
        if (first) series.provenance = p;
        first = false;
        series.t_values.push_back(parse_number(t));
        series.areas.push_back(parse_number(a));
        series.volumes.push_back(parse_number(v));
    }
    return series;
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

CsvTable& CsvTable::cell(const std::string& text) {
    current_.push_back(text);
    return *this;
}

CsvTable& CsvTable::cell(double value) { return cell(format_double(value)); }

CsvTable& CsvTable::cell(int value) { return cell(std::to_string(value)); }

void CsvTable::end_row() {
    if (current_.size() != header_.size()) throw InputError("CsvTable: row width does not match header");
    rows_.push_back(std::move(current_));
    current_.clear();
}

void CsvTable::write(std::ostream& out) const {
    auto emit = [&out](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
        out << '\n';
    };
    emit(header_);
    for (const auto& r : rows_) emit(r);
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path.string() + "'");
    out << text;
}

}  // namespace minkflow
