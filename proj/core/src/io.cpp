#include "ftsdepth/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

#include <json.hpp>

#include "ftsdepth/errors.hpp"

namespace fts {

namespace {

using nlohmann::json;

// 17 significant digits round-trip any double exactly.
std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return fields;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

double parse_number(std::string_view field, std::size_t row, std::size_t column) {
    const std::string_view t = trim(field);
    double value = 0.0;
    const auto* begin = t.data();
    const auto* end = t.data() + t.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || t.empty()) {
        throw validation_error("row " + std::to_string(row) + ", column " + std::to_string(column) +
                               ": cannot parse '" + std::string(field) + "' as a number");
    }
    return value;
}

} // namespace

FunctionalSample load_sample_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw validation_error("row 1: missing header line");
    }
    const auto header = split_fields(line);
    if (header.empty() || trim(header[0]) != "t") {
        throw validation_error("row 1, column 1: header must start with 't'");
    }
    if (header.size() < 3) {
        throw validation_error("row 1: a grid needs at least 2 time points, got " +
                               std::to_string(header.size() - 1));
    }

    std::vector<double> points;
    points.reserve(header.size() - 1);
    for (std::size_t c = 1; c < header.size(); ++c) {
        points.push_back(parse_number(header[c], 1, c + 1));
    }
    Grid grid = [&] {
        try {
            return Grid(std::move(points));
        } catch (const validation_error& e) {
            throw validation_error("row 1: " + std::string(e.what()));
        }
    }();

    const std::size_t p = grid.size();
    std::vector<Curve> curves;
    std::vector<std::string> labels;
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (trim(line).empty()) continue;
        const auto fields = split_fields(line);
        if (fields.size() != p + 1) {
            throw validation_error("row " + std::to_string(row) + ": expected " + std::to_string(p + 1) +
                                   " columns, got " + std::to_string(fields.size()));
        }
        Curve curve;
        curve.values.reserve(p);
        for (std::size_t c = 1; c < fields.size(); ++c) {
            curve.values.push_back(parse_number(fields[c], row, c + 1));
        }
        curves.push_back(std::move(curve));
        labels.emplace_back(trim(fields[0]));
    }
    if (curves.empty()) {
        throw validation_error("row 2: no curves found after the header");
    }
    return FunctionalSample(std::move(grid), std::move(curves), std::move(labels));
}

void save_sample_csv(const FunctionalSample& sample, std::ostream& out) {
    out << "t";
    for (double t : sample.grid().points()) out << ',' << fmt17(t);
    out << '\n';
    for (std::size_t i = 0; i < sample.size(); ++i) {
        out << sample.label(i);
        for (double v : sample.curve(i).values) out << ',' << fmt17(v);
        out << '\n';
    }
}

FunctionalSample load_sample_csv_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw validation_error("cannot open input file '" + path + "'");
    return load_sample_csv(in);
}

void save_sample_csv_file(const FunctionalSample& sample, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw validation_error("cannot open output file '" + path + "'");
    save_sample_csv(sample, out);
}

std::string sample_to_json(const FunctionalSample& sample) {
    json j;
    const auto pts = sample.grid().points();
    const auto wts = sample.grid().weights();
    j["grid"]["points"] = std::vector<double>(pts.begin(), pts.end());
    j["grid"]["weights"] = std::vector<double>(wts.begin(), wts.end());
    j["curves"] = json::array();
    for (std::size_t i = 0; i < sample.size(); ++i) {
        json c;
        c["label"] = sample.label(i);
        c["values"] = sample.curve(i).values;
        j["curves"].push_back(std::move(c));
    }
    return j.dump();
}

FunctionalSample sample_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw validation_error(std::string("invalid sample JSON: ") + e.what());
    }
    try {
        Grid grid(j.at("grid").at("points").get<std::vector<double>>());
        std::vector<Curve> curves;
        std::vector<std::string> labels;
        for (const auto& c : j.at("curves")) {
            curves.push_back(Curve{c.at("values").get<std::vector<double>>()});
            labels.push_back(c.value("label", std::string{}));
        }
        return FunctionalSample(std::move(grid), std::move(curves), std::move(labels));
    } catch (const json::exception& e) {
        throw validation_error(std::string("invalid sample JSON: ") + e.what());
    }
}

void save_depth_csv(const DepthVector& depths, std::ostream& out) {
    out << "index,value\n";
    for (std::size_t i = 0; i < depths.values.size(); ++i) {
        out << i << ',' << fmt17(depths.values[i]) << '\n';
    }
}

std::string depth_to_json(const DepthVector& depths) {
    json j;
    j["beta"] = depths.beta;
    j["values"] = depths.values;
    return j.dump();
}

void save_ranks_csv(const RankVector& rank_vector, std::ostream& out) {
    out << "index,value\n";
    for (std::size_t i = 0; i < rank_vector.ranks.size(); ++i) {
        out << i << ',' << fmt17(rank_vector.ranks[i]) << '\n';
    }
}

std::string ranks_to_json(const RankVector& rank_vector) {
    json j;
    j["scheme"] = rank_scheme_name(rank_vector.scheme);
    j["ranks"] = rank_vector.ranks;
    return j.dump();
}

std::string wilcoxon_to_json(const WilcoxonResult& result) {
    json j;
    j["statistic"] = result.statistic;
    j["beta"] = result.beta;
    j["n_first"] = result.n_first;
    j["n_second"] = result.n_second;
    j["scheme"] = rank_scheme_name(result.scheme);
    j["p_method"] = p_method_name(result.p_method);
    if (result.p_value.has_value()) {
        j["p_value"] = *result.p_value;
    } else {
        j["p_value"] = nullptr;
    }
    return j.dump();
}

void save_trace_csv(const DetectionTrace& trace, std::ostream& out) {
    out << "k,statistic,p_value\n";
    for (const TraceEntry& e : trace.entries) {
        out << e.window_start << ',' << fmt17(e.statistic) << ',';
        if (e.p_value.has_value()) out << fmt17(*e.p_value);
        out << '\n';
    }
}

std::string change_report_to_json(const ChangeReport& report) {
    json j;
    j["flagged"] = report.flagged;
    if (report.change_index.has_value()) {
        j["change_index"] = *report.change_index;
    } else {
        j["change_index"] = nullptr;
    }
    j["rule"]["alpha"] = report.rule.alpha;
    j["rule"]["consecutive"] = report.rule.consecutive;
    return j.dump();
}

void save_boxplot_csv(const BoxplotSummary& summary, const FunctionalSample& sample,
                      std::ostream& out) {
    out << "t,median,central_lower,central_upper,fence_lower,fence_upper\n";
    const auto& median = sample.curve(summary.median_index).values;
    for (std::size_t t = 0; t < sample.n_points(); ++t) {
        out << fmt17(sample.grid().point(t)) << ',' << fmt17(median[t]) << ','
            << fmt17(summary.central_lower[t]) << ',' << fmt17(summary.central_upper[t]) << ','
            << fmt17(summary.fence_lower[t]) << ',' << fmt17(summary.fence_upper[t]) << '\n';
    }
}

std::string boxplot_to_json(const BoxplotSummary& summary) {
    json j;
    j["median_index"] = summary.median_index;
    j["outlier_indices"] = summary.outlier_indices;
    return j.dump();
}

const char* rank_scheme_name(RankScheme scheme) {
    return scheme == RankScheme::eq4_max ? "eq4-max" : "mid-rank";
}

RankScheme rank_scheme_from_name(const std::string& name) {
    if (name == "eq4-max") return RankScheme::eq4_max;
    if (name == "mid-rank") return RankScheme::mid_rank;
    throw validation_error("unknown rank scheme '" + name + "' (expected eq4-max or mid-rank)");
}

const char* p_method_name(PValueMethod method) {
    switch (method) {
    case PValueMethod::normal_approx: return "normal-approx";
    case PValueMethod::bootstrap: return "bootstrap";
    default: return "none";
    }
}

} // namespace fts
