// ftsdepth command line tool: depth computation, two-sample homogeneity
// tests, moving-window change detection, simulators, functional boxplots,
// and Fourier smoothing over curve samples stored as CSV.
//
// Every output file gets a sibling <output>.manifest.json recording the
// command, resolved parameters, seed, input digests, and tool version, so
// a run can be reproduced bit for bit.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ftsdepth/boxplot.hpp"
#include "ftsdepth/depth.hpp"
#include "ftsdepth/detector.hpp"
#include "ftsdepth/errors.hpp"
#include "ftsdepth/fourier.hpp"
#include "ftsdepth/io.hpp"
#include "ftsdepth/parallel.hpp"
#include "ftsdepth/simulate.hpp"
#include "ftsdepth/version.hpp"
#include "ftsdepth/wilcoxon.hpp"

namespace {

using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_internal = 1;
constexpr int exit_validation = 2;

std::string one_line(std::string text) {
    for (char& c : text) {
        if (c == '\n' || c == '\r') c = ' ';
    }
    return text;
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw fts::validation_error("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw fts::validation_error("cannot open output file '" + path + "'");
    out << content;
    if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

std::string hex64(std::uint64_t v) {
    char buf[19];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

// Accumulates one run's outputs plus its manifest.
class RunWriter {
public:
    RunWriter(std::string command) { manifest_["command"] = std::move(command); }

    void param(const std::string& key, const json& value) { manifest_["parameters"][key] = value; }
    void seed(std::uint64_t s) { manifest_["seed"] = s; }

    void input(const std::string& path, const std::string& bytes) {
        manifest_["inputs"][path] = hex64(fnv1a64(bytes));
    }

    void output(const std::string& path, const std::string& content) {
        write_file(path, content);
        outputs_.push_back(path);
    }

    void finish() {
        manifest_["tool_version"] = fts::version_string;
        if (!manifest_.contains("inputs")) manifest_["inputs"] = json::object();
        if (!manifest_.contains("parameters")) manifest_["parameters"] = json::object();
        const std::string text = manifest_.dump(2) + "\n";
        for (const std::string& path : outputs_) {
            write_file(path + ".manifest.json", text);
        }
    }

private:
    json manifest_;
    std::vector<std::string> outputs_;
};

std::string to_csv_string(const fts::FunctionalSample& sample) {
    std::ostringstream out;
    fts::save_sample_csv(sample, out);
    return out.str();
}

fts::Grid resolve_grid(const std::string& spec) {
    if (spec == "120" || spec == "1440") {
        return fts::preset_grid(spec == "120" ? 120 : 1440);
    }
    // Anything else is a file holding comma-separated times, optionally as
    // a sample-CSV header line starting with "t,".
    std::string text = read_file(spec);
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw fts::validation_error("grid file '" + spec + "' is empty");
    std::vector<double> pts;
    std::stringstream fields(line);
    std::string field;
    bool first = true;
    while (std::getline(fields, field, ',')) {
        if (first && field == "t") {
            first = false;
            continue;
        }
        first = false;
        try {
            pts.push_back(std::stod(field));
        } catch (const std::exception&) {
            throw fts::validation_error("grid file '" + spec + "': cannot parse '" + field +
                                        "' as a time point");
        }
    }
    return fts::Grid(std::move(pts));
}

fts::FunctionalSample load_input(RunWriter& run, const std::string& path) {
    const std::string bytes = read_file(path);
    run.input(path, bytes);
    std::istringstream in(bytes);
    return fts::load_sample_csv(in);
}

void apply_threads(const std::optional<int>& threads_flag) {
    if (threads_flag.has_value()) {
        fts::parallel::set_max_workers(*threads_flag);
        return;
    }
    if (const char* env = std::getenv("FTS_THREADS")) {
        try {
            fts::parallel::set_max_workers(std::stoi(env));
        } catch (const std::exception&) {
            throw fts::validation_error(std::string("FTS_THREADS is not an integer: '") + env + "'");
        }
    }
}

int run(int argc, char** argv) {
    CLI::App app{"Depth-based homogeneity testing and structural-change detection "
                 "for samples of curves"};
    app.require_subcommand(1);
    app.set_version_flag("--version", fts::version_string);

    std::optional<int> threads;
    app.add_option("--threads", threads, "Cap on worker threads (default: all cores; "
                                         "FTS_THREADS is the fallback)");

    // depth -----------------------------------------------------------------
    auto* depth_cmd = app.add_subcommand("depth", "Per-curve (local) band depth of a sample");
    std::string depth_in, depth_out = "depth.csv", depth_scheme = "eq4-max";
    double depth_beta = 1.0;
    bool depth_local = false;
    depth_cmd->add_option("--in", depth_in, "Input sample CSV")->required();
    depth_cmd->add_option("--beta", depth_beta, "Locality level in (0, 1]")->required();
    depth_cmd->add_flag("--local", depth_local,
                        "Force the symmetrized local construction even at beta = 1");
    depth_cmd->add_option("--out", depth_out, "Output depth CSV (default depth.csv)");

    // test ------------------------------------------------------------------
    auto* test_cmd = app.add_subcommand("test", "Two-sample local Wilcoxon homogeneity test");
    std::string test_first, test_second, test_out = "test.json", test_scheme = "eq4-max";
    double test_beta = 1.0, test_trim = 0.10;
    std::optional<std::size_t> test_boot;
    std::optional<std::uint64_t> test_seed;
    test_cmd->add_option("--first", test_first, "First sample CSV")->required();
    test_cmd->add_option("--second", test_second, "Second sample CSV")->required();
    test_cmd->add_option("--beta", test_beta, "Locality level in (0, 1]")->required();
    test_cmd->add_option("--scheme", test_scheme, "Rank scheme: eq4-max or mid-rank");
    test_cmd->add_option("--bootstrap", test_boot, "Bootstrap replicate count (>= 100)");
    test_cmd->add_option("--seed", test_seed, "RNG seed (required with --bootstrap)");
    test_cmd->add_option("--trim", test_trim, "meboot trim proportion (default 0.10)");
    test_cmd->add_option("--out", test_out, "Output result JSON (default test.json)");

    // detect ----------------------------------------------------------------
    auto* detect_cmd = app.add_subcommand("detect", "Moving-window change detection against a "
                                                    "reference sample");
    std::string det_ref, det_stream, det_trace = "trace.csv", det_report = "report.json";
    std::string det_scheme = "eq4-max";
    std::size_t det_window = 40, det_step = 10, det_consec = 3;
    double det_beta = 1.0, det_alpha = 0.05, det_trim = 0.10;
    std::optional<std::size_t> det_boot;
    std::optional<std::uint64_t> det_seed;
    bool det_no_report = false;
    detect_cmd->add_option("--ref", det_ref, "Reference sample CSV")->required();
    detect_cmd->add_option("--stream", det_stream, "Stream sample CSV (time-ordered curves)")->required();
    detect_cmd->add_option("--window", det_window, "Window length L (default 40)");
    detect_cmd->add_option("--step", det_step, "Window shift (default 10)");
    detect_cmd->add_option("--beta", det_beta, "Locality level in (0, 1]");
    detect_cmd->add_option("--scheme", det_scheme, "Rank scheme: eq4-max or mid-rank");
    detect_cmd->add_option("--alpha", det_alpha, "Significance level (default 0.05)");
    detect_cmd->add_option("--consec", det_consec, "Windows below alpha needed to flag (default 3)");
    detect_cmd->add_option("--bootstrap", det_boot, "Bootstrap replicate count (>= 100)");
    detect_cmd->add_option("--seed", det_seed, "RNG seed (required with --bootstrap)");
    detect_cmd->add_option("--trim", det_trim, "meboot trim proportion (default 0.10)");
    detect_cmd->add_option("--out-trace", det_trace, "Output trace CSV (default trace.csv)");
    detect_cmd->add_option("--out-report", det_report, "Output change report JSON "
                                                       "(default report.json)");
    detect_cmd->add_flag("--no-report", det_no_report, "Write the trace only (no p-values needed)");

    // simulate ---------------------------------------------------------------
    auto* sim_cmd = app.add_subcommand("simulate", "Generate curve samples from the built-in models");
    std::string sim_model, sim_grid = "120", sim_out = "sample.csv";
    std::string sim_kernel = "gaussian", sim_error = "wiener";
    std::size_t sim_n = 0, sim_burnin = 50;
    std::optional<std::uint64_t> sim_seed;
    double sim_kernel_c = 0.5, sim_p = 0.05, sim_shift = 2.0;
    sim_cmd->add_option("--model", sim_model, "wiener | bridge | far1 | mixture")->required();
    sim_cmd->add_option("--n", sim_n, "Number of curves")->required();
    sim_cmd->add_option("--grid", sim_grid, "120 | 1440 | path to a grid file (default 120)");
    sim_cmd->add_option("--seed", sim_seed, "RNG seed (required)");
    sim_cmd->add_option("--kernel", sim_kernel, "far1 kernel: gaussian or constant");
    sim_cmd->add_option("--kernel-c", sim_kernel_c, "far1 kernel constant C (default 0.5)");
    sim_cmd->add_option("--error", sim_error, "far1 errors: wiener or bridge");
    sim_cmd->add_option("--burnin", sim_burnin, "far1 burn-in length (default 50)");
    sim_cmd->add_option("--p", sim_p, "mixture contamination probability (default 0.05)");
    sim_cmd->add_option("--shift", sim_shift, "mixture component-b location shift (default 2)");
    sim_cmd->add_option("--out", sim_out, "Output sample CSV (default sample.csv)");

    // boxplot ----------------------------------------------------------------
    auto* box_cmd = app.add_subcommand("boxplot", "Functional boxplot summary of a sample");
    std::string box_in, box_summary = "boxplot.csv", box_outliers = "outliers.json";
    double box_central = 0.5, box_factor = 1.5;
    box_cmd->add_option("--in", box_in, "Input sample CSV")->required();
    box_cmd->add_option("--central", box_central, "Central region proportion (default 0.5)");
    box_cmd->add_option("--factor", box_factor, "Fence factor (default 1.5; inf disables outliers)");
    box_cmd->add_option("--out-summary", box_summary, "Output summary CSV (default boxplot.csv)");
    box_cmd->add_option("--out-outliers", box_outliers, "Output outlier JSON (default outliers.json)");

    // smooth -----------------------------------------------------------------
    auto* smooth_cmd = app.add_subcommand("smooth", "Fourier least-squares smoothing of a sample");
    std::string smooth_in, smooth_out = "smoothed.csv";
    std::size_t smooth_nbasis = 0;
    smooth_cmd->add_option("--in", smooth_in, "Input sample CSV")->required();
    smooth_cmd->add_option("--nbasis", smooth_nbasis, "Odd Fourier basis size")->required();
    smooth_cmd->add_option("--out", smooth_out, "Output sample CSV (default smoothed.csv)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help / --version
        std::cerr << "error: validation: " << one_line(e.what()) << "\n";
        return exit_validation;
    }
    apply_threads(threads);

    if (depth_cmd->parsed()) {
        RunWriter run("depth");
        run.param("in", depth_in);
        run.param("beta", depth_beta);
        run.param("local", depth_local);
        run.param("out", depth_out);
        const fts::FunctionalSample sample = load_input(run, depth_in);
        const fts::DepthVector depths = fts::local_cgbd_all(sample, depth_beta, depth_local);
        std::ostringstream out;
        fts::save_depth_csv(depths, out);
        run.output(depth_out, out.str());
        run.finish();
        return exit_ok;
    }

    if (test_cmd->parsed()) {
        if (test_boot.has_value() && !test_seed.has_value()) {
            throw fts::validation_error("--seed is required with --bootstrap (no hidden entropy)");
        }
        RunWriter run("test");
        run.param("first", test_first);
        run.param("second", test_second);
        run.param("beta", test_beta);
        run.param("scheme", test_scheme);
        run.param("trim", test_trim);
        if (test_boot.has_value()) run.param("bootstrap", *test_boot);
        if (test_seed.has_value()) run.seed(*test_seed);
        run.param("out", test_out);

        const fts::FunctionalSample first = load_input(run, test_first);
        const fts::FunctionalSample second = load_input(run, test_second);
        const fts::RankScheme scheme = fts::rank_scheme_from_name(test_scheme);
        std::optional<fts::MeBootConfig> boot;
        if (test_boot.has_value()) {
            boot = fts::MeBootConfig{test_trim, *test_boot, *test_seed};
        }
        const fts::WilcoxonResult result =
            fts::local_wilcoxon_test(first, second, test_beta, scheme, boot);
        run.output(test_out, fts::wilcoxon_to_json(result) + "\n");
        run.finish();
        return exit_ok;
    }

    if (detect_cmd->parsed()) {
        if (det_boot.has_value() && !det_seed.has_value()) {
            throw fts::validation_error("--seed is required with --bootstrap (no hidden entropy)");
        }
        if (!det_boot.has_value() && !det_no_report) {
            throw fts::validation_error("the change report needs p-values; pass --bootstrap N --seed K "
                                        "or --no-report for a statistic-only trace");
        }
        RunWriter run("detect");
        run.param("ref", det_ref);
        run.param("stream", det_stream);
        run.param("window", det_window);
        run.param("step", det_step);
        run.param("beta", det_beta);
        run.param("scheme", det_scheme);
        run.param("alpha", det_alpha);
        run.param("consec", det_consec);
        run.param("trim", det_trim);
        if (det_boot.has_value()) run.param("bootstrap", *det_boot);
        if (det_seed.has_value()) run.seed(*det_seed);
        run.param("out_trace", det_trace);
        if (!det_no_report) run.param("out_report", det_report);

        const fts::FunctionalSample reference = load_input(run, det_ref);
        const fts::FunctionalSample stream = load_input(run, det_stream);

        fts::DetectorConfig config;
        config.window_length = det_window;
        config.step = det_step;
        config.beta = det_beta;
        config.scheme = fts::rank_scheme_from_name(det_scheme);
        if (det_boot.has_value()) {
            config.bootstrap = fts::MeBootConfig{det_trim, *det_boot, *det_seed};
        }
        const fts::DetectionTrace trace = fts::moving_wilcoxon(reference, stream, config);
        std::ostringstream out;
        fts::save_trace_csv(trace, out);
        run.output(det_trace, out.str());
        if (!det_no_report) {
            const fts::ChangeReport report = fts::detect_change(trace, det_alpha, det_consec);
            run.output(det_report, fts::change_report_to_json(report) + "\n");
        }
        run.finish();
        return exit_ok;
    }

    if (sim_cmd->parsed()) {
        if (!sim_seed.has_value()) {
            throw fts::validation_error("--seed is required for simulate (no hidden entropy)");
        }
        RunWriter run("simulate");
        run.param("model", sim_model);
        run.param("n", sim_n);
        run.param("grid", sim_grid);
        run.seed(*sim_seed);
        run.param("out", sim_out);

        const fts::Grid grid = resolve_grid(sim_grid);
        std::optional<fts::FunctionalSample> sample;
        if (sim_model == "wiener") {
            sample = fts::wiener_sample(sim_n, grid, *sim_seed);
        } else if (sim_model == "bridge") {
            sample = fts::brownian_bridge_sample(sim_n, grid, *sim_seed);
        } else if (sim_model == "far1") {
            run.param("kernel", sim_kernel);
            run.param("kernel_c", sim_kernel_c);
            run.param("error", sim_error);
            run.param("burnin", sim_burnin);
            fts::Far1Config config;
            if (sim_kernel == "gaussian") {
                config.kernel = {fts::Far1Kernel::Type::gaussian, sim_kernel_c};
            } else if (sim_kernel == "constant") {
                config.kernel = {fts::Far1Kernel::Type::constant, sim_kernel_c};
            } else {
                throw fts::validation_error("unknown far1 kernel '" + sim_kernel + "'");
            }
            if (sim_error == "wiener") {
                config.error = fts::ErrorProcess::wiener;
            } else if (sim_error == "bridge") {
                config.error = fts::ErrorProcess::brownian_bridge;
            } else {
                throw fts::validation_error("unknown far1 error process '" + sim_error + "'");
            }
            config.burn_in = sim_burnin;
            sample = fts::far1_sample(sim_n, grid, config, *sim_seed);
        } else if (sim_model == "mixture") {
            run.param("p", sim_p);
            run.param("shift", sim_shift);
            fts::MixtureConfig config;
            config.component_a = {fts::CurveModel::Kind::wiener, 0.0};
            config.component_b = {fts::CurveModel::Kind::wiener, sim_shift};
            config.contamination = sim_p;
            sample = fts::mixture_sample(sim_n, grid, config, *sim_seed);
        } else {
            throw fts::validation_error("unknown model '" + sim_model +
                                        "' (expected wiener, bridge, far1, or mixture)");
        }
        run.output(sim_out, to_csv_string(*sample));
        run.finish();
        return exit_ok;
    }

    if (box_cmd->parsed()) {
        RunWriter run("boxplot");
        run.param("in", box_in);
        run.param("central", box_central);
        run.param("factor", box_factor);
        run.param("out_summary", box_summary);
        run.param("out_outliers", box_outliers);
        const fts::FunctionalSample sample = load_input(run, box_in);
        const fts::BoxplotSummary summary = fts::functional_boxplot(sample, box_central, box_factor);
        std::ostringstream out;
        fts::save_boxplot_csv(summary, sample, out);
        run.output(box_summary, out.str());
        run.output(box_outliers, fts::boxplot_to_json(summary) + "\n");
        run.finish();
        return exit_ok;
    }

    if (smooth_cmd->parsed()) {
        RunWriter run("smooth");
        run.param("in", smooth_in);
        run.param("nbasis", smooth_nbasis);
        run.param("out", smooth_out);
        const fts::FunctionalSample sample = load_input(run, smooth_in);
        const fts::FunctionalSample smoothed = fts::fourier_smooth(sample, smooth_nbasis);
        run.output(smooth_out, to_csv_string(smoothed));
        run.finish();
        return exit_ok;
    }

    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const fts::validation_error& e) {
        std::cerr << "error: validation: " << one_line(e.what()) << "\n";
        return exit_validation;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << one_line(e.what()) << "\n";
        return exit_internal;
    }
}
