// unisplit command-line front end.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "unisplit/bench.hpp"
#include "unisplit/hull.hpp"
#include "unisplit/imgseg.hpp"
#include "unisplit/io.hpp"
#include "unisplit/naive_bayes.hpp"
#include "unisplit/stats.hpp"
#include "unisplit/synth.hpp"
#include "unisplit/udmm.hpp"

namespace {

using namespace unisplit;

constexpr double kDefaultAlpha = 0.01;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
    } else {
        write_text_atomic(out_path, text);
    }
}

std::string describe_split(const SplitResult& sr) {
    std::ostringstream os;
    os << "k " << sr.k() << '\n';
    os << "valley_points";
    for (double vp : sr.valley_points) os << ' ' << format_double(vp);
    os << '\n';
    os << "subset size min max\n";
    for (std::size_t j = 0; j < sr.subsets.size(); ++j) {
        const Dataset& s = sr.subsets[j];
        os << j << ' ' << s.total() << ' ' << format_double(s.front()) << ' ' << format_double(s.back()) << '\n';
    }
    return os.str();
}

int cmd_split(const std::string& input, double alpha, const std::string& labels_path) {
    const SampleFile file = read_samples(input);
    const SplitResult sr = split(file.values, alpha);
    std::string report = describe_split(sr);
    std::vector<int> truth = file.labels;
    if (!labels_path.empty()) {
        const SampleFile lf = read_samples(labels_path);
        truth.clear();
        for (double v : lf.values) truth.push_back(static_cast<int>(std::lround(v)));
    }
    if (!truth.empty()) {
        if (truth.size() != file.values.size()) throw Error("label count does not match the data");
        report += "nmi " + format_double(nmi(sr.labels, truth)) + '\n';
    }
    std::cout << report;
    return 0;
}

int cmd_fit(const std::string& input, double alpha, const std::string& out) {
    const SampleFile file = read_samples(input);
    const Udmm model = fit_udmm(Dataset::from_samples(file.values), alpha);
    if (!out.empty()) save_model(model, out);
    std::ostringstream os;
    os << "K " << model.size() << '\n';
    os << "component weight segments lower upper\n";
    for (std::size_t j = 0; j < model.size(); ++j) {
        const Umm& c = model.components()[j];
        os << j << ' ' << format_double(model.weights()[j]) << ' ' << c.size() << ' ' << format_double(c.lower())
           << ' ' << format_double(c.upper()) << '\n';
    }
    os << "log_likelihood " << format_double(model.log_likelihood(file.values)) << '\n';
    std::cout << os.str();
    return 0;
}

int cmd_sample(const std::string& model_path, std::size_t n, std::uint64_t seed, const std::string& out) {
    const Udmm model = load_model(model_path);
    emit(format_values(udmm_sample(model, n, seed)), out);
    return 0;
}

int cmd_eval(const std::string& model_path, const std::string& data_path, std::size_t n, std::uint64_t seed) {
    const Udmm model = load_model(model_path);
    const SampleFile data = read_samples(data_path);
    const double ks = ks_two_sample(udmm_sample(model, n, seed), data.values);
    std::cout << "ks " << format_double(ks) << '\n';
    return 0;
}

int cmd_bench(BenchConfig cfg, const std::string& csv_path) {
    const BenchReport report = run_bench(cfg);
    if (!csv_path.empty()) write_text_atomic(csv_path, bench_csv(report));
    std::cout << "suite " << suite_name(report.suite) << "  replicates " << cfg.replicates << "  m " << cfg.m
              << "  alpha " << cfg.alpha << "  seed " << cfg.seed << '\n';
    std::cout << bench_table(report);
    return 0;
}

int cmd_segment(const std::string& image, double alpha, const std::string& out, const std::string& report_path) {
    const GrayImage img = read_image(image);
    const Segmentation seg = segment(img, alpha);
    const GrayImage recolored = recolor(img, seg.labels);
    std::ostringstream os;
    os << "k " << seg.k() << '\n';
    os << "thresholds";
    for (double t : seg.thresholds) os << ' ' << format_double(t);
    os << '\n';
    os << "segment pixels mean min max\n";
    for (std::size_t j = 0; j < seg.segments.size(); ++j) {
        const auto& s = seg.segments[j];
        os << j << ' ' << s.pixels << ' ' << std::fixed << std::setprecision(3) << s.mean << ' ' << s.min << ' '
           << s.max << '\n';
        os.unsetf(std::ios::floatfield);
    }
    if (!out.empty()) write_pgm(recolored, out);
    if (!report_path.empty()) write_text_atomic(report_path, os.str());
    std::cout << os.str();
    return 0;
}

int cmd_nb(const std::string& csv, const std::string& mode_name, double alpha, int folds, std::uint64_t seed) {
    const Table table = read_table(csv);
    const NbMode mode = mode_name == "gaussian" ? NbMode::Gaussian : NbMode::Udmm;
    const CvResult r = kfold_accuracy(table, folds, mode, alpha, seed);
    std::ostringstream os;
    os << std::fixed << std::setprecision(4);
    os << "mode " << mode_name << "  folds " << folds << "  rows " << table.size() << "  features "
       << table.features() << '\n';
    os << "accuracy " << r.mean << " +- " << r.std << '\n';
    std::cout << os.str();
    return 0;
}

int cmd_gen(const std::string& name, std::uint64_t seed, std::size_t m, const std::string& out) {
    const LabeledSample s = sample_mixture(builtin(name, m), seed);
    if (out.empty() || out == "-") {
        std::cout << format_values(s.values);
        return 0;
    }
    // Labels first: a failure then leaves no data file without its labels.
    write_text_atomic(out + ".labels", format_labels(s.labels));
    write_text_atomic(out, format_values(s.values));
    return 0;
}

int cmd_plotdata(const std::string& input, int bins, double alpha, const std::string& out) {
    if (bins < 1) throw Error("bins must be positive");
    const SampleFile file = read_samples(input);
    const Dataset data = Dataset::from_samples(file.values);
    const DataView v = data.view();
    std::ostringstream os;
    os << "kind,x,y\n";
    auto row = [&](const char* kind, double x, double y) {
        os << kind << ',' << format_double(x) << ',' << format_double(y) << '\n';
    };

    const double lo = data.front();
    const double hi = data.back();
    const double width = hi > lo ? (hi - lo) / bins : 1.0;
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(bins), 0);
    for (std::size_t i = 0; i < data.size(); ++i) {
        auto b = static_cast<std::size_t>((data.values()[i] - lo) / width);
        counts[std::min(b, counts.size() - 1)] += data.weights()[i];
    }
    for (std::size_t b = 0; b < counts.size(); ++b) row("hist", lo + (static_cast<double>(b) + 0.5) * width, static_cast<double>(counts[b]));
    for (std::size_t i = 0; i < v.size(); ++i) row("ecdf", v.value(i), v.ecdf_at(i));
    if (v.size() >= 2) {
        for (std::size_t i : gcm_indices(v)) row("gcm", v.value(i), v.ecdf_at(i));
        for (std::size_t i : lcm_indices(v)) row("lcm", v.value(i), v.ecdf_at(i));
        const UUOutcome outcome = uu_test(v, alpha);
        for (const auto& c : outcome.candidates) {
            const MDPoint md = multimodality_degree(v.slice(c.first, c.last + 1), c.a, c.b);
            row("md", md.x, md.deviation);
        }
    }
    for (double vp : split(data, alpha).valley_points) row("vp", vp, 0.0);
    emit(os.str(), out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Valley-point splitting of univariate data into unimodal subsets, and unimodal mixture models."};
    app.require_subcommand(1);
    app.set_version_flag("--version", "unisplit 0.1.0");

    std::string input, model_path, data_path, out, labels_path, report_path, csv_path, mode = "udmm", name, names;
    double alpha = kDefaultAlpha;
    std::size_t n = 1000, m = 100, eval_n = 100000;
    std::uint64_t seed = 1;
    int bins = 50, folds = 10, replicates = 20;
    unsigned threads = 0;
    std::string suite = "table3";

    auto alpha_opt = [&](CLI::App* sub) {
        sub->add_option("--alpha", alpha, "Significance level of the uniformity tests")
            ->capture_default_str()
            ->check(CLI::Range(1e-12, 0.5));
    };

    auto* split_cmd = app.add_subcommand("split", "Split a sample into unimodal subsets");
    split_cmd->add_option("input", input, "Sample file")->required();
    alpha_opt(split_cmd);
    split_cmd->add_option("--labels", labels_path, "Ground-truth labels, one per line (scores NMI)");

    auto* fit_cmd = app.add_subcommand("fit", "Fit a unimodal mixture model");
    fit_cmd->add_option("input", input, "Sample file")->required();
    alpha_opt(fit_cmd);
    fit_cmd->add_option("--out", out, "Model file to write");

    auto* sample_cmd = app.add_subcommand("sample", "Draw values from a model file");
    sample_cmd->add_option("model", model_path, "Model file")->required();
    sample_cmd->add_option("--n", n, "Number of values")->capture_default_str()->check(CLI::PositiveNumber);
    sample_cmd->add_option("--seed", seed, "Random seed")->capture_default_str();
    sample_cmd->add_option("--out", out, "Output file (default stdout)");

    auto* eval_cmd = app.add_subcommand("eval", "Two-sample KS between a model sample and data");
    eval_cmd->add_option("model", model_path, "Model file")->required();
    eval_cmd->add_option("data", data_path, "Sample file")->required();
    eval_cmd->add_option("--n", n, "Model sample size")->capture_default_str()->check(CLI::PositiveNumber);
    eval_cmd->add_option("--seed", seed, "Random seed")->capture_default_str();

    auto* bench_cmd = app.add_subcommand("bench", "Seeded Monte Carlo benchmark over the built-in distributions");
    bench_cmd->add_option("--suite", suite, "table3 (model KS) or table5 (split NMI)")
        ->capture_default_str()
        ->check(CLI::IsMember({"table3", "table5"}));
    bench_cmd->add_option("--replicates", replicates, "Replicates per distribution")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    bench_cmd->add_option("--m", m, "Size multiplier for D1-D12")->capture_default_str()->check(CLI::PositiveNumber);
    alpha_opt(bench_cmd);
    bench_cmd->add_option("--seed", seed, "Base seed; replicate r uses seed + r")->capture_default_str();
    bench_cmd->add_option("--names", names, "Comma-separated distributions (default: whole suite)");
    bench_cmd->add_option("--eval-n", eval_n, "Sample size for the KS comparison")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    bench_cmd->add_option("--threads", threads, "Worker threads (default UNISPLIT_THREADS or all cores)");
    bench_cmd->add_option("--csv", csv_path, "Per-replicate CSV output");

    auto* segment_cmd = app.add_subcommand("segment", "Segment a PGM/PPM image by intensity");
    segment_cmd->add_option("image", input, "Binary PGM (P5) or PPM (P6)")->required();
    alpha_opt(segment_cmd);
    segment_cmd->add_option("--out", out, "Recolored PGM to write");
    segment_cmd->add_option("--report", report_path, "Write the text report here as well");

    auto* nb_cmd = app.add_subcommand("nb", "Cross-validated naive Bayes accuracy");
    nb_cmd->add_option("csv", input, "Feature table; last column is the class label")->required();
    nb_cmd->add_option("--mode", mode, "udmm or gaussian")->capture_default_str()->check(CLI::IsMember({"udmm", "gaussian"}));
    alpha_opt(nb_cmd);
    nb_cmd->add_option("--folds", folds, "Number of folds")->capture_default_str()->check(CLI::Range(2, 1000000));
    nb_cmd->add_option("--seed", seed, "Fold shuffling seed")->capture_default_str();

    auto* gen_cmd = app.add_subcommand("gen", "Generate a built-in distribution D1..D22");
    gen_cmd->add_option("name", name, "Distribution name")->required();
    gen_cmd->add_option("--seed", seed, "Random seed")->capture_default_str();
    gen_cmd->add_option("--m", m, "Size multiplier for D1-D12")->capture_default_str()->check(CLI::PositiveNumber);
    gen_cmd->add_option("--out", out, "Value file; labels go to <out>.labels");

    auto* plot_cmd = app.add_subcommand("plotdata", "Histogram, ecdf, hull and valley data as CSV");
    plot_cmd->add_option("input", input, "Sample file")->required();
    plot_cmd->add_option("--bins", bins, "Histogram bins")->capture_default_str()->check(CLI::PositiveNumber);
    alpha_opt(plot_cmd);
    plot_cmd->add_option("--out", out, "CSV file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*split_cmd) return cmd_split(input, alpha, labels_path);
        if (*fit_cmd) return cmd_fit(input, alpha, out);
        if (*sample_cmd) return cmd_sample(model_path, n, seed, out);
        if (*eval_cmd) return cmd_eval(model_path, data_path, n, seed);
        if (*bench_cmd) {
            BenchConfig cfg;
            cfg.suite = parse_suite(suite);
            cfg.replicates = replicates;
            cfg.m = m;
            cfg.alpha = alpha;
            cfg.seed = seed;
            cfg.eval_n = eval_n;
            cfg.threads = threads;
            std::stringstream ss(names);
            for (std::string item; std::getline(ss, item, ',');) {
                if (!item.empty()) cfg.names.push_back(item);
            }
            return cmd_bench(cfg, csv_path);
        }
        if (*segment_cmd) return cmd_segment(input, alpha, out, report_path);
        if (*nb_cmd) return cmd_nb(input, mode, alpha, folds, seed);
        if (*gen_cmd) return cmd_gen(name, seed, m, out);
        if (*plot_cmd) return cmd_plotdata(input, bins, alpha, out);
    } catch (const std::exception& e) {
        std::cerr << "unisplit: error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
