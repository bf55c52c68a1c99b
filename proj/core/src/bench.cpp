#include "unisplit/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "unisplit/io.hpp"
#include "unisplit/stats.hpp"

namespace unisplit {

Suite parse_suite(const std::string& name) {
    if (name == "table3") return Suite::Table3;
    if (name == "table5") return Suite::Table5;
    throw Error("unknown suite '" + name + "' (expected table3 or table5)");
}

std::string suite_name(Suite s) { return s == Suite::Table3 ? "table3" : "table5"; }

std::vector<std::string> default_names(Suite s) {
    std::vector<std::string> out;
    const int first = s == Suite::Table3 ? 1 : 13;
    const int last = s == Suite::Table3 ? 12 : 22;
    for (int i = first; i <= last; ++i) out.push_back("D" + std::to_string(i));
    return out;
}

unsigned bench_threads(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("UNISPLIT_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<DistSpec> rescale(const std::vector<DistSpec>& specs, std::size_t n) {
    std::size_t total = 0;
    for (const auto& s : specs) total += s.n;
    if (total == 0) throw Error("empty mixture");
    std::vector<DistSpec> out = specs;
    for (auto& s : out) {
        s.n = static_cast<std::size_t>(std::llround(static_cast<double>(s.n) * static_cast<double>(n) / static_cast<double>(total)));
    }
    return out;
}

const BenchSummary& BenchReport::summary(const std::string& name) const {
    for (const auto& s : summaries) {
        if (s.name == name) return s;
    }
    throw Error("no summary for '" + name + "'");
}

namespace {

BenchRow run_replicate(const BenchConfig& cfg, const std::string& name, int replicate) {
    const auto start = std::chrono::steady_clock::now();
    BenchRow row;
    row.name = name;
    row.replicate = replicate;
    row.seed = cfg.seed + static_cast<std::uint64_t>(replicate);

    const auto specs = builtin(name, cfg.m);
    Rng rng(row.seed);
    const LabeledSample data = sample_mixture(specs, rng);

    if (cfg.suite == Suite::Table3) {
        UdmmFit fit = fit_udmm_detailed(Dataset::from_samples(data.values), cfg.alpha);
        const LabeledSample truth = sample_mixture(rescale(specs, cfg.eval_n), rng);
        const auto generated = fit.model.sample(cfg.eval_n, rng);
        row.ks = ks_two_sample(truth.values, generated);
        row.k = static_cast<int>(fit.model.size());
        row.nmi = nmi(assign_labels(data.values, fit.split.valley_points), data.labels);
        if (cfg.keep_models) {
            row.model = std::move(fit.model);
            row.split = std::move(fit.split);
        }
    } else {
        SplitResult sr = split(data.values, cfg.alpha);
        row.ks = std::numeric_limits<double>::quiet_NaN();
        row.k = static_cast<int>(sr.k());
        row.nmi = nmi(sr.labels, data.labels);
        if (cfg.keep_models) row.split = std::move(sr);
    }
    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return row;
}

void mean_std(const std::vector<double>& xs, double& mean, double& sd) {
    if (xs.empty()) {
        mean = sd = std::numeric_limits<double>::quiet_NaN();
        return;
    }
    double s = 0.0;
    for (double x : xs) s += x;
    mean = s / static_cast<double>(xs.size());
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    sd = xs.size() > 1 ? std::sqrt(ss / static_cast<double>(xs.size() - 1)) : 0.0;
}

}  // namespace

BenchReport run_bench(const BenchConfig& cfg) {
    if (cfg.replicates < 1) throw Error("replicates must be positive");
    if (!(cfg.alpha > 0.0 && cfg.alpha <= 0.5)) throw Error("alpha must lie in (0, 0.5]");
    if (cfg.eval_n == 0) throw Error("evaluation sample size must be positive");
    const auto names = cfg.names.empty() ? default_names(cfg.suite) : cfg.names;
    for (const auto& n : names) builtin(n, cfg.m);  // fail fast on unknown names

    const std::size_t jobs = names.size() * static_cast<std::size_t>(cfg.replicates);
    std::vector<BenchRow> rows(jobs);
    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::string first_error;
    auto worker = [&] {
        for (std::size_t j = next++; j < jobs; j = next++) {
            try {
                rows[j] = run_replicate(cfg, names[j / static_cast<std::size_t>(cfg.replicates)],
                                        static_cast<int>(j % static_cast<std::size_t>(cfg.replicates)));
            } catch (const std::exception& e) {
                std::lock_guard lock(error_mutex);
                if (first_error.empty()) first_error = e.what();
            }
        }
    };
    const unsigned threads = std::min<std::size_t>(bench_threads(cfg.threads), jobs);
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    if (!first_error.empty()) throw Error(first_error);

    BenchReport report;
    report.suite = cfg.suite;
    report.config = cfg;
    report.config.names = names;
    for (std::size_t i = 0; i < names.size(); ++i) {
        BenchSummary s;
        s.name = names[i];
        s.replicates = cfg.replicates;
        std::vector<double> ks, k, nm;
        for (int r = 0; r < cfg.replicates; ++r) {
            const BenchRow& row = rows[i * static_cast<std::size_t>(cfg.replicates) + static_cast<std::size_t>(r)];
            if (!std::isnan(row.ks)) ks.push_back(row.ks);
            k.push_back(row.k);
            nm.push_back(row.nmi);
            s.seconds += row.seconds;
        }
        mean_std(ks, s.ks_mean, s.ks_std);
        mean_std(k, s.k_mean, s.k_std);
        mean_std(nm, s.nmi_mean, s.nmi_std);
        report.summaries.push_back(s);
    }
    report.rows = std::move(rows);
    return report;
}

std::string bench_csv(const BenchReport& report) {
    std::ostringstream os;
    os << "name,replicate,ks,k,nmi,seed\n";
    for (const auto& r : report.rows) {
        os << r.name << ',' << r.replicate << ',' << (std::isnan(r.ks) ? "" : format_double(r.ks)) << ',' << r.k
           << ',' << format_double(r.nmi) << ',' << r.seed << '\n';
    }
    return os.str();
}

std::string bench_table(const BenchReport& report) {
    std::ostringstream os;
    os << std::fixed;
    os << std::left << std::setw(6) << "name" << std::right << std::setw(6) << "reps" << std::setw(20) << "ks"
       << std::setw(20) << "k" << std::setw(20) << "nmi" << std::setw(10) << "time[s]" << '\n';
    auto pm = [&](double mean, double sd, int prec) {
        std::ostringstream cell;
        cell << std::fixed << std::setprecision(prec);
        if (std::isnan(mean)) {
            cell << "-";
        } else {
            cell << mean << " +- " << sd;
        }
        os << std::setw(20) << cell.str();
    };
    for (const auto& s : report.summaries) {
        os << std::left << std::setw(6) << s.name << std::right << std::setw(6) << s.replicates;
        pm(s.ks_mean, s.ks_std, 4);
        pm(s.k_mean, s.k_std, 2);
        pm(s.nmi_mean, s.nmi_std, 3);
        os << std::setw(10) << std::setprecision(2) << s.seconds << '\n';
    }
    return os.str();
}

}  // namespace unisplit
