#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unisplit/synth.hpp"
#include "unisplit/udmm.hpp"

namespace unisplit {

enum class Suite {
    /// Fit a UDMM per replicate and compare a model sample with a fresh
    /// sample of the generating distribution (two-sample KS) and count k.
    Table3,
    /// Split labeled data and score the partition against the generating
    /// labels (NMI) and count k.
    Table5,
};

Suite parse_suite(const std::string& name);
std::string suite_name(Suite s);

struct BenchConfig {
    Suite suite = Suite::Table3;
    int replicates = 20;
    std::size_t m = 100;
    double alpha = 0.01;
    std::uint64_t seed = 1;
    /// Size of the ground-truth and model samples compared by KS.
    std::size_t eval_n = 100000;
    /// Distributions to run; empty means the suite's default list.
    std::vector<std::string> names;
    /// Worker threads; 0 reads UNISPLIT_THREADS, then the hardware count.
    unsigned threads = 0;
    /// Keep each replicate's fitted model and split (for post-hoc checks).
    bool keep_models = false;
};

struct BenchRow {
    std::string name;
    int replicate = 0;
    /// NaN when not measured (Table5 suite).
    double ks = 0.0;
    int k = 0;
    double nmi = 0.0;
    std::uint64_t seed = 0;
    double seconds = 0.0;
    std::optional<Udmm> model;
    std::optional<SplitResult> split;
};

struct BenchSummary {
    std::string name;
    int replicates = 0;
    double ks_mean = 0.0, ks_std = 0.0;
    double k_mean = 0.0, k_std = 0.0;
    double nmi_mean = 0.0, nmi_std = 0.0;
    double seconds = 0.0;
};

struct BenchReport {
    Suite suite = Suite::Table3;
    BenchConfig config;
    /// Ordered by name (in run order), then replicate.
    std::vector<BenchRow> rows;
    std::vector<BenchSummary> summaries;

    const BenchSummary& summary(const std::string& name) const;
};

std::vector<std::string> default_names(Suite s);
unsigned bench_threads(unsigned requested);

/// Rescales every spec's count so the total is close to n, keeping the
/// mixture proportions.
std::vector<DistSpec> rescale(const std::vector<DistSpec>& specs, std::size_t n);

BenchReport run_bench(const BenchConfig& config);

/// CSV with columns name, replicate, ks, k, nmi, seed.
std::string bench_csv(const BenchReport& report);
/// Aligned text table of the per-distribution summaries.
std::string bench_table(const BenchReport& report);

}  // namespace unisplit
