// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 when any
// criterion fails. Sub-checks are printed indented under their criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "unisplit/bench.hpp"
#include "unisplit/hull.hpp"
#include "unisplit/io.hpp"
#include "unisplit/naive_bayes.hpp"
#include "unisplit/split.hpp"
#include "unisplit/stats.hpp"
#include "unisplit/synth.hpp"
#include "unisplit/udmm.hpp"
#include "unisplit/uu_test.hpp"

using namespace unisplit;

namespace {

class Criterion {
public:
    explicit Criterion(std::string title) : title_(std::move(title)) {}

    void check(bool ok, const std::string& what) {
        pass_ = pass_ && ok;
        lines_.push_back(std::string(ok ? "    ok   " : "    FAIL ") + what);
    }
    void note(const std::string& what) { lines_.push_back("    note " + what); }

    bool report(int number) const {
        std::cout << (pass_ ? "PASS" : "FAIL") << " criterion " << number << ": " << title_ << '\n';
        for (const auto& l : lines_) std::cout << l << '\n';
        std::cout.flush();
        return pass_;
    }

private:
    std::string title_;
    bool pass_ = true;
    std::vector<std::string> lines_;
};

std::string fmt(double x, int digits = 4) {
    std::ostringstream os;
    os.precision(digits);
    os << std::fixed << x;
    return os.str();
}

std::string sci(double x) {
    std::ostringstream os;
    os.precision(2);
    os << std::scientific << x;
    return os.str();
}

bool within(double x, double lo, double hi) { return x >= lo && x <= hi; }

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

BenchReport table3(const std::vector<std::string>& names, double alpha, bool keep) {
    BenchConfig cfg;
    cfg.suite = Suite::Table3;
    cfg.replicates = 20;
    cfg.m = 100;
    cfg.alpha = alpha;
    cfg.names = names;
    cfg.keep_models = keep;
    return run_bench(cfg);
}

BenchReport table5(const std::vector<std::string>& names) {
    BenchConfig cfg;
    cfg.suite = Suite::Table5;
    cfg.replicates = 20;
    cfg.alpha = 0.01;
    cfg.names = names;
    cfg.keep_models = true;
    return run_bench(cfg);
}

// --- criterion 1 -----------------------------------------------------------

struct T3Target {
    const char* name;
    double ks_max, k_lo, k_hi;
};

bool criterion1(const BenchReport& r) {
    Criterion c("model accuracy, table3 suite (m=100, 20 replicates, alpha=0.01)");
    const T3Target targets[] = {{"D1", 0.05, 2.0, 2.2}, {"D4", 0.045, 2.8, 3.2}, {"D9", 0.02, 5.5, 6.5}, {"D11", 0.035, 6.5, 7.5}};
    for (const auto& t : targets) {
        const BenchSummary& s = r.summary(t.name);
        c.check(s.ks_mean <= t.ks_max, std::string(t.name) + " mean KS " + fmt(s.ks_mean) + " <= " + fmt(t.ks_max, 3));
        c.check(within(s.k_mean, t.k_lo, t.k_hi),
                std::string(t.name) + " mean k " + fmt(s.k_mean, 2) + " in [" + fmt(t.k_lo, 1) + ", " + fmt(t.k_hi, 1) + "]");
    }
    return c.report(1);
}

// --- criterion 2 -----------------------------------------------------------

struct T5Target {
    const char* name;
    double nmi_lo, nmi_hi, k_lo, k_hi;
};

bool criterion2(const BenchReport& r) {
    Criterion c("split quality, table5 suite (20 replicates, alpha=0.01)");
    const T5Target targets[] = {{"D14", 0.97, 1.0, 1.9, 2.1},
                                {"D18", 0.95, 1.0, 2.8, 3.2},
                                {"D13", 0.72, 0.84, 1.9, 2.2},
                                {"D22", 0.85, 1.0, 3.7, 4.4}};
    for (const auto& t : targets) {
        const BenchSummary& s = r.summary(t.name);
        c.check(within(s.nmi_mean, t.nmi_lo, t.nmi_hi + 1e-12),
                std::string(t.name) + " mean NMI " + fmt(s.nmi_mean) + " in [" + fmt(t.nmi_lo, 2) + ", " + fmt(t.nmi_hi, 2) + "]");
        c.check(within(s.k_mean, t.k_lo, t.k_hi),
                std::string(t.name) + " mean k " + fmt(s.k_mean, 2) + " in [" + fmt(t.k_lo, 1) + ", " + fmt(t.k_hi, 1) + "]");
    }
    return c.report(2);
}

// --- criterion 3 -----------------------------------------------------------

bool criterion3() {
    Criterion c("alpha sensitivity: mean k at alpha=0.1 at most 15% above alpha=0.01");
    const std::vector<std::string> names{"D4", "D10"};
    const BenchReport strict = table3(names, 0.01, false);
    const BenchReport loose = table3(names, 0.1, false);
    for (const auto& n : names) {
        const double k1 = strict.summary(n).k_mean, k2 = loose.summary(n).k_mean;
        c.check(k2 <= 1.15 * k1, n + " k " + fmt(k1, 2) + " -> " + fmt(k2, 2) + " (+" + fmt(100.0 * (k2 / k1 - 1.0), 1) + "%)");
    }
    return c.report(3);
}

// --- criterion 4 -----------------------------------------------------------

bool criterion4() {
    Criterion c("noise robustness on a trimodal sample (10 trials)");
    constexpr double spacing = 10.0;
    int good = 0;
    double worst = 0.0;
    for (std::uint64_t trial = 0; trial < 10; ++trial) {
        const std::vector<double> clean = test_fixtures::trimodal(100 + trial);
        const SplitResult base = split(clean, 0.01);
        if (base.valley_points.size() != 2) {
            c.check(false, "trial " + std::to_string(trial) + ": clean sample gave " + std::to_string(base.valley_points.size()) + " valley points");
            continue;
        }
        Rng rng(900 + trial);
        const std::size_t n = clean.size();
        std::vector<double> noisy = clean;
        // Uniform noise over both valleys, 5% of N.
        for (std::size_t i = 0; i < n / 20; ++i) {
            const double lo = i % 2 == 0 ? 3.0 : 13.0;
            noisy.push_back(rng.uniform(lo, lo + 4.0));
        }
        std::vector<double> outliers = clean;
        // Left-tail Student's t outliers, 2% of N.
        for (std::size_t i = 0; i < n / 50; ++i) outliers.push_back(-6.0 - 4.0 * std::abs(rng.student_t(2.0)));

        bool ok = true;
        for (const auto* variant : {&noisy, &outliers}) {
            const SplitResult r = split(*variant, 0.01);
            if (r.valley_points.size() != 2) {
                ok = false;
                continue;
            }
            for (std::size_t j = 0; j < 2; ++j) {
                const double shift = std::abs(r.valley_points[j] - base.valley_points[j]) / spacing;
                worst = std::max(worst, shift);
                ok = ok && shift < 0.25;
            }
        }
        good += ok ? 1 : 0;
        if (!ok) c.note("trial " + std::to_string(trial) + " lost a valley or shifted it too far");
    }
    c.check(good == 10, std::to_string(good) + "/10 trials keep 2 valley points, worst shift " + fmt(100.0 * worst, 1) +
                            "% of the mode spacing (< 25%)");
    return c.report(4);
}

// --- criterion 5 -----------------------------------------------------------

bool criterion5() {
    Criterion c("naive Bayes with unimodal mixtures vs Gaussian naive Bayes");
    const Table rect = test_fixtures::rectangles(900, 14);
    const CvResult udmm = kfold_accuracy(rect, 10, NbMode::Udmm, 0.01, 1);
    const CvResult gnb = kfold_accuracy(rect, 10, NbMode::Gaussian, 0.01, 1);
    c.check(udmm.mean >= 0.95, "rectangles UDMM-NB accuracy " + fmt(udmm.mean) + " >= 0.95");
    c.check(gnb.mean <= 0.95, "rectangles GNB accuracy " + fmt(gnb.mean) + " <= 0.95");
    c.check(udmm.mean > gnb.mean, "UDMM-NB strictly better");
    if (const char* path = std::getenv("UNISPLIT_BANKNOTE_CSV"); path && *path) {
        const Table bank = read_table(path);
        const CvResult r = kfold_accuracy(bank, 10, NbMode::Udmm, 0.01, 1);
        c.check(within(r.mean, 0.87, 0.96), "banknote UDMM-NB accuracy " + fmt(r.mean) + " in [0.87, 0.96]");
    } else {
        c.note("banknote check skipped (set UNISPLIT_BANKNOTE_CSV to a features,label CSV)");
    }
    return c.report(5);
}

// --- criterion 6 -----------------------------------------------------------

Dataset union_of(const Dataset& a, const Dataset& b) {
    std::vector<double> all = a.expand();
    const std::vector<double> more = b.expand();
    all.insert(all.end(), more.begin(), more.end());
    return Dataset::from_samples(all, a.resolution());
}

bool is_minimal(const SplitResult& s, double alpha) {
    for (std::size_t j = 0; j + 1 < s.subsets.size(); ++j) {
        if (uu_test(union_of(s.subsets[j], s.subsets[j + 1]), alpha).unimodal) return false;
    }
    return true;
}

// pdf is constant between consecutive breakpoints of the union of all
// components, so the midpoint rule over those cells is exact.
double pdf_integral(const Udmm& m) {
    std::vector<double> cuts;
    for (const Umm& c : m.components()) cuts.insert(cuts.end(), c.breakpoints().begin(), c.breakpoints().end());
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    long double total = 0.0L;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        total += static_cast<long double>(udmm_pdf(m, 0.5 * (cuts[i] + cuts[i + 1]))) * (cuts[i + 1] - cuts[i]);
    }
    return static_cast<double>(total);
}

bool close_rel(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::max(std::abs(a), std::abs(b))); }

bool criterion6(const BenchReport& t3, const BenchReport& t5) {
    Criterion c("property suites");

    {
        Rng rng(2024);
        int mismatches = 0, checked = 0;
        for (int trial = 0; trial < 1000; ++trial) {
            const std::size_t n = 2 + rng.below(49);
            std::vector<double> xs(n);
            const bool coarse = trial % 3 == 0;
            for (auto& x : xs) x = coarse ? static_cast<double>(rng.below(12)) : rng.normal() * 3.0;
            const Dataset d = make_dataset(xs);
            if (d.size() < 2) continue;
            std::vector<std::size_t> w(d.weights().begin(), d.weights().end());
            const auto pts = oracle::ecdf_points(d.values(), w);
            ++checked;
            if (gcm_indices(d.view()) != oracle::lower_hull_brute(pts) || lcm_indices(d.view()) != oracle::upper_hull_brute(pts)) {
                ++mismatches;
            }
        }
        c.check(mismatches == 0 && checked > 900,
                "hull vs brute force: " + std::to_string(mismatches) + " mismatches on " + std::to_string(checked) + " datasets");
    }

    {
        double worst = 0.0;
        std::size_t models = 0;
        for (const auto& row : t3.rows) {
            if (!row.model) continue;
            worst = std::max(worst, std::abs(pdf_integral(*row.model) - 1.0));
            ++models;
        }
        c.check(models > 0 && worst <= 1e-6,
                "pdf integral of " + std::to_string(models) + " bench models, worst |int - 1| = " + sci(worst));
    }

    {
        std::size_t splits = 0, bad = 0;
        for (const BenchReport* r : {&t3, &t5}) {
            for (const auto& row : r->rows) {
                if (!row.split) continue;
                ++splits;
                if (!is_minimal(*row.split, r->config.alpha)) ++bad;
            }
        }
        c.check(splits > 0 && bad == 0, "minimal partitions: " + std::to_string(bad) + " of " + std::to_string(splits) + " splits have a unimodal adjacent union");
    }

    {
        int failures = 0;
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const auto spec = builtin(seed % 2 == 0 ? "D14" : "D1", 100);
            const std::vector<double> xs = sample_mixture(spec, 300 + seed).values;
            for (const auto& [scale, shift] : {std::pair{4.0, 0.5}, std::pair{0.25, -2.0}, std::pair{-2.0, 1.0}}) {
                std::vector<double> zs;
                for (double x : xs) zs.push_back(scale * x + shift);
                const bool ua = uu_test(make_dataset(xs), 0.01).unimodal;
                const bool ub = uu_test(make_dataset(zs), 0.01).unimodal;
                const SplitResult sa = split(xs, 0.01), sb = split(zs, 0.01);
                bool ok = ua == ub && sa.valley_points.size() == sb.valley_points.size();
                if (ok) {
                    const std::size_t k = sa.valley_points.size();
                    for (std::size_t j = 0; j < k; ++j) {
                        // A negative scale reverses the order of the valley points.
                        const double mapped = scale * sa.valley_points[scale > 0 ? j : k - 1 - j] + shift;
                        const double spread = std::abs(scale) * (sa.subsets.back().back() - sa.subsets.front().front());
                        ok = ok && std::abs(mapped - sb.valley_points[j]) <= 1e-9 * std::max(1.0, spread);
                    }
                }
                failures += ok ? 0 : 1;
            }
        }
        c.check(failures == 0, "affine equivariance (x4+0.5, x0.25-2, x-2+1): " + std::to_string(failures) + " of 60 cases differ");
    }

    {
        Rng rng(77);
        double worst = 0.0;
        for (int trial = 0; trial < 200; ++trial) {
            auto draw = [&](std::size_t n) {
                std::vector<double> v(n);
                const bool ties = trial % 2 == 0;
                for (auto& x : v) x = ties ? std::round(rng.normal() * 4.0) / 2.0 : rng.normal() * 3.0;
                return v;
            };
            const auto a = draw(1 + rng.below(40)), b = draw(1 + rng.below(40));
            worst = std::max(worst, std::abs(ks_two_sample(a, b) - oracle::ks_two_sample_grid(a, b)));
        }
        c.check(worst <= 1e-9, "two-sample KS vs grid oracle, worst difference " + sci(worst));
    }

    {
        int false_splits = 0;
        for (std::uint64_t i = 0; i < 100; ++i) {
            Family f = Normal{0, 1};
            if (i % 3 == 1) f = Uniform{0, 1};
            if (i % 3 == 2) f = Triangular{0, 0.3, 1};
            const std::vector<double> xs = sample_spec(DistSpec{f, 1000}, 5000 + i);
            if (split(xs, 0.01).k() > 1) ++false_splits;
        }
        c.check(false_splits <= 5, "unimodal false splits: " + std::to_string(false_splits) + "/100 (<= 5)");
    }
    return c.report(6);
}

// --- criterion 7 -----------------------------------------------------------

std::vector<double> sorted_bimodal(std::size_t n, std::uint64_t seed) {
    std::vector<double> xs = sample_mixture({{Normal{0, 1}, n / 2}, {Normal{6, 1}, n - n / 2}}, seed).values;
    std::sort(xs.begin(), xs.end());
    return xs;
}

double pipeline_seconds(const std::vector<double>& xs, std::size_t* k = nullptr) {
    const auto t0 = std::chrono::steady_clock::now();
    const UdmmFit fit = fit_udmm_detailed(Dataset::from_samples(xs), 0.01);
    const double s = seconds_since(t0);
    if (k) *k = fit.model.size();
    return s;
}

double best_of(const std::vector<double>& xs, int runs) {
    double best = INFINITY;
    for (int i = 0; i < runs; ++i) best = std::min(best, pipeline_seconds(xs));
    return best;
}

bool criterion7() {
    Criterion c("performance of split + fit");
    const auto big = sorted_bimodal(1000000, 1);
    std::size_t k = 0;
    const double t_big = pipeline_seconds(big, &k);
    c.check(t_big < 10.0, "1e6 pre-sorted bimodal points: " + fmt(t_big, 3) + " s (< 10 s), K = " + std::to_string(k));
    const double t1 = best_of(sorted_bimodal(100000, 2), 5);
    const double t2 = best_of(sorted_bimodal(200000, 2), 5);
    c.check(t2 / t1 < 3.0, "n 1e5 -> 2e5: " + fmt(t1, 4) + " s -> " + fmt(t2, 4) + " s, ratio " + fmt(t2 / t1, 2) + " (< 3)");
    return c.report(7);
}

}  // namespace

int main() {
    int failed = 0;
    auto guarded = [&](int number, const std::function<bool()>& f) {
        try {
            if (!f()) ++failed;
        } catch (const std::exception& e) {
            std::cout << "FAIL criterion " << number << ": exception: " << e.what() << '\n';
            ++failed;
        }
    };

    const auto t0 = std::chrono::steady_clock::now();
    BenchReport t3, t5;
    guarded(1, [&] {
        t3 = table3({"D1", "D4", "D9", "D11"}, 0.01, true);
        return criterion1(t3);
    });
    guarded(2, [&] {
        t5 = table5({"D14", "D18", "D13", "D22"});
        return criterion2(t5);
    });
    guarded(3, criterion3);
    guarded(4, criterion4);
    guarded(5, criterion5);
    guarded(6, [&] { return criterion6(t3, t5); });
    guarded(7, criterion7);

    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << " ("
              << fmt(seconds_since(t0), 1) << " s)\n";
    return failed == 0 ? 0 : 1;
}
