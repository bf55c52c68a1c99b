#include "unisplit/stats.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <unordered_map>
#include <utility>

namespace unisplit {

double kolmogorov_q(double lambda) {
    if (!(lambda > 0.0)) return 1.0;
    constexpr double pi2 = std::numbers::pi * std::numbers::pi;
    if (lambda < 1.18) {
        // Jacobi theta form of the cdf; the alternating series below converges
        // too slowly for small lambda.
        const double y = std::exp(-pi2 / (8.0 * lambda * lambda));
        double sum = 0.0;
        for (int k = 1; k < 100; ++k) {
            const double term = std::pow(y, static_cast<double>((2 * k - 1) * (2 * k - 1)));
            sum += term;
            if (term < 1e-16) break;
        }
        const double cdf = std::sqrt(2.0 * std::numbers::pi) / lambda * sum;
        return std::clamp(1.0 - cdf, 0.0, 1.0);
    }
    double sum = 0.0;
    double sign = 1.0;
    for (int k = 1; k < 100; ++k) {
        const double term = std::exp(-2.0 * k * k * lambda * lambda);
        sum += sign * term;
        if (term < 1e-10) break;
        sign = -sign;
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

double ks_p_value(double statistic, std::uint64_t n) {
    if (n == 0) return 1.0;
    const double sn = std::sqrt(static_cast<double>(n));
    return kolmogorov_q((sn + 0.12 + 0.11 / sn) * statistic);
}

double excursion_q(double lambda) {
    // The series is inaccurate below 0.4, where the tail is 1 to double precision
    // anyway.
    if (lambda < 0.4) return 1.0;
    double sum = 0.0;
    for (int k = 1; k < 100; ++k) {
        const double k2l2 = static_cast<double>(k * k) * lambda * lambda;
        const double term = (4.0 * k2l2 - 1.0) * std::exp(-2.0 * k2l2);
        sum += term;
        if (std::abs(term) < 1e-10) break;
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

double hull_segment_p_value(double statistic, std::uint64_t n) {
    if (n == 0) return 1.0;
    const double sn = std::sqrt(static_cast<double>(n));
    return excursion_q((sn + 0.155 + 0.24 / sn) * statistic);
}

namespace {

UniformityResult uniformity_on(const DataView& x, double a, double b, double alpha) {
    UniformityResult out;
    out.ks.n_effective = x.total();
    if (x.total() <= 2) return out;

    const double n = static_cast<double>(x.total());
    const double h = x.resolution();
    double stat = 0.0;
    double prev_cum = 0.0;
    if (h > 0.0) {
        const double cells = std::round((b - a) / h) + 1.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double k = std::round((x.value(i) - a) / h);
            const double cum = static_cast<double>(x.cumulative(i)) / n;
            stat = std::max({stat, std::abs(cum - (k + 1.0) / cells), std::abs(k / cells - prev_cum)});
            prev_cum = cum;
        }
    } else {
        const double width = b - a;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double u = (x.value(i) - a) / width;
            const double cum = static_cast<double>(x.cumulative(i)) / n;
            stat = std::max({stat, std::abs(cum - u), std::abs(u - prev_cum)});
            prev_cum = cum;
        }
    }
    out.ks.statistic = std::min(stat, 1.0);
    out.ks.p_value = ks_p_value(out.ks.statistic, x.total());
    out.is_uniform = out.ks.p_value > alpha;
    return out;
}

}  // namespace

UniformityResult ks_uniformity(const DataView& data, double a, double b, double alpha) {
    if (!(a < b)) throw Error("degenerate interval");
    if (!(alpha > 0.0 && alpha <= 0.5)) throw Error("alpha must lie in (0, 0.5]");
    DataView x = data.closed_range(a, b);
    if (x.empty()) throw Error("empty interval");
    return uniformity_on(x, a, b, alpha);
}

UniformityResult ks_uniformity(const DataView& interval, double alpha) {
    if (interval.empty()) throw Error("empty interval");
    if (interval.size() == 1) {
        UniformityResult out;
        out.ks.n_effective = interval.total();
        return out;
    }
    return uniformity_on(interval, interval.front(), interval.back(), alpha);
}

double ks_two_sample(const DataView& a, const DataView& b) {
    if (a.empty() || b.empty()) throw Error("empty dataset");
    const double na = static_cast<double>(a.total());
    const double nb = static_cast<double>(b.total());
    std::size_t i = 0, j = 0;
    double best = 0.0;
    while (i < a.size() || j < b.size()) {
        double x;
        if (j == b.size() || (i < a.size() && a.value(i) <= b.value(j))) {
            x = a.value(i);
        } else {
            x = b.value(j);
        }
        // Consume every jump located at x before comparing post-jump values.
        if (i < a.size() && a.value(i) == x) ++i;
        if (j < b.size() && b.value(j) == x) ++j;
        const double fa = i == 0 ? 0.0 : static_cast<double>(a.cumulative(i - 1)) / na;
        const double fb = j == 0 ? 0.0 : static_cast<double>(b.cumulative(j - 1)) / nb;
        best = std::max(best, std::abs(fa - fb));
    }
    return best;
}

double ks_two_sample(const Dataset& a, const Dataset& b) { return ks_two_sample(a.view(), b.view()); }

double ks_two_sample(std::span<const double> a, std::span<const double> b) {
    Dataset da = Dataset::from_samples(a);
    Dataset db = Dataset::from_samples(b);
    return ks_two_sample(da, db);
}

double nmi(std::span<const int> labels_a, std::span<const int> labels_b) {
    if (labels_a.size() != labels_b.size()) throw Error("label sequences differ in length");
    if (labels_a.empty()) throw Error("empty labeling");
    const double n = static_cast<double>(labels_a.size());

    std::map<std::pair<int, int>, std::size_t> joint;
    std::unordered_map<int, std::size_t> ca, cb;
    for (std::size_t i = 0; i < labels_a.size(); ++i) {
        ++joint[{labels_a[i], labels_b[i]}];
        ++ca[labels_a[i]];
        ++cb[labels_b[i]];
    }
    auto entropy = [n](const std::unordered_map<int, std::size_t>& counts) {
        double h = 0.0;
        for (const auto& [label, c] : counts) {
            const double p = static_cast<double>(c) / n;
            h -= p * std::log(p);
        }
        return h;
    };
    const double ha = entropy(ca);
    const double hb = entropy(cb);
    if (ca.size() == 1 && cb.size() == 1) return 1.0;
    double mi = 0.0;
    for (const auto& [key, c] : joint) {
        const double pxy = static_cast<double>(c) / n;
        const double px = static_cast<double>(ca[key.first]) / n;
        const double py = static_cast<double>(cb[key.second]) / n;
        mi += pxy * std::log(pxy / (px * py));
    }
    const double norm = 0.5 * (ha + hb);
    if (norm <= 0.0) return 0.0;
    return std::clamp(mi / norm, 0.0, 1.0);
}

UniformityResult hull_segment_uniformity(const DataView& interval, double alpha) {
    UniformityResult r = ks_uniformity(interval, alpha);
    if (r.ks.n_effective <= 2) return r;
    r.ks.p_value = hull_segment_p_value(r.ks.statistic, r.ks.n_effective);
    r.is_uniform = r.ks.p_value > alpha;
    return r;
}

}  // namespace unisplit
