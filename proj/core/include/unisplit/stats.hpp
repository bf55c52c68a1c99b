#pragma once

#include <cstdint>
#include <span>

#include "unisplit/dataset.hpp"

namespace unisplit {

struct KsResult {
    double statistic = 0.0;
    double p_value = 1.0;
    std::uint64_t n_effective = 0;
};

struct UniformityResult {
    bool is_uniform = true;
    KsResult ks;
};

/// Kolmogorov survival function Q(lambda) = P(K > lambda).
double kolmogorov_q(double lambda);

/// Asymptotic one-sample KS p-value with the Stephens finite-sample
/// correction lambda = (sqrt(n) + 0.12 + 0.11 / sqrt(n)) * d.
double ks_p_value(double statistic, std::uint64_t n);

/// Tail of the maximum of a standard Brownian excursion,
/// 2 * sum_k (4 k^2 lambda^2 - 1) exp(-2 k^2 lambda^2) (the Kuiper law).
double excursion_q(double lambda);

/// p-value of a KS statistic measured between two successive vertices of the
/// gcm (or lcm). There the ecdf never crosses the chord, so under uniformity
/// the scaled deviation is an excursion maximum rather than a bridge
/// supremum. lambda = (sqrt(n) + 0.155 + 0.24 / sqrt(n)) * d.
double hull_segment_p_value(double statistic, std::uint64_t n);

/// One-sample KS test of X(a, b) against the uniform distribution on [a, b].
///
/// Ties enter through cumulative weights; the supremum covers both sides of
/// every jump. When the data carries a positive resolution the reference is
/// the discrete uniform on the lattice a, a + h, ..., b instead. Samples of
/// two or fewer points are always accepted.
UniformityResult ks_uniformity(const DataView& data, double a, double b, double alpha);

/// Same test on a view that already is X(a, b) with a = front(), b = back().
UniformityResult ks_uniformity(const DataView& interval, double alpha);

/// KS uniformity test of a hull segment X(a, b), a and b successive vertices
/// of the same hull, with the p-value from hull_segment_p_value.
UniformityResult hull_segment_uniformity(const DataView& interval, double alpha);

/// Exact sup-distance between two weighted ecdfs.
double ks_two_sample(const DataView& a, const DataView& b);
double ks_two_sample(const Dataset& a, const Dataset& b);
double ks_two_sample(std::span<const double> a, std::span<const double> b);

/// Normalized mutual information with the arithmetic-mean normalizer
/// (natural logarithms). Two single-class labelings score 1.
double nmi(std::span<const int> labels_a, std::span<const int> labels_b);

}  // namespace unisplit
