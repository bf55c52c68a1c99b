#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "unisplit/dataset.hpp"
#include "unisplit/random.hpp"
#include "unisplit/split.hpp"
#include "unisplit/uu_test.hpp"

namespace unisplit {

/// Unimodal Mixture Model: a weighted mixture of UMMs, one per unimodal
/// subset, separated by valley points.
class Udmm {
public:
    Udmm(std::vector<Umm> components, std::vector<double> weights, std::vector<double> valley_points);

    std::size_t size() const noexcept { return components_.size(); }
    const std::vector<Umm>& components() const noexcept { return components_; }
    const std::vector<double>& weights() const noexcept { return weights_; }
    const std::vector<double>& valley_points() const noexcept { return valley_points_; }
    double lower() const { return components_.front().lower(); }
    double upper() const { return components_.back().upper(); }

    double pdf(double x) const;
    double cdf(double x) const;
    /// Sum of log densities; -inf when a point falls outside the support.
    double log_likelihood(std::span<const double> xs) const;

    double sample(Rng& rng) const;
    std::vector<double> sample(std::size_t count, Rng& rng) const;
    std::vector<double> sample(std::size_t count, std::uint64_t seed) const;

    friend bool operator==(const Udmm&, const Udmm&) = default;

private:
    std::vector<Umm> components_;
    std::vector<double> weights_;
    std::vector<double> valley_points_;
    std::vector<double> cumulative_;
};

double udmm_pdf(const Udmm& m, double x);
double udmm_cdf(const Udmm& m, double x);
std::vector<double> udmm_sample(const Udmm& m, std::size_t count, std::uint64_t seed);

struct UdmmFit {
    Udmm model;
    SplitResult split;
};

/// Splits the sample into unimodal subsets and models each one with the UMM
/// its unimodality test produces.
UdmmFit fit_udmm_detailed(const Dataset& data, double alpha);
Udmm fit_udmm(const Dataset& data, double alpha);

/// JSON model document: weights, valley_points, components[].breakpoints,
/// components[].weights. Numbers round-trip bit-exactly.
std::string serialize(const Udmm& m);
Udmm deserialize(const std::string& text);
void save_model(const Udmm& m, const std::string& path);
Udmm load_model(const std::string& path);

}  // namespace unisplit
