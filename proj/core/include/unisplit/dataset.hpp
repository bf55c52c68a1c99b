#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace unisplit {

/// Error raised for invalid input and violated preconditions across the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DataView;

/// A univariate sample stored as strictly increasing distinct values with
/// integer multiplicities.
///
/// Ties in the raw input are collapsed into weights; every cumulative
/// quantity downstream (ecdf, hull, KS statistics) is computed from the
/// weights so quantized data keeps its histogram shape.
///
/// `resolution` is the quantization step of the data (e.g. 1 for 8-bit pixel
/// intensities). Zero means continuous data. A positive resolution switches
/// the uniformity test to the discrete uniform distribution on that lattice.
class Dataset {
public:
    Dataset() = default;

    /// Sorts and deduplicates raw samples. Throws on empty or non-finite input.
    static Dataset from_samples(std::span<const double> raw, double resolution = 0.0);

    /// Builds from (value, weight) pairs; values must be strictly increasing and
    /// every weight at least one.
    static Dataset from_weighted(std::vector<double> values,
                                 std::vector<std::uint64_t> weights,
                                 double resolution = 0.0);

    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }
    std::uint64_t total() const noexcept { return cumulative_.empty() ? 0 : cumulative_.back(); }
    double resolution() const noexcept { return resolution_; }

    const std::vector<double>& values() const noexcept { return values_; }
    const std::vector<std::uint64_t>& weights() const noexcept { return weights_; }
    /// cumulative()[i] = weights[0] + ... + weights[i]
    const std::vector<std::uint64_t>& cumulative() const noexcept { return cumulative_; }

    double front() const { return values_.front(); }
    double back() const { return values_.back(); }

    DataView view() const;

    /// Copy of the distinct values with indices in [first, last).
    Dataset slice(std::size_t first, std::size_t last) const;

    /// Raw samples in sorted order (each value repeated by its weight).
    std::vector<double> expand() const;

    friend bool operator==(const Dataset&, const Dataset&) = default;

private:
    std::vector<double> values_;
    std::vector<std::uint64_t> weights_;
    std::vector<std::uint64_t> cumulative_;
    double resolution_ = 0.0;
};

/// Shorthand for Dataset::from_samples.
Dataset make_dataset(std::span<const double> raw, double resolution = 0.0);

/// Non-owning window [first, last) over a Dataset's distinct values. The
/// ecdf of a view is the ecdf of the sub-sample it covers, so X(a, b) of any
/// interval is a view and never a copy.
class DataView {
public:
    DataView() = default;
    DataView(const Dataset& data, std::size_t first, std::size_t last);

    std::size_t size() const noexcept { return last_ - first_; }
    bool empty() const noexcept { return first_ == last_; }

    double value(std::size_t i) const { return data_->values()[first_ + i]; }
    std::uint64_t weight(std::size_t i) const { return data_->weights()[first_ + i]; }
    /// Weights summed over [0, i] of this view.
    std::uint64_t cumulative(std::size_t i) const { return data_->cumulative()[first_ + i] - base_; }
    std::uint64_t total() const noexcept { return total_; }

    /// Ecdf of this sub-sample at its i-th value.
    double ecdf_at(std::size_t i) const {
        return static_cast<double>(cumulative(i)) / static_cast<double>(total_);
    }

    double front() const { return value(0); }
    double back() const { return value(size() - 1); }
    double resolution() const noexcept { return data_->resolution(); }

    std::span<const double> values() const {
        return std::span<const double>(data_->values()).subspan(first_, size());
    }

    /// Sub-view with relative indices [first, last).
    DataView slice(std::size_t first, std::size_t last) const;
    /// X(a, b): the values v with a <= v <= b.
    DataView closed_range(double a, double b) const;
    /// Relative index of the first value >= x (size() when none).
    std::size_t lower_index(double x) const;
    /// Relative index of the first value > x (size() when none).
    std::size_t upper_index(double x) const;

    std::size_t offset() const noexcept { return first_; }
    const Dataset& dataset() const noexcept { return *data_; }

    Dataset materialize() const { return data_->slice(first_, last_); }

    bool same_range(const DataView& other) const noexcept {
        return data_ == other.data_ && first_ == other.first_ && last_ == other.last_;
    }

private:
    const Dataset* data_ = nullptr;
    std::size_t first_ = 0;
    std::size_t last_ = 0;
    std::uint64_t base_ = 0;
    std::uint64_t total_ = 0;
};

/// Right-continuous empirical cdf of a view.
class Ecdf {
public:
    explicit Ecdf(DataView view) : view_(view) {}

    double operator()(double x) const;

    const DataView& view() const noexcept { return view_; }

private:
    DataView view_;
};

double ecdf_eval(const Ecdf& e, double x);

/// Piecewise-linear cdf through (s_i, F(s_i)): 0 below the first knot,
/// 1 at and above the last one.
class PiecewiseLinearCdf {
public:
    PiecewiseLinearCdf(std::vector<double> knots, std::vector<double> cdf_values);

    /// Knots taken from the view at the given relative indices, with cdf
    /// values read off the view's ecdf.
    static PiecewiseLinearCdf from_indices(const DataView& view, std::span<const std::size_t> indices);

    double operator()(double x) const;

    const std::vector<double>& knots() const noexcept { return knots_; }
    const std::vector<double>& cdf_values() const noexcept { return cdf_values_; }

private:
    std::vector<double> knots_;
    std::vector<double> cdf_values_;
};

double pl_eval(const PiecewiseLinearCdf& pl, double x);

}  // namespace unisplit
