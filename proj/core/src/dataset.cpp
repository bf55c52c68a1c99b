#include "unisplit/dataset.hpp"

#include <algorithm>
#include <cmath>

namespace unisplit {

Dataset Dataset::from_samples(std::span<const double> raw, double resolution) {
    if (raw.empty()) throw Error("empty dataset");
    std::vector<double> sorted(raw.begin(), raw.end());
    for (double v : sorted) {
        if (!std::isfinite(v)) throw Error("non-finite value");
    }
    std::sort(sorted.begin(), sorted.end());

    std::vector<double> values;
    std::vector<std::uint64_t> weights;
    for (double v : sorted) {
        if (!values.empty() && values.back() == v) {
            ++weights.back();
        } else {
            values.push_back(v);
            weights.push_back(1);
        }
    }
    return from_weighted(std::move(values), std::move(weights), resolution);
}

Dataset Dataset::from_weighted(std::vector<double> values, std::vector<std::uint64_t> weights,
                               double resolution) {
    if (values.empty()) throw Error("empty dataset");
    if (values.size() != weights.size()) throw Error("values and weights differ in length");
    if (!(resolution >= 0.0) || !std::isfinite(resolution)) throw Error("invalid resolution");
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i])) throw Error("non-finite value");
        if (weights[i] == 0) throw Error("weight must be positive");
        if (i > 0 && !(values[i - 1] < values[i])) throw Error("values must be strictly increasing");
    }
    Dataset d;
    d.values_ = std::move(values);
    d.weights_ = std::move(weights);
    d.cumulative_.resize(d.weights_.size());
    std::uint64_t run = 0;
    for (std::size_t i = 0; i < d.weights_.size(); ++i) {
        run += d.weights_[i];
        d.cumulative_[i] = run;
    }
    d.resolution_ = resolution;
    return d;
}

Dataset make_dataset(std::span<const double> raw, double resolution) {
    return Dataset::from_samples(raw, resolution);
}

DataView Dataset::view() const { return DataView(*this, 0, size()); }

Dataset Dataset::slice(std::size_t first, std::size_t last) const {
    if (first >= last || last > size()) throw Error("invalid slice");
    return from_weighted(std::vector<double>(values_.begin() + first, values_.begin() + last),
                         std::vector<std::uint64_t>(weights_.begin() + first, weights_.begin() + last),
                         resolution_);
}

std::vector<double> Dataset::expand() const {
    std::vector<double> out;
    out.reserve(total());
    for (std::size_t i = 0; i < size(); ++i) out.insert(out.end(), weights_[i], values_[i]);
    return out;
}

DataView::DataView(const Dataset& data, std::size_t first, std::size_t last)
    : data_(&data), first_(first), last_(last) {
    if (first > last || last > data.size()) throw Error("invalid view range");
    base_ = first == 0 ? 0 : data.cumulative()[first - 1];
    total_ = first == last ? 0 : data.cumulative()[last - 1] - base_;
}

DataView DataView::slice(std::size_t first, std::size_t last) const {
    if (first > last || last > size()) throw Error("invalid view range");
    return DataView(*data_, first_ + first, first_ + last);
}

std::size_t DataView::lower_index(double x) const {
    auto vals = values();
    return static_cast<std::size_t>(std::lower_bound(vals.begin(), vals.end(), x) - vals.begin());
}

std::size_t DataView::upper_index(double x) const {
    auto vals = values();
    return static_cast<std::size_t>(std::upper_bound(vals.begin(), vals.end(), x) - vals.begin());
}

DataView DataView::closed_range(double a, double b) const {
    std::size_t lo = lower_index(a);
    std::size_t hi = upper_index(b);
    if (hi < lo) hi = lo;
    return slice(lo, hi);
}

double Ecdf::operator()(double x) const {
    if (view_.empty()) return 0.0;
    std::size_t k = view_.upper_index(x);
    if (k == 0) return 0.0;
    return view_.ecdf_at(k - 1);
}

double ecdf_eval(const Ecdf& e, double x) { return e(x); }

PiecewiseLinearCdf::PiecewiseLinearCdf(std::vector<double> knots, std::vector<double> cdf_values)
    : knots_(std::move(knots)), cdf_values_(std::move(cdf_values)) {
    if (knots_.empty() || knots_.size() != cdf_values_.size()) throw Error("invalid piecewise-linear cdf");
    for (std::size_t i = 1; i < knots_.size(); ++i) {
        if (!(knots_[i - 1] < knots_[i])) throw Error("knots must be strictly increasing");
        if (cdf_values_[i] < cdf_values_[i - 1]) throw Error("cdf values must be non-decreasing");
    }
    if (!(cdf_values_.front() > 0.0) || cdf_values_.back() != 1.0) throw Error("invalid piecewise-linear cdf");
}

PiecewiseLinearCdf PiecewiseLinearCdf::from_indices(const DataView& view, std::span<const std::size_t> indices) {
    std::vector<double> knots;
    std::vector<double> vals;
    knots.reserve(indices.size());
    vals.reserve(indices.size());
    for (std::size_t i : indices) {
        knots.push_back(view.value(i));
        vals.push_back(view.ecdf_at(i));
    }
    return PiecewiseLinearCdf(std::move(knots), std::move(vals));
}

double PiecewiseLinearCdf::operator()(double x) const {
    if (x < knots_.front()) return 0.0;
    if (x >= knots_.back()) return 1.0;
    auto it = std::upper_bound(knots_.begin(), knots_.end(), x);
    std::size_t i = static_cast<std::size_t>(it - knots_.begin()) - 1;
    double t = (x - knots_[i]) / (knots_[i + 1] - knots_[i]);
    return cdf_values_[i] + t * (cdf_values_[i + 1] - cdf_values_[i]);
}

double pl_eval(const PiecewiseLinearCdf& pl, double x) { return pl(x); }

}  // namespace unisplit
