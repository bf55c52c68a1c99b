#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "unisplit/dataset.hpp"
#include "unisplit/uu_test.hpp"

namespace unisplit {

/// Point of maximum deviation of an interval's ecdf from the uniform cdf.
struct MDPoint {
    double x = 0.0;
    double deviation = 0.0;
};

/// Multimodality degree of X(a, b): max |F(x_i) - (x_i - a) / (b - a)| over the
/// values strictly inside (a, b), F being the ecdf of X(a, b). Ties go to the
/// smaller x. With no interior values the midpoint is returned with zero
/// deviation.
MDPoint multimodality_degree(const DataView& data, double a, double b);

/// Valley point of a multimodal sample. Throws "no valley exists" when the
/// sample is unimodal.
double find_vp(const DataView& data, double alpha);
double find_vp(const Dataset& data, double alpha);

struct SplitResult {
    std::vector<double> valley_points;
    std::vector<Dataset> subsets;
    /// Subset index of every raw point: input order when the split was run on
    /// raw samples, sorted order when it was run on a Dataset.
    std::vector<int> labels;

    std::size_t k() const noexcept { return subsets.size(); }
    /// Index of the subset whose range holds x (x <= vp goes left).
    int label_of(double x) const;
};

/// Subsets with fewer raw points than this are never split.
inline constexpr std::uint64_t kMinSplitSize = 4;

/// Recursive valley splitting followed by the merge pass; yields a minimal
/// unimodal partition.
SplitResult split(const Dataset& data, double alpha);
SplitResult split(std::span<const double> raw, double alpha, double resolution = 0.0);

/// Recursive splitting only, before merging.
std::vector<double> split_points(const Dataset& data, double alpha);

/// Sweeps adjacent pairs left to right, replacing the first unimodal union by
/// the union and restarting, until no adjacent union is unimodal. Subsets
/// must be ordered with disjoint, increasing value ranges.
std::vector<Dataset> merge_pass(const std::vector<Dataset>& subsets, double alpha);

/// Assigns each value to an interval delimited by sorted valley points.
std::vector<int> assign_labels(std::span<const double> values, std::span<const double> valley_points);

}  // namespace unisplit
