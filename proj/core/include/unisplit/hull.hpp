#pragma once

#include <cstddef>
#include <vector>

#include "unisplit/dataset.hpp"

namespace unisplit {

enum class PointKind { Gcm, Lcm, Both };

struct CriticalPoint {
    double x = 0.0;
    double f = 0.0;
    PointKind kind = PointKind::Both;
    std::size_t index = 0;  ///< relative to the view the set was built from
};

/// Ordered union of the gcm and lcm vertices of an ecdf.
struct GLSet {
    std::vector<CriticalPoint> points;
    std::vector<std::size_t> gcm;  ///< relative indices of gcm vertices, increasing
    std::vector<std::size_t> lcm;  ///< relative indices of lcm vertices, increasing
    double max_gcm = 0.0;          ///< largest gcm x other than the last value
    double min_lcm = 0.0;          ///< smallest lcm x other than the first value
};

// Hull vertices are taken over the step tops (x_i, F(x_i)). Points lying
// exactly on a chord are not vertices.

/// Relative indices of the lower convex hull vertices of the whole view.
std::vector<std::size_t> gcm_indices(const DataView& view);
/// Relative indices of the upper concave hull vertices of the whole view.
std::vector<std::size_t> lcm_indices(const DataView& view);

/// gcm vertex x-values of the ecdf restricted to dataset values in [lo, hi].
std::vector<double> gcm_points(const Ecdf& e, double lo, double hi);
/// lcm vertex x-values of the ecdf restricted to dataset values in [lo, hi].
std::vector<double> lcm_points(const Ecdf& e, double lo, double hi);

GLSet gl_set(const DataView& view);
GLSet gl_set(const Ecdf& e);

}  // namespace unisplit
