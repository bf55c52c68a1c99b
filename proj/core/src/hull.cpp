#include "unisplit/hull.hpp"

#include <algorithm>

namespace unisplit {
namespace {

// Orientation of (o, a, b) in the (x, cumulative weight) plane; positive for
// a counter-clockwise turn.
long double turn(const DataView& v, std::size_t o, std::size_t a, std::size_t b) {
    const long double ox = v.value(o), ax = v.value(a), bx = v.value(b);
    const long double oy = static_cast<long double>(v.cumulative(o));
    const long double ay = static_cast<long double>(v.cumulative(a));
    const long double by = static_cast<long double>(v.cumulative(b));
    return (ax - ox) * (by - oy) - (ay - oy) * (bx - ox);
}

// Monotone chain over the already sorted values.
template <class KeepTurn>
std::vector<std::size_t> chain(const DataView& v, KeepTurn keep) {
    if (v.size() < 2) throw Error("degenerate interval");
    std::vector<std::size_t> hull;
    hull.reserve(64);
    for (std::size_t i = 0; i < v.size(); ++i) {
        while (hull.size() >= 2 && !keep(turn(v, hull[hull.size() - 2], hull.back(), i))) hull.pop_back();
        hull.push_back(i);
    }
    return hull;
}

std::vector<double> to_values(const DataView& v, const std::vector<std::size_t>& idx) {
    std::vector<double> out;
    out.reserve(idx.size());
    for (std::size_t i : idx) out.push_back(v.value(i));
    return out;
}

}  // namespace

std::vector<std::size_t> gcm_indices(const DataView& view) {
    return chain(view, [](long double t) { return t > 0; });
}

std::vector<std::size_t> lcm_indices(const DataView& view) {
    return chain(view, [](long double t) { return t < 0; });
}

std::vector<double> gcm_points(const Ecdf& e, double lo, double hi) {
    if (!(lo < hi)) throw Error("degenerate interval");
    DataView sub = e.view().closed_range(lo, hi);
    return to_values(sub, gcm_indices(sub));
}

std::vector<double> lcm_points(const Ecdf& e, double lo, double hi) {
    if (!(lo < hi)) throw Error("degenerate interval");
    DataView sub = e.view().closed_range(lo, hi);
    return to_values(sub, lcm_indices(sub));
}

GLSet gl_set(const DataView& view) {
    GLSet gl;
    gl.gcm = gcm_indices(view);
    gl.lcm = lcm_indices(view);
    gl.max_gcm = view.value(gl.gcm[gl.gcm.size() - 2]);
    gl.min_lcm = view.value(gl.lcm[1]);

    gl.points.reserve(gl.gcm.size() + gl.lcm.size());
    std::size_t i = 0, j = 0;
    while (i < gl.gcm.size() || j < gl.lcm.size()) {
        std::size_t idx;
        PointKind kind;
        if (j == gl.lcm.size() || (i < gl.gcm.size() && gl.gcm[i] < gl.lcm[j])) {
            idx = gl.gcm[i++];
            kind = PointKind::Gcm;
        } else if (i == gl.gcm.size() || gl.lcm[j] < gl.gcm[i]) {
            idx = gl.lcm[j++];
            kind = PointKind::Lcm;
        } else {
            idx = gl.gcm[i++];
            ++j;
            kind = PointKind::Both;
        }
        gl.points.push_back({view.value(idx), view.ecdf_at(idx), kind, idx});
    }
    return gl;
}

GLSet gl_set(const Ecdf& e) { return gl_set(e.view()); }

}  // namespace unisplit
