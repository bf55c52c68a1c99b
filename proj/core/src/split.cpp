#include "unisplit/split.hpp"

#include <algorithm>
#include <cmath>

namespace unisplit {

MDPoint multimodality_degree(const DataView& data, double a, double b) {
    if (!(a < b)) throw Error("degenerate interval");
    const DataView x = data.closed_range(a, b);
    if (x.size() < 2) throw Error("degenerate interval");
    MDPoint md{0.5 * (a + b), 0.0};
    bool found = false;
    const double width = b - a;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double v = x.value(i);
        if (v <= a || v >= b) continue;
        const double d = std::abs(x.ecdf_at(i) - (v - a) / width);
        if (!found || d > md.deviation) {
            md = {v, d};
            found = true;
        }
    }
    return md;
}

namespace {

// Moves a valley point that landed on a data value into the wider of the two
// gaps next to that value.
double avoid_collision(const DataView& v, double vp) {
    const std::size_t i = v.lower_index(vp);
    if (i >= v.size() || v.value(i) != vp) return vp;
    const double left_gap = i > 0 ? vp - v.value(i - 1) : -1.0;
    const double right_gap = i + 1 < v.size() ? v.value(i + 1) - vp : -1.0;
    if (left_gap > right_gap) return 0.5 * (v.value(i - 1) + vp);
    return 0.5 * (vp + v.value(i + 1));
}

const CandidateInterval& best_interval(const DataView& v, const std::vector<CandidateInterval>& candidates,
                                       std::vector<double>& deviations) {
    deviations.resize(candidates.size());
    std::size_t best = 0;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const auto& c = candidates[i];
        deviations[i] = multimodality_degree(v.slice(c.first, c.last + 1), c.a, c.b).deviation;
        if (i == 0) continue;
        const auto& cb = candidates[best];
        const double wi = c.b - c.a;
        const double wb = cb.b - cb.a;
        if (deviations[i] > deviations[best] ||
            (deviations[i] == deviations[best] && (wi > wb || (wi == wb && c.a < cb.a)))) {
            best = i;
        }
    }
    return candidates[best];
}

double valley_from(const DataView& interval, const CandidateInterval& t) {
    const MDPoint md = multimodality_degree(interval, t.a, t.b);
    bool interior = false;
    for (std::size_t i = 0; i < interval.size() && !interior; ++i) {
        interior = interval.value(i) > t.a && interval.value(i) < t.b;
    }
    if (!interior) return 0.5 * (t.a + t.b);
    return t.kind == PairKind::Gcm ? 0.5 * (md.x + t.b) : 0.5 * (t.a + md.x);
}

double find_vp_with(DataView current, UUOutcome outcome, double alpha) {
    if (outcome.unimodal) throw Error("no valley exists");
    const DataView root = current;
    std::vector<double> deviations;
    for (;;) {
        const CandidateInterval t = best_interval(current, outcome.candidates, deviations);
        const DataView interval = current.slice(t.first, t.last + 1);
        if (interval.same_range(current)) return avoid_collision(root, valley_from(interval, t));
        UUOutcome inner = uu_test(interval, alpha);
        if (inner.unimodal) return avoid_collision(root, valley_from(interval, t));
        current = interval;
        outcome = std::move(inner);
    }
}

struct Range {
    std::size_t first;
    std::size_t last;  // exclusive
};

void split_recursive(const DataView& all, Range r, double alpha, std::vector<Range>& leaves,
                     std::vector<double>& vps) {
    const DataView v = all.slice(r.first, r.last);
    if (v.total() < kMinSplitSize) {
        leaves.push_back(r);
        return;
    }
    UUOutcome outcome = uu_test(v, alpha);
    if (outcome.unimodal) {
        leaves.push_back(r);
        return;
    }
    const double vp = find_vp_with(v, std::move(outcome), alpha);
    const std::size_t cut = r.first + v.upper_index(vp);
    if (cut == r.first || cut == r.last) {
        // A valley point always lies strictly inside the sample range.
        throw Error("valley point outside the sample range");
    }
    split_recursive(all, {r.first, cut}, alpha, leaves, vps);
    vps.push_back(vp);
    split_recursive(all, {cut, r.last}, alpha, leaves, vps);
}

// Works on index ranges; vps[i] separates ranges i and i + 1.
void merge_ranges(const DataView& all, std::vector<Range>& ranges, std::vector<double>& vps, double alpha) {
    bool merged = true;
    while (merged && ranges.size() > 1) {
        merged = false;
        for (std::size_t i = 0; i + 1 < ranges.size(); ++i) {
            const DataView u = all.slice(ranges[i].first, ranges[i + 1].last);
            if (uu_test(u, alpha).unimodal) {
                ranges[i].last = ranges[i + 1].last;
                ranges.erase(ranges.begin() + static_cast<std::ptrdiff_t>(i) + 1);
                vps.erase(vps.begin() + static_cast<std::ptrdiff_t>(i));
                merged = true;
                break;
            }
        }
    }
}

}  // namespace

double find_vp(const DataView& data, double alpha) { return find_vp_with(data, uu_test(data, alpha), alpha); }

double find_vp(const Dataset& data, double alpha) { return find_vp(data.view(), alpha); }

int SplitResult::label_of(double x) const {
    return static_cast<int>(std::lower_bound(valley_points.begin(), valley_points.end(), x) - valley_points.begin());
}

std::vector<int> assign_labels(std::span<const double> values, std::span<const double> valley_points) {
    std::vector<int> out;
    out.reserve(values.size());
    for (double x : values) {
        out.push_back(static_cast<int>(std::lower_bound(valley_points.begin(), valley_points.end(), x) -
                                       valley_points.begin()));
    }
    return out;
}

std::vector<double> split_points(const Dataset& data, double alpha) {
    std::vector<Range> leaves;
    std::vector<double> vps;
    split_recursive(data.view(), {0, data.size()}, alpha, leaves, vps);
    return vps;
}

SplitResult split(const Dataset& data, double alpha) {
    if (data.empty()) throw Error("empty dataset");
    const DataView all = data.view();
    std::vector<Range> ranges;
    std::vector<double> vps;
    split_recursive(all, {0, data.size()}, alpha, ranges, vps);
    merge_ranges(all, ranges, vps, alpha);

    SplitResult result;
    result.valley_points = std::move(vps);
    result.subsets.reserve(ranges.size());
    for (const Range& r : ranges) result.subsets.push_back(data.slice(r.first, r.last));
    result.labels.reserve(data.total());
    for (std::size_t j = 0; j < ranges.size(); ++j) {
        for (std::size_t i = ranges[j].first; i < ranges[j].last; ++i) {
            result.labels.insert(result.labels.end(), data.weights()[i], static_cast<int>(j));
        }
    }
    return result;
}

SplitResult split(std::span<const double> raw, double alpha, double resolution) {
    const Dataset data = Dataset::from_samples(raw, resolution);
    SplitResult result = split(data, alpha);
    result.labels = assign_labels(raw, result.valley_points);
    return result;
}

std::vector<Dataset> merge_pass(const std::vector<Dataset>& subsets, double alpha) {
    if (subsets.empty()) return {};
    std::vector<double> values;
    std::vector<std::uint64_t> weights;
    std::vector<Range> ranges;
    std::vector<double> vps;
    for (std::size_t j = 0; j < subsets.size(); ++j) {
        const Dataset& s = subsets[j];
        if (s.empty()) throw Error("empty subset");
        if (!values.empty() && !(values.back() < s.front())) throw Error("subsets are not ordered and disjoint");
        const std::size_t first = values.size();
        values.insert(values.end(), s.values().begin(), s.values().end());
        weights.insert(weights.end(), s.weights().begin(), s.weights().end());
        ranges.push_back({first, values.size()});
        if (j > 0) vps.push_back(0.5 * (values[first - 1] + values[first]));
    }
    const Dataset joined = Dataset::from_weighted(std::move(values), std::move(weights), subsets.front().resolution());
    merge_ranges(joined.view(), ranges, vps, alpha);
    std::vector<Dataset> out;
    out.reserve(ranges.size());
    for (const Range& r : ranges) out.push_back(joined.slice(r.first, r.last));
    return out;
}

}  // namespace unisplit
