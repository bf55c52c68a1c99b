#include "unisplit/naive_bayes.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>

#include "unisplit/random.hpp"

namespace unisplit {

Table Table::subset(std::span<const std::size_t> indices) const {
    Table out;
    out.rows.reserve(indices.size());
    out.labels.reserve(indices.size());
    for (std::size_t i : indices) {
        out.rows.push_back(rows.at(i));
        out.labels.push_back(labels.at(i));
    }
    return out;
}

double GaussianCell::pdf(double x) const {
    const double z = (x - mean) / sigma;
    return std::exp(-0.5 * z * z) / (sigma * std::sqrt(2.0 * std::numbers::pi));
}

namespace {

GaussianCell fit_gaussian(const std::vector<double>& xs, double feature_range) {
    const double n = static_cast<double>(xs.size());
    const double mean = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    const double sigma = std::max(std::sqrt(ss / (n - 1.0)), 1e-9 * feature_range);
    if (!(sigma > 0.0)) throw Error("zero variance");
    return {mean, sigma};
}

}  // namespace

NaiveBayes NaiveBayes::fit(const Table& table, NbMode mode, double alpha) {
    if (table.rows.size() != table.labels.size()) throw Error("rows and labels differ in length");
    if (table.rows.empty()) throw Error("empty table");
    const std::size_t d = table.features();
    if (d == 0) throw Error("table has no features");
    for (const auto& r : table.rows) {
        if (r.size() != d) throw Error("rows have different feature counts");
    }

    std::map<int, std::vector<std::size_t>> by_class;
    for (std::size_t i = 0; i < table.size(); ++i) by_class[table.labels[i]].push_back(i);
    if (by_class.size() < 2) throw Error("need at least two classes");

    std::vector<double> range(d);
    for (std::size_t f = 0; f < d; ++f) {
        double lo = table.rows[0][f], hi = lo;
        for (const auto& r : table.rows) {
            lo = std::min(lo, r[f]);
            hi = std::max(hi, r[f]);
        }
        range[f] = hi - lo;
    }

    NaiveBayes m;
    m.mode_ = mode;
    for (const auto& [label, idx] : by_class) {
        if (idx.size() < 4) throw Error("class " + std::to_string(label) + " has fewer than 4 rows");
        m.classes_.push_back(label);
        m.priors_.push_back(static_cast<double>(idx.size()) / static_cast<double>(table.size()));
        std::vector<Cell> cells;
        cells.reserve(d);
        std::vector<double> xs(idx.size());
        for (std::size_t f = 0; f < d; ++f) {
            for (std::size_t k = 0; k < idx.size(); ++k) xs[k] = table.rows[idx[k]][f];
            if (mode == NbMode::Gaussian) {
                cells.emplace_back(fit_gaussian(xs, range[f]));
            } else {
                cells.emplace_back(fit_udmm(Dataset::from_samples(xs), alpha));
            }
        }
        m.cells_.push_back(std::move(cells));
    }
    return m;
}

std::vector<double> NaiveBayes::log_scores(std::span<const double> row) const {
    if (row.size() != cells_.front().size()) throw Error("row has the wrong number of features");
    std::vector<double> scores(classes_.size());
    for (std::size_t c = 0; c < classes_.size(); ++c) {
        double s = std::log(priors_[c]);
        for (std::size_t f = 0; f < row.size(); ++f) {
            const double p = std::visit([x = row[f]](const auto& cell) { return cell.pdf(x); }, cells_[c][f]);
            s += std::log(std::max(p, kDensityFloor));
        }
        scores[c] = s;
    }
    return scores;
}

int NaiveBayes::predict(std::span<const double> row) const {
    const auto scores = log_scores(row);
    // max_element keeps the first maximum, i.e. the smallest label.
    return classes_[static_cast<std::size_t>(std::max_element(scores.begin(), scores.end()) - scores.begin())];
}

double accuracy(const NaiveBayes& model, const Table& test) {
    if (test.rows.empty()) throw Error("empty test set");
    std::size_t hits = 0;
    for (std::size_t i = 0; i < test.size(); ++i) hits += model.predict(test.rows[i]) == test.labels[i];
    return static_cast<double>(hits) / static_cast<double>(test.size());
}

std::vector<int> stratified_folds(std::span<const int> labels, int folds, std::uint64_t seed) {
    if (folds < 2) throw Error("need at least two folds");
    if (labels.size() < static_cast<std::size_t>(folds)) throw Error("fewer rows than folds");
    std::map<int, std::vector<std::size_t>> by_class;
    for (std::size_t i = 0; i < labels.size(); ++i) by_class[labels[i]].push_back(i);
    Rng rng(seed);
    std::vector<int> fold(labels.size());
    std::size_t next = 0;
    for (auto& [label, idx] : by_class) {
        for (std::size_t i = idx.size(); i > 1; --i) std::swap(idx[i - 1], idx[rng.below(i)]);
        for (std::size_t i : idx) fold[i] = static_cast<int>(next++ % static_cast<std::size_t>(folds));
    }
    return fold;
}

CvResult kfold_accuracy(const Table& table, int folds, NbMode mode, double alpha, std::uint64_t seed) {
    const auto fold = stratified_folds(table.labels, folds, seed);
    CvResult out;
    for (int k = 0; k < folds; ++k) {
        std::vector<std::size_t> train, test;
        for (std::size_t i = 0; i < table.size(); ++i) (fold[i] == k ? test : train).push_back(i);
        const NaiveBayes model = NaiveBayes::fit(table.subset(train), mode, alpha);
        out.fold_accuracy.push_back(accuracy(model, table.subset(test)));
    }
    const double n = static_cast<double>(folds);
    out.mean = std::accumulate(out.fold_accuracy.begin(), out.fold_accuracy.end(), 0.0) / n;
    double ss = 0.0;
    for (double a : out.fold_accuracy) ss += (a - out.mean) * (a - out.mean);
    out.std = std::sqrt(ss / (n - 1.0));
    return out;
}

}  // namespace unisplit
