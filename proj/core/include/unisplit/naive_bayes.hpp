#pragma once

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "unisplit/udmm.hpp"

namespace unisplit {

enum class NbMode { Udmm, Gaussian };

/// Numeric feature rows with one integer class label each.
struct Table {
    std::vector<std::vector<double>> rows;
    std::vector<int> labels;

    std::size_t size() const noexcept { return rows.size(); }
    std::size_t features() const noexcept { return rows.empty() ? 0 : rows.front().size(); }
    /// Rows at the given indices, in that order.
    Table subset(std::span<const std::size_t> indices) const;
};

struct GaussianCell {
    double mean = 0.0;
    double sigma = 1.0;
    double pdf(double x) const;
};

/// Densities below this value are raised to it before taking logs.
inline constexpr double kDensityFloor = 1e-300;

/// Naive Bayes with one density per (class, feature) cell and frequency
/// priors.
class NaiveBayes {
public:
    using Cell = std::variant<Udmm, GaussianCell>;

    /// Needs at least two classes with four or more rows each.
    static NaiveBayes fit(const Table& table, NbMode mode, double alpha = 0.01);

    /// Class label with the largest posterior; ties go to the smaller label.
    int predict(std::span<const double> row) const;
    /// log prior + sum of floored log densities, one entry per class.
    std::vector<double> log_scores(std::span<const double> row) const;

    const std::vector<int>& classes() const noexcept { return classes_; }
    const std::vector<double>& priors() const noexcept { return priors_; }
    const Cell& cell(std::size_t cls, std::size_t feature) const { return cells_[cls][feature]; }
    NbMode mode() const noexcept { return mode_; }

private:
    NbMode mode_ = NbMode::Udmm;
    std::vector<int> classes_;
    std::vector<double> priors_;
    std::vector<std::vector<Cell>> cells_;
};

double accuracy(const NaiveBayes& model, const Table& test);

/// Fold index of every row. Each class is shuffled and dealt round-robin, so
/// class proportions are preserved across folds.
std::vector<int> stratified_folds(std::span<const int> labels, int folds, std::uint64_t seed);

struct CvResult {
    double mean = 0.0;
    /// Sample standard deviation over folds.
    double std = 0.0;
    std::vector<double> fold_accuracy;
};

CvResult kfold_accuracy(const Table& table, int folds, NbMode mode, double alpha, std::uint64_t seed);

}  // namespace unisplit
