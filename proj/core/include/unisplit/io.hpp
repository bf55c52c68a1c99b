#pragma once

#include <span>
#include <string>
#include <vector>

#include "unisplit/naive_bayes.hpp"

namespace unisplit {

struct SampleFile {
    std::vector<double> values;
    /// Empty unless every data line carries a second, integer column.
    std::vector<int> labels;
};

/// One value per line, or CSV whose first column is the value and optional
/// second column an integer label. Blank lines and '#' comments are skipped; a
/// non-numeric first line is taken as a header.
SampleFile parse_samples(const std::string& text);
SampleFile read_samples(const std::string& path);

/// CSV table: numeric feature columns followed by an integer class label in
/// the last column. Optional header.
Table parse_table(const std::string& text);
Table read_table(const std::string& path);

/// Shortest decimal form that reads back to the same double.
std::string format_double(double x);
std::string format_values(std::span<const double> values);
std::string format_labels(std::span<const int> labels);

std::string read_text(const std::string& path);
/// Writes through a temporary sibling and renames it into place, so a failed
/// write never leaves a partial file.
void write_text_atomic(const std::string& path, const std::string& content);

}  // namespace unisplit
