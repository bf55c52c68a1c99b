#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "unisplit/random.hpp"

namespace unisplit {

struct Normal { double mu, sigma; };
struct Uniform { double a, b; };
/// Lower limit, mode, upper limit.
struct Triangular { double lower, mode, upper; };
struct StudentT { double nu, loc, scale; };
struct Cauchy { double loc, scale; };
/// Shape k, scale theta, location shift.
struct Gamma { double k, theta, loc; };
/// N(mu, sigma) restricted to x >= mu.
struct HalfNormalRight { double mu, sigma; };
/// N(mu, sigma) restricted to x <= mu.
struct HalfNormalLeft { double mu, sigma; };

using Family = std::variant<Normal, Uniform, Triangular, StudentT, Cauchy, Gamma, HalfNormalRight, HalfNormalLeft>;

struct DistSpec {
    Family family;
    std::size_t n = 0;
};

/// Throws Error when a parameter lies outside its family's domain.
void validate(const DistSpec& spec);

/// Human-readable form, e.g. "N(0,1,500)".
std::string describe(const DistSpec& spec);

double draw(const Family& family, Rng& rng);
std::vector<double> sample_spec(const DistSpec& spec, Rng& rng);
std::vector<double> sample_spec(const DistSpec& spec, std::uint64_t seed);

struct LabeledSample {
    std::vector<double> values;
    /// Index of the generating spec for every value.
    std::vector<int> labels;
};

/// Concatenates the samples of every spec, drawn in order from one stream.
LabeledSample sample_mixture(const std::vector<DistSpec>& specs, Rng& rng);
LabeledSample sample_mixture(const std::vector<DistSpec>& specs, std::uint64_t seed);

/// Built-in composite distributions "D1".."D22". Sizes of D1-D12 are
/// multiples of m; D13-D22 sizes are absolute.
std::vector<DistSpec> builtin(const std::string& name, std::size_t m = 100);
std::vector<std::string> builtin_names();

}  // namespace unisplit
