#include "unisplit/synth.hpp"

#include <cmath>
#include <sstream>

#include "unisplit/dataset.hpp"

namespace unisplit {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

bool positive(double v) { return std::isfinite(v) && v > 0.0; }
bool finite(double v) { return std::isfinite(v); }

}  // namespace

void validate(const DistSpec& spec) {
    const bool ok = std::visit(
        overloaded{
            [](const Normal& d) { return finite(d.mu) && positive(d.sigma); },
            [](const Uniform& d) { return finite(d.a) && finite(d.b) && d.a < d.b; },
            [](const Triangular& d) {
                return finite(d.lower) && finite(d.upper) && d.lower <= d.mode && d.mode <= d.upper &&
                       d.lower < d.upper;
            },
            [](const StudentT& d) { return positive(d.nu) && finite(d.loc) && positive(d.scale); },
            [](const Cauchy& d) { return finite(d.loc) && positive(d.scale); },
            [](const Gamma& d) { return positive(d.k) && positive(d.theta) && finite(d.loc); },
            [](const HalfNormalRight& d) { return finite(d.mu) && positive(d.sigma); },
            [](const HalfNormalLeft& d) { return finite(d.mu) && positive(d.sigma); },
        },
        spec.family);
    if (!ok) throw Error("invalid distribution parameters: " + describe(spec));
}

std::string describe(const DistSpec& spec) {
    std::ostringstream os;
    os.precision(6);
    std::visit(overloaded{
                   [&](const Normal& d) { os << "N(" << d.mu << "," << d.sigma; },
                   [&](const Uniform& d) { os << "U(" << d.a << "," << d.b; },
                   [&](const Triangular& d) { os << "Tr(" << d.lower << "," << d.mode << "," << d.upper; },
                   [&](const StudentT& d) { os << "St(" << d.nu << "," << d.loc << "," << d.scale; },
                   [&](const Cauchy& d) { os << "C(" << d.loc << "," << d.scale; },
                   [&](const Gamma& d) { os << "Gamma(" << d.k << "," << d.theta << "," << d.loc; },
                   [&](const HalfNormalRight& d) { os << "N+(" << d.mu << "," << d.sigma; },
                   [&](const HalfNormalLeft& d) { os << "N-(" << d.mu << "," << d.sigma; },
               },
               spec.family);
    os << "," << spec.n << ")";
    return os.str();
}

double draw(const Family& family, Rng& rng) {
    return std::visit(
        overloaded{
            [&](const Normal& d) { return d.mu + d.sigma * rng.normal(); },
            [&](const Uniform& d) { return rng.uniform(d.a, d.b); },
            [&](const Triangular& d) {
                // Inverse cdf.
                const double u = rng.uniform();
                const double w = d.upper - d.lower;
                const double c = (d.mode - d.lower) / w;
                if (u < c) return d.lower + std::sqrt(u * w * (d.mode - d.lower));
                return d.upper - std::sqrt((1.0 - u) * w * (d.upper - d.mode));
            },
            [&](const StudentT& d) { return d.loc + d.scale * rng.student_t(d.nu); },
            [&](const Cauchy& d) { return d.loc + d.scale * rng.cauchy(); },
            [&](const Gamma& d) { return d.loc + d.theta * rng.gamma(d.k); },
            // Half-normals by rejection of the wrong side.
            [&](const HalfNormalRight& d) {
                double z;
                do z = rng.normal();
                while (z < 0.0);
                return d.mu + d.sigma * z;
            },
            [&](const HalfNormalLeft& d) {
                double z;
                do z = rng.normal();
                while (z > 0.0);
                return d.mu + d.sigma * z;
            },
        },
        family);
}

std::vector<double> sample_spec(const DistSpec& spec, Rng& rng) {
    validate(spec);
    std::vector<double> out(spec.n);
    for (double& x : out) x = draw(spec.family, rng);
    return out;
}

std::vector<double> sample_spec(const DistSpec& spec, std::uint64_t seed) {
    Rng rng(seed);
    return sample_spec(spec, rng);
}

LabeledSample sample_mixture(const std::vector<DistSpec>& specs, Rng& rng) {
    LabeledSample out;
    for (std::size_t j = 0; j < specs.size(); ++j) {
        auto xs = sample_spec(specs[j], rng);
        out.values.insert(out.values.end(), xs.begin(), xs.end());
        out.labels.insert(out.labels.end(), xs.size(), static_cast<int>(j));
    }
    return out;
}

LabeledSample sample_mixture(const std::vector<DistSpec>& specs, std::uint64_t seed) {
    Rng rng(seed);
    return sample_mixture(specs, rng);
}

std::vector<DistSpec> builtin(const std::string& name, std::size_t m) {
    if (m == 0) throw Error("m must be positive");
    const double mm = static_cast<double>(m);
    auto n = [mm](double factor) { return static_cast<std::size_t>(std::llround(factor * mm)); };

    if (name == "D1") return {{Normal{0, 1}, n(5)}, {Normal{6, 1}, n(8)}};
    if (name == "D2") return {{Normal{-1, 0.8}, n(20)}, {Normal{4, 1.5}, n(25)}};
    if (name == "D3") return {{StudentT{2, 0, 1}, n(5)}, {Uniform{4, 7}, n(2)}, {Normal{10, 1}, n(4)}};
    if (name == "D4") return {{Triangular{-5, -4, 0}, n(3)}, {Triangular{1, 5, 6}, n(5)}, {Uniform{7, 10}, n(2)}};
    if (name == "D5")
        return {{Gamma{1, 2, 0}, n(5)}, {Triangular{5, 6, 7}, n(5)}, {Normal{10, 0.2}, n(5)}, {StudentT{10, 15, 1}, n(8)}};
    if (name == "D6")
        return {{Cauchy{0, 2}, n(1)}, {Uniform{50, 55}, n(3)}, {Uniform{100, 105}, n(3)}, {StudentT{1, 200, 1}, n(1)}};
    if (name == "D7") return {{Uniform{-1, 1}, n(10)}, {Uniform{2, 7}, n(12)}};
    if (name == "D8")
        return {{StudentT{1, -10, 1}, n(2)},
                {StudentT{2, 0, 1}, n(3)},
                {StudentT{1, 5, 1}, n(3.5)},
                {StudentT{3, 15, 1}, n(2.5)},
                {StudentT{5, 20, 1}, n(4)}};
    if (name == "D9")
        return {{Uniform{-20, -15}, n(10)}, {Uniform{-10, 0}, n(25)}, {Uniform{1, 10}, n(30)},
                {Uniform{12, 14}, n(20)},   {Uniform{20, 50}, n(15)}, {Uniform{55, 60}, n(5)}};
    if (name == "D10")
        return {{Uniform{-15, -7}, n(50)}, {Normal{-2, 4}, n(40)}, {Normal{9, 3}, n(30)}, {Uniform{15, 20}, n(20)}};
    if (name == "D11")
        return {{StudentT{5, -2, 1}, n(2)},     {Normal{5, 0.5}, n(2)},         {Uniform{7, 10}, n(2)},
                {Gamma{2, 3, 12}, n(2)},        {Uniform{25, 30}, n(2)},        {Triangular{40, 45, 50}, n(2)},
                {Triangular{55, 56, 60}, n(2)}};
    if (name == "D12") return {{StudentT{1, -50, 1}, n(1)}, {Cauchy{0, 2}, n(1)}, {Uniform{30, 60}, n(1)}};

    if (name == "D13") return {{Normal{0, 1.7}, 700}, {Normal{5, 1}, 500}};
    if (name == "D14") return {{Uniform{-1, 3}, 300}, {Uniform{8, 10}, 200}};
    if (name == "D15") return {{Triangular{0.8, 1, 5}, 1000}, {Triangular{3, 7.8, 8}, 1000}};
    if (name == "D16") return {{HalfNormalRight{0, 1}, 1000}, {HalfNormalLeft{4, 1}, 1000}};
    if (name == "D17") return {{Triangular{-3.3, 1, 2.5}, 1000}, {Normal{4, 1}, 1000}};
    if (name == "D18") return {{Uniform{-2, 0}, 200}, {Uniform{1, 5}, 300}, {Uniform{6, 7}, 450}};
    if (name == "D19") return {{Normal{0, 1}, 500}, {Normal{6, 1}, 80}, {Normal{12, 1}, 500}, {Normal{18, 1}, 100}};
    if (name == "D20") return {{Normal{0, 1}, 500}, {Normal{4, 1}, 300}, {Normal{11, 1}, 500}, {Uniform{14, 15}, 50}};
    if (name == "D21") return {{Normal{0, 1}, 500}, {Normal{4, 1}, 300}, {Uniform{10, 11}, 100}, {Uniform{14, 15}, 50}};
    if (name == "D22") return {{Normal{0, 1}, 500}, {Uniform{2.5, 4}, 200}, {Uniform{10, 11}, 100}, {Uniform{14, 15}, 50}};
    throw Error("unknown distribution '" + name + "'");
}

std::vector<std::string> builtin_names() {
    std::vector<std::string> names;
    for (int i = 1; i <= 22; ++i) names.push_back("D" + std::to_string(i));
    return names;
}

}  // namespace unisplit
