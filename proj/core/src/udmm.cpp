#include "unisplit/udmm.hpp"

#include <algorithm>
#include <cmath>
#include "json.hpp"
#include "unisplit/io.hpp"

namespace unisplit {

Udmm::Udmm(std::vector<Umm> components, std::vector<double> weights, std::vector<double> valley_points)
    : components_(std::move(components)), weights_(std::move(weights)), valley_points_(std::move(valley_points)) {
    if (components_.empty()) throw Error("components: need at least one");
    if (weights_.size() != components_.size()) throw Error("weights: expected one per component");
    if (valley_points_.size() + 1 != components_.size()) throw Error("valley_points: expected one fewer than components");
    double sum = 0.0;
    for (double w : weights_) {
        if (!std::isfinite(w) || w <= 0.0) throw Error("weights: must be positive");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-12) throw Error("weights: do not sum to 1");
    for (std::size_t j = 0; j < valley_points_.size(); ++j) {
        if (!std::isfinite(valley_points_[j])) throw Error("valley_points: non-finite value");
        if (j > 0 && !(valley_points_[j - 1] < valley_points_[j])) throw Error("valley_points: not strictly increasing");
        if (components_[j].upper() > components_[j + 1].lower()) throw Error("components: supports overlap");
    }
    cumulative_.resize(weights_.size());
    double run = 0.0;
    for (std::size_t j = 0; j < weights_.size(); ++j) {
        cumulative_[j] = run;
        run += weights_[j];
    }
}

double Udmm::pdf(double x) const {
    double p = 0.0;
    for (std::size_t j = 0; j < components_.size(); ++j) p += weights_[j] * components_[j].pdf(x);
    return p;
}

double Udmm::cdf(double x) const {
    double c = 0.0;
    for (std::size_t j = 0; j < components_.size(); ++j) c += weights_[j] * components_[j].cdf(x);
    return std::min(c, 1.0);
}

double Udmm::log_likelihood(std::span<const double> xs) const {
    double ll = 0.0;
    for (double x : xs) ll += std::log(pdf(x));
    return ll;
}

double Udmm::sample(Rng& rng) const {
    const double u = rng.uniform();
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    const std::size_t j = it == cumulative_.begin() ? 0 : static_cast<std::size_t>(it - cumulative_.begin()) - 1;
    return components_[j].sample(rng);
}

std::vector<double> Udmm::sample(std::size_t count, Rng& rng) const {
    std::vector<double> out(count);
    for (double& x : out) x = sample(rng);
    return out;
}

std::vector<double> Udmm::sample(std::size_t count, std::uint64_t seed) const {
    Rng rng(seed);
    return sample(count, rng);
}

double udmm_pdf(const Udmm& m, double x) { return m.pdf(x); }
double udmm_cdf(const Udmm& m, double x) { return m.cdf(x); }
std::vector<double> udmm_sample(const Udmm& m, std::size_t count, std::uint64_t seed) {
    if (count == 0) throw Error("sample count must be positive");
    return m.sample(count, seed);
}

UdmmFit fit_udmm_detailed(const Dataset& data, double alpha) {
    SplitResult split_result = split(data, alpha);
    const auto& vps = split_result.valley_points;
    std::vector<Umm> components;
    std::vector<double> weights;
    components.reserve(split_result.subsets.size());
    for (std::size_t j = 0; j < split_result.subsets.size(); ++j) {
        const Dataset& subset = split_result.subsets[j];
        UUOutcome outcome = uu_test(subset, alpha);
        if (!outcome.unimodal) throw Error("unstable partition");
        Umm model = std::move(*outcome.model);
        if (subset.size() == 1) {
            // Keep a single-value component inside its valley points.
            const double x = subset.front();
            double half = 0.5 * (model.upper() - model.lower());
            if (j > 0) half = std::min(half, x - vps[j - 1]);
            if (j < vps.size()) half = std::min(half, vps[j] - x);
            model = Umm({x - half, x + half}, {1.0});
        }
        components.push_back(std::move(model));
        weights.push_back(static_cast<double>(subset.total()) / static_cast<double>(data.total()));
    }
    Udmm model(std::move(components), std::move(weights), vps);
    return {std::move(model), std::move(split_result)};
}

Udmm fit_udmm(const Dataset& data, double alpha) { return fit_udmm_detailed(data, alpha).model; }

namespace {

using nlohmann::json;

std::vector<double> number_array(const json& parent, const char* key, const std::string& path) {
    auto it = parent.find(key);
    if (it == parent.end()) throw Error("model file: missing field '" + path + key + "'");
    if (!it->is_array()) throw Error("model file: field '" + path + key + "' must be an array");
    std::vector<double> out;
    out.reserve(it->size());
    for (const auto& v : *it) {
        if (!v.is_number()) throw Error("model file: field '" + path + key + "' must hold numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

}  // namespace

std::string serialize(const Udmm& m) {
    json doc;
    doc["format"] = "udmm";
    doc["version"] = 1;
    doc["weights"] = m.weights();
    doc["valley_points"] = m.valley_points();
    json comps = json::array();
    for (const Umm& c : m.components()) {
        comps.push_back({{"breakpoints", c.breakpoints()}, {"weights", c.weights()}});
    }
    doc["components"] = std::move(comps);
    return doc.dump(2) + "\n";
}

Udmm deserialize(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(std::string("model file: malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw Error("model file: top level must be an object");
    auto weights = number_array(doc, "weights", "");
    auto vps = number_array(doc, "valley_points", "");
    auto comps = doc.find("components");
    if (comps == doc.end()) throw Error("model file: missing field 'components'");
    if (!comps->is_array()) throw Error("model file: field 'components' must be an array");

    std::vector<Umm> components;
    for (std::size_t j = 0; j < comps->size(); ++j) {
        const std::string path = "components[" + std::to_string(j) + "].";
        const json& c = (*comps)[j];
        if (!c.is_object()) throw Error("model file: field 'components[" + std::to_string(j) + "]' must be an object");
        try {
            components.emplace_back(number_array(c, "breakpoints", path), number_array(c, "weights", path));
        } catch (const Error& e) {
            const std::string what = e.what();
            if (what.rfind("model file:", 0) == 0) throw;
            throw Error("model file: " + path + what);
        }
    }
    try {
        return Udmm(std::move(components), std::move(weights), std::move(vps));
    } catch (const Error& e) {
        throw Error(std::string("model file: ") + e.what());
    }
}

void save_model(const Udmm& m, const std::string& path) { write_text_atomic(path, serialize(m)); }

Udmm load_model(const std::string& path) { return deserialize(read_text(path)); }

}  // namespace unisplit
