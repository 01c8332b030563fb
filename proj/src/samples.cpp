#include "iterkit/samples.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace iterkit {

std::string to_string(Scheme scheme) {
    return scheme == Scheme::neville ? "neville" : "aitken";
}

Scheme scheme_from_string(const std::string& name) {
    if (name == "neville") return Scheme::neville;
    if (name == "aitken") return Scheme::aitken;
    throw InputError("unknown scheme '" + name + "' (expected neville or aitken)");
}

SampleSet::SampleSet(std::vector<double> nodes, std::vector<double> values)
    : nodes_(std::move(nodes)), values_(std::move(values)) {
    if (nodes_.size() != values_.size()) {
        throw LengthMismatchError(nodes_.size(), values_.size());
    }
    if (nodes_.empty()) {
        throw InputError("a sample set needs at least one point");
    }
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (!std::isfinite(nodes_[i])) throw NonFiniteError(i, "node");
        if (!std::isfinite(values_[i])) throw NonFiniteError(i, "value");
    }
    const auto [lo, hi] = std::minmax_element(nodes_.begin(), nodes_.end());
    span_ = *hi - *lo;
    const double threshold = collision_radius();
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        for (std::size_t j = i + 1; j < nodes_.size(); ++j) {
            if (std::abs(nodes_[i] - nodes_[j]) <= threshold) {
                throw DuplicateNodeError(i, j);
            }
        }
    }
}

double SampleSet::collision_radius() const {
    return kSeparationEpsilon * std::max(1.0, span_);
}

SampleSet SampleSet::without_node(std::size_t j) const {
    if (j >= size()) {
        throw IndexOutOfRangeError("node index", j, 0, size() - 1);
    }
    if (size() == 1) {
        throw EmptyStencilError("dropping the only node leaves an empty stencil");
    }
    std::vector<double> xs;
    std::vector<double> ys;
    xs.reserve(size() - 1);
    ys.reserve(size() - 1);
    for (std::size_t i = 0; i < size(); ++i) {
        if (i == j) continue;
        xs.push_back(nodes_[i]);
        ys.push_back(values_[i]);
    }
    return SampleSet(std::move(xs), std::move(ys));
}

void check_eval_point(const SampleSet& set, double x, bool need_distinct) {
    if (!std::isfinite(x)) {
        throw InputError("evaluation point must be finite");
    }
    if (!need_distinct) return;
    const double radius = set.collision_radius();
    for (std::size_t j = 0; j < set.size(); ++j) {
        if (std::abs(set.node(j) - x) <= radius) {
            throw EvalPointCollisionError(j, x);
        }
    }
}

} // namespace iterkit
