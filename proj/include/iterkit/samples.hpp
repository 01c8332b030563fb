#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "iterkit/errors.hpp"

namespace iterkit {

/// Which iterated-interpolation recursion to run.
enum class Scheme { neville, aitken };

std::string to_string(Scheme scheme);
Scheme scheme_from_string(const std::string& name);

/// Relative node-separation threshold used by every distinctness and
/// collision check: two abscissae count as one node when their distance
/// is <= kSeparationEpsilon * max(1, span).
inline constexpr double kSeparationEpsilon = 1e-12;

/// Validated scattered data (x_0, f_0) .. (x_n, f_n).
///
/// Nodes are kept in the order given: the recursions downstream are
/// index-ordered and sorting would change their intermediate entries.
/// Immutable after construction; cheap to copy and safe to share.
class SampleSet {
public:
    /// Validates and takes ownership. Throws LengthMismatchError,
    /// NonFiniteError or DuplicateNodeError on bad data.
    SampleSet(std::vector<double> nodes, std::vector<double> values);

    std::size_t size() const { return nodes_.size(); }
    /// n, the stencil size minus one.
    std::size_t degree() const { return nodes_.size() - 1; }

    const std::vector<double>& nodes() const { return nodes_; }
    const std::vector<double>& values() const { return values_; }
    double node(std::size_t i) const { return nodes_[i]; }
    double value(std::size_t i) const { return values_[i]; }

    /// max node - min node (0 for a single point).
    double span() const { return span_; }
    /// Distance below which a point is considered to hit a node.
    double collision_radius() const;

    /// Copy with node j removed; the remaining set must be non-empty.
    SampleSet without_node(std::size_t j) const;

private:
    std::vector<double> nodes_;
    std::vector<double> values_;
    double span_ = 0.0;
};

inline SampleSet create_sample_set(std::vector<double> xs, std::vector<double> ys) {
    return SampleSet(std::move(xs), std::move(ys));
}

/// Guards the singular base values 1/(x_j - x)^r: when need_distinct is set,
/// throws EvalPointCollisionError(j) if x falls within the collision radius
/// of node j. Interpolation may hit a node, so it passes need_distinct=false.
void check_eval_point(const SampleSet& set, double x, bool need_distinct);

} // namespace iterkit
