#ifndef SPRAYLAB_POSITION_HPP
#define SPRAYLAB_POSITION_HPP

#include "spraylab/affine.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace spraylab {

class ZeroVectorError : public InputError {
public:
    ZeroVectorError() : InputError("zero vector not allowed") {}
};
class DuplicatePointError : public InputError {
public:
    DuplicatePointError() : InputError("duplicate point") {}
};
class PointOutsideAmbientError : public InputError {
public:
    PointOutsideAmbientError() : InputError("point outside ambient subspace") {}
};

/// Visits every k-subset of {0..n-1} in lexicographic order; stop early by
/// returning false from the callback.
void for_each_combination(std::size_t n, std::size_t k,
                          const std::function<bool(const std::vector<std::size_t>&)>& fn);

/// Vectors in general position: every subset of size ≤ d is linearly
/// independent. Throws ZeroVectorError on a zero input vector.
bool is_general_position_vectors(const std::vector<QVec>& vs, std::size_t d);

/// First offending subset (size min(|vs|, d)) when not in general position.
std::optional<std::vector<std::size_t>> general_position_vectors_witness(const std::vector<QVec>& vs, std::size_t d);

/// Points in general position in a flat: every subset of size
/// min(|ps|, dim+1) is affinely independent.
bool is_general_position_points(const std::vector<QVec>& ps, const AffineSubspace& ambient);

std::optional<std::vector<std::size_t>> general_position_points_witness(const std::vector<QVec>& ps,
                                                                        const AffineSubspace& ambient);

/// Affine independence of a point subset.
bool affinely_independent(const std::vector<QVec>& ps);

struct WellPlacedResult {
    bool ok = false;
    /// Present when ok; unique when |ps| ≥ d.
    std::optional<Hyperplane> hyperplane;
    std::optional<std::vector<std::size_t>> violating_subset;
};

/// Points lying in a common hyperplane of ℝ^d and in general position there.
WellPlacedResult is_well_placed(const std::vector<QVec>& ps, std::size_t d);

/// Incremental general-position filter for vector streams: try_add checks
/// only the d-subsets containing the candidate.
class GeneralPositionTracker {
public:
    explicit GeneralPositionTracker(std::size_t d) : d_(d) {}
    bool try_add(const QVec& v);
    const std::vector<QVec>& vectors() const { return vs_; }

private:
    std::size_t d_;
    std::vector<QVec> vs_;
};

}  // namespace spraylab

#endif
