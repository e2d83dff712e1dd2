#ifndef SPRAYLAB_AFFINE_HPP
#define SPRAYLAB_AFFINE_HPP

#include "spraylab/linalg.hpp"

#include <optional>
#include <vector>

namespace spraylab {

/// Hyperplane {x : normal·x = offset} of ℝ^d, normal ≠ 0.
struct Hyperplane {
    QVec normal;
    Rational offset;

    Hyperplane() = default;
    Hyperplane(QVec n, Rational off);

    std::size_t ambient_dim() const { return normal.dim(); }
    bool contains(const QVec& x) const { return dot(normal, x) == offset; }

    static Hyperplane through(const QVec& n, const QVec& point) { return Hyperplane(n, dot(n, point)); }
};

/// Flat of ℝ^d: base point plus linearly independent direction vectors.
class AffineSubspace {
public:
    AffineSubspace() = default;
    /// Throws InputError if the directions are linearly dependent.
    AffineSubspace(QVec base, std::vector<QVec> directions);

    const QVec& base() const { return base_; }
    const std::vector<QVec>& directions() const { return dirs_; }
    std::size_t dim() const { return dirs_.size(); }
    std::size_t ambient_dim() const { return base_.dim(); }

    bool contains(const QVec& x) const;

    /// Does v lie in the direction span?
    bool spans_direction(const QVec& v) const;

    /// Full-space flat of ℝ^d.
    static AffineSubspace whole_space(std::size_t d);
    /// The hyperplane as a flat (base point + d-1 directions).
    static AffineSubspace from_hyperplane(const Hyperplane& h);

private:
    QVec base_;
    std::vector<QVec> dirs_;
};

/// Affine span of a nonempty point list: p₁ + Span{q − p₁}.
AffineSubspace affine_span(const std::vector<QVec>& ps);

/// Orthogonal projection of x onto a flat; x − π(x) is orthogonal to every
/// direction of the target.
QVec orthogonal_project(const QVec& x, const AffineSubspace& target);
QVec orthogonal_project(const QVec& x, const Hyperplane& target);

/// The flat E ∩ {x : normal·x = normal·point}, where point ∈ E and normal is
/// not orthogonal to all of E's directions. Dimension drops by exactly one.
AffineSubspace slice_flat(const AffineSubspace& e, const QVec& normal, const QVec& point);

/// E ∩ h as a flat, or nullopt when they are parallel (disjoint or h ⊇ E).
std::optional<AffineSubspace> intersect_flat_hyperplane(const AffineSubspace& e, const Hyperplane& h);

}  // namespace spraylab

#endif
