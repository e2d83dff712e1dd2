#ifndef SPRAYLAB_DUALITY_HPP
#define SPRAYLAB_DUALITY_HPP

#include "spraylab/position.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace spraylab {

class NotInUSpaceError : public InputError {
public:
    NotInUSpaceError() : InputError("vector not in the direction space of this center") {}
};
class DependentVectorsError : public InputError {
public:
    DependentVectorsError() : InputError("vectors are linearly dependent") {}
};
class CentersNotWellPlacedError : public InputError {
public:
    CentersNotWellPlacedError() : InputError("centers not in general position on the base hyperplane") {}
};
/// Violation of a guaranteed property of derived directions; a bug, not bad input.
class GeneralPositionCertificateError : public std::logic_error {
public:
    GeneralPositionCertificateError() : std::logic_error("derived directions failed the general-position certificate") {}
};

/// d distinguished centers plus optional extra centers, all on the base
/// hyperplane ℝ^{d−1}×{0} of ℝ^d; stored in base coordinates (dim d−1).
class CenterConfig {
public:
    /// Validates: exactly d basis centers of dim d−1, all centers pairwise
    /// distinct, basis centers in general position on the base hyperplane.
    CenterConfig(std::size_t d, std::vector<QVec> basis_centers, std::vector<QVec> extra_centers = {});

    std::size_t d() const { return d_; }
    const std::vector<QVec>& basis_centers() const { return basis_; }
    const std::vector<QVec>& extra_centers() const { return extra_; }

private:
    std::size_t d_;
    std::vector<QVec> basis_;
    std::vector<QVec> extra_;
};

/// Point of the open upper half-space, height carried as its square so
/// every distance² to a base-hyperplane center stays rational.
struct HPoint {
    QVec base;          // dim d−1
    Rational height_sq; // > 0

    HPoint() = default;
    HPoint(QVec b, Rational h);

    /// ‖x − (center, 0)‖² = ‖base − center‖² + height_sq.
    Rational quadrance_to(const QVec& center) const { return dist_sq(base, center) + height_sq; }
};

/// Same, but the closed half-space: height_sq = 0 marks a boundary point.
struct ClosedHPoint {
    QVec base;
    Rational height_sq; // ≥ 0

    bool boundary() const { return height_sq.sign() == 0; }
    Rational quadrance_to(const QVec& center) const { return dist_sq(base, center) + height_sq; }
};

/// Vector of squared distances to the d basis centers.
struct RadiiVector {
    QVec r;

    RadiiVector() = default;
    explicit RadiiVector(QVec v);
};

/// Direction u annihilating the center differences of one extra center,
/// with the coefficients completing it to an identity in x:
/// Σ uᵢ‖x−pᵢ‖² + b‖x−q‖² + c = 0 for every x on the base hyperplane.
struct DualDirection {
    QVec u;
    Rational b;
    Rational c;
    std::size_t extra_index = 0;
};

/// Canonical basis (reduced echelon) of {u ∈ ℝ^d : Σ uᵢ(pᵢ − q) = 0}.
std::vector<QVec> u_space(const CenterConfig& cfg, const QVec& q);

/// b = −Σuᵢ, c = −Σuᵢ(‖pᵢ‖² − ‖q‖²) for u in the direction space of q.
DualDirection ivan_coefficients(const CenterConfig& cfg, const QVec& q, const QVec& u);

/// x ↦ (‖x − c₁‖², …, ‖x − c_d‖²).
RadiiVector phi(const CenterConfig& cfg, const HPoint& x);
QVec phi(const CenterConfig& cfg, const ClosedHPoint& x);

/// Inverse: solve the linear difference system for the base point, then read
/// the height off the first coordinate. nullopt = no preimage in the open
/// upper half-space (height² ≤ 0).
std::optional<HPoint> phi_inverse(const CenterConfig& cfg, const RadiiVector& r);

/// Closed-half-space variant admitting height_sq = 0 (boundary points).
std::optional<ClosedHPoint> phi_inverse_closed(const CenterConfig& cfg, const RadiiVector& r);

/// Image of the sphere around basis center i with quadrance ρ: {w : wᵢ = ρ}.
Hyperplane sphere_image_basis(const CenterConfig& cfg, std::size_t i, const Rational& rho);

/// Image of the sphere around extra center dd.extra_index with quadrance k:
/// {w : u·w + b·k + c = 0}, i.e. normal u, offset −(b·k + c).
Hyperplane sphere_image_extra(const CenterConfig& cfg, const DualDirection& dd, const Rational& k);

/// Invertible M (rows uᵢ) mapping each hyperplane orthogonal to uᵢ onto one
/// orthogonal to eᵢ.
QMat basis_change(const std::vector<QVec>& us);

/// e₁..e_d plus one normalized direction per extra center; the returned list
/// is certified to be in general position in ℝ^d.
std::vector<QVec> directions_from_centers(const CenterConfig& cfg);

}  // namespace spraylab

#endif
