#ifndef SPRAYLAB_COVERING_HPP
#define SPRAYLAB_COVERING_HPP

#include "spraylab/duality.hpp"

#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace spraylab {

class NotInEError : public InputError {
public:
    NotInEError() : InputError("point has no preimage in the closed upper half-space") {}
};
class DisjointnessPreconditionError : public InputError {
public:
    DisjointnessPreconditionError() : InputError("difference sets are not disjoint away from zero") {}
};
class ExhaustedStreamError : public InputError {
public:
    ExhaustedStreamError() : InputError("finite direction stream exhausted") {}
};

/// Enumerated points with a dense 1-based part index per point.
struct PointAssignment {
    std::vector<QVec> points;
    std::vector<std::size_t> part_of;  // 1-based

    std::size_t part_count() const;
    void validate() const;
};

/// Stream of directions in ℝ^d, every finite prefix in general position.
/// Default realization: moment curve (1, t, t², …, t^{d−1}) at t = 1, 2, …
/// (any d of these form a Vandermonde system, hence are independent).
class DirectionStream {
public:
    static DirectionStream moment_curve(std::size_t d);
    /// Finite user-supplied stream; the whole prefix is validated up front.
    static DirectionStream from_list(std::size_t d, std::vector<QVec> us);

    std::size_t d() const { return d_; }
    /// 0-based; lazily extends the moment curve, throws on a spent finite list.
    const QVec& at(std::size_t k);

private:
    DirectionStream(std::size_t d, bool finite) : d_(d), finite_(finite) {}
    std::size_t d_;
    bool finite_;
    std::vector<QVec> cache_;
};

/// Least-index greedy assignment: point m joins the least part k whose
/// direction u_k separates it from every earlier member of part k
/// (u_k·p distinct). Uses at most (m−1)(d−1)+1 parts on m points.
PointAssignment greedy_drizzle_assign(const std::vector<QVec>& points, DirectionStream& dirs);

struct PartReport {
    std::size_t part = 0;             // 1-based
    std::size_t size = 0;
    std::size_t max_multiplicity = 0; // 0 only for an empty part
    /// multiplicity -> number of classes with that multiplicity
    std::map<std::size_t, std::size_t> histogram;
    /// grouping value (hyperplane offset / quadrance) of one largest class
    std::optional<Rational> worst_witness;
};

struct CoverReport {
    std::vector<PartReport> parts;
    std::size_t max_multiplicity = 0;
};

/// Per part i: group the part's points by the exact value dirs[i]·p; a
/// multiplicity-1 report certifies the one-point-per-hyperplane property.
CoverReport verify_hyperplane_cover(const PointAssignment& a, const std::vector<QVec>& dirs);

/// Point of the closed upper or lower half-space of ℝ^d: (base, ±√height_sq).
/// Quadrances to base-hyperplane centers ignore the sign of the height.
struct SprayPoint {
    QVec base;           // dim d−1
    Rational height_sq;  // ≥ 0
    bool lower = false;

    Rational quadrance_to(const QVec& center) const { return dist_sq(base, center) + height_sq; }
    bool operator==(const SprayPoint& o) const;
};

/// Assignment of half-space points with one base-hyperplane center per part.
struct HalfSpaceCover {
    std::vector<SprayPoint> points;
    std::vector<std::size_t> part_of;       // 1-based
    std::vector<QVec> centers;              // per part, base coordinates
};

/// Pull an assignment of radii-vectors back through the inverse transform.
/// Part k keeps the center convention of directions_from_centers: parts
/// 1..d sit over the basis centers, later parts over the extra centers.
/// Even parts stay in the upper half-space, odd parts are reflected below.
/// Throws NotInEError when some point has no preimage.
HalfSpaceCover pullback_drizzle_cover(const CenterConfig& cfg, const PointAssignment& a);

/// Per part: group by exact quadrance to the part's center.
CoverReport verify_spray_cover(const HalfSpaceCover& cover);

/// Spray-style assignment of rational points of ℝ^d with per-part centers.
struct SprayAssignment {
    std::vector<QVec> points;
    std::vector<std::size_t> part_of;  // 1-based
    std::vector<QVec> centers;         // per part, dim d
};

CoverReport verify_spray_cover(const SprayAssignment& a);

/// Orthogonal projection of points and centers into the hyperplane,
/// preserving parts; with glue set, parts whose projected centers coincide
/// are merged (onto the least part index, renumbered densely).
SprayAssignment project_assignment(const SprayAssignment& a, const Hyperplane& h, bool glue);

/// S ⊂ (−ε, ε) of size m with (S−S) ∩ (X−X) = {0}: greedy scan over the
/// ladder ε·j/(J+1), j = 0, 1, −1, 2, −2, …, J = 2m²(|X−X|+1), doubling J
/// if a pass comes up short. The defining property is re-verified before
/// returning.
std::vector<Rational> difference_avoiding_set(const std::vector<Rational>& x, const Rational& epsilon,
                                              std::size_t m);

/// Finite point set with an auditable construction tree: either a base
/// layer V + ∏Xᵢ along a direction v, or an inductive layer Y + Z̄.
class ZSet {
public:
    enum class Kind { Base, Inductive };

    Kind kind() const { return kind_; }
    const std::vector<QVec>& points() const { return points_; }
    const QVec& v() const { return v_; }
    const std::vector<Rational>& s() const { return s_; }
    const std::vector<std::vector<Rational>>& factors() const { return factors_; }  // Base only
    const ZSet& inner() const { return *inner_; }                                   // Inductive only

    friend ZSet z_set_base(const QVec& v, const std::vector<Rational>& s,
                           const std::vector<std::vector<Rational>>& x);
    friend ZSet z_set_inductive(std::shared_ptr<const ZSet> inner, const QVec& v,
                                const std::vector<Rational>& s);

private:
    ZSet() = default;
    Kind kind_ = Kind::Base;
    QVec v_;
    std::vector<Rational> s_;
    std::vector<std::vector<Rational>> factors_;
    std::shared_ptr<const ZSet> inner_;
    std::vector<QVec> points_;
};

/// Z = {s·v + x : s ∈ S, x ∈ ∏Xᵢ} for v = (1, a₂, …, a_{d−1}, 0), a₂ ≠ 0.
/// Requires (S−S) ∩ (a₂⁻¹X₂ − a₂⁻¹X₂) = {0}; then |Z| = |S|·∏|Xᵢ| exactly,
/// asserted after deduplication.
ZSet z_set_base(const QVec& v, const std::vector<Rational>& s, const std::vector<std::vector<Rational>>& x);

/// Z = Y + Z̄ for Y = {s·v : s ∈ S}; requires (Y−Y) ∩ (Z̄−Z̄) = {0}; then
/// |Z| = |S|·|Z̄| exactly.
ZSet z_set_inductive(std::shared_ptr<const ZSet> inner, const QVec& v, const std::vector<Rational>& s);

/// Axis-aligned rational box, the explicit membership domain for searches.
struct Box {
    QVec lo;
    QVec hi;

    Box() = default;
    Box(QVec l, QVec h);
    bool contains(const QVec& x) const;
};

struct EscapeResult {
    bool found = false;          // false = Exhausted
    std::size_t translate_index = 0;
    QVec translate;
    QVec witness;                // uncovered point of translate + Z
};

/// First translate p (in order) with some point of p+Z inside the domain
/// but assigned to no part; the witness is independently re-verified
/// before being returned. Points outside the domain are skipped.
EscapeResult escape_search(const PointAssignment& a, const std::vector<QVec>& dirs, const ZSet& z,
                           const std::vector<QVec>& translates, const Box& domain);

}  // namespace spraylab

#endif
