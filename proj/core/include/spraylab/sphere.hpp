#ifndef SPRAYLAB_SPHERE_HPP
#define SPRAYLAB_SPHERE_HPP

#include "spraylab/position.hpp"

#include <optional>
#include <string>
#include <vector>

namespace spraylab {

class ConcentricError : public InputError {
public:
    ConcentricError() : InputError("concentric spheres") {}
};
class CentersNotGeneralPositionError : public InputError {
public:
    CentersNotGeneralPositionError() : InputError("centers not in general position") {}
};
class TooManySpheresError : public InputError {
public:
    TooManySpheresError() : InputError("more spheres than the ambient dimension allows") {}
};
class CenterNotInSpanError : public InputError {
public:
    CenterNotInSpanError() : InputError("extra center not in the affine span of the chain centers") {}
};
class PointsInGeneralPositionError : public InputError {
public:
    PointsInGeneralPositionError() : InputError("points are in general position; no infinite witness exists") {}
};
/// Centers spanning a hyperplane (codimension 1): any d affinely independent
/// centers already force the common intersection onto a line, so at most two
/// points survive and no infinite witness can exist.
class UnsatisfiableCodimOneError : public InputError {
public:
    UnsatisfiableCodimOneError() : InputError("centers span a hyperplane; intersection is at most a point pair") {}
};

/// Sphere in a flat, carried by its signed quadrance (squared radius).
/// q < 0 is the empty set, q = 0 the singleton {center}, q > 0 the sphere of
/// radius sqrt(q). No square root is ever materialized.
struct Sphere {
    AffineSubspace ambient;
    QVec center;
    Rational quadrance;

    Sphere() = default;
    Sphere(AffineSubspace amb, QVec c, Rational q);

    /// Does the rational point x lie on the sphere (as a subset of ℝ^D)?
    bool contains(const QVec& x) const { return ambient.contains(x) && dist_sq(x, center) == quadrance; }
};

enum class SphereClass { Empty, Point, PairOfPoints, Infinite };

std::string to_string(SphereClass c);

/// Total classification: sign of the quadrance crossed with the ambient
/// dimension (q > 0 in a 0-dimensional flat is empty).
SphereClass classify(const Sphere& s);

bool flats_equal(const AffineSubspace& a, const AffineSubspace& b);

/// Sphere ∩ hyperplane: the sphere in the sliced flat with center π(c) and
/// quadrance q − dist²(c, E∩h). Throws if h misses or contains the flat.
Sphere intersect_sphere_hyperplane(const Sphere& s, const Hyperplane& h);

struct PairIntersection {
    Hyperplane radical_plane;  // through the new center, orthogonal to c₂−c₁
    Sphere sphere;
};

/// Intersection of two spheres with distinct centers in a common flat of
/// dimension ≥ 2. A quadrance < 0 on the result encodes the empty
/// intersection (spheres too far apart or nested).
PairIntersection intersect_pair(const Sphere& s1, const Sphere& s2);

/// Intersection of spheres with centers in general position, k ≤ d. Result
/// flat has dimension d − (k−1) when nondegenerate; degenerate stages
/// short-circuit to Point / Empty.
Sphere intersect_chain(const std::vector<Sphere>& spheres);

/// Intersection of arbitrary distinct-center spheres in a common flat; no
/// general-position requirement (concentric reductions handled).
Sphere intersect_family(const std::vector<Sphere>& spheres);

/// Sphere centered at a point of the chain centers' affine span that
/// contains the whole chain intersection: Q = dist²(extra, c) + q.
Sphere enclose_from_dependent_center(const std::vector<Sphere>& spheres, const QVec& extra_center);

/// Quadrances q₁..q_{k−1} making the chain over the given centers (k < d,
/// general position) a nondegenerate sphere in a flat of dimension
/// d − (k−1) ≥ 2, for the given last quadrance. Deterministic choice:
/// each backward step takes q = q_next + dist²(c, c_next).
std::vector<Rational> make_nondegenerate_chain(const std::vector<QVec>& centers, const Rational& seed_quadrance);

/// For d+1 distinct points NOT in general position whose span has dimension
/// ≤ d−2: spheres centered at them with infinite common intersection.
/// Codimension-1 spans throw UnsatisfiableCodimOneError.
std::vector<Sphere> infinite_intersection_witness(const std::vector<QVec>& centers);

/// Finite truncation of the family of all spheres around one center.
struct SphereFamily {
    QVec center;
    std::vector<Rational> quadrances;  // distinct, positive

    SphereFamily() = default;
    SphereFamily(QVec c, std::vector<Rational> qs);
};

struct MeshWitnessEntry {
    std::size_t family;
    std::size_t quadrance_index;
};

struct MeshResult {
    std::optional<std::size_t> mesh;  // nullopt = NoFiniteMesh
    /// An (r−1)-tuple (or single sphere when r = 2) with infinite intersection.
    std::vector<MeshWitnessEntry> witness_below;
};

/// Least r ≥ 2 such that every choice of r spheres from r distinct families
/// has finite intersection, checked exhaustively.
MeshResult mesh_of_family(const std::vector<SphereFamily>& families, std::size_t d);

}  // namespace spraylab

#endif
