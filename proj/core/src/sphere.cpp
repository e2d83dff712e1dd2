#include "spraylab/sphere.hpp"

#include <set>

namespace spraylab {

Sphere::Sphere(AffineSubspace amb, QVec c, Rational q)
    : ambient(std::move(amb)), center(std::move(c)), quadrance(std::move(q)) {
    if (center.dim() != ambient.ambient_dim()) throw InputError("sphere center dimension mismatch");
    if (!ambient.contains(center)) throw InputError("sphere center outside its flat");
}

std::string to_string(SphereClass c) {
    switch (c) {
        case SphereClass::Empty: return "Empty";
        case SphereClass::Point: return "Point";
        case SphereClass::PairOfPoints: return "PairOfPoints";
        case SphereClass::Infinite: return "Infinite";
    }
    return "?";
}

SphereClass classify(const Sphere& s) {
    const int sg = s.quadrance.sign();
    if (sg < 0) return SphereClass::Empty;
    if (sg == 0) return SphereClass::Point;
    switch (s.ambient.dim()) {
        case 0: return SphereClass::Empty;
        case 1: return SphereClass::PairOfPoints;
        default: return SphereClass::Infinite;
    }
}

bool flats_equal(const AffineSubspace& a, const AffineSubspace& b) {
    if (a.ambient_dim() != b.ambient_dim() || a.dim() != b.dim()) return false;
    if (!a.contains(b.base())) return false;
    for (const auto& v : b.directions())
        if (!a.spans_direction(v)) return false;
    return true;
}

Sphere intersect_sphere_hyperplane(const Sphere& s, const Hyperplane& h) {
    auto flat = intersect_flat_hyperplane(s.ambient, h);
    if (!flat) throw InputError("hyperplane parallel to the sphere's flat");
    QVec c = orthogonal_project(s.center, *flat);
    Rational q = s.quadrance - dist_sq(s.center, c);
    AffineSubspace amb(c, flat->directions());
    return Sphere(std::move(amb), std::move(c), std::move(q));
}

PairIntersection intersect_pair(const Sphere& s1, const Sphere& s2) {
    if (!flats_equal(s1.ambient, s2.ambient)) throw InputError("spheres live in different flats");
    if (s1.ambient.dim() < 2) throw InputError("pair intersection needs a flat of dimension >= 2");
    if (s1.quadrance.sign() <= 0 || s2.quadrance.sign() <= 0)
        throw InputError("pair intersection needs positive quadrances");
    if (s1.center == s2.center) throw ConcentricError();

    QVec delta = s2.center - s1.center;
    Rational D = norm_sq(delta);
    Rational t = (D + s1.quadrance - s2.quadrance) / (Rational(2) * D);
    QVec c = s1.center + t * delta;
    Rational q = s1.quadrance - sq(t) * D;
    Hyperplane h = Hyperplane::through(delta, c);
    AffineSubspace flat = slice_flat(s1.ambient, delta, c);
    return PairIntersection{std::move(h), Sphere(std::move(flat), std::move(c), std::move(q))};
}

namespace {

/// One step of the left-to-right reduction: intersect the running result
/// (a sphere in some flat F) with a further sphere given in the top flat.
Sphere step(const Sphere& cur, const Sphere& next) {
    switch (classify(cur)) {
        case SphereClass::Empty:
            return cur;
        case SphereClass::Point:
            if (dist_sq(cur.center, next.center) == next.quadrance) return cur;
            return Sphere(cur.ambient, cur.center, Rational(-1));
        default:
            break;
    }
    const AffineSubspace& f = cur.ambient;
    QVec c2 = orthogonal_project(next.center, f);
    // next ∩ F is the sphere in F around π(center) with the height squared
    // removed (the offset is orthogonal to F).
    Rational q2 = next.quadrance - dist_sq(next.center, c2);
    if (q2.sign() < 0) return Sphere(f, cur.center, std::move(q2));
    if (c2 == cur.center) {
        if (q2 == cur.quadrance) return cur;
        return Sphere(f, cur.center, Rational(-1));
    }
    if (q2.sign() == 0) {
        // next ∩ F is the single point c2; keep it iff it lies on cur.
        if (dist_sq(c2, cur.center) == cur.quadrance) return Sphere(f, std::move(c2), Rational(0));
        return Sphere(f, cur.center, Rational(-1));
    }
    QVec delta = c2 - cur.center;
    Rational D = norm_sq(delta);
    Rational t = (D + cur.quadrance - q2) / (Rational(2) * D);
    QVec c = cur.center + t * delta;
    Rational q = cur.quadrance - sq(t) * D;
    AffineSubspace flat = slice_flat(f, delta, c);
    return Sphere(std::move(flat), std::move(c), std::move(q));
}

void check_common_flat(const std::vector<Sphere>& spheres) {
    if (spheres.empty()) throw InputError("empty sphere list");
    for (std::size_t i = 1; i < spheres.size(); ++i)
        if (!flats_equal(spheres[i].ambient, spheres[0].ambient))
            throw InputError("spheres live in different flats");
}

std::vector<QVec> centers_of(const std::vector<Sphere>& spheres) {
    std::vector<QVec> cs;
    cs.reserve(spheres.size());
    for (const auto& s : spheres) cs.push_back(s.center);
    return cs;
}

Sphere fold(const std::vector<Sphere>& spheres) {
    Sphere cur = spheres[0];
    for (std::size_t i = 1; i < spheres.size(); ++i) cur = step(cur, spheres[i]);
    return cur;
}

}  // namespace

Sphere intersect_chain(const std::vector<Sphere>& spheres) {
    check_common_flat(spheres);
    const std::size_t d = spheres[0].ambient.dim();
    if (spheres.size() > d) throw TooManySpheresError();
    auto cs = centers_of(spheres);
    if (spheres.size() >= 2) {
        std::set<QVec> seen(cs.begin(), cs.end());
        if (seen.size() != cs.size()) throw ConcentricError();
        if (!is_general_position_points(cs, spheres[0].ambient)) throw CentersNotGeneralPositionError();
    }
    return fold(spheres);
}

Sphere intersect_family(const std::vector<Sphere>& spheres) {
    check_common_flat(spheres);
    return fold(spheres);
}

Sphere enclose_from_dependent_center(const std::vector<Sphere>& spheres, const QVec& extra_center) {
    check_common_flat(spheres);
    auto cs = centers_of(spheres);
    AffineSubspace span = affine_span(cs);
    if (!span.contains(extra_center)) throw CenterNotInSpanError();
    for (const auto& c : cs)
        if (c == extra_center) throw DuplicatePointError();
    Sphere chain = intersect_chain(spheres);
    Rational big_q = dist_sq(extra_center, chain.center) + chain.quadrance;
    return Sphere(spheres[0].ambient, extra_center, std::move(big_q));
}

namespace {

/// Recursive scheme: fix the last quadrance, pick the one before it as
/// q + dist², collapse the last two spheres to a sphere in a hyperplane of
/// the flat, project the earlier centers there, recurse, and lift each
/// solved quadrance by the squared projection height.
std::vector<Rational> chain_worker(const AffineSubspace& e, const std::vector<QVec>& centers,
                                   const Rational& q_last) {
    const std::size_t k = centers.size();
    if (k == 1) return {};
    Rational q_prev = q_last + dist_sq(centers[k - 2], centers[k - 1]);
    if (k == 2) return {q_prev};
    PairIntersection pair = intersect_pair(Sphere(e, centers[k - 2], q_prev), Sphere(e, centers[k - 1], q_last));
    const Sphere& bar = pair.sphere;
    std::vector<QVec> sub_centers;
    std::vector<Rational> heights_sq;
    sub_centers.reserve(k - 1);
    for (std::size_t i = 0; i + 2 < k; ++i) {
        QVec p = orthogonal_project(centers[i], bar.ambient);
        heights_sq.push_back(dist_sq(centers[i], p));
        sub_centers.push_back(std::move(p));
    }
    sub_centers.push_back(bar.center);
    std::vector<Rational> solved = chain_worker(bar.ambient, sub_centers, bar.quadrance);
    std::vector<Rational> out;
    out.reserve(k - 1);
    for (std::size_t i = 0; i + 2 < k; ++i) out.push_back(solved[i] + heights_sq[i]);
    out.push_back(std::move(q_prev));
    return out;
}

}  // namespace

std::vector<Rational> make_nondegenerate_chain(const std::vector<QVec>& centers, const Rational& seed_quadrance) {
    if (centers.empty()) throw InputError("empty center list");
    const std::size_t d = centers[0].dim();
    if (centers.size() >= d) throw TooManySpheresError();
    if (seed_quadrance.sign() <= 0) throw InputError("seed quadrance must be positive");
    AffineSubspace whole = AffineSubspace::whole_space(d);
    if (centers.size() >= 2 && !is_general_position_points(centers, whole))
        throw CentersNotGeneralPositionError();
    return chain_worker(whole, centers, seed_quadrance);
}

std::vector<Sphere> infinite_intersection_witness(const std::vector<QVec>& centers) {
    if (centers.empty()) throw InputError("empty center list");
    const std::size_t d = centers[0].dim();
    if (d < 2) throw InputError("ambient dimension must be at least 2");
    if (centers.size() != d + 1) throw InputError("expected d+1 centers");
    {
        std::set<QVec> seen(centers.begin(), centers.end());
        if (seen.size() != centers.size()) throw DuplicatePointError();
    }
    if (affinely_independent(centers)) throw PointsInGeneralPositionError();
    AffineSubspace span = affine_span(centers);
    const std::size_t k = span.dim();
    if (k == d - 1) throw UnsatisfiableCodimOneError();

    // Greedy affinely independent subset of size k+1 anchors the chain.
    std::vector<std::size_t> chain_idx{0};
    std::vector<QVec> chain_centers{centers[0]};
    for (std::size_t i = 1; i < centers.size() && chain_centers.size() < k + 1; ++i) {
        std::vector<QVec> probe = chain_centers;
        probe.push_back(centers[i]);
        if (affinely_independent(probe)) {
            chain_idx.push_back(i);
            chain_centers = std::move(probe);
        }
    }

    AffineSubspace whole = AffineSubspace::whole_space(d);
    std::vector<Rational> quads = make_nondegenerate_chain(chain_centers, Rational(1));
    quads.push_back(Rational(1));
    std::vector<Sphere> chain;
    chain.reserve(chain_centers.size());
    for (std::size_t i = 0; i < chain_centers.size(); ++i)
        chain.emplace_back(whole, chain_centers[i], quads[i]);

    std::vector<Sphere> out(centers.size(), Sphere{});
    for (std::size_t i = 0; i < chain_idx.size(); ++i) out[chain_idx[i]] = chain[i];
    std::vector<bool> used(centers.size(), false);
    for (auto i : chain_idx) used[i] = true;
    for (std::size_t i = 0; i < centers.size(); ++i)
        if (!used[i]) out[i] = enclose_from_dependent_center(chain, centers[i]);
    return out;
}

SphereFamily::SphereFamily(QVec c, std::vector<Rational> qs) : center(std::move(c)), quadrances(std::move(qs)) {
    std::set<Rational> seen;
    for (const auto& q : quadrances) {
        if (q.sign() <= 0) throw InputError("family quadrances must be positive");
        if (!seen.insert(q).second) throw InputError("duplicate quadrance in family");
    }
}

MeshResult mesh_of_family(const std::vector<SphereFamily>& families, std::size_t d) {
    if (families.empty()) throw InputError("empty family list");
    if (d < 2) throw InputError("ambient dimension must be at least 2");
    {
        std::set<QVec> seen;
        for (const auto& f : families) {
            if (f.center.dim() != d) throw InputError("family center dimension mismatch");
            if (f.quadrances.empty()) throw InputError("family with no quadrances");
            if (!seen.insert(f.center).second) throw DuplicatePointError();
        }
    }
    AffineSubspace whole = AffineSubspace::whole_space(d);

    // Every r-tuple over r distinct families, quadrance choices exhaustively.
    auto tuple_infinite = [&](std::size_t r, std::vector<MeshWitnessEntry>& witness) {
        bool found = false;
        for_each_combination(families.size(), r, [&](const std::vector<std::size_t>& fam) {
            std::vector<std::size_t> pick(r, 0);
            while (true) {
                std::vector<Sphere> spheres;
                spheres.reserve(r);
                for (std::size_t i = 0; i < r; ++i)
                    spheres.emplace_back(whole, families[fam[i]].center,
                                         families[fam[i]].quadrances[pick[i]]);
                if (classify(intersect_family(spheres)) == SphereClass::Infinite) {
                    witness.clear();
                    for (std::size_t i = 0; i < r; ++i) witness.push_back({fam[i], pick[i]});
                    found = true;
                    return false;
                }
                // odometer over quadrance indices
                std::size_t i = 0;
                while (i < r && ++pick[i] == families[fam[i]].quadrances.size()) pick[i++] = 0;
                if (i == r) break;
            }
            return true;
        });
        return found;
    };

    MeshResult res;
    // r = 1: a single sphere is always infinite when d >= 2.
    res.witness_below = {MeshWitnessEntry{0, 0}};
    for (std::size_t r = 2; r <= families.size(); ++r) {
        std::vector<MeshWitnessEntry> witness;
        if (!tuple_infinite(r, witness)) {
            res.mesh = r;
            return res;
        }
        res.witness_below = std::move(witness);
    }
    return res;  // no finite mesh within the truncation
}

}  // namespace spraylab
