#include "spraylab/covering.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace spraylab {

std::size_t PointAssignment::part_count() const {
    std::size_t p = 0;
    for (auto k : part_of) p = std::max(p, k);
    return p;
}

void PointAssignment::validate() const {
    if (points.size() != part_of.size()) throw InputError("points/parts size mismatch");
    const std::size_t p = part_count();
    std::vector<bool> seen(p + 1, false);
    for (auto k : part_of) {
        if (k == 0) throw InputError("part indices are 1-based");
        seen[k] = true;
    }
    for (std::size_t k = 1; k <= p; ++k)
        if (!seen[k]) throw InputError("part indices must be dense");
}

DirectionStream DirectionStream::moment_curve(std::size_t d) {
    if (d == 0) throw InputError("dimension must be positive");
    return DirectionStream(d, false);
}

DirectionStream DirectionStream::from_list(std::size_t d, std::vector<QVec> us) {
    if (us.empty()) throw InputError("empty direction list");
    if (!is_general_position_vectors(us, d)) throw InputError("direction list not in general position");
    DirectionStream s(d, true);
    s.cache_ = std::move(us);
    return s;
}

const QVec& DirectionStream::at(std::size_t k) {
    if (finite_) {
        if (k >= cache_.size()) throw ExhaustedStreamError();
        return cache_[k];
    }
    while (cache_.size() <= k) {
        Rational t(static_cast<long>(cache_.size() + 1));
        QVec u(d_);
        Rational pow(1);
        for (std::size_t i = 0; i < d_; ++i) {
            u[i] = pow;
            pow *= t;
        }
        cache_.push_back(std::move(u));
    }
    return cache_[k];
}

PointAssignment greedy_drizzle_assign(const std::vector<QVec>& points, DirectionStream& dirs) {
    {
        std::set<QVec> seen(points.begin(), points.end());
        if (seen.size() != points.size()) throw DuplicatePointError();
    }
    const std::size_t d = dirs.d();
    PointAssignment out;
    out.points = points;
    out.part_of.reserve(points.size());
    std::vector<std::set<Rational>> values;  // per part, the u_k·q already taken
    for (std::size_t m = 0; m < points.size(); ++m) {
        if (points[m].dim() != d) throw InputError("point dimension mismatch");
        std::size_t k = 0;
        while (true) {
            if (k >= values.size()) values.emplace_back();
            Rational val = dot(dirs.at(k), points[m]);
            if (values[k].insert(val).second) break;
            ++k;
        }
        // A fixed nonzero difference is orthogonal to at most d−1 stream
        // directions, so m earlier points block at most m(d−1) indices.
        if (k + 1 > m * (d - 1) + 1) throw std::logic_error("greedy index bound violated");
        out.part_of.push_back(k + 1);
    }
    return out;
}

namespace {

PartReport summarize(std::size_t part, std::size_t size, const std::map<Rational, std::size_t>& groups) {
    PartReport rep;
    rep.part = part;
    rep.size = size;
    for (const auto& [value, count] : groups) {
        ++rep.histogram[count];
        if (count > rep.max_multiplicity) {
            rep.max_multiplicity = count;
            rep.worst_witness = value;
        }
    }
    return rep;
}

template <typename GroupValue>
CoverReport report_by(std::size_t part_count, const std::vector<std::size_t>& part_of, GroupValue&& value_of) {
    CoverReport rep;
    for (std::size_t part = 1; part <= part_count; ++part) {
        std::map<Rational, std::size_t> groups;
        std::size_t size = 0;
        for (std::size_t i = 0; i < part_of.size(); ++i) {
            if (part_of[i] != part) continue;
            ++groups[value_of(i, part)];
            ++size;
        }
        PartReport pr = summarize(part, size, groups);
        rep.max_multiplicity = std::max(rep.max_multiplicity, pr.max_multiplicity);
        rep.parts.push_back(std::move(pr));
    }
    return rep;
}

}  // namespace

CoverReport verify_hyperplane_cover(const PointAssignment& a, const std::vector<QVec>& dirs) {
    a.validate();
    const std::size_t p = a.part_count();
    if (dirs.size() < p) throw InputError("missing direction for some part");
    for (std::size_t k = 0; k < p; ++k)
        if (dirs[k].is_zero()) throw ZeroVectorError();
    return report_by(p, a.part_of, [&](std::size_t i, std::size_t part) {
        return dot(dirs[part - 1], a.points[i]);
    });
}

bool SprayPoint::operator==(const SprayPoint& o) const {
    if (base != o.base || height_sq != o.height_sq) return false;
    // Signs only matter off the boundary.
    return height_sq.sign() == 0 || lower == o.lower;
}

HalfSpaceCover pullback_drizzle_cover(const CenterConfig& cfg, const PointAssignment& a) {
    a.validate();
    const std::size_t p = a.part_count();
    const std::size_t max_parts = cfg.d() + cfg.extra_centers().size();
    if (p > max_parts) throw InputError("more parts than available centers");
    HalfSpaceCover out;
    for (std::size_t k = 1; k <= p; ++k)
        out.centers.push_back(k <= cfg.d() ? cfg.basis_centers()[k - 1]
                                           : cfg.extra_centers()[k - cfg.d() - 1]);
    out.part_of = a.part_of;
    out.points.reserve(a.points.size());
    for (std::size_t i = 0; i < a.points.size(); ++i) {
        auto pre = phi_inverse_closed(cfg, RadiiVector(a.points[i]));
        if (!pre) throw NotInEError();
        SprayPoint sp{std::move(pre->base), std::move(pre->height_sq), a.part_of[i] % 2 == 1};
        out.points.push_back(std::move(sp));
    }
    return out;
}

CoverReport verify_spray_cover(const HalfSpaceCover& cover) {
    if (cover.points.size() != cover.part_of.size()) throw InputError("points/parts size mismatch");
    std::size_t p = 0;
    for (auto k : cover.part_of) p = std::max(p, k);
    if (cover.centers.size() < p) throw InputError("missing center for some part");
    return report_by(p, cover.part_of, [&](std::size_t i, std::size_t part) {
        return cover.points[i].quadrance_to(cover.centers[part - 1]);
    });
}

CoverReport verify_spray_cover(const SprayAssignment& a) {
    if (a.points.size() != a.part_of.size()) throw InputError("points/parts size mismatch");
    std::size_t p = 0;
    for (auto k : a.part_of) p = std::max(p, k);
    if (a.centers.size() < p) throw InputError("missing center for some part");
    return report_by(p, a.part_of, [&](std::size_t i, std::size_t part) {
        return dist_sq(a.points[i], a.centers[part - 1]);
    });
}

SprayAssignment project_assignment(const SprayAssignment& a, const Hyperplane& h, bool glue) {
    SprayAssignment out;
    out.points.reserve(a.points.size());
    for (const auto& p : a.points) out.points.push_back(orthogonal_project(p, h));
    std::vector<QVec> proj_centers;
    proj_centers.reserve(a.centers.size());
    for (const auto& c : a.centers) proj_centers.push_back(orthogonal_project(c, h));
    if (!glue) {
        out.part_of = a.part_of;
        out.centers = std::move(proj_centers);
        return out;
    }
    // Merge parts whose projected centers coincide, keeping first-seen order.
    std::vector<std::size_t> remap(proj_centers.size() + 1, 0);
    std::map<QVec, std::size_t> by_center;
    for (std::size_t k = 0; k < proj_centers.size(); ++k) {
        auto [it, fresh] = by_center.emplace(proj_centers[k], out.centers.size() + 1);
        if (fresh) out.centers.push_back(proj_centers[k]);
        remap[k + 1] = it->second;
    }
    out.part_of.reserve(a.part_of.size());
    for (auto k : a.part_of) out.part_of.push_back(remap[k]);
    return out;
}

std::vector<Rational> difference_avoiding_set(const std::vector<Rational>& x, const Rational& epsilon,
                                              std::size_t m) {
    if (m == 0) throw InputError("requested set size must be at least 1");
    if (epsilon.sign() <= 0) throw InputError("epsilon must be positive");
    std::set<Rational> forbidden;  // (X−X) ∖ {0}
    for (const auto& a : x)
        for (const auto& b : x)
            if (a != b) forbidden.insert(a - b);

    long j_bound = static_cast<long>(2 * m * m * (forbidden.size() + 1 + 1));
    std::vector<Rational> s;
    while (true) {
        s.clear();
        Rational step = epsilon / Rational(j_bound + 1);
        for (long j = 0; std::labs(j) <= j_bound && s.size() < m;) {
            Rational cand = Rational(j) * step;
            bool ok = true;
            for (const auto& prev : s)
                if (cand == prev || forbidden.count(cand - prev)) {
                    ok = false;
                    break;
                }
            if (ok) s.push_back(cand);
            // ladder 0, 1, −1, 2, −2, …
            j = j > 0 ? -j : -j + 1;
        }
        if (s.size() == m) break;
        j_bound *= 2;
    }
    // Independent re-verification of the defining property.
    for (const auto& a : s)
        for (const auto& b : s)
            if (a != b && forbidden.count(a - b)) throw std::logic_error("difference-avoiding set invalid");
    return s;
}

namespace {

std::vector<QVec> dedup_sorted(std::set<QVec>&& pts) {
    return std::vector<QVec>(pts.begin(), pts.end());
}

void check_distinct_scalars(const std::vector<Rational>& xs, const char* what) {
    std::set<Rational> seen(xs.begin(), xs.end());
    if (seen.size() != xs.size()) throw InputError(std::string(what) + " must be distinct");
}

}  // namespace

ZSet z_set_base(const QVec& v, const std::vector<Rational>& s, const std::vector<std::vector<Rational>>& x) {
    const std::size_t d = v.dim();
    if (d < 3) throw InputError("base construction needs dimension at least 3");
    if (v[0] != Rational(1) || v[d - 1].sign() != 0 || v[1].sign() == 0)
        throw InputError("direction must be (1, a2, ..., a_{d-1}, 0) with a2 nonzero");
    if (x.size() != d) throw InputError("expected one factor list per coordinate");
    if (s.empty()) throw InputError("empty shift list");
    check_distinct_scalars(s, "shifts");
    for (const auto& xi : x) {
        if (xi.empty()) throw InputError("empty factor list");
        check_distinct_scalars(xi, "factor entries");
    }
    // (S−S) ∩ (a₂⁻¹X₂ − a₂⁻¹X₂) = {0}
    const Rational& a2 = v[1];
    std::set<Rational> scaled_diffs;
    for (const auto& p : x[1])
        for (const auto& q : x[1])
            if (p != q) scaled_diffs.insert((p - q) / a2);
    for (const auto& p : s)
        for (const auto& q : s)
            if (p != q && scaled_diffs.count(p - q)) throw DisjointnessPreconditionError();

    ZSet z;
    z.kind_ = ZSet::Kind::Base;
    z.v_ = v;
    z.s_ = s;
    z.factors_ = x;
    std::set<QVec> pts;
    std::size_t expected = s.size();
    for (const auto& xi : x) expected *= xi.size();
    std::vector<std::size_t> pick(d, 0);
    while (true) {
        QVec grid(d);
        for (std::size_t i = 0; i < d; ++i) grid[i] = x[i][pick[i]];
        for (const auto& sh : s) pts.insert(sh * v + grid);
        std::size_t i = 0;
        while (i < d && ++pick[i] == x[i].size()) pick[i++] = 0;
        if (i == d) break;
    }
    z.points_ = dedup_sorted(std::move(pts));
    if (z.points_.size() != expected) throw std::logic_error("base layer cardinality law violated");
    return z;
}

ZSet z_set_inductive(std::shared_ptr<const ZSet> inner, const QVec& v, const std::vector<Rational>& s) {
    if (!inner) throw InputError("missing inner set");
    if (v.is_zero()) throw ZeroVectorError();
    if (v.dim() != (inner->points().empty() ? v.dim() : inner->points()[0].dim()))
        throw InputError("direction dimension mismatch");
    if (s.empty()) throw InputError("empty shift list");
    check_distinct_scalars(s, "shifts");
    // (Y−Y) ∩ (Z̄−Z̄) = {0} for Y = {s·v}
    std::set<QVec> inner_diffs;
    for (const auto& p : inner->points())
        for (const auto& q : inner->points())
            if (p != q) inner_diffs.insert(p - q);
    for (const auto& p : s)
        for (const auto& q : s)
            if (p != q && inner_diffs.count((p - q) * v)) throw DisjointnessPreconditionError();

    ZSet z;
    z.kind_ = ZSet::Kind::Inductive;
    z.v_ = v;
    z.s_ = s;
    z.inner_ = std::move(inner);
    std::set<QVec> pts;
    for (const auto& sh : s)
        for (const auto& p : z.inner_->points()) pts.insert(sh * v + p);
    z.points_ = dedup_sorted(std::move(pts));
    if (z.points_.size() != s.size() * z.inner_->points().size())
        throw std::logic_error("inductive layer cardinality law violated");
    return z;
}

Box::Box(QVec l, QVec h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo.dim() != hi.dim()) throw InputError("box corner dimension mismatch");
    for (std::size_t i = 0; i < lo.dim(); ++i)
        if (hi[i] < lo[i]) throw InputError("box corners out of order");
}

bool Box::contains(const QVec& x) const {
    if (x.dim() != lo.dim()) return false;
    for (std::size_t i = 0; i < lo.dim(); ++i)
        if (x[i] < lo[i] || hi[i] < x[i]) return false;
    return true;
}

EscapeResult escape_search(const PointAssignment& a, const std::vector<QVec>& dirs, const ZSet& z,
                           const std::vector<QVec>& translates, const Box& domain) {
    a.validate();
    if (dirs.size() < a.part_count()) throw InputError("missing direction for some part");
    std::set<QVec> covered(a.points.begin(), a.points.end());
    for (std::size_t ti = 0; ti < translates.size(); ++ti) {
        for (const auto& zp : z.points()) {
            QVec x = translates[ti] + zp;
            if (!domain.contains(x) || covered.count(x)) continue;
            // Re-verify by independent scan before reporting.
            if (!domain.contains(x)) throw std::logic_error("witness re-verification failed");
            for (const auto& p : a.points)
                if (p == x) throw std::logic_error("witness re-verification failed");
            EscapeResult res;
            res.found = true;
            res.translate_index = ti;
            res.translate = translates[ti];
            res.witness = std::move(x);
            return res;
        }
    }
    return EscapeResult{};
}

}  // namespace spraylab
