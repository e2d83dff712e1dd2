#include "spraylab/position.hpp"

#include <algorithm>
#include <set>

namespace spraylab {

void for_each_combination(std::size_t n, std::size_t k,
                          const std::function<bool(const std::vector<std::size_t>&)>& fn) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        if (!fn(idx)) return;
        // advance
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (idx[i] != i + n - k) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return;
        }
        if (k == 0) return;
    }
}

std::optional<std::vector<std::size_t>> general_position_vectors_witness(const std::vector<QVec>& vs, std::size_t d) {
    for (const auto& v : vs) {
        if (v.dim() != d) throw InputError("vector dimension mismatch");
        if (v.is_zero()) throw ZeroVectorError();
    }
    const std::size_t k = std::min(vs.size(), d);
    std::optional<std::vector<std::size_t>> bad;
    for_each_combination(vs.size(), k, [&](const std::vector<std::size_t>& idx) {
        std::vector<QVec> sub;
        sub.reserve(k);
        for (auto i : idx) sub.push_back(vs[i]);
        if (rank(QMat(sub)) != k) {
            bad = idx;
            return false;
        }
        return true;
    });
    return bad;
}

bool is_general_position_vectors(const std::vector<QVec>& vs, std::size_t d) {
    return !general_position_vectors_witness(vs, d).has_value();
}

bool affinely_independent(const std::vector<QVec>& ps) {
    if (ps.size() <= 1) return true;
    std::vector<QVec> diffs;
    for (std::size_t i = 1; i < ps.size(); ++i) diffs.push_back(ps[i] - ps[0]);
    return rank(QMat(diffs)) == diffs.size();
}

namespace {

void check_distinct(const std::vector<QVec>& ps) {
    std::set<QVec> seen;
    for (const auto& p : ps)
        if (!seen.insert(p).second) throw DuplicatePointError();
}

std::optional<std::vector<std::size_t>> affine_gp_witness(const std::vector<QVec>& ps, std::size_t subset_size) {
    std::optional<std::vector<std::size_t>> bad;
    for_each_combination(ps.size(), subset_size, [&](const std::vector<std::size_t>& idx) {
        std::vector<QVec> sub;
        sub.reserve(subset_size);
        for (auto i : idx) sub.push_back(ps[i]);
        if (!affinely_independent(sub)) {
            bad = idx;
            return false;
        }
        return true;
    });
    return bad;
}

}  // namespace

std::optional<std::vector<std::size_t>> general_position_points_witness(const std::vector<QVec>& ps,
                                                                        const AffineSubspace& ambient) {
    check_distinct(ps);
    for (const auto& p : ps)
        if (!ambient.contains(p)) throw PointOutsideAmbientError();
    const std::size_t k = std::min(ps.size(), ambient.dim() + 1);
    return affine_gp_witness(ps, k);
}

bool is_general_position_points(const std::vector<QVec>& ps, const AffineSubspace& ambient) {
    return !general_position_points_witness(ps, ambient).has_value();
}

WellPlacedResult is_well_placed(const std::vector<QVec>& ps, std::size_t d) {
    check_distinct(ps);
    for (const auto& p : ps)
        if (p.dim() != d) throw InputError("point dimension mismatch");

    WellPlacedResult res;
    AffineSubspace span = affine_span(ps);
    if (span.dim() > d - 1) {
        // Not contained in any hyperplane; some d-subset must fail affine
        // independence inside one, report the span itself as the obstruction.
        res.ok = false;
        return res;
    }
    // General position inside a hyperplane of ℝ^d (dimension d-1): every
    // subset of size min(n, d) is affinely independent.
    const std::size_t k = std::min(ps.size(), d);
    auto bad = affine_gp_witness(ps, k);
    if (bad) {
        res.ok = false;
        res.violating_subset = bad;
        return res;
    }
    res.ok = true;
    if (span.dim() == d - 1) {
        std::vector<QVec> normals = null_space(QMat(span.directions()));
        res.hyperplane = Hyperplane::through(normals[0], span.base());
    } else {
        // Extend the span's directions to a (d-1)-dimensional flat.
        std::vector<QVec> dirs = span.directions();
        for (std::size_t i = 0; i < d && dirs.size() < d - 1; ++i) {
            std::vector<QVec> probe = dirs;
            probe.push_back(QVec::unit(d, i));
            if (rank(QMat(probe)) == probe.size()) dirs = std::move(probe);
        }
        std::vector<QVec> normals = null_space(QMat(dirs));
        res.hyperplane = Hyperplane::through(normals[0], span.base());
    }
    return res;
}

bool GeneralPositionTracker::try_add(const QVec& v) {
    if (v.dim() != d_) throw InputError("vector dimension mismatch");
    if (v.is_zero()) throw ZeroVectorError();
    if (vs_.size() + 1 <= d_) {
        std::vector<QVec> probe = vs_;
        probe.push_back(v);
        if (rank(QMat(probe)) != probe.size()) return false;
        vs_.push_back(v);
        return true;
    }
    // Only d-subsets containing v can newly fail.
    bool ok = true;
    for_each_combination(vs_.size(), d_ - 1, [&](const std::vector<std::size_t>& idx) {
        std::vector<QVec> sub;
        sub.reserve(d_);
        for (auto i : idx) sub.push_back(vs_[i]);
        sub.push_back(v);
        if (rank(QMat(sub)) != d_) {
            ok = false;
            return false;
        }
        return true;
    });
    if (ok) vs_.push_back(v);
    return ok;
}

}  // namespace spraylab
