#include "spraylab/affine.hpp"

namespace spraylab {

Hyperplane::Hyperplane(QVec n, Rational off) : normal(std::move(n)), offset(std::move(off)) {
    if (normal.is_zero()) throw InputError("hyperplane with zero normal");
}

AffineSubspace::AffineSubspace(QVec base, std::vector<QVec> directions)
    : base_(std::move(base)), dirs_(std::move(directions)) {
    for (const auto& d : dirs_)
        if (d.dim() != base_.dim()) throw InputError("direction dimension mismatch");
    if (!dirs_.empty() && rank(QMat(dirs_)) != dirs_.size())
        throw InputError("affine subspace directions are linearly dependent");
}

bool AffineSubspace::spans_direction(const QVec& v) const {
    if (v.is_zero()) return true;
    if (dirs_.empty()) return false;
    std::vector<QVec> rows = dirs_;
    rows.push_back(v);
    return rank(QMat(rows)) == dirs_.size();
}

bool AffineSubspace::contains(const QVec& x) const {
    return spans_direction(x - base_);
}

AffineSubspace AffineSubspace::whole_space(std::size_t d) {
    std::vector<QVec> dirs;
    for (std::size_t i = 0; i < d; ++i) dirs.push_back(QVec::unit(d, i));
    return AffineSubspace(QVec::zero(d), std::move(dirs));
}

AffineSubspace AffineSubspace::from_hyperplane(const Hyperplane& h) {
    const std::size_t d = h.ambient_dim();
    // Base: offset/(n·n) · n lies on the hyperplane.
    QVec base = (h.offset / norm_sq(h.normal)) * h.normal;
    std::vector<QVec> dirs = null_space(QMat({h.normal}));
    (void)d;
    return AffineSubspace(std::move(base), std::move(dirs));
}

AffineSubspace affine_span(const std::vector<QVec>& ps) {
    if (ps.empty()) throw InputError("affine span of empty point list");
    std::vector<QVec> diffs;
    for (std::size_t i = 1; i < ps.size(); ++i) diffs.push_back(ps[i] - ps[0]);
    // Reduce to an independent subset, keeping first-seen order.
    std::vector<QVec> dirs;
    for (const auto& v : diffs) {
        if (v.is_zero()) continue;
        std::vector<QVec> probe = dirs;
        probe.push_back(v);
        if (rank(QMat(probe)) == probe.size()) dirs = std::move(probe);
    }
    return AffineSubspace(ps[0], std::move(dirs));
}

QVec orthogonal_project(const QVec& x, const AffineSubspace& target) {
    if (x.dim() != target.ambient_dim()) throw InputError("projection dimension mismatch");
    if (target.dim() == 0) return target.base();
    // Solve the Gram system G a = W (x - base), π(x) = base + Σ aᵢ wᵢ.
    const auto& w = target.directions();
    const std::size_t k = w.size();
    QMat gram(k, k);
    QVec rhs(k);
    QVec diff = x - target.base();
    for (std::size_t i = 0; i < k; ++i) {
        rhs[i] = dot(w[i], diff);
        for (std::size_t j = 0; j < k; ++j) gram.at(i, j) = dot(w[i], w[j]);
    }
    auto sol = solve_linear(gram, rhs);
    QVec p = target.base();
    for (std::size_t i = 0; i < k; ++i) p += sol->particular[i] * w[i];
    return p;
}

QVec orthogonal_project(const QVec& x, const Hyperplane& target) {
    if (x.dim() != target.ambient_dim()) throw InputError("projection dimension mismatch");
    Rational t = (dot(target.normal, x) - target.offset) / norm_sq(target.normal);
    return x - t * target.normal;
}

AffineSubspace slice_flat(const AffineSubspace& e, const QVec& normal, const QVec& point) {
    // Coefficient vectors a with (Σ aⱼ wⱼ)·normal = 0 give the new directions.
    const auto& w = e.directions();
    QVec constraint(w.size());
    for (std::size_t j = 0; j < w.size(); ++j) constraint[j] = dot(w[j], normal);
    if (constraint.is_zero())
        throw InputError("slice normal orthogonal to the flat; dimension would not drop");
    std::vector<QVec> coeff_basis = null_space(QMat({constraint}));
    std::vector<QVec> dirs;
    for (const auto& a : coeff_basis) {
        QVec v = QVec::zero(e.ambient_dim());
        for (std::size_t j = 0; j < w.size(); ++j) v += a[j] * w[j];
        dirs.push_back(std::move(v));
    }
    return AffineSubspace(point, std::move(dirs));
}

std::optional<AffineSubspace> intersect_flat_hyperplane(const AffineSubspace& e, const Hyperplane& h) {
    // Find a point of E on h: base + Σ aⱼ wⱼ with n·(base + Σ aⱼ wⱼ) = offset.
    const auto& w = e.directions();
    QVec constraint(w.size());
    for (std::size_t j = 0; j < w.size(); ++j) constraint[j] = dot(w[j], h.normal);
    Rational rhs = h.offset - dot(h.normal, e.base());
    if (constraint.is_zero()) return std::nullopt;  // parallel (h ⊇ E when rhs = 0)
    auto sol = solve_linear(QMat({constraint}), QVec({rhs}));
    QVec point = e.base();
    for (std::size_t j = 0; j < w.size(); ++j) point += sol->particular[j] * w[j];
    return slice_flat(e, h.normal, point);
}

}  // namespace spraylab
