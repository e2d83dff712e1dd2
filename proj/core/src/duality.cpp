#include "spraylab/duality.hpp"

#include <set>

namespace spraylab {

namespace {

void check_base_point(const QVec& p, std::size_t d, const char* what) {
    if (p.dim() + 1 != d) throw InputError(std::string(what) + ": expected base coordinates of dimension d-1");
}

/// Rows of the (d−1)×d system Σ uᵢ(pᵢ − q) = 0.
QMat difference_matrix(const CenterConfig& cfg, const QVec& q) {
    const std::size_t d = cfg.d();
    QMat m(d - 1, d);
    for (std::size_t j = 0; j + 1 < d; ++j)
        for (std::size_t i = 0; i < d; ++i) m.at(j, i) = cfg.basis_centers()[i][j] - q[j];
    return m;
}

}  // namespace

CenterConfig::CenterConfig(std::size_t d, std::vector<QVec> basis_centers, std::vector<QVec> extra_centers)
    : d_(d), basis_(std::move(basis_centers)), extra_(std::move(extra_centers)) {
    if (d_ < 2) throw InputError("dimension must be at least 2");
    if (basis_.size() != d_) throw InputError("expected exactly d basis centers");
    for (const auto& p : basis_) check_base_point(p, d_, "basis center");
    for (const auto& p : extra_) check_base_point(p, d_, "extra center");
    std::set<QVec> seen(basis_.begin(), basis_.end());
    if (seen.size() != basis_.size()) throw DuplicatePointError();
    for (const auto& p : extra_)
        if (!seen.insert(p).second) throw DuplicatePointError();
    // d points in general position inside the (d−1)-dimensional base
    // hyperplane ⇔ affinely independent there.
    if (!is_general_position_points(basis_, AffineSubspace::whole_space(d_ - 1)))
        throw CentersNotWellPlacedError();
}

HPoint::HPoint(QVec b, Rational h) : base(std::move(b)), height_sq(std::move(h)) {
    if (height_sq.sign() <= 0) throw InputError("height squared must be positive");
}

RadiiVector::RadiiVector(QVec v) : r(std::move(v)) {
    for (std::size_t i = 0; i < r.dim(); ++i)
        if (r[i].sign() <= 0) throw InputError("radii-vector coordinates must be positive");
}

std::vector<QVec> u_space(const CenterConfig& cfg, const QVec& q) {
    check_base_point(q, cfg.d(), "query center");
    return null_space(difference_matrix(cfg, q));
}

DualDirection ivan_coefficients(const CenterConfig& cfg, const QVec& q, const QVec& u) {
    check_base_point(q, cfg.d(), "query center");
    if (u.dim() != cfg.d()) throw InputError("direction dimension mismatch");
    if (u.is_zero()) throw NotInUSpaceError();
    if (!difference_matrix(cfg, q).apply(u).is_zero()) throw NotInUSpaceError();
    Rational b(0), c(0);
    for (std::size_t i = 0; i < cfg.d(); ++i) {
        b -= u[i];
        c -= u[i] * (norm_sq(cfg.basis_centers()[i]) - norm_sq(q));
    }
    return DualDirection{u, std::move(b), std::move(c), 0};
}

RadiiVector phi(const CenterConfig& cfg, const HPoint& x) {
    QVec r(cfg.d());
    for (std::size_t i = 0; i < cfg.d(); ++i) r[i] = x.quadrance_to(cfg.basis_centers()[i]);
    return RadiiVector(std::move(r));
}

QVec phi(const CenterConfig& cfg, const ClosedHPoint& x) {
    QVec r(cfg.d());
    for (std::size_t i = 0; i < cfg.d(); ++i) r[i] = x.quadrance_to(cfg.basis_centers()[i]);
    return r;
}

namespace {

/// Shared inverse: recover the base point from the pairwise differences
/// 2(pᵢ − p₁)·base = ‖pᵢ‖² − ‖p₁‖² − (rᵢ − r₁), then the squared height.
ClosedHPoint solve_inverse(const CenterConfig& cfg, const RadiiVector& rv) {
    const std::size_t d = cfg.d();
    if (rv.r.dim() != d) throw InputError("radii-vector dimension mismatch");
    const auto& p = cfg.basis_centers();
    QMat m(d - 1, d - 1);
    QVec rhs(d - 1);
    for (std::size_t i = 1; i < d; ++i) {
        QVec row = Rational(2) * (p[i] - p[0]);
        for (std::size_t j = 0; j + 1 < d; ++j) m.at(i - 1, j) = row[j];
        rhs[i - 1] = norm_sq(p[i]) - norm_sq(p[0]) - (rv.r[i] - rv.r[0]);
    }
    auto sol = solve_linear(m, rhs);  // unique: the d−1 differences are independent
    QVec base = sol->particular;
    Rational h = rv.r[0] - dist_sq(base, p[0]);
    return ClosedHPoint{std::move(base), std::move(h)};
}

}  // namespace

std::optional<HPoint> phi_inverse(const CenterConfig& cfg, const RadiiVector& r) {
    ClosedHPoint c = solve_inverse(cfg, r);
    if (c.height_sq.sign() <= 0) return std::nullopt;
    return HPoint(std::move(c.base), std::move(c.height_sq));
}

std::optional<ClosedHPoint> phi_inverse_closed(const CenterConfig& cfg, const RadiiVector& r) {
    ClosedHPoint c = solve_inverse(cfg, r);
    if (c.height_sq.sign() < 0) return std::nullopt;
    return c;
}

Hyperplane sphere_image_basis(const CenterConfig& cfg, std::size_t i, const Rational& rho) {
    if (i >= cfg.d()) throw InputError("basis-center index out of range");
    if (rho.sign() <= 0) throw InputError("quadrance must be positive");
    return Hyperplane(QVec::unit(cfg.d(), i), rho);
}

Hyperplane sphere_image_extra(const CenterConfig& cfg, const DualDirection& dd, const Rational& k) {
    if (dd.u.dim() != cfg.d()) throw InputError("direction dimension mismatch");
    if (k.sign() <= 0) throw InputError("quadrance must be positive");
    return Hyperplane(dd.u, -(dd.b * k + dd.c));
}

QMat basis_change(const std::vector<QVec>& us) {
    if (us.empty()) throw InputError("empty direction list");
    const std::size_t d = us[0].dim();
    if (us.size() != d) throw InputError("expected d directions");
    QMat m(us);
    if (rank(m) != d) throw DependentVectorsError();
    return m;
}

std::vector<QVec> directions_from_centers(const CenterConfig& cfg) {
    const std::size_t d = cfg.d();
    std::vector<QVec> all = cfg.basis_centers();
    all.insert(all.end(), cfg.extra_centers().begin(), cfg.extra_centers().end());
    if (!is_general_position_points(all, AffineSubspace::whole_space(d - 1)))
        throw CentersNotWellPlacedError();

    std::vector<QVec> dirs;
    for (std::size_t i = 0; i < d; ++i) dirs.push_back(QVec::unit(d, i));
    for (std::size_t j = 0; j < cfg.extra_centers().size(); ++j) {
        QVec u = u_space(cfg, cfg.extra_centers()[j])[0];
        Rational s(0);
        for (std::size_t i = 0; i < d; ++i) s += u[i];
        if (s.sign() != 0) {
            u = (Rational(1) / s) * u;
        } else {
            for (std::size_t i = 0; i < d; ++i)
                if (u[i].sign() != 0) {
                    u = (Rational(1) / u[i]) * u;
                    break;
                }
        }
        dirs.push_back(std::move(u));
    }
    if (!is_general_position_vectors(dirs, d)) throw GeneralPositionCertificateError();
    return dirs;
}

}  // namespace spraylab
