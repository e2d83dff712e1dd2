#include "spraylab/linalg.hpp"

#include <algorithm>

namespace spraylab {

bool QVec::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x.is_zero(); });
}

QVec& QVec::operator+=(const QVec& o) {
    if (dim() != o.dim()) throw InputError("vector dimension mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

QVec& QVec::operator-=(const QVec& o) {
    if (dim() != o.dim()) throw InputError("vector dimension mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

QVec& QVec::operator*=(const Rational& s) {
    for (auto& x : c_) x *= s;
    return *this;
}

QVec QVec::operator-() const {
    QVec r(dim());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return r;
}

bool operator<(const QVec& a, const QVec& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (a[i] < b[i]) return true;
        if (b[i] < a[i]) return false;
    }
    return false;
}

QVec QVec::unit(std::size_t dim, std::size_t i) {
    QVec r(dim);
    r[i] = Rational(1);
    return r;
}

Rational dot(const QVec& a, const QVec& b) {
    if (a.dim() != b.dim()) throw InputError("vector dimension mismatch");
    Rational s;
    for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

Rational norm_sq(const QVec& a) { return dot(a, a); }

QMat::QMat(std::vector<QVec> rows) : rows_(std::move(rows)) {
    if (!rows_.empty()) {
        cols_ = rows_[0].dim();
        for (const auto& r : rows_)
            if (r.dim() != cols_) throw InputError("ragged matrix");
    }
}

QMat QMat::transpose() const {
    QMat t(cols_, rows());
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

QVec QMat::apply(const QVec& x) const {
    if (x.dim() != cols_) throw InputError("matrix-vector dimension mismatch");
    QVec r(rows());
    for (std::size_t i = 0; i < rows(); ++i) r[i] = dot(rows_[i], x);
    return r;
}

QMat QMat::identity(std::size_t n) {
    QMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

namespace {

// Denominator-cleared integer copy; each row scaled by the lcm of its
// denominators (positive, so rank and pivot structure are unchanged).
std::vector<std::vector<mpz_class>> clear_denominators(const QMat& m, std::vector<mpz_class>* scales = nullptr) {
    std::vector<std::vector<mpz_class>> z(m.rows(), std::vector<mpz_class>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            mpz_class d = m.at(i, j).denominator();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        }
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& q = m.at(i, j);
            z[i][j] = q.numerator() * (l / q.denominator());
        }
        if (scales) scales->push_back(l);
    }
    return z;
}

// Bareiss fraction-free elimination; returns the pivot count and, for square
// input eliminated to the end, leaves the determinant in z[k-1][k-1].
std::size_t bareiss(std::vector<std::vector<mpz_class>>& z) {
    if (z.empty()) return 0;
    const std::size_t n = z.size(), m = z[0].size();
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m && r < n; ++c) {
        std::size_t p = r;
        while (p < n && z[p][c] == 0) ++p;
        if (p == n) continue;
        std::swap(z[p], z[r]);
        for (std::size_t i = r + 1; i < n; ++i) {
            for (std::size_t j = c + 1; j < m; ++j) {
                z[i][j] = (z[r][c] * z[i][j] - z[i][c] * z[r][j]) / prev;
            }
            z[i][c] = 0;
        }
        prev = z[r][c];
        ++r;
    }
    return r;
}

// Reduced row echelon form over ℚ; returns the pivot column per pivot row.
std::vector<std::size_t> rref(std::vector<QVec>& rows) {
    if (rows.empty()) return {};
    const std::size_t n = rows.size(), m = rows[0].dim();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m && r < n; ++c) {
        std::size_t p = r;
        while (p < n && rows[p][c].is_zero()) ++p;
        if (p == n) continue;
        std::swap(rows[p], rows[r]);
        Rational inv = Rational(1) / rows[r][c];
        rows[r] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            Rational f = rows[i][c];
            for (std::size_t j = 0; j < m; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t rank(const QMat& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    auto z = clear_denominators(m);
    return bareiss(z);
}

Rational det(const QMat& m) {
    if (m.rows() != m.cols()) throw InputError("determinant of non-square matrix");
    if (m.rows() == 0) return Rational(1);
    std::vector<mpz_class> scales;
    auto z = clear_denominators(m, &scales);
    // Track row swaps separately: rerun a signed Bareiss inline.
    const std::size_t n = z.size();
    mpz_class prev = 1;
    int sign = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < n; ++c) {
        std::size_t p = r;
        while (p < n && z[p][c] == 0) ++p;
        if (p == n) return Rational(0);
        if (p != r) {
            std::swap(z[p], z[r]);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < n; ++i) {
            for (std::size_t j = c + 1; j < n; ++j)
                z[i][j] = (z[r][c] * z[i][j] - z[i][c] * z[r][j]) / prev;
            z[i][c] = 0;
        }
        prev = z[r][c];
        ++r;
    }
    mpq_class result(sign > 0 ? z[n - 1][n - 1] : mpz_class(-z[n - 1][n - 1]));
    for (const auto& s : scales) result /= s;
    return Rational(mpq_class(result));
}

std::vector<QVec> null_space(const QMat& m) {
    const std::size_t cols = m.cols();
    std::vector<QVec> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    auto pivots = rref(rows);

    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<QVec> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        QVec v(cols);
        v[f] = Rational(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<LinearSolution> solve_linear(const QMat& m, const QVec& b) {
    if (m.rows() != b.dim()) throw InputError("solve_linear: rows(m) != dim(b)");
    const std::size_t cols = m.cols();
    std::vector<QVec> aug;
    aug.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::vector<Rational> row = m.row(i).coords();
        row.push_back(b[i]);
        aug.emplace_back(std::move(row));
    }
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;  // 0 = 1 row

    LinearSolution sol;
    sol.particular = QVec(cols);
    for (std::size_t r = 0; r < pivots.size(); ++r) sol.particular[pivots[r]] = aug[r][cols];

    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        QVec v(cols);
        v[f] = Rational(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -aug[r][f];
        sol.null_basis.push_back(std::move(v));
    }
    return sol;
}

}  // namespace spraylab
