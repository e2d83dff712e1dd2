#ifndef SPRAYLAB_LINALG_HPP
#define SPRAYLAB_LINALG_HPP

#include "spraylab/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

namespace spraylab {

/// Point or vector of ℚ^d.
class QVec {
public:
    QVec() = default;
    explicit QVec(std::size_t dim) : c_(dim) {}
    QVec(std::initializer_list<Rational> xs) : c_(xs) {}
    explicit QVec(std::vector<Rational> xs) : c_(std::move(xs)) {}

    std::size_t dim() const { return c_.size(); }
    const Rational& operator[](std::size_t i) const { return c_[i]; }
    Rational& operator[](std::size_t i) { return c_[i]; }
    const std::vector<Rational>& coords() const { return c_; }

    bool is_zero() const;

    QVec& operator+=(const QVec& o);
    QVec& operator-=(const QVec& o);
    QVec& operator*=(const Rational& s);
    friend QVec operator+(QVec a, const QVec& b) { return a += b; }
    friend QVec operator-(QVec a, const QVec& b) { return a -= b; }
    friend QVec operator*(const Rational& s, QVec v) { return v *= s; }
    QVec operator-() const;

    friend bool operator==(const QVec& a, const QVec& b) { return a.c_ == b.c_; }
    friend bool operator!=(const QVec& a, const QVec& b) { return !(a == b); }
    friend bool operator<(const QVec& a, const QVec& b);

    static QVec zero(std::size_t dim) { return QVec(dim); }
    static QVec unit(std::size_t dim, std::size_t i);

private:
    std::vector<Rational> c_;
};

Rational dot(const QVec& a, const QVec& b);
Rational norm_sq(const QVec& a);
inline Rational dist_sq(const QVec& a, const QVec& b) { return norm_sq(a - b); }

/// Rectangular matrix over ℚ, stored as rows.
class QMat {
public:
    QMat() = default;
    QMat(std::size_t rows, std::size_t cols) : rows_(rows, QVec(cols)), cols_(cols) {}
    explicit QMat(std::vector<QVec> rows);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    const QVec& row(std::size_t i) const { return rows_[i]; }
    const Rational& at(std::size_t i, std::size_t j) const { return rows_[i][j]; }
    Rational& at(std::size_t i, std::size_t j) { return rows_[i][j]; }

    QMat transpose() const;
    QVec apply(const QVec& x) const;  // matrix-vector product

    static QMat identity(std::size_t n);
    static QMat from_rows(std::vector<QVec> rows) { return QMat(std::move(rows)); }

private:
    std::vector<QVec> rows_;
    std::size_t cols_ = 0;
};

/// Exact rank over ℚ via fraction-free (Bareiss) elimination on the
/// denominator-cleared integer matrix.
std::size_t rank(const QMat& m);

/// Canonical basis of the right null space (reduced echelon form, one basis
/// vector per free column with a 1 in that column). Empty iff rank = cols.
std::vector<QVec> null_space(const QMat& m);

/// Outcome of solve_linear.
struct LinearSolution {
    QVec particular;             // one solution
    std::vector<QVec> null_basis;  // empty iff the solution is unique
};

/// Exact solve of m·x = b. nullopt when the system is inconsistent.
std::optional<LinearSolution> solve_linear(const QMat& m, const QVec& b);

/// Determinant of a square matrix (fraction-free).
Rational det(const QMat& m);

}  // namespace spraylab

#endif
