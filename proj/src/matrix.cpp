#include "sosgap/matrix.hpp"

#include <stdexcept>

namespace sosgap {

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    e_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("Matrix: ragged initializer");
        for (long x : r) e_.emplace_back(x);
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("Matrix: ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<std::vector<Rational>>& cols) {
    return Matrix::from_rows(cols).transpose();
}

std::vector<Rational> Matrix::row(std::size_t i) const {
    std::vector<Rational> r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

std::vector<Rational> Matrix::column(std::size_t j) const {
    std::vector<Rational> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool Matrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool Matrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Matrix: dimension mismatch in product");
    Matrix p(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) p.at(i, j) += aik * o.at(k, j);
        }
    return p;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("Matrix: dimension mismatch in sum");
    Matrix s(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) s.e_[i] = e_[i] + o.e_[i];
    return s;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("Matrix: dimension mismatch in difference");
    Matrix s(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) s.e_[i] = e_[i] - o.e_[i];
    return s;
}

Matrix Matrix::scaled(const Rational& c) const {
    Matrix s(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) s.e_[i] = e_[i] * c;
    return s;
}

std::vector<Rational> Matrix::apply(const std::vector<Rational>& x) const {
    if (x.size() != cols_) throw std::invalid_argument("Matrix: dimension mismatch in apply");
    std::vector<Rational> y(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) y[i] += at(i, j) * x[j];
    return y;
}

Matrix Matrix::leading_minor(std::size_t k) const {
    Matrix m(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m.at(i, j) = at(i, j);
    return m;
}

std::pair<Matrix, std::size_t> rref(const Matrix& m) {
    Matrix a = m;
    std::size_t nr = a.rows(), nc = a.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        // pivot: largest |numerator| among candidates, for entry-size control
        std::size_t piv = nr;
        for (std::size_t i = r; i < nr; ++i) {
            if (a.at(i, c).is_zero()) continue;
            if (piv == nr || Rational::cmp_abs_numerator(a.at(i, c), a.at(piv, c)) > 0) piv = i;
        }
        if (piv == nr) continue;
        if (piv != r)
            for (std::size_t j = 0; j < nc; ++j) std::swap(a.at(r, j), a.at(piv, j));
        Rational inv = Rational(1) / a.at(r, c);
        for (std::size_t j = c; j < nc; ++j) a.at(r, j) *= inv;
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == r || a.at(i, c).is_zero()) continue;
            Rational f = a.at(i, c);
            for (std::size_t j = c; j < nc; ++j) a.at(i, j) -= f * a.at(r, j);
        }
        ++r;
    }
    return {a, r};
}

std::size_t rank(const Matrix& m) { return rref(m).second; }

Matrix kernel_basis(const Matrix& m) {
    auto [r, rk] = rref(m);
    std::size_t nc = m.cols();
    std::vector<std::size_t> pivot_col;
    std::vector<bool> is_pivot(nc, false);
    for (std::size_t i = 0, c = 0; i < rk; ++i) {
        while (c < nc && r.at(i, c).is_zero()) ++c;
        pivot_col.push_back(c);
        is_pivot[c] = true;
    }
    Matrix k(nc, nc - rk);
    std::size_t out = 0;
    for (std::size_t f = 0; f < nc; ++f) {
        if (is_pivot[f]) continue;
        k.at(f, out) = Rational(1);
        for (std::size_t i = 0; i < rk; ++i) k.at(pivot_col[i], out) = -r.at(i, f);
        ++out;
    }
    return k;
}

Rational determinant(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: square matrix required");
    Matrix a = m;
    std::size_t n = a.rows();
    Rational det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = n;
        for (std::size_t i = c; i < n; ++i) {
            if (a.at(i, c).is_zero()) continue;
            if (piv == n || Rational::cmp_abs_numerator(a.at(i, c), a.at(piv, c)) > 0) piv = i;
        }
        if (piv == n) return Rational(0);
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(c, j), a.at(piv, j));
            det = -det;
        }
        det *= a.at(c, c);
        Rational inv = Rational(1) / a.at(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a.at(i, c).is_zero()) continue;
            Rational f = a.at(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) a.at(i, j) -= f * a.at(c, j);
        }
    }
    return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: square matrix required");
    std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Rational(1);
    }
    auto [r, rk] = rref(aug);
    if (rk < n) return std::nullopt;
    // rank n forces the left block of the rref to be the identity
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.at(i, n + j);
    return inv;
}

std::optional<std::vector<Rational>> solve(const Matrix& a, const std::vector<Rational>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve: dimension mismatch");
    std::size_t n = a.cols();
    Matrix aug(a.rows(), n + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n) = b[i];
    }
    auto [r, rk] = rref(aug);
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < rk; ++i) {
        std::size_t c = 0;
        while (c <= n && r.at(i, c).is_zero()) ++c;
        if (c == n) return std::nullopt;  // row (0 ... 0 | 1): inconsistent
        x[c] = r.at(i, n);
    }
    return x;
}

bool is_positive_definite_on_subspace(const Matrix& h, const Matrix& basis) {
    if (!h.is_symmetric())
        throw std::invalid_argument("is_positive_definite_on_subspace: symmetric matrix required");
    if (h.rows() != basis.rows())
        throw std::invalid_argument("is_positive_definite_on_subspace: dimension mismatch");
    Matrix restricted = basis.transpose() * h * basis;
    for (std::size_t k = 1; k <= restricted.rows(); ++k)
        if (determinant(restricted.leading_minor(k)).sign() <= 0) return false;
    return true;
}

std::vector<Rational> operator*(const Rational& c, const std::vector<Rational>& v) {
    std::vector<Rational> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace sosgap
