#include "rankdens/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace rankdens {

Matrix Matrix::identity(unsigned n) {
    Matrix m(n, n);
    for (unsigned i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_flat(unsigned r, unsigned c, std::vector<Elem> v) {
    if (v.size() != std::size_t(r) * c) throw std::invalid_argument("flat vector has wrong length");
    Matrix m;
    m.rows = r;
    m.cols = c;
    m.a = std::move(v);
    return m;
}

std::vector<Elem> Matrix::row(unsigned i) const {
    return {a.begin() + std::ptrdiff_t(i) * cols, a.begin() + std::ptrdiff_t(i + 1) * cols};
}

Matrix mul(const Field& f, const Matrix& x, const Matrix& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matrix shapes do not match");
    Matrix r(x.rows, y.cols);
    for (unsigned i = 0; i < x.rows; ++i)
        for (unsigned k = 0; k < x.cols; ++k) {
            Elem c = x(i, k);
            if (c == 0) continue;
            for (unsigned j = 0; j < y.cols; ++j) r(i, j) = f.add(r(i, j), f.mul(c, y(k, j)));
        }
    return r;
}

Matrix add(const Field& f, const Matrix& x, const Matrix& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("matrix shapes do not match");
    Matrix r = x;
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = f.add(r.a[i], y.a[i]);
    return r;
}

Matrix scale(const Field& f, Elem lambda, const Matrix& x) {
    Matrix r = x;
    for (auto& e : r.a) e = f.mul(lambda, e);
    return r;
}

Matrix transpose(const Matrix& x) {
    Matrix r(x.cols, x.rows);
    for (unsigned i = 0; i < x.rows; ++i)
        for (unsigned j = 0; j < x.cols; ++j) r(j, i) = x(i, j);
    return r;
}

Matrix rref(const Field& f, Matrix m, std::vector<unsigned>* pivots) {
    if (pivots) pivots->clear();
    unsigned r = 0;
    for (unsigned c = 0; c < m.cols && r < m.rows; ++c) {
        unsigned piv = r;
        while (piv < m.rows && m(piv, c) == 0) ++piv;
        if (piv == m.rows) continue;
        if (piv != r)
            for (unsigned j = 0; j < m.cols; ++j) std::swap(m(piv, j), m(r, j));
        Elem s = f.inv(m(r, c));
        for (unsigned j = c; j < m.cols; ++j) m(r, j) = f.mul(s, m(r, j));
        for (unsigned i = 0; i < m.rows; ++i) {
            if (i == r || m(i, c) == 0) continue;
            Elem t = f.neg(m(i, c));
            for (unsigned j = c; j < m.cols; ++j) m(i, j) = f.add(m(i, j), f.mul(t, m(r, j)));
        }
        if (pivots) pivots->push_back(c);
        ++r;
    }
    m.rows = r;
    m.a.resize(std::size_t(r) * m.cols);
    return m;
}

unsigned rank(const Field& f, Matrix m) { return rref(f, std::move(m)).rows; }

Elem det(const Field& f, Matrix m) {
    if (m.rows != m.cols) throw std::invalid_argument("determinant of a non-square matrix");
    Elem d = 1;
    unsigned n = m.rows;
    for (unsigned c = 0; c < n; ++c) {
        unsigned piv = c;
        while (piv < n && m(piv, c) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            for (unsigned j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
            d = f.neg(d);
        }
        d = f.mul(d, m(c, c));
        Elem s = f.inv(m(c, c));
        for (unsigned i = c + 1; i < n; ++i) {
            if (m(i, c) == 0) continue;
            Elem t = f.neg(f.mul(m(i, c), s));
            for (unsigned j = c; j < n; ++j) m(i, j) = f.add(m(i, j), f.mul(t, m(c, j)));
        }
    }
    return d;
}

std::optional<Matrix> inverse(const Field& f, const Matrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("inverse of a non-square matrix");
    unsigned n = m.rows;
    Matrix aug(n, 2 * n);
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    std::vector<unsigned> piv;
    Matrix r = rref(f, aug, &piv);
    if (r.rows < n || piv[n - 1] != n - 1) return std::nullopt;
    Matrix inv(n, n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
    return inv;
}

Matrix nullspace(const Field& f, const Matrix& m) {
    std::vector<unsigned> piv;
    Matrix r = rref(f, m, &piv);
    std::vector<bool> is_piv(m.cols, false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<unsigned> free_cols;
    for (unsigned c = 0; c < m.cols; ++c)
        if (!is_piv[c]) free_cols.push_back(c);
    Matrix k(static_cast<unsigned>(free_cols.size()), m.cols);
    for (unsigned t = 0; t < free_cols.size(); ++t) {
        unsigned fc = free_cols[t];
        k(t, fc) = 1;
        for (unsigned i = 0; i < piv.size(); ++i) k(t, piv[i]) = f.neg(r(i, fc));
    }
    return k;
}

std::vector<Elem> reduce(const Field& f, const Matrix& b, const std::vector<unsigned>& pivots,
                         std::vector<Elem> v) {
    for (unsigned i = 0; i < b.rows; ++i) {
        Elem c = v[pivots[i]];
        if (c == 0) continue;
        Elem t = f.neg(c);
        for (unsigned j = 0; j < b.cols; ++j) v[j] = f.add(v[j], f.mul(t, b(i, j)));
    }
    return v;
}

Subspace Subspace::span(const Field& f, const Matrix& generators) {
    Subspace s;
    s.basis = rref(f, generators, &s.pivots);
    return s;
}

bool Subspace::contains(const Field& f, const std::vector<Elem>& v) const {
    auto r = reduce(f, basis, pivots, v);
    for (auto e : r)
        if (e) return false;
    return true;
}

} // namespace rankdens
