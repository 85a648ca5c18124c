#pragma once

#include "rankdens/gf.hpp"

#include <optional>
#include <vector>

namespace rankdens {

/// Dense row-major matrix over a table field.
struct Matrix {
    unsigned rows = 0;
    unsigned cols = 0;
    std::vector<Elem> a;

    Matrix() = default;
    Matrix(unsigned r, unsigned c) : rows(r), cols(c), a(std::size_t(r) * c, 0) {}

    static Matrix identity(unsigned n);
    /// Reshape a flat row-major vector into an r x c matrix.
    static Matrix from_flat(unsigned r, unsigned c, std::vector<Elem> v);

    Elem& operator()(unsigned i, unsigned j) { return a[std::size_t(i) * cols + j]; }
    Elem operator()(unsigned i, unsigned j) const { return a[std::size_t(i) * cols + j]; }

    std::vector<Elem> row(unsigned i) const;

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
    friend bool operator<(const Matrix& x, const Matrix& y) {
        if (x.rows != y.rows) return x.rows < y.rows;
        if (x.cols != y.cols) return x.cols < y.cols;
        return x.a < y.a;
    }
};

Matrix mul(const Field& f, const Matrix& x, const Matrix& y);
Matrix add(const Field& f, const Matrix& x, const Matrix& y);
Matrix scale(const Field& f, Elem lambda, const Matrix& x);
Matrix transpose(const Matrix& x);

/// Reduced row echelon form with zero rows dropped; pivot columns optional.
Matrix rref(const Field& f, Matrix m, std::vector<unsigned>* pivots = nullptr);
unsigned rank(const Field& f, Matrix m);
Elem det(const Field& f, Matrix m);
std::optional<Matrix> inverse(const Field& f, const Matrix& m);

/// Rows form a basis of the right kernel {x : m x = 0}.
Matrix nullspace(const Field& f, const Matrix& m);

/// Reduce v against an RREF basis; the result is zero iff v lies in the span.
std::vector<Elem> reduce(const Field& f, const Matrix& rref_basis,
                         const std::vector<unsigned>& pivots, std::vector<Elem> v);

/// Canonical subspace of F_q^N given by an RREF basis.
struct Subspace {
    Matrix basis; // RREF, no zero rows
    std::vector<unsigned> pivots;

    static Subspace span(const Field& f, const Matrix& generators);
    unsigned dim() const { return basis.rows; }
    bool contains(const Field& f, const std::vector<Elem>& v) const;

    friend bool operator==(const Subspace& x, const Subspace& y) { return x.basis == y.basis; }
    friend bool operator<(const Subspace& x, const Subspace& y) { return x.basis < y.basis; }
};

} // namespace rankdens
