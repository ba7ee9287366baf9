#pragma once

#include <vector>

#include "wfilt/ring.hpp"

namespace wfilt {

using Vec = std::vector<Scalar>;  // column vector

// Dense exact matrix over a runtime ring. Entries are kept canonical at all
// times. Matrices act on column vectors: an r x c matrix is a map R^c -> R^r.
struct Matrix {
    Ring ring;
    int rows = 0;
    int cols = 0;
    std::vector<Scalar> e;  // row-major, rows*cols entries

    Matrix() = default;
    Matrix(Ring rg, int r, int c);  // zero matrix
    Matrix(Ring rg, int r, int c, std::vector<Scalar> entries);

    static Matrix identity(Ring rg, int n);
    static Matrix from_rows(Ring rg, int c, const std::vector<Vec>& rws);
    static Matrix from_cols(Ring rg, int r, const std::vector<Vec>& cls);

    Scalar& at(int i, int j) { return e[static_cast<size_t>(i) * cols + j]; }
    const Scalar& at(int i, int j) const { return e[static_cast<size_t>(i) * cols + j]; }

    Vec row(int i) const;
    Vec col(int j) const;
    void set_row(int i, const Vec& v);

    Matrix transpose() const;
    Matrix mul(const Matrix& o) const;
    Matrix add(const Matrix& o) const;
    Matrix sub(const Matrix& o) const;
    Matrix neg() const;
    Matrix scaled(const Scalar& s) const;
    Vec apply(const Vec& x) const;

    bool is_zero() const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    // [this | o] side by side / this on top of o
    Matrix hstack(const Matrix& o) const;
    Matrix vstack(const Matrix& o) const;
    Matrix submatrix(int i0, int j0, int r, int c) const;

    std::string str() const;
};

Vec vec_add(const Ring& r, const Vec& a, const Vec& b);
Vec vec_sub(const Ring& r, const Vec& a, const Vec& b);
Vec vec_scale(const Ring& r, const Scalar& s, const Vec& a);
bool vec_is_zero(const Vec& a);

// Canonical row form: reduced row echelon over fields, row-style Hermite
// normal form over Z (nonnegative pivots, entries above a pivot reduced into
// [0, pivot)). Zero rows are dropped. Canonical: equal row spans give equal
// matrices.
Matrix canonical_rows(const Matrix& m);

// Rank of the matrix (row rank over the fraction field for Z).
int rank(const Matrix& m);

struct SnfResult {
    Matrix S;     // diagonal, divisibility chain over Z
    Matrix U;     // rows x rows, invertible
    Matrix V;     // cols x cols, invertible
    Matrix Uinv;
    Matrix Vinv;
};

// Smith normal form U*M*V = S. Defined over Z and over fields (where S has
// unit pivots). Transforms and their inverses are tracked exactly.
SnfResult smith_normal_form(const Matrix& m);

// Determinant of a square matrix (fraction-free over Z).
Scalar determinant(const Matrix& m);

}  // namespace wfilt
