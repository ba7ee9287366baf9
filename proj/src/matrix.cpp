#include "wfilt/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace wfilt {

Matrix::Matrix(Ring rg, int r, int c) : ring(std::move(rg)), rows(r), cols(c) {
    if (r < 0 || c < 0) throw std::invalid_argument("negative matrix dimension");
    e.assign(static_cast<size_t>(r) * c, Scalar(0));
}

Matrix::Matrix(Ring rg, int r, int c, std::vector<Scalar> entries)
    : ring(std::move(rg)), rows(r), cols(c), e(std::move(entries)) {
    if (r < 0 || c < 0) throw std::invalid_argument("negative matrix dimension");
    if (e.size() != static_cast<size_t>(r) * c)
        throw std::invalid_argument("matrix entries length does not match rows*cols");
    for (auto& x : e) x = canon(ring, x);
}

Matrix Matrix::identity(Ring rg, int n) {
    Matrix m(rg, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(Ring rg, int c, const std::vector<Vec>& rws) {
    Matrix m(rg, static_cast<int>(rws.size()), c);
    for (int i = 0; i < m.rows; ++i) {
        if (static_cast<int>(rws[i].size()) != c)
            throw std::invalid_argument("row length mismatch");
        for (int j = 0; j < c; ++j) m.at(i, j) = canon(rg, rws[i][j]);
    }
    return m;
}

Matrix Matrix::from_cols(Ring rg, int r, const std::vector<Vec>& cls) {
    Matrix m(rg, r, static_cast<int>(cls.size()));
    for (int j = 0; j < m.cols; ++j) {
        if (static_cast<int>(cls[j].size()) != r)
            throw std::invalid_argument("column length mismatch");
        for (int i = 0; i < r; ++i) m.at(i, j) = canon(rg, cls[j][i]);
    }
    return m;
}

Vec Matrix::row(int i) const {
    Vec v(cols);
    for (int j = 0; j < cols; ++j) v[j] = at(i, j);
    return v;
}

Vec Matrix::col(int j) const {
    Vec v(rows);
    for (int i = 0; i < rows; ++i) v[i] = at(i, j);
    return v;
}

void Matrix::set_row(int i, const Vec& v) {
    for (int j = 0; j < cols; ++j) at(i, j) = v[j];
}

Matrix Matrix::transpose() const {
    Matrix t(ring, cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

Matrix Matrix::mul(const Matrix& o) const {
    if (ring != o.ring) throw std::invalid_argument("matrix product: ring mismatch");
    if (cols != o.rows) throw std::invalid_argument("matrix product: dimension mismatch");
    Matrix r(ring, rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const Scalar& a = at(i, k);
            if (wfilt::is_zero(a)) continue;
            for (int j = 0; j < o.cols; ++j) {
                if (wfilt::is_zero(o.at(k, j))) continue;
                r.at(i, j) += a * o.at(k, j);
            }
        }
    if (ring.kind == RingKind::PrimeField)
        for (auto& x : r.e) x = canon(ring, x);
    return r;
}

Matrix Matrix::add(const Matrix& o) const {
    if (ring != o.ring || rows != o.rows || cols != o.cols)
        throw std::invalid_argument("matrix add: shape/ring mismatch");
    Matrix r = *this;
    for (size_t k = 0; k < e.size(); ++k) r.e[k] = s_add(ring, e[k], o.e[k]);
    return r;
}

Matrix Matrix::sub(const Matrix& o) const {
    if (ring != o.ring || rows != o.rows || cols != o.cols)
        throw std::invalid_argument("matrix sub: shape/ring mismatch");
    Matrix r = *this;
    for (size_t k = 0; k < e.size(); ++k) r.e[k] = s_sub(ring, e[k], o.e[k]);
    return r;
}

Matrix Matrix::neg() const {
    Matrix r = *this;
    for (auto& x : r.e) x = s_neg(ring, x);
    return r;
}

Matrix Matrix::scaled(const Scalar& s) const {
    Matrix r = *this;
    for (auto& x : r.e) x = s_mul(ring, x, s);
    return r;
}

Vec Matrix::apply(const Vec& x) const {
    if (static_cast<int>(x.size()) != cols)
        throw std::invalid_argument("matrix apply: dimension mismatch");
    Vec y(rows, Scalar(0));
    for (int i = 0; i < rows; ++i) {
        Scalar acc(0);
        for (int j = 0; j < cols; ++j)
            if (!wfilt::is_zero(at(i, j)) && !wfilt::is_zero(x[j])) acc += at(i, j) * x[j];
        y[i] = canon(ring, acc);
    }
    return y;
}

bool Matrix::is_zero() const {
    return std::all_of(e.begin(), e.end(), [](const Scalar& x) { return wfilt::is_zero(x); });
}

bool Matrix::operator==(const Matrix& o) const {
    return ring == o.ring && rows == o.rows && cols == o.cols && e == o.e;
}

Matrix Matrix::hstack(const Matrix& o) const {
    if (ring != o.ring || rows != o.rows) throw std::invalid_argument("hstack mismatch");
    Matrix r(ring, rows, cols + o.cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) r.at(i, j) = at(i, j);
        for (int j = 0; j < o.cols; ++j) r.at(i, cols + j) = o.at(i, j);
    }
    return r;
}

Matrix Matrix::vstack(const Matrix& o) const {
    if (ring != o.ring || cols != o.cols) throw std::invalid_argument("vstack mismatch");
    Matrix r(ring, rows + o.rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) r.at(i, j) = at(i, j);
    for (int i = 0; i < o.rows; ++i)
        for (int j = 0; j < cols; ++j) r.at(rows + i, j) = o.at(i, j);
    return r;
}

Matrix Matrix::submatrix(int i0, int j0, int r, int c) const {
    if (i0 < 0 || j0 < 0 || i0 + r > rows || j0 + c > cols)
        throw std::invalid_argument("submatrix out of range");
    Matrix m(ring, r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = at(i0 + i, j0 + j);
    return m;
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows; ++i) {
        os << (i ? " [" : "[");
        for (int j = 0; j < cols; ++j) os << (j ? "," : "") << at(i, j).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

Vec vec_add(const Ring& r, const Vec& a, const Vec& b) {
    Vec c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = s_add(r, a[i], b[i]);
    return c;
}

Vec vec_sub(const Ring& r, const Vec& a, const Vec& b) {
    Vec c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = s_sub(r, a[i], b[i]);
    return c;
}

Vec vec_scale(const Ring& r, const Scalar& s, const Vec& a) {
    Vec c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = s_mul(r, s, a[i]);
    return c;
}

bool vec_is_zero(const Vec& a) {
    return std::all_of(a.begin(), a.end(), [](const Scalar& x) { return is_zero(x); });
}

namespace {

// Row echelon reduction over a field: RREF with unit pivots, zeros above and
// below, zero rows dropped.
Matrix rref_rows(Matrix m) {
    const Ring& rg = m.ring;
    int r = 0;
    for (int j = 0; j < m.cols && r < m.rows; ++j) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i)
            if (!is_zero(m.at(i, j))) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int k = 0; k < m.cols; ++k) std::swap(m.at(piv, k), m.at(r, k));
        Scalar inv = s_inv(rg, m.at(r, j));
        for (int k = j; k < m.cols; ++k) m.at(r, k) = s_mul(rg, m.at(r, k), inv);
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || is_zero(m.at(i, j))) continue;
            Scalar f = m.at(i, j);
            for (int k = j; k < m.cols; ++k)
                m.at(i, k) = s_sub(rg, m.at(i, k), s_mul(rg, f, m.at(r, k)));
        }
        ++r;
    }
    return m.submatrix(0, 0, r, m.cols);
}

// Row-style Hermite normal form over Z, canonical (positive pivots, entries
// above a pivot reduced into [0, pivot)), zero rows dropped.
Matrix hnf_rows(Matrix m) {
    int r = 0;
    for (int j = 0; j < m.cols && r < m.rows; ++j) {
        // gcd-reduce column j below row r until at most one nonzero remains
        while (true) {
            int best = -1;
            for (int i = r; i < m.rows; ++i) {
                if (is_zero(m.at(i, j))) continue;
                if (best < 0 || abs(m.at(i, j).get_num()) < abs(m.at(best, j).get_num()))
                    best = i;
            }
            if (best < 0) break;
            if (best != r)
                for (int k = 0; k < m.cols; ++k) std::swap(m.at(best, k), m.at(r, k));
            bool again = false;
            for (int i = r + 1; i < m.rows; ++i) {
                if (is_zero(m.at(i, j))) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), m.at(i, j).get_num().get_mpz_t(),
                           m.at(r, j).get_num().get_mpz_t());
                if (q != 0)
                    for (int k = 0; k < m.cols; ++k) m.at(i, k) -= Scalar(q) * m.at(r, k);
                if (!is_zero(m.at(i, j))) again = true;
            }
            if (!again) break;
        }
        if (is_zero(m.at(r, j))) continue;
        if (sgn(m.at(r, j)) < 0)
            for (int k = 0; k < m.cols; ++k) m.at(r, k) = -m.at(r, k);
        for (int i = 0; i < r; ++i) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), m.at(i, j).get_num().get_mpz_t(),
                       m.at(r, j).get_num().get_mpz_t());
            if (q != 0)
                for (int k = 0; k < m.cols; ++k) m.at(i, k) -= Scalar(q) * m.at(r, k);
        }
        ++r;
    }
    return m.submatrix(0, 0, r, m.cols);
}

}  // namespace

Matrix canonical_rows(const Matrix& m) {
    return m.ring.is_field() ? rref_rows(m) : hnf_rows(m);
}

int rank(const Matrix& m) {
    if (m.ring.is_field()) return canonical_rows(m).rows;
    Matrix q(Ring::rationals(), m.rows, m.cols, m.e);
    return canonical_rows(q).rows;
}

namespace {

struct SnfWork {
    Matrix S, U, V, Uinv, Vinv;

    void row_sub(int i, int j, const Scalar q) {  // R_i -= q R_j
        const Ring& rg = S.ring;
        for (int k = 0; k < S.cols; ++k) S.at(i, k) = s_sub(rg, S.at(i, k), s_mul(rg, q, S.at(j, k)));
        for (int k = 0; k < U.cols; ++k) U.at(i, k) = s_sub(rg, U.at(i, k), s_mul(rg, q, U.at(j, k)));
        // Uinv <- Uinv * E^{-1}: C_j += q C_i
        for (int k = 0; k < Uinv.rows; ++k)
            Uinv.at(k, j) = s_add(rg, Uinv.at(k, j), s_mul(rg, q, Uinv.at(k, i)));
    }
    void col_sub(int j, int i, const Scalar q) {  // C_j -= q C_i
        const Ring& rg = S.ring;
        for (int k = 0; k < S.rows; ++k) S.at(k, j) = s_sub(rg, S.at(k, j), s_mul(rg, q, S.at(k, i)));
        for (int k = 0; k < V.rows; ++k) V.at(k, j) = s_sub(rg, V.at(k, j), s_mul(rg, q, V.at(k, i)));
        // Vinv <- E^{-1} * Vinv: R_i += q R_j
        for (int k = 0; k < Vinv.cols; ++k)
            Vinv.at(i, k) = s_add(rg, Vinv.at(i, k), s_mul(rg, q, Vinv.at(j, k)));
    }
    void row_swap(int i, int j) {
        for (int k = 0; k < S.cols; ++k) std::swap(S.at(i, k), S.at(j, k));
        for (int k = 0; k < U.cols; ++k) std::swap(U.at(i, k), U.at(j, k));
        for (int k = 0; k < Uinv.rows; ++k) std::swap(Uinv.at(k, i), Uinv.at(k, j));
    }
    void col_swap(int i, int j) {
        for (int k = 0; k < S.rows; ++k) std::swap(S.at(k, i), S.at(k, j));
        for (int k = 0; k < V.rows; ++k) std::swap(V.at(k, i), V.at(k, j));
        for (int k = 0; k < Vinv.cols; ++k) std::swap(Vinv.at(i, k), Vinv.at(j, k));
    }
    void row_negate(int i) {
        const Ring& rg = S.ring;
        for (int k = 0; k < S.cols; ++k) S.at(i, k) = s_neg(rg, S.at(i, k));
        for (int k = 0; k < U.cols; ++k) U.at(i, k) = s_neg(rg, U.at(i, k));
        for (int k = 0; k < Uinv.rows; ++k) Uinv.at(k, i) = s_neg(rg, Uinv.at(k, i));
    }
    void row_scale(int i, const Scalar& s) {  // fields only
        const Ring& rg = S.ring;
        Scalar inv = s_inv(rg, s);
        for (int k = 0; k < S.cols; ++k) S.at(i, k) = s_mul(rg, S.at(i, k), s);
        for (int k = 0; k < U.cols; ++k) U.at(i, k) = s_mul(rg, U.at(i, k), s);
        for (int k = 0; k < Uinv.rows; ++k) Uinv.at(k, i) = s_mul(rg, Uinv.at(k, i), inv);
    }
};

}  // namespace

SnfResult smith_normal_form(const Matrix& m) {
    SnfWork w{m, Matrix::identity(m.ring, m.rows), Matrix::identity(m.ring, m.cols),
              Matrix::identity(m.ring, m.rows), Matrix::identity(m.ring, m.cols)};
    const Ring& rg = m.ring;
    const bool field = rg.is_field();
    int t = 0;
    const int tmax = std::min(m.rows, m.cols);
    while (t < tmax) {
        // pick pivot: nonzero entry of smallest absolute numerator in the tail
        int pi = -1, pj = -1;
        for (int i = t; i < m.rows; ++i)
            for (int j = t; j < m.cols; ++j) {
                if (is_zero(w.S.at(i, j))) continue;
                if (pi < 0 || abs(w.S.at(i, j).get_num()) * w.S.at(i, j).get_den() <
                                  abs(w.S.at(pi, pj).get_num()) * w.S.at(pi, pj).get_den()) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;
        if (pi != t) w.row_swap(pi, t);
        if (pj != t) w.col_swap(pj, t);

        if (field) {
            Scalar inv = s_inv(rg, w.S.at(t, t));
            w.row_scale(t, inv);
            for (int i = t + 1; i < m.rows; ++i)
                if (!is_zero(w.S.at(i, t))) w.row_sub(i, t, w.S.at(i, t));
            for (int j = t + 1; j < m.cols; ++j)
                if (!is_zero(w.S.at(t, j))) w.col_sub(j, t, w.S.at(t, j));
            ++t;
            continue;
        }

        // integer case: clear row and column t by gcd reduction
        while (true) {
            bool clean = true;
            for (int i = t + 1; i < m.rows; ++i) {
                if (is_zero(w.S.at(i, t))) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), w.S.at(i, t).get_num().get_mpz_t(),
                           w.S.at(t, t).get_num().get_mpz_t());
                if (q != 0) w.row_sub(i, t, Scalar(q));
                if (!is_zero(w.S.at(i, t))) {
                    w.row_swap(i, t);
                    clean = false;
                }
            }
            for (int j = t + 1; j < m.cols; ++j) {
                if (is_zero(w.S.at(t, j))) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), w.S.at(t, j).get_num().get_mpz_t(),
                           w.S.at(t, t).get_num().get_mpz_t());
                if (q != 0) w.col_sub(j, t, Scalar(q));
                if (!is_zero(w.S.at(t, j))) {
                    w.col_swap(j, t);
                    clean = false;
                }
            }
            if (!clean) continue;
            // pivot divides the rest of the submatrix?
            int bi = -1;
            for (int i = t + 1; i < m.rows && bi < 0; ++i)
                for (int j = t + 1; j < m.cols; ++j) {
                    mpz_class r;
                    mpz_fdiv_r(r.get_mpz_t(), w.S.at(i, j).get_num().get_mpz_t(),
                               w.S.at(t, t).get_num().get_mpz_t());
                    if (r != 0) {
                        bi = i;
                        break;
                    }
                }
            if (bi < 0) break;
            // fold the offending row into row t and keep reducing
            w.row_sub(t, bi, Scalar(-1));
        }
        if (sgn(w.S.at(t, t)) < 0) w.row_negate(t);
        ++t;
    }
    return SnfResult{w.S, w.U, w.V, w.Uinv, w.Vinv};
}

Scalar determinant(const Matrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("determinant of non-square matrix");
    // fraction-free Bareiss over the entries (valid over Z and over fields)
    int n = m.rows;
    if (n == 0) return Scalar(1);
    Matrix a(Ring::rationals(), n, n, m.e);
    Scalar prev(1);
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (is_zero(a.at(k, k))) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (!is_zero(a.at(i, k))) { piv = i; break; }
            if (piv < 0) return Scalar(0);
            for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    Scalar det = a.at(n - 1, n - 1);
    if (sign < 0) det = -det;
    return canon(m.ring, det);
}

}  // namespace wfilt
