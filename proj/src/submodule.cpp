#include "wfilt/submodule.hpp"

namespace wfilt {

Submodule::Submodule(Ring rg, int ambient, const Matrix& generators)
    : ring(std::move(rg)), ambient_rank(ambient) {
    if (generators.cols != ambient)
        throw std::invalid_argument("submodule generators have wrong ambient rank");
    if (generators.ring != ring) throw std::invalid_argument("submodule generator ring mismatch");
    gens = canonical_rows(generators);
}

Submodule Submodule::zero(Ring rg, int ambient) {
    return Submodule(rg, ambient, Matrix(rg, 0, ambient));
}

Submodule Submodule::full(Ring rg, int ambient) {
    return Submodule(rg, ambient, Matrix::identity(rg, ambient));
}

bool Submodule::is_full() const { return gens == Matrix::identity(ring, ambient_rank); }

std::optional<Vec> Submodule::coords(const Vec& x) const {
    if (static_cast<int>(x.size()) != ambient_rank)
        throw std::invalid_argument("membership: dimension mismatch");
    Vec rem = x;
    Vec c(gens.rows, Scalar(0));
    for (int i = 0; i < gens.rows; ++i) {
        int pc = -1;
        for (int j = 0; j < gens.cols; ++j)
            if (!wfilt::is_zero(gens.at(i, j))) { pc = j; break; }
        if (pc < 0) continue;
        if (wfilt::is_zero(rem[pc])) continue;
        if (ring.is_field()) {
            c[i] = s_div(ring, rem[pc], gens.at(i, pc));
        } else {
            mpz_class q, r;
            mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem[pc].get_num().get_mpz_t(),
                        gens.at(i, pc).get_num().get_mpz_t());
            if (r != 0) return std::nullopt;
            c[i] = Scalar(q);
        }
        for (int j = 0; j < gens.cols; ++j)
            rem[j] = s_sub(ring, rem[j], s_mul(ring, c[i], gens.at(i, j)));
    }
    if (!vec_is_zero(rem)) return std::nullopt;
    return c;
}

Vec Submodule::from_coords(const Vec& c) const {
    if (static_cast<int>(c.size()) != gens.rows)
        throw std::invalid_argument("from_coords: dimension mismatch");
    Vec x(ambient_rank, Scalar(0));
    for (int i = 0; i < gens.rows; ++i)
        for (int j = 0; j < ambient_rank; ++j)
            x[j] = s_add(ring, x[j], s_mul(ring, c[i], gens.at(i, j)));
    return x;
}

bool Submodule::contains(const Vec& x) const { return coords(x).has_value(); }

bool Submodule::contains(const Submodule& other) const {
    if (ring != other.ring || ambient_rank != other.ambient_rank)
        throw std::invalid_argument("containment: ambient mismatch");
    for (int i = 0; i < other.gens.rows; ++i)
        if (!contains(other.gens.row(i))) return false;
    return true;
}

Submodule kernel(const Matrix& m) {
    // Rows of [m^T | I] span {(M x, x)}; rows whose left part vanishes after
    // echelon reduction on the left block span the kernel.
    Matrix aug = m.transpose().hstack(Matrix::identity(m.ring, m.cols));
    const Ring& rg = m.ring;
    int r = 0;
    for (int j = 0; j < m.rows && r < aug.rows; ++j) {
        if (rg.is_field()) {
            int piv = -1;
            for (int i = r; i < aug.rows; ++i)
                if (!wfilt::is_zero(aug.at(i, j))) { piv = i; break; }
            if (piv < 0) continue;
            if (piv != r)
                for (int k = 0; k < aug.cols; ++k) std::swap(aug.at(piv, k), aug.at(r, k));
            for (int i = r + 1; i < aug.rows; ++i) {
                if (wfilt::is_zero(aug.at(i, j))) continue;
                Scalar f = s_div(rg, aug.at(i, j), aug.at(r, j));
                for (int k = 0; k < aug.cols; ++k)
                    aug.at(i, k) = s_sub(rg, aug.at(i, k), s_mul(rg, f, aug.at(r, k)));
            }
        } else {
            while (true) {
                int best = -1;
                for (int i = r; i < aug.rows; ++i) {
                    if (wfilt::is_zero(aug.at(i, j))) continue;
                    if (best < 0 || abs(aug.at(i, j).get_num()) < abs(aug.at(best, j).get_num()))
                        best = i;
                }
                if (best < 0) break;
                if (best != r)
                    for (int k = 0; k < aug.cols; ++k) std::swap(aug.at(best, k), aug.at(r, k));
                bool again = false;
                for (int i = r + 1; i < aug.rows; ++i) {
                    if (wfilt::is_zero(aug.at(i, j))) continue;
                    mpz_class q;
                    mpz_fdiv_q(q.get_mpz_t(), aug.at(i, j).get_num().get_mpz_t(),
                               aug.at(r, j).get_num().get_mpz_t());
                    if (q != 0)
                        for (int k = 0; k < aug.cols; ++k) aug.at(i, k) -= Scalar(q) * aug.at(r, k);
                    if (!wfilt::is_zero(aug.at(i, j))) again = true;
                }
                if (!again) break;
            }
            if (wfilt::is_zero(aug.at(r, j))) continue;
        }
        if (!wfilt::is_zero(aug.at(r, j))) ++r;
    }
    Matrix ker(m.ring, aug.rows - r, m.cols);
    for (int i = r; i < aug.rows; ++i)
        for (int j = 0; j < m.cols; ++j) ker.at(i - r, j) = aug.at(i, m.rows + j);
    return Submodule(m.ring, m.cols, ker);
}

Submodule image(const Matrix& m) { return Submodule(m.ring, m.rows, m.transpose()); }

Submodule preimage(const Matrix& m, const Submodule& s) {
    if (m.ring != s.ring) throw std::invalid_argument("preimage: ring mismatch");
    if (m.rows != s.ambient_rank) throw std::invalid_argument("preimage: dimension mismatch");
    // (x, c) with M x - G^T c = 0; project to x.
    Matrix stacked = m.hstack(s.gens.transpose().neg());
    Submodule k = kernel(stacked);
    Matrix proj(m.ring, k.gens.rows, m.cols);
    for (int i = 0; i < k.gens.rows; ++i)
        for (int j = 0; j < m.cols; ++j) proj.at(i, j) = k.gens.at(i, j);
    return Submodule(m.ring, m.cols, proj);
}

Submodule sum(const Submodule& a, const Submodule& b) {
    if (a.ring != b.ring || a.ambient_rank != b.ambient_rank)
        throw std::invalid_argument("sum: ambient mismatch");
    return Submodule(a.ring, a.ambient_rank, a.gens.vstack(b.gens));
}

Submodule intersect(const Submodule& a, const Submodule& b) {
    if (a.ring != b.ring || a.ambient_rank != b.ambient_rank)
        throw std::invalid_argument("intersect: ambient mismatch");
    // (c1, c2) with G1^T c1 - G2^T c2 = 0; x = G1^T c1 spans the intersection.
    Matrix stacked = a.gens.transpose().hstack(b.gens.transpose().neg());
    Submodule k = kernel(stacked);
    std::vector<Vec> xs;
    for (int i = 0; i < k.gens.rows; ++i) {
        Vec c1(a.gens.rows);
        for (int j = 0; j < a.gens.rows; ++j) c1[j] = k.gens.at(i, j);
        xs.push_back(a.from_coords(c1));
    }
    return Submodule(a.ring, a.ambient_rank, Matrix::from_rows(a.ring, a.ambient_rank, xs));
}

Submodule apply(const Matrix& m, const Submodule& s) {
    if (m.cols != s.ambient_rank) throw std::invalid_argument("apply: dimension mismatch");
    std::vector<Vec> rows;
    for (int i = 0; i < s.gens.rows; ++i) rows.push_back(m.apply(s.gens.row(i)));
    return Submodule(m.ring, m.rows, Matrix::from_rows(m.ring, m.rows, rows));
}

}  // namespace wfilt
