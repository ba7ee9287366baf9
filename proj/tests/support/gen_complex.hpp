#pragma once

#include <map>

#include "support/gen.hpp"
#include "wfilt/complexes.hpp"

namespace wfilt::testgen {

// Random bounded complex built from a diagonal staircase (whose cohomology is
// known by construction) conjugated by random based changes. The staircase
// serves as an independent oracle for cohomology tests.
struct RandomComplexData {
    CochainComplex staircase;
    CochainComplex complex;
    ChainMap iso;  // staircase -> complex
    std::map<int, GenModule> expected_h;
};

inline RandomComplexData random_complex(Rng& rng, const Ring& ring, int n_lo, int n_hi,
                                        int max_rank, int max_coef = 1) {
    int len = n_hi - n_lo + 1;
    std::vector<int> dims(len);
    for (auto& d : dims) d = static_cast<int>(rng() % (max_rank + 1));

    // staircase ranks: d_m maps the last k_m coordinates of degree m onto
    // multiples of the first k_m coordinates of degree m+1. Sources must not
    // collide with incoming images, so k_{m-1} + k_m <= dims[m].
    std::vector<int> k(len, 0);
    std::vector<std::vector<long>> coefs(len);
    for (int i = 0; i + 1 < len; ++i) {
        int kmax = std::min(dims[i] - (i > 0 ? k[i - 1] : 0), dims[i + 1]);
        k[i] = kmax > 0 ? static_cast<int>(rng() % (kmax + 1)) : 0;
        for (int t = 0; t < k[i]; ++t)
            coefs[i].push_back(ring.is_field() ? 1 : 1 + static_cast<long>(rng() % max_coef));
    }
    std::vector<Matrix> ds;
    for (int i = 0; i < len; ++i) {
        int next = (i + 1 < len) ? dims[i + 1] : 0;
        Matrix d(ring, next, dims[i]);
        for (int t = 0; t < k[i]; ++t)
            d.at(t, dims[i] - k[i] + t) = canon(ring, Scalar(coefs[i][t]));
        ds.push_back(d);
    }
    RandomComplexData out;
    out.staircase = make_complex(ring, n_lo, dims, ds);

    // expected cohomology: unused coordinates are free, hit coordinates with
    // coefficient c > 1 contribute Z/c
    for (int i = 0; i < len; ++i) {
        GenModule h{ring, {}};
        int incoming = (i > 0 ? k[i - 1] : 0);
        for (int t = 0; t < incoming; ++t)
            if (!ring.is_field() && coefs[i - 1][t] > 1) h.orders.push_back(coefs[i - 1][t]);
        int free = dims[i] - incoming - k[i];
        for (int t = 0; t < free; ++t) h.orders.emplace_back(0);
        out.expected_h[n_lo + i] = h;
    }

    // conjugate by based changes and record the isomorphism
    std::vector<Matrix> p(len), pinv(len), ds2;
    for (int i = 0; i < len; ++i) std::tie(p[i], pinv[i]) = random_based_change(rng, ring, dims[i]);
    for (int i = 0; i < len; ++i)
        ds2.push_back(i + 1 < len ? p[i + 1].mul(ds[i]).mul(pinv[i]) : Matrix(ring, 0, dims[i]));
    out.complex = make_complex(ring, n_lo, dims, ds2);
    out.iso = make_chain_map(out.staircase, out.complex, n_lo, p);
    return out;
}

// Null-homotopic chain map d_L h + h d_K for random degree -1 maps h.
inline ChainMap random_null_homotopic(Rng& rng, const CochainComplex& K, const CochainComplex& L) {
    int lo = std::min(K.n0, L.n0), hi = std::max(K.n1(), L.n1());
    std::map<int, Matrix> h;  // h[n]: K^n -> L^{n-1}
    for (int n = lo; n <= hi + 1; ++n) h.emplace(n, random_matrix(rng, K.ring, L.dim(n - 1), K.dim(n)));
    std::vector<Matrix> fs;
    for (int n = lo; n <= hi; ++n) fs.push_back(L.d(n - 1).mul(h.at(n)).add(h.at(n + 1).mul(K.d(n))));
    return make_chain_map(K, L, lo, fs);
}

}  // namespace wfilt::testgen
