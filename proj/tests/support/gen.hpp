#pragma once

#include <random>

#include "wfilt/matrix.hpp"
#include "wfilt/submodule.hpp"

namespace wfilt::testgen {

using Rng = std::mt19937;

inline Matrix random_matrix(Rng& rng, const Ring& ring, int rows, int cols, int lo = -3,
                            int hi = 3) {
    std::uniform_int_distribution<int> dist(lo, hi);
    Matrix m(ring, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = canon(ring, Scalar(dist(rng)));
    return m;
}

inline Submodule random_submodule(Rng& rng, const Ring& ring, int ambient, int gens) {
    return Submodule(ring, ambient, random_matrix(rng, ring, gens, ambient));
}

// Random unimodular / invertible matrix: a product of elementary operations.
inline Matrix random_invertible(Rng& rng, const Ring& ring, int n, int ops = -1) {
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::uniform_int_distribution<int> coef(-2, 2);
    Matrix m = Matrix::identity(ring, n);
    if (ops < 0) ops = 2 * n + 2;
    for (int s = 0; s < ops && n > 1; ++s) {
        int i = pick(rng), j = pick(rng);
        if (i == j) continue;
        Scalar q = canon(ring, Scalar(coef(rng)));
        for (int k = 0; k < n; ++k) m.at(i, k) = s_add(ring, m.at(i, k), s_mul(ring, q, m.at(j, k)));
    }
    return m;
}

// Invertible matrix together with its exact inverse.
inline std::pair<Matrix, Matrix> random_based_change(Rng& rng, const Ring& ring, int n) {
    std::uniform_int_distribution<int> pick(0, std::max(0, n - 1));
    std::uniform_int_distribution<int> coef(-2, 2);
    Matrix p = Matrix::identity(ring, n);
    Matrix pinv = Matrix::identity(ring, n);
    for (int s = 0; s < 2 * n + 2 && n > 1; ++s) {
        int i = pick(rng), j = pick(rng);
        if (i == j) continue;
        Scalar q = canon(ring, Scalar(coef(rng)));
        // P <- E P with E: R_i += q R_j; Pinv <- Pinv E^{-1}: C_j -= q C_i
        for (int k = 0; k < n; ++k) p.at(i, k) = s_add(ring, p.at(i, k), s_mul(ring, q, p.at(j, k)));
        for (int k = 0; k < n; ++k)
            pinv.at(k, j) = s_sub(ring, pinv.at(k, j), s_mul(ring, q, pinv.at(k, i)));
    }
    return {p, pinv};
}

}  // namespace wfilt::testgen
