#pragma once

#include <optional>

#include "wfilt/matrix.hpp"

namespace wfilt {

// A submodule of the free module R^ambient, stored by its canonical generator
// matrix (one generator per row, HNF over Z / RREF over fields, zero rows
// removed). Two submodules are equal iff their canonical matrices are equal.
struct Submodule {
    Ring ring;
    int ambient_rank = 0;
    Matrix gens;  // canonical, gens.cols == ambient_rank

    Submodule() = default;
    Submodule(Ring rg, int ambient, const Matrix& generators);

    static Submodule zero(Ring rg, int ambient);
    static Submodule full(Ring rg, int ambient);

    int rank() const { return gens.rows; }
    bool is_zero() const { return gens.rows == 0; }
    bool is_full() const;

    bool contains(const Vec& x) const;
    bool contains(const Submodule& other) const;

    // Coordinates of x in the generator basis; nullopt if x is not a member.
    std::optional<Vec> coords(const Vec& x) const;
    // gens^T * c
    Vec from_coords(const Vec& c) const;

    bool operator==(const Submodule& o) const {
        return ring == o.ring && ambient_rank == o.ambient_rank && gens == o.gens;
    }
    bool operator!=(const Submodule& o) const { return !(*this == o); }
};

// {x : M x = 0} as a submodule of R^cols.
Submodule kernel(const Matrix& m);

// {M x} as a submodule of R^rows.
Submodule image(const Matrix& m);

// {x : M x in s}.
Submodule preimage(const Matrix& m, const Submodule& s);

Submodule sum(const Submodule& a, const Submodule& b);
Submodule intersect(const Submodule& a, const Submodule& b);

// Image of a submodule under a matrix.
Submodule apply(const Matrix& m, const Submodule& s);

}  // namespace wfilt
