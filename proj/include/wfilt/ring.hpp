#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace wfilt {

// Coefficient ring descriptor. Governs all arithmetic: canonical scalar
// representatives are plain integers over Z, reduced fractions over Q and
// residues in [0, p) over Z/p.
enum class RingKind { Integers, Rationals, PrimeField };

struct Ring {
    RingKind kind = RingKind::Integers;
    mpz_class p;  // modulus, PrimeField only

    static Ring integers() { return Ring{RingKind::Integers, 0}; }
    static Ring rationals() { return Ring{RingKind::Rationals, 0}; }
    static Ring prime_field(const mpz_class& p);

    bool is_field() const { return kind != RingKind::Integers; }
    bool operator==(const Ring& o) const { return kind == o.kind && p == o.p; }
    bool operator!=(const Ring& o) const { return !(*this == o); }
    std::string name() const;
};

using Scalar = mpq_class;

// Canonical representative of a scalar in the given ring. Throws if the value
// does not belong to the ring (non-integral over Z or Z/p).
Scalar canon(const Ring& r, const Scalar& x);

inline bool is_zero(const Scalar& x) { return sgn(x) == 0; }

Scalar s_add(const Ring& r, const Scalar& a, const Scalar& b);
Scalar s_sub(const Ring& r, const Scalar& a, const Scalar& b);
Scalar s_mul(const Ring& r, const Scalar& a, const Scalar& b);
Scalar s_neg(const Ring& r, const Scalar& a);

// Multiplicative inverse; defined for fields and for units +-1 over Z.
Scalar s_inv(const Ring& r, const Scalar& a);

// a / b. Over Z the division must be exact.
Scalar s_div(const Ring& r, const Scalar& a, const Scalar& b);

}  // namespace wfilt
