#include "wfilt/ring.hpp"

namespace wfilt {

Ring Ring::prime_field(const mpz_class& p) {
    if (p <= 1 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
        throw std::invalid_argument("Ring: modulus " + p.get_str() + " is not prime");
    return Ring{RingKind::PrimeField, p};
}

std::string Ring::name() const {
    switch (kind) {
        case RingKind::Integers: return "Z";
        case RingKind::Rationals: return "Q";
        case RingKind::PrimeField: return "Z/" + p.get_str();
    }
    return "?";
}

Scalar canon(const Ring& r, const Scalar& x) {
    Scalar y = x;
    y.canonicalize();
    switch (r.kind) {
        case RingKind::Rationals:
            return y;
        case RingKind::Integers:
            if (y.get_den() != 1)
                throw std::invalid_argument("scalar " + y.get_str() + " is not an integer");
            return y;
        case RingKind::PrimeField: {
            if (y.get_den() != 1) {
                // a/b = a * b^{-1} mod p
                mpz_class binv;
                if (mpz_invert(binv.get_mpz_t(), y.get_den().get_mpz_t(), r.p.get_mpz_t()) == 0)
                    throw std::invalid_argument("scalar " + y.get_str() + " has no residue mod " +
                                                r.p.get_str());
                mpz_class num = y.get_num() * binv;
                mpz_class m;
                mpz_fdiv_r(m.get_mpz_t(), num.get_mpz_t(), r.p.get_mpz_t());
                return Scalar(m);
            }
            mpz_class m;
            mpz_fdiv_r(m.get_mpz_t(), y.get_num().get_mpz_t(), r.p.get_mpz_t());
            return Scalar(m);
        }
    }
    return y;
}

Scalar s_add(const Ring& r, const Scalar& a, const Scalar& b) {
    if (r.kind == RingKind::PrimeField) return canon(r, Scalar(a + b));
    return a + b;
}

Scalar s_sub(const Ring& r, const Scalar& a, const Scalar& b) {
    if (r.kind == RingKind::PrimeField) return canon(r, Scalar(a - b));
    return a - b;
}

Scalar s_mul(const Ring& r, const Scalar& a, const Scalar& b) {
    if (r.kind == RingKind::PrimeField) return canon(r, Scalar(a * b));
    return a * b;
}

Scalar s_neg(const Ring& r, const Scalar& a) {
    if (r.kind == RingKind::PrimeField) return canon(r, Scalar(-a));
    return -a;
}

Scalar s_inv(const Ring& r, const Scalar& a) {
    if (is_zero(a)) throw std::invalid_argument("inverse of zero");
    switch (r.kind) {
        case RingKind::Rationals:
            return Scalar(1) / a;
        case RingKind::Integers:
            if (a == 1 || a == -1) return a;
            throw std::invalid_argument("scalar " + a.get_str() + " is not a unit in Z");
        case RingKind::PrimeField: {
            mpz_class inv;
            if (mpz_invert(inv.get_mpz_t(), a.get_num().get_mpz_t(), r.p.get_mpz_t()) == 0)
                throw std::invalid_argument("non-invertible residue " + a.get_str());
            return Scalar(inv);
        }
    }
    throw std::logic_error("unreachable");
}

Scalar s_div(const Ring& r, const Scalar& a, const Scalar& b) {
    if (is_zero(b)) throw std::invalid_argument("division by zero");
    if (r.kind == RingKind::Integers) {
        mpz_class q, rem;
        mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), a.get_num().get_mpz_t(),
                    b.get_num().get_mpz_t());
        if (rem != 0)
            throw std::invalid_argument("inexact division " + a.get_str() + " / " + b.get_str());
        return Scalar(q);
    }
    return s_mul(r, a, s_inv(r, b));
}

}  // namespace wfilt
