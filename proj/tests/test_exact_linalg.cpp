#include "doctest.h"
#include "support/gen.hpp"
#include "wfilt/presentation.hpp"
#include "wfilt/submodule.hpp"

using namespace wfilt;

namespace {

Matrix mat(const Ring& rg, int r, int c, std::vector<long> vals) {
    std::vector<Scalar> e;
    for (long v : vals) e.emplace_back(v);
    return Matrix(rg, r, c, e);
}

Vec vec(std::vector<long> vals) {
    Vec v;
    for (long x : vals) v.emplace_back(x);
    return v;
}

bool is_unimodular(const Matrix& m) {
    Scalar d = determinant(m);
    return d == 1 || d == -1;
}

}  // namespace

TEST_CASE("ring scalars") {
    Ring z = Ring::integers(), q = Ring::rationals(), f5 = Ring::prime_field(5);
    CHECK(canon(q, Scalar(2, 6)) == Scalar(1, 3));
    CHECK(canon(f5, Scalar(-3)) == Scalar(2));
    CHECK(canon(f5, Scalar(1, 2)) == Scalar(3));  // 2^{-1} = 3 mod 5
    CHECK(s_inv(f5, Scalar(2)) == Scalar(3));
    CHECK(s_div(z, Scalar(6), Scalar(3)) == Scalar(2));
    CHECK_THROWS(s_div(z, Scalar(5), Scalar(3)));
    CHECK_THROWS(canon(z, Scalar(1, 2)));
    CHECK_THROWS(Ring::prime_field(4));
    CHECK_NOTHROW(Ring::prime_field(2));
}

TEST_CASE("smith normal form: identity, derived, zero") {
    Ring z = Ring::integers();

    SUBCASE("identity") {
        auto r = smith_normal_form(Matrix::identity(z, 2));
        CHECK(r.S == Matrix::identity(z, 2));
    }

    SUBCASE("[[2,4],[6,8]] has S = diag(2,4)") {
        Matrix m = mat(z, 2, 2, {2, 4, 6, 8});
        auto r = smith_normal_form(m);
        // oracle: first invariant factor is the gcd of all entries, and
        // s1*s2 = |det| = |2*8 - 4*6| = 8
        mpz_class g = 0;
        for (const auto& x : m.e) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num().get_mpz_t());
        CHECK(g == 2);
        CHECK(abs(determinant(m).get_num()) == 8);
        CHECK(r.S == mat(z, 2, 2, {2, 0, 0, 4}));
        CHECK(r.U.mul(m).mul(r.V) == r.S);
        CHECK(is_unimodular(r.U));
        CHECK(is_unimodular(r.V));
        CHECK(r.U.mul(r.Uinv) == Matrix::identity(z, 2));
        CHECK(r.V.mul(r.Vinv) == Matrix::identity(z, 2));
    }

    SUBCASE("zero 2x3") {
        Matrix m(z, 2, 3);
        auto r = smith_normal_form(m);
        CHECK(r.S == Matrix(z, 2, 3));
    }
}

TEST_CASE("smith normal form: UMV = S and chain on random matrices") {
    testgen::Rng rng(12345);
    for (const Ring& rg : {Ring::integers(), Ring::rationals(), Ring::prime_field(3)}) {
        for (int it = 0; it < 40; ++it) {
            int r = 1 + static_cast<int>(rng() % 4), c = 1 + static_cast<int>(rng() % 4);
            Matrix m = testgen::random_matrix(rng, rg, r, c);
            auto s = smith_normal_form(m);
            CHECK(s.U.mul(m).mul(s.V) == s.S);
            CHECK(s.U.mul(s.Uinv) == Matrix::identity(rg, r));
            CHECK(s.Vinv.mul(s.V) == Matrix::identity(rg, c));
            // diagonal with divisibility chain
            mpz_class prev = 0;
            bool seen_zero = false;
            for (int i = 0; i < std::min(r, c); ++i) {
                for (int j = 0; j < c; ++j)
                    if (j != i) CHECK(is_zero(s.S.at(i, j)));
                mpz_class di = s.S.at(i, i).get_num();
                CHECK(di >= 0);
                if (di == 0) seen_zero = true;
                else {
                    CHECK_FALSE(seen_zero);
                    if (prev > 0) CHECK(di % prev == 0);
                    prev = di;
                }
            }
            // idempotence: SNF of S is S again
            CHECK(smith_normal_form(s.S).S == s.S);
        }
    }
}

TEST_CASE("kernel/image/preimage/sum/intersect examples") {
    Ring z = Ring::integers(), q = Ring::rationals();

    SUBCASE("kernel of [1,1] over Q") {
        Submodule k = kernel(mat(q, 1, 2, {1, 1}));
        CHECK(k.gens == mat(q, 1, 2, {1, -1}));
    }

    SUBCASE("intersect in Z^2") {
        Submodule a(z, 2, mat(z, 1, 2, {2, 0}));
        Submodule b(z, 2, mat(z, 1, 2, {1, 0}));
        CHECK(intersect(a, b) == a);
    }

    SUBCASE("preimage of 2Z under first-coordinate projection is {x : x1 even}") {
        Submodule s(z, 1, mat(z, 1, 1, {2}));
        Submodule pre = preimage(mat(z, 1, 2, {1, 0}), s);
        CHECK(pre.gens == mat(z, 2, 2, {2, 0, 0, 1}));
        // oracle: enumerate small lattice vectors and check the membership
        // predicate "x1 even"
        for (long x1 = -3; x1 <= 3; ++x1)
            for (long x2 = -3; x2 <= 3; ++x2)
                CHECK(pre.contains(vec({x1, x2})) == (x1 % 2 == 0));
    }

    SUBCASE("preimage under the identity is the submodule itself") {
        Submodule s(z, 2, mat(z, 1, 2, {2, 0}));
        CHECK(preimage(Matrix::identity(z, 2), s) == s);
    }

    SUBCASE("dimension mismatch is an error") {
        Submodule s(z, 3, mat(z, 1, 3, {1, 0, 0}));
        CHECK_THROWS(preimage(Matrix::identity(z, 2), s));
        CHECK_THROWS(sum(s, Submodule::zero(z, 2)));
    }
}

TEST_CASE("rank-nullity over fields and over Z after tensoring with Q") {
    testgen::Rng rng(777);
    for (const Ring& rg : {Ring::rationals(), Ring::prime_field(5), Ring::integers()}) {
        for (int it = 0; it < 30; ++it) {
            int r = 1 + static_cast<int>(rng() % 4), c = 1 + static_cast<int>(rng() % 4);
            Matrix m = testgen::random_matrix(rng, rg, r, c);
            CHECK(kernel(m).rank() + image(m).rank() == c);
        }
    }
}

TEST_CASE("sum and intersect are commutative, associative, idempotent; membership consistent") {
    testgen::Rng rng(4242);
    for (const Ring& rg : {Ring::integers(), Ring::rationals(), Ring::prime_field(2)}) {
        for (int it = 0; it < 25; ++it) {
            int amb = 2 + static_cast<int>(rng() % 3);
            Submodule a = testgen::random_submodule(rng, rg, amb, 1 + rng() % 3);
            Submodule b = testgen::random_submodule(rng, rg, amb, 1 + rng() % 3);
            Submodule c = testgen::random_submodule(rng, rg, amb, 1 + rng() % 3);
            CHECK(sum(a, b) == sum(b, a));
            CHECK(intersect(a, b) == intersect(b, a));
            CHECK(sum(sum(a, b), c) == sum(a, sum(b, c)));
            CHECK(intersect(intersect(a, b), c) == intersect(a, intersect(b, c)));
            CHECK(sum(a, a) == a);
            CHECK(intersect(a, a) == a);
            // x in S iff x in sum(S, S)
            Vec x = testgen::random_matrix(rng, rg, 1, amb).row(0);
            CHECK(a.contains(x) == sum(a, a).contains(x));
            // intersection is contained in both, sum contains both
            CHECK(a.contains(intersect(a, b)));
            CHECK(b.contains(intersect(a, b)));
            CHECK(sum(a, b).contains(a));
            CHECK(sum(a, b).contains(b));
        }
    }
}

TEST_CASE("quotient presentations") {
    Ring z = Ring::integers(), q = Ring::rationals();

    SUBCASE("Z^2 / span{(2,0),(0,1)} = Z/2") {
        Subquotient sq(Submodule::full(z, 2), Submodule(z, 2, mat(z, 2, 2, {2, 0, 0, 1})));
        CHECK(sq.presentation().free_rank == 0);
        CHECK(sq.presentation().torsion == std::vector<mpz_class>{2});
    }

    SUBCASE("Q^3 / span{e1} is free of rank 2") {
        Subquotient sq(Submodule::full(q, 3), Submodule(q, 3, mat(q, 1, 3, {1, 0, 0})));
        CHECK(sq.presentation().free_rank == 2);
        CHECK(sq.presentation().torsion.empty());
    }

    SUBCASE("span{(2,0),(0,3)} / span{(4,0),(0,3)} = Z/2, by coset enumeration") {
        Submodule num(z, 2, mat(z, 2, 2, {2, 0, 0, 3}));
        Submodule den(z, 2, mat(z, 2, 2, {4, 0, 0, 3}));
        Subquotient sq(num, den);
        CHECK(sq.presentation().free_rank == 0);
        CHECK(sq.presentation().torsion == std::vector<mpz_class>{2});
        // oracle: enumerate num elements a(2,0)+b(0,3) and count cosets mod den
        std::vector<Vec> reps;
        for (long a = 0; a < 4; ++a)
            for (long b = 0; b < 4; ++b) {
                Vec x = vec({2 * a, 3 * b});
                bool found = false;
                for (const auto& r : reps) {
                    Vec diff = vec_sub(z, x, r);
                    if (den.contains(diff)) { found = true; break; }
                }
                if (!found) reps.push_back(x);
            }
        CHECK(reps.size() == 2);
    }

    SUBCASE("den not contained in num is an error") {
        Submodule num(z, 2, mat(z, 1, 2, {2, 0}));
        Submodule den(z, 2, mat(z, 1, 2, {1, 0}));
        CHECK_THROWS(Subquotient(num, den));
    }
}

TEST_CASE("subquotient coords/lift round trip and induced maps") {
    testgen::Rng rng(999);
    for (const Ring& rg : {Ring::integers(), Ring::rationals(), Ring::prime_field(3)}) {
        for (int it = 0; it < 25; ++it) {
            int amb = 2 + static_cast<int>(rng() % 3);
            Submodule den = testgen::random_submodule(rng, rg, amb, 1 + rng() % 2);
            Submodule num = sum(den, testgen::random_submodule(rng, rg, amb, 1 + rng() % 3));
            Subquotient sq(num, den);
            // lift of coords differs from the element by den
            for (int t = 0; t < 4; ++t) {
                Vec c0 = testgen::random_matrix(rng, rg, 1, num.rank()).row(0);
                Vec x = num.from_coords(c0);
                Vec c = sq.coords(x);
                Vec y = sq.lift(c);
                CHECK(den.contains(vec_sub(rg, x, y)));
                CHECK(sq.coords(y) == c);
            }
            // identity ambient map induces an isomorphism
            CHECK(induced_iso(Matrix::identity(rg, amb), sq, sq));
            PresMap id = induced_map(Matrix::identity(rg, amb), sq, sq);
            CHECK(id.m == Matrix::identity(rg, sq.presentation().gen_count()));
        }
    }
}

TEST_CASE("canonical rows idempotence and invariance under row mixing") {
    testgen::Rng rng(31337);
    for (const Ring& rg : {Ring::integers(), Ring::rationals(), Ring::prime_field(7)}) {
        for (int it = 0; it < 25; ++it) {
            int r = 1 + static_cast<int>(rng() % 3), c = 1 + static_cast<int>(rng() % 4);
            Matrix m = testgen::random_matrix(rng, rg, r, c);
            Matrix h = canonical_rows(m);
            CHECK(canonical_rows(h) == h);
            // mixing rows by an invertible transform preserves the canonical form
            Matrix u = testgen::random_invertible(rng, rg, r);
            CHECK(canonical_rows(u.mul(m)) == h);
        }
    }
}
