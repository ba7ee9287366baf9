#include "doctest.h"
#include "wfilt/catalog.hpp"

using namespace wfilt;

namespace {

std::vector<int> row_h_ranks(const GysinDatum& g, int q) {
    PresComplex row = gysin_complex(g, q);
    std::vector<int> out;
    for (int p = -g.num_components; p <= 0; ++p)
        out.push_back(pres_cohomology(row, p).presentation().free_rank);
    return out;
}

}  // namespace

TEST_CASE("gysin complex of a compact smooth datum is concentrated at p = 0") {
    Ring q = Ring::rationals();
    GysinDatum g = catalog::compact_smooth(q, {1, 2, 1});
    for (int deg = 0; deg <= 2; ++deg) {
        PresComplex row = gysin_complex(g, deg);
        CHECK(row.cell(0).gen_count() == (deg == 0 ? 1 : (deg == 1 ? 2 : 1)));
        CHECK(row.n0 == 0);
    }
}

TEST_CASE("Serre P1 x P1 datum: rows and ranks") {
    Ring qq = Ring::rationals();
    GysinDatum g = catalog::serre_p1xp1(qq);

    // q = 4 row: points -> lines -> X with ranks 4, 4, 1 and rank-3, rank-2 maps
    PresComplex row4 = gysin_complex(g, 4);
    CHECK(row4.cell(-2).gen_count() == 4);
    CHECK(row4.cell(-1).gen_count() == 4);
    CHECK(row4.cell(0).gen_count() == 1);
    CHECK(rank(row4.d(-2)) == 3);
    CHECK(rank(row4.d(-1)) == 1);

    // q = 2 row: lines -> X with the rank-2 class map
    PresComplex row2 = gysin_complex(g, 2);
    CHECK(row2.cell(-1).gen_count() == 4);
    CHECK(row2.cell(0).gen_count() == 2);
    CHECK(rank(row2.d(-1)) == 2);

    // E_2 data: kernel of the line map has rank 2 (degree-1 classes of weight 2)
    CHECK(row_h_ranks(g, 2) == std::vector<int>{0, 0, 0, 2, 0});
    // and the q=4 row carries H^2 in its middle
    CHECK(row_h_ranks(g, 4) == std::vector<int>{0, 0, 1, 0, 0});
}

TEST_CASE("real mode rows") {
    GysinDatum u = catalog::real_punctured_plane();
    // q = 1: H^0 of the two circles maps onto H^1 of the Klein bottle
    PresComplex row1 = gysin_complex(u, 1);
    CHECK(row1.cell(-1).gen_count() == 2);
    CHECK(row1.cell(0).gen_count() == 2);
    CHECK(pres_cohomology(row1, 0).presentation().is_zero());
    CHECK(pres_cohomology(row1, -1).presentation().is_zero());
    // q = 2: kernel of H^1(circles) -> H^2 is one dimensional
    CHECK(row_h_ranks(u, 2) == std::vector<int>{0, 1, 0});

    GysinDatum v = catalog::real_cylinder();
    CHECK(row_h_ranks(v, 1) == std::vector<int>{0, 1});
    CHECK(row_h_ranks(v, 2) == std::vector<int>{0, 0});
}

TEST_CASE("gysin datum validation rejects inconsistent data") {
    Ring qq = Ring::rationals();

    // not downward closed
    GysinDatum bad;
    bad.ring = qq;
    bad.num_components = 2;
    bad.strata[0u] = free_graded(qq, 0, {1});
    bad.strata[3u] = free_graded(qq, 0, {1});
    CHECK_THROWS(make_gysin_datum(bad));

    // real mode demands Z/2
    GysinDatum bad2;
    bad2.ring = qq;
    bad2.real_mode = true;
    bad2.num_components = 0;
    bad2.strata[0u] = free_graded(qq, 0, {1});
    CHECK_THROWS(make_gysin_datum(bad2));

    // d*d != 0: break one sign in the four-lines datum
    GysinDatum tweaked = catalog::serre_p1xp1(qq);
    tweaked.gysin[{1u, 5u}] = {{0, Matrix(qq, 1, 1, {Scalar(-1)})}};
    CHECK_THROWS(make_gysin_datum(tweaked));
}

TEST_CASE("gysin_map: identity, functoriality, minors") {
    Ring z = Ring::integers();

    SUBCASE("identity morphism induces the identity chain map") {
        GysinDatum g = catalog::serre_p1xp1(z);
        GysinMorphismDatum id = catalog::identity_morphism(g);
        for (int q = 0; q <= 4; q += 2) {
            PresChainMap m = gysin_map(id, q);
            for (int p = -2; p <= 0; ++p)
                CHECK(m.f(p) == Matrix::identity(z, m.source.cell(p).gen_count()));
        }
    }

    SUBCASE("composition: multiplicities multiply and chain maps compose") {
        auto data = catalog::double_blowup_p2(z);
        CHECK(data.composite.multiplicity ==
              data.first.multiplicity.mul(data.second.multiplicity));
        // the composite minor on ({line}, {F}) is 2
        CHECK(multiplicity_minor(data.composite, 1u, 4u) == Scalar(2));
        for (int q = 0; q <= 4; ++q) {
            PresChainMap lhs = gysin_map(data.composite, q);
            PresChainMap rhs = pres_compose(gysin_map(data.second, q), gysin_map(data.first, q));
            int lo = std::min(lhs.source.n0, lhs.target.n0);
            int hi = std::max(lhs.source.n1(), lhs.target.n1());
            for (int p = lo; p <= hi; ++p) CHECK(lhs.f(p) == rhs.f(p));
        }
    }
}

TEST_CASE("acyclicity of the blow-up squares") {
    for (const Ring& rg : {Ring::rationals(), Ring::integers()}) {
        SUBCASE(("center off the divisor, ring " + rg.name()).c_str()) {
            GysinSquare s = catalog::blowup_p2_center_off_divisor(rg);
            for (int q = 0; q <= 6; ++q) CHECK(gysin_square_total_acyclic(s, q));
        }
        SUBCASE(("center on the divisor, ring " + rg.name()).c_str()) {
            GysinMorphismDatum f = catalog::blowup_p2_center_on_divisor(rg);
            for (int q = 0; q <= 6; ++q) CHECK(gysin_blowdown_quasi_iso(f, q));
        }
    }
}
