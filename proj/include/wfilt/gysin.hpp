#pragma once

#include <map>

#include "wfilt/complexes.hpp"

namespace wfilt {

// Graded module with chosen generating bases per degree.
struct GradedModule {
    Ring ring;
    std::map<int, GenModule> parts;

    GenModule at(int k) const;
    int rank(int k) const { return at(k).gen_count(); }
    GradedModule shifted(int by) const;  // degree k of the result is degree k-by
    bool operator==(const GradedModule& o) const { return ring == o.ring && parts == o.parts; }
};

GradedModule free_graded(const Ring& rg, int k0, const std::vector<int>& ranks);

// Strata are subsets of the divisor components {1..N}, encoded as bitmasks
// over bits 0..N-1; the empty mask stands for the ambient space X.
using Stratum = unsigned;

// Combinatorial compactification datum: strata cohomology with Gysin maps
// H^k(D_J) -> H^{k+shift}(D_I) for covering pairs I c J. shift is 2 in
// complex mode and 1 in real mode (which forces Z/2 coefficients).
struct GysinDatum {
    Ring ring;
    bool real_mode = false;
    int num_components = 0;
    std::map<Stratum, GradedModule> strata;
    // (I, J) covering pair, degree k of the source H^k(D_J)
    std::map<std::pair<Stratum, Stratum>, std::map<int, Matrix>> gysin;

    int shift() const { return real_mode ? 1 : 2; }
    bool has_stratum(Stratum s) const { return strata.count(s) > 0; }
    const GradedModule& h(Stratum s) const;
    Matrix gysin_matrix(Stratum i, Stratum j, int k) const;  // zero when absent
    // degree range that can carry nonzero cohomology
    int max_degree() const;
};

// Validates shapes, downward closure, mode/ring consistency, and d*d = 0 of
// the assembled complexes for all q.
GysinDatum make_gysin_datum(GysinDatum g);

// G^q(X,U)^p = sum over strata I with |I| = -p of H^{q + shift*p}(D_I),
// supported on p in [-N, 0], with the alternating sum of Gysin maps.
PresComplex gysin_complex(const GysinDatum& g, int q);

// Offsets of the strata blocks in column p of gysin_complex(g, q).
std::map<Stratum, int> gysin_offsets(const GysinDatum& g, int q, int p);

// Morphism datum for a map f: (X',U') -> (X,U); `target` is the datum of
// (X,U) and `source` the datum of (X',U'). The induced chain map is
// contravariant: G^q(X,U) -> G^q(X',U').
struct GysinMorphismDatum {
    GysinDatum source;  // (X',U')
    GysinDatum target;  // (X,U)
    Matrix multiplicity;  // N x M integer matrix, f^{-1}(D_i) = sum_j m_ij D'_j
    // carried pairs (I, J) with f(D'_J) c D_I and |I| = |J|; per degree k a
    // pullback matrix H^k(D_I) -> H^k(D'_J)
    std::map<std::pair<Stratum, Stratum>, std::map<int, Matrix>> pullbacks;

    Matrix pullback_matrix(Stratum i, Stratum j, int k) const;
    bool carries(Stratum i, Stratum j) const { return pullbacks.count({i, j}) > 0; }
};

GysinMorphismDatum make_gysin_morphism(GysinMorphismDatum m);

// Determinant of the minor of the multiplicity matrix on rows I, cols J
// (1 for empty I).
Scalar multiplicity_minor(const GysinMorphismDatum& m, Stratum i, Stratum j);

// The chain map G^q(X,U) -> G^q(X',U') with components det(minor) * pullback.
// Throws if the chain-map identity fails.
PresChainMap gysin_map(const GysinMorphismDatum& m, int q);

// An acyclic square of pairs at the Gysin level:
//   (Yt, .) --j--> (Xt, .)
//      |               |
//      g               f
//      v               v
//   (Y, .)  --i--> (X, .)
struct GysinSquare {
    GysinDatum x, xt, y, yt;
    GysinMorphismDatum f;  // (Xt,.) -> (X,.)
    GysinMorphismDatum i;  // (Y,.)  -> (X,.)
    GysinMorphismDatum j;  // (Yt,.) -> (Xt,.)
    GysinMorphismDatum g;  // (Yt,.) -> (Y,.)
};

GysinSquare make_gysin_square(GysinSquare s);

// Case 1 (center not inside the divisor): the total complex of
// 0 -> G^q(X) -> G^q(Xt) + G^q(Y) -> G^q(Yt) -> 0 is acyclic.
bool gysin_square_total_acyclic(const GysinSquare& s, int q);

// Case 2 (center inside the divisor): G^q(X,U) -> G^q(Xt,Ut) is a
// quasi-isomorphism, i.e. its cone is acyclic.
bool gysin_blowdown_quasi_iso(const GysinMorphismDatum& f, int q);

}  // namespace wfilt
