#pragma once

#include "wfilt/submodule.hpp"

namespace wfilt {

// Canonical (Smith) form of a finitely generated module: free part plus
// invariant factors d_1 | d_2 | ... (each > 1). Fields carry no torsion.
struct ModulePresentation {
    Ring ring;
    int free_rank = 0;
    std::vector<mpz_class> torsion;

    int gen_count() const { return free_rank + static_cast<int>(torsion.size()); }
    bool is_zero() const { return free_rank == 0 && torsion.empty(); }
    bool operator==(const ModulePresentation& o) const {
        return ring == o.ring && free_rank == o.free_rank && torsion == o.torsion;
    }
    bool operator!=(const ModulePresentation& o) const { return !(*this == o); }
    std::string str() const;
};

// Generators-with-orders view of a finitely presented module (order 0 marks a
// free generator, otherwise the order is > 1). Unlike ModulePresentation this
// is not canonical; it tracks a chosen generating set, e.g. cohomology bases
// supplied with input data, and is closed under direct sums.
struct GenModule {
    Ring ring;
    std::vector<mpz_class> orders;

    int gen_count() const { return static_cast<int>(orders.size()); }
    // Relation lattice inside the generator coordinate space.
    Submodule rel() const;
    ModulePresentation canonical() const;
    GenModule direct_sum(const GenModule& o) const;

    static GenModule free_module(Ring rg, int n);
    static GenModule from_presentation(const ModulePresentation& p);

    bool operator==(const GenModule& o) const { return ring == o.ring && orders == o.orders; }
    bool operator!=(const GenModule& o) const { return !(*this == o); }
};

// A subquotient num/den of an ambient free module, with canonical Smith
// coordinates. Generators are ordered torsion-first (ascending invariant
// factor) then free. coords/lift translate between ambient vectors and
// presentation coordinates; lift is a section of coords up to den.
class Subquotient {
  public:
    Subquotient() = default;
    Subquotient(const Submodule& num, const Submodule& den);

    const Ring& ring() const { return num_.ring; }
    int ambient_rank() const { return num_.ambient_rank; }
    const Submodule& num() const { return num_; }
    const Submodule& den() const { return den_; }
    const ModulePresentation& presentation() const { return pres_; }

    // Presentation coordinates of an ambient element of num (throws if x is
    // not in num). Torsion coordinates are reduced into [0, d_i).
    Vec coords(const Vec& x) const;
    // Ambient representative of a presentation coordinate vector.
    Vec lift(const Vec& c) const;
    // Reduce a raw presentation coordinate vector to canonical form.
    Vec reduce(const Vec& c) const;

    bool is_zero_class(const Vec& x) const { return den_.contains(x); }

  private:
    Submodule num_, den_;
    ModulePresentation pres_;
    Matrix u_, uinv_;                 // change of basis on num coordinates
    std::vector<mpz_class> diag_;     // SNF diagonal padded with zeros, length = num rank
    std::vector<int> kept_;           // indices with diag != 1, in SNF order
};

// Spec-level entry point: presentation of num/den plus projection data.
inline Subquotient quotient_presentation(const Submodule& num, const Submodule& den) {
    return Subquotient(num, den);
}

// A homomorphism between presented modules, as a matrix in canonical
// generator coordinates (columns = images of source generators). Entries in
// rows belonging to torsion generators are kept reduced mod the invariant
// factor, which makes equality of maps equality of matrices.
struct PresMap {
    ModulePresentation src, tgt;
    Matrix m;

    PresMap() = default;
    PresMap(ModulePresentation s, ModulePresentation t, Matrix mm);

    void normalize();
    PresMap compose(const PresMap& inner) const;  // this after inner
    bool is_zero_map() const { return m.is_zero(); }
    bool operator==(const PresMap& o) const { return src == o.src && tgt == o.tgt && m == o.m; }
};

// Map between subquotients induced by an ambient matrix t (with
// t(num_a) <= num_b and t(den_a) <= den_b; throws otherwise).
PresMap induced_map(const Matrix& t, const Subquotient& a, const Subquotient& b);

// Whether the induced map is an isomorphism of the subquotients:
// surjective  iff  t(num_a) + den_b = num_b,
// injective   iff  t^{-1}(den_b) ∩ num_a = den_a.
bool induced_iso(const Matrix& t, const Subquotient& a, const Subquotient& b);

}  // namespace wfilt
