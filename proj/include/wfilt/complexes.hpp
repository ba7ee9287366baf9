#pragma once

#include "wfilt/presentation.hpp"

namespace wfilt {

// Bounded cochain complex of based free modules. dims[i] is the rank of
// K^{n0+i}; ds[i] is the differential K^{n0+i} -> K^{n0+i+1} acting on column
// vectors. Degrees outside the stored window are zero. d*d = 0 is enforced at
// construction time.
struct CochainComplex {
    Ring ring;
    int n0 = 0;
    std::vector<int> dims;
    std::vector<Matrix> ds;

    int n1() const { return n0 + static_cast<int>(dims.size()) - 1; }
    int dim(int n) const;
    Matrix d(int n) const;
    bool is_acyclic_candidate() const { return dims.empty(); }

    bool operator==(const CochainComplex& o) const;
    bool operator!=(const CochainComplex& o) const { return !(*this == o); }
};

// Validating factory; also the only way the rest of the code builds complexes.
CochainComplex make_complex(Ring ring, int n0, std::vector<int> dims, std::vector<Matrix> ds);

// Complex with zero differential and the given ranks per degree.
CochainComplex formal_complex(Ring ring, int n0, const std::vector<int>& ranks);

CochainComplex zero_complex(Ring ring);

// Degreewise map of complexes commuting with the differentials.
struct ChainMap {
    CochainComplex source, target;
    int m0 = 0;
    std::vector<Matrix> fs;  // fs[i]: source^{m0+i} -> target^{m0+i}

    Matrix f(int n) const;
};

ChainMap make_chain_map(CochainComplex source, CochainComplex target, int m0,
                        std::vector<Matrix> fs);
ChainMap identity_map(const CochainComplex& k);
ChainMap zero_map(const CochainComplex& source, const CochainComplex& target);
ChainMap compose(const ChainMap& outer, const ChainMap& inner);

// ker d(n) / im d(n-1) as a subquotient of K^n.
Subquotient cohomology(const CochainComplex& k, int n);
ModulePresentation cohomology_presentation(const CochainComplex& k, int n);

// Mapping cone with d = [[-d_K[1], 0], [-f, d_L]]; cone(f)^n = K^{n+1} + L^n.
CochainComplex cone(const ChainMap& f);

// K[r]^n = K^{n+r}, differential scaled by (-1)^r.
CochainComplex shift(const CochainComplex& k, int r);

bool is_acyclic(const CochainComplex& k);
PresMap induced_on_cohomology(const ChainMap& f, int n);
bool is_quasi_iso(const ChainMap& f);

struct DirectSumResult {
    CochainComplex total;
    ChainMap left, right;  // the two inclusions
};
DirectSumResult direct_sum(const CochainComplex& a, const CochainComplex& b);

// Realize a degreewise d-stable family of submodules as a based complex
// together with its inclusion map. sub(n) must satisfy d(sub(n)) <= sub(n+1).
struct SubcomplexResult {
    CochainComplex complex;
    ChainMap inclusion;
};
SubcomplexResult subcomplex(const CochainComplex& k,
                            const std::vector<std::pair<int, Submodule>>& pieces);

// Complex of finitely presented modules on chosen generating bases; the
// differentials are generator-level matrices, valid modulo the relations.
// This carries Gysin rows and page-level data, where cells may have torsion.
struct PresComplex {
    Ring ring;
    int n0 = 0;
    std::vector<GenModule> cells;
    std::vector<Matrix> ds;

    int n1() const { return n0 + static_cast<int>(cells.size()) - 1; }
    GenModule cell(int n) const;
    Matrix d(int n) const;
    Submodule rel(int n) const;  // relation lattice inside generator coordinates

    bool operator==(const PresComplex& o) const;
};

PresComplex make_pres_complex(Ring ring, int n0, std::vector<GenModule> cells,
                              std::vector<Matrix> ds);
PresComplex to_pres_complex(const CochainComplex& k);

Subquotient pres_cohomology(const PresComplex& p, int n);
bool pres_is_acyclic(const PresComplex& p);

struct PresChainMap {
    PresComplex source, target;
    int m0 = 0;
    std::vector<Matrix> fs;

    Matrix f(int n) const;
};

PresChainMap make_pres_chain_map(PresComplex source, PresComplex target, int m0,
                                 std::vector<Matrix> fs);
PresChainMap pres_compose(const PresChainMap& outer, const PresChainMap& inner);
PresComplex pres_cone(const PresChainMap& f);
bool pres_is_quasi_iso(const PresChainMap& f);

struct PresDirectSumResult {
    PresComplex total;
    PresChainMap left, right;
};
PresDirectSumResult pres_direct_sum(const PresComplex& a, const PresComplex& b);

// Combine two maps with common source into the direct sum of their targets.
PresChainMap pres_pair_into_sum(const PresChainMap& f, const PresChainMap& g,
                                const PresDirectSumResult& sum);
// Combine two maps out of the summands into one map from the direct sum,
// as left - right (the Mayer-Vietoris shape).
PresChainMap pres_difference_from_sum(const PresChainMap& f, const PresChainMap& g,
                                      const PresDirectSumResult& sum);

}  // namespace wfilt
