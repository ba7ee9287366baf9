#pragma once

#include "wfilt/complexes.hpp"

namespace wfilt {

// Bounded exhaustive increasing filtration W on a cochain complex:
// 0 = W(pmin-1) <= W(pmin) <= ... <= W(pmax) = K, with d(W(p,n)) <= W(p,n+1).
// Page formulas read the filtration in the decreasing convention
// F^p := W_{-p}.
struct FilteredComplex {
    CochainComplex carrier;
    int pmin = 0, pmax = 0;
    // steps[p - pmin][n - carrier.n0] for p in [pmin, pmax], n in support
    std::vector<std::vector<Submodule>> steps;

    const Ring& ring() const { return carrier.ring; }
    // W(p, n), clamped outside the stored window.
    Submodule w(int p, int n) const;
    // decreasing convention F^p = W_{-p}
    Submodule filt(int p, int n) const { return w(-p, n); }
    int fmin() const { return -pmax; }  // F^{fmin} = K
    int fmax() const { return -pmin; }  // F^{fmax+1} = 0

    bool operator==(const FilteredComplex& o) const;
    bool operator!=(const FilteredComplex& o) const { return !(*this == o); }
};

// Validating factory: checks shapes, nesting, exhaustiveness and
// d-compatibility, then trims the window to the minimal one.
FilteredComplex make_filtered(CochainComplex carrier, int pmin, int pmax,
                              std::vector<std::vector<Submodule>> steps);

// Single jump 0 = W(-1) c W(0) = K.
FilteredComplex trivial_filtration(const CochainComplex& k);

// tau_{<=p}: K^n for n < p, ker d for n = p, 0 above.
FilteredComplex canonical_filtration(const CochainComplex& k);

// (K, W) -> (K[r], W(-r)): carrier degrees shift by r, filtration steps are
// reindexed by -r along with them (W'(p, n) = W(p+r, n+r)).
FilteredComplex translate(const FilteredComplex& fk, int r);

// Deligne's decalage: (Dec W)(p, n) = W(p-n, n) ∩ d^{-1}(W(p-n-1, n+1)).
FilteredComplex decalage(const FilteredComplex& fk);

struct FilteredMap {
    FilteredComplex source, target;
    ChainMap map;
};

// Validates filtration compatibility f(W_src(p,n)) <= W_tgt(p,n).
FilteredMap make_filtered_map(FilteredComplex source, FilteredComplex target, ChainMap map);
FilteredMap identity_filtered_map(const FilteredComplex& fk);

// True iff the induced map on page r+1 is an isomorphism at every (p,q).
bool is_er_quasi_iso(const FilteredMap& f, int r);

}  // namespace wfilt
