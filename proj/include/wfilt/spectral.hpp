#pragma once

#include <map>

#include "wfilt/filtered.hpp"

namespace wfilt {

// Z_r^{p,q} = F^p K^n ∩ d^{-1}(F^{p+r} K^{n+1}), n = p+q, in the internal
// decreasing convention F^p = W_{-p}. Valid for all (r,p,q), degenerating
// correctly outside the supported region.
Submodule z_term(const FilteredComplex& fk, int r, int p, int q);

// B_r^{p,q} = Z_{r-1}^{p+1,q-1} + d(F^{p-r+1} K^{n-1}) ∩ F^p K^n.
Submodule b_term(const FilteredComplex& fk, int r, int p, int q);

// E_r^{p,q} as the subquotient Z_r/B_r of K^{p+q}.
Subquotient page_cell(const FilteredComplex& fk, int r, int p, int q);

struct SSPage {
    int r = 0;
    Ring ring;
    // cells keyed by (p, q); only the supported rectangle is materialized
    struct Cell {
        Subquotient sq;
        PresMap d;  // d_r into (p+r, q-r+1); target presentation of that cell
    };
    std::map<std::pair<int, int>, Cell> cells;

    const Cell* cell(int p, int q) const;
    ModulePresentation pres(int p, int q) const;  // zero presentation when absent
};

// The full page r with its d_r maps.
SSPage page(const FilteredComplex& fk, int r);

// Cohomology of (E_r, d_r) at (p,q), as a subquotient of K^{p+q}; canonically
// isomorphic to E_{r+1}^{p,q} via the identity on representatives.
Subquotient page_cohomology_at(const FilteredComplex& fk, int r, int p, int q);

// Increasing filtration on H^n, stored through presentations of the steps and
// graded pieces. Steps outside the recorded range are zero below and the
// total above.
struct FiltrationOnCohomology {
    Ring ring;
    int n = 0;
    ModulePresentation total;
    struct Step {
        int p;
        ModulePresentation sub;     // W'_p H^n (or recentered W_p)
        ModulePresentation graded;  // W'_p / W'_{p-1}
    };
    std::vector<Step> steps;  // consecutive p, increasing
    bool recentered = false;
    int offset = 0;
    std::string letter = "W'";  // display name: W' before recentering, L or W after

    ModulePresentation step(int p) const;
    ModulePresentation graded(int p) const;
    int first_jump() const;  // smallest p with nonzero step
    int last_jump() const;   // smallest p with step == total
};

// W'_p H^n = im(H^n(W(p, .)) -> H^n(K)), computed as subquotients of K^n.
FiltrationOnCohomology abutment_filtration(const FilteredComplex& fk, int n);

enum class RecenterRule { Singularity, Weight };

// Shift step indices by +n (paper's L_p H^n := L'_{p-n}, W_p H^n := W'_{p-n}).
FiltrationOnCohomology recenter(const FiltrationOnCohomology& f, RecenterRule rule);

struct StabilizeResult {
    int r_stable = 0;
    SSPage einf;
};

// Least r with d_s = 0 for all s >= r; einf is the page there.
StabilizeResult stabilize(const FilteredComplex& fk);

// All pages r = r_lo .. r_hi inclusive.
std::vector<SSPage> pages(const FilteredComplex& fk, int r_lo, int r_hi);

// Verdict of the decalage shift property at page r >= 1:
// E_r^{p,q}(Dec FK) -> E_{r+1}^{p+n,-p}(FK) is an isomorphism induced by the
// identity, and the d_r / d_{r+1} matrices correspond under the reindexing.
struct DecalageCheck {
    bool cells_match = true;
    bool differentials_match = true;
    std::string detail;
    bool pass() const { return cells_match && differentials_match; }
};
DecalageCheck decalage_shift_check(const FilteredComplex& fk, int r);

// r = 0 statement: the comparison is a quasi-isomorphism of rows, i.e. the
// d_0-cohomology of E_0(Dec) matches the d_1-cohomology of E_1(FK) cellwise.
bool decalage_row_check(const FilteredComplex& fk);

}  // namespace wfilt
