#pragma once

#include "wfilt/spectral.hpp"

namespace wfilt {

// Vertices of the cube category on indices {0..n} are nonempty subsets,
// encoded as bitmasks 1 .. 2^{n+1}-1.
using Subset = unsigned;

int subset_card(Subset a);
// cubical weight w(a) = |a| - 1
int subset_weight(Subset a);
// sign of the coface a -> a u {j}: (-1)^{#{i in a : i < j}}
int coface_sign(Subset a, int j);
std::vector<Subset> all_vertices(int n);

// Cubical diagram of plain complexes with coface chain maps for covering
// pairs. All coface squares must commute.
struct ComplexDiagram {
    Ring ring;
    int n = 0;
    std::map<Subset, CochainComplex> at;
    std::map<std::pair<Subset, Subset>, ChainMap> cofaces;

    const ChainMap& coface(Subset a, Subset b) const;
};

ComplexDiagram make_complex_diagram(Ring ring, int n, std::map<Subset, CochainComplex> at,
                                    std::map<std::pair<Subset, Subset>, ChainMap> cofaces);

struct FilteredDiagram {
    Ring ring;
    int n = 0;
    std::map<Subset, FilteredComplex> at;
    std::map<std::pair<Subset, Subset>, ChainMap> cofaces;  // filtration-compatible

    const ChainMap& coface(Subset a, Subset b) const;
};

FilteredDiagram make_filtered_diagram(Ring ring, int n, std::map<Subset, FilteredComplex> at,
                                      std::map<std::pair<Subset, Subset>, ChainMap> cofaces);

ComplexDiagram forget_filtrations(const FilteredDiagram& d);
FilteredDiagram with_trivial_filtrations(const ComplexDiagram& d);
// Vertexwise decalage (cofaces remain compatible).
FilteredDiagram decalage_diagram(const FilteredDiagram& d);

// Total complex: s(D)^m = sum_a at(a)^{m - w(a)}, differential
// (-1)^{w(a)} d_a plus signed cofaces. Summands are laid out in ascending
// bitmask order; simple_offsets gives the block offsets in degree m.
CochainComplex simple(const ComplexDiagram& d);
std::map<Subset, int> simple_offsets(const ComplexDiagram& d, int m);

// r-simple: carrier = simple of carriers, W(r)_p = sum_a W_{p + r w(a)}(a).
FilteredComplex simple_r(const FilteredDiagram& d, int r);

// Augmented diagrams: a base complex mapping to the singleton vertices,
// commuting with the cofaces.
struct AugmentedComplexDiagram {
    CochainComplex base;
    ComplexDiagram diagram;
    std::map<int, ChainMap> aug;  // index i -> map base -> at({i})
};
AugmentedComplexDiagram make_augmented(CochainComplex base, ComplexDiagram diagram,
                                       std::map<int, ChainMap> aug);

struct AugmentedFilteredDiagram {
    FilteredComplex base;
    FilteredDiagram diagram;
    std::map<int, ChainMap> aug;
};
AugmentedFilteredDiagram make_augmented_filtered(FilteredComplex base, FilteredDiagram diagram,
                                                 std::map<int, ChainMap> aug);

// The canonical filtered map base -> s^r(diagram) with identity components
// into the singleton summands.
FilteredMap augmentation_map(const AugmentedFilteredDiagram& a, int r);

// True iff the augmentation map is an E_r-quasi-isomorphism.
bool is_descent_acyclic(const AugmentedFilteredDiagram& a, int r);
// Plain-complex variant: vertices get trivial filtrations.
bool is_descent_acyclic(const AugmentedComplexDiagram& a, int r);

// The line complex through cell (p,q) of the diagram-wise page r, totaled
// with the cubical signs: cells sum_a E_r^{p - r w(a), q + (r-1) w(a)}(at(a)),
// graded by total degree.
PresComplex diagram_page_line(const FilteredDiagram& d, int r, int p, int q);

// Page/simple exchange: cohomology of E_r(s^r D) along d_r matches the
// cohomology of the diagram-wise page line complexes at every cell.
bool page_simple_exchange_check(const FilteredDiagram& d, int r);

// Dec(s^{r+1} D) = s^r(Dec D) as filtered complexes (byte-equal submodules).
bool dec_simple_exchange_check(const FilteredDiagram& d, int r);

}  // namespace wfilt
