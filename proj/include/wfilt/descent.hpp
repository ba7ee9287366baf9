#pragma once

#include <optional>

#include "wfilt/cubical.hpp"
#include "wfilt/gysin.hpp"

namespace wfilt {

// Output of a spectral-sequence assembly: pages keyed by r with cell
// presentations and differentials, plus the recentered filtration per
// cohomological degree. Page-level assemblies carry only E_1 and E_2 and read
// the filtration off E_2 under a declared degeneration assumption.
struct SSResult {
    Ring ring;
    std::string label;
    bool page_level = false;
    int r_stable = 1;
    using CellKey = std::pair<int, int>;  // (p, q)
    std::map<int, std::map<CellKey, ModulePresentation>> pages;
    std::map<int, std::map<CellKey, PresMap>> diffs;
    std::map<int, FiltrationOnCohomology> filt;  // keyed by degree n, recentered
    std::vector<std::string> warnings;

    ModulePresentation cell(int r, int p, int q) const;
};

// Resolution data: chain-level cubical diagram (vertices carry trivial
// filtrations when assembled), or a page-level datum of E_1 cells with d_1.
struct PageLevelDatum {
    Ring ring;
    std::map<std::pair<int, int>, GenModule> cells;  // (p, q)
    std::map<std::pair<int, int>, Matrix> d1;        // (p,q) -> (p+1, q)
};

struct ResolutionDatum {
    std::optional<ComplexDiagram> diagram;
    std::optional<PageLevelDatum> page_level;
    // optional audit payload: base complex with augmentation maps
    std::optional<AugmentedComplexDiagram> augmented;
};

// Cube of Gysin data with morphism data on the edges; the edge for a
// covering pair a < b describes the geometric map X_b -> X_a, i.e. its
// `target` is at(a) and its `source` is at(b).
struct GeneralWeightDatum {
    Ring ring;
    int n = 0;
    std::map<Subset, GysinDatum> at;
    std::map<std::pair<Subset, Subset>, GysinMorphismDatum> edges;
};

GeneralWeightDatum make_general_weight_datum(GeneralWeightDatum d);

// Cohomology of an acyclic square with the four pullback families.
struct SquareCohomologyDatum {
    Ring ring;
    GradedModule hx, hxt, hy, hyt;
    std::map<int, Matrix> f;  // H(X)  -> H(Xt)
    std::map<int, Matrix> i;  // H(X)  -> H(Y)
    std::map<int, Matrix> j;  // H(Xt) -> H(Yt)
    std::map<int, Matrix> g;  // H(Y)  -> H(Yt)

    Matrix map_at(const std::map<int, Matrix>& fam, const GradedModule& src,
                  const GradedModule& tgt, int q) const;
};

SquareCohomologyDatum make_square_datum(SquareCohomologyDatum s);

// The singularity spectral sequence of a resolution: s^1 of the diagram with
// trivial filtrations; all pages from E_1, abutment and recentered L.
SSResult singularity_ss(const ResolutionDatum& r);

// Same computation as singularity_ss with weight labels (compact case).
SSResult weight_compact(const ResolutionDatum& r);

// Weight spectral sequence of a smooth compactification datum: E_1 rows are
// the Gysin complexes, E_2 their cohomology, filtration read off E_2.
SSResult weight_smooth(const GysinDatum& g, const std::optional<GradedModule>& expected_h = {});

// General case: E_1 combines the per-vertex Gysin rows over the cube.
SSResult weight_general(const GeneralWeightDatum& d);

struct MVVerdict {
    struct PerDegree {
        int q = 0;
        bool injective = true, middle = true, surjective = true;
        bool pass() const { return injective && middle && surjective; }
    };
    std::vector<PerDegree> rows;
    bool pass() const;
};

// Exactness of 0 -> H(X) -> H(Xt) + H(Y) -> H(Yt) -> 0 in every degree.
MVVerdict mayer_vietoris_check(const SquareCohomologyDatum& s);

// Synthesize the blow-up square with center cohomology hy of codimension m
// inside hx. restriction is i*: H(X) -> H(Y) (defaults to the unit map in
// degree 0); chern provides the cup products with c_t(E) and is validated for
// degree consistency. The emitted datum passes mayer_vietoris_check by the
// projective-bundle shape of H(Yt) and the blow-up shape of H(Xt).
SquareCohomologyDatum blowup_synthesize(const GradedModule& hx, const GradedModule& hy, int m,
                                        const std::map<int, Matrix>& chern = {},
                                        const std::optional<std::map<int, Matrix>>& restriction = {});

struct E2CompareVerdict {
    bool cells_equal = true;
    bool filtrations_equal = true;
    std::string detail;
    bool pass() const { return cells_equal && filtrations_equal; }
};

E2CompareVerdict e2_compare(const SSResult& a, const SSResult& b);

// 0 = L_{-1} and L_n = H^n (singularity), or W_{-1} = 0 and W_{2n} = H^n.
bool filtration_bounds_ok(const FiltrationOnCohomology& f, RecenterRule rule);

}  // namespace wfilt
