#pragma once

#include "wfilt/complexes.hpp"

namespace wfilt {

// Finite Delta-complex: cells per dimension, each k-cell listing its k+1
// ordered faces (face i omits vertex i). Vertices have no faces. These ground
// the cohomology inputs of the descent assemblies.
struct DeltaModel {
    // cells[k][c] = face index list of cell c in dimension k
    std::vector<std::vector<std::vector<int>>> cells;

    int max_dim() const { return static_cast<int>(cells.size()) - 1; }
    int count(int k) const {
        return (k >= 0 && k <= max_dim()) ? static_cast<int>(cells[k].size()) : 0;
    }
    void validate() const;
};

DeltaModel point();
DeltaModel points(int k);
DeltaModel circle();
DeltaModel wedge_circles(int k);
DeltaModel sphere2();
DeltaModel torus();

// Quotient model identifying vertex w with vertex v.
DeltaModel identify_vertices(const DeltaModel& m, int v, int w);
DeltaModel disjoint_union(const DeltaModel& a, const DeltaModel& b);

// Simplicial cochain complex of the model over the given ring.
CochainComplex cochains(const DeltaModel& m, const Ring& ring);

// Dimension-preserving cell assignment respecting faces.
struct CellMap {
    DeltaModel source, target;
    std::vector<std::vector<int>> assign;  // per dimension, per source cell

    void validate() const;
};

CellMap make_cell_map(DeltaModel source, DeltaModel target, std::vector<std::vector<int>> assign);
CellMap identity_cell_map(const DeltaModel& m);
CellMap compose(const CellMap& outer, const CellMap& inner);

// Pullback on cochains: a chain map cochains(target) -> cochains(source).
ChainMap induced(const CellMap& f, const Ring& ring);

}  // namespace wfilt
