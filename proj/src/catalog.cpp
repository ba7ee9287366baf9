#include "wfilt/catalog.hpp"

#include "wfilt/spaces.hpp"

namespace wfilt::catalog {

namespace {

Matrix mat(const Ring& rg, int r, int c, std::vector<long> vals) {
    std::vector<Scalar> e;
    for (long v : vals) e.emplace_back(v);
    return Matrix(rg, r, c, e);
}

GradedModule graded(const Ring& rg, int k0, const std::vector<int>& ranks) {
    return free_graded(rg, k0, ranks);
}

}  // namespace

GysinDatum serre_p1xp1(const Ring& ring) {
    // components: 1 = P1 x {0}, 2 = P1 x {inf}, 3 = {0} x P1, 4 = {inf} x P1
    // H^2(P1 x P1) basis: (a, b) with a = [{pt} x P1], b = [P1 x {pt}];
    // [D1] = [D2] = b, [D3] = [D4] = a
    GysinDatum g;
    g.ring = ring;
    g.num_components = 4;
    g.strata[0u] = graded(ring, 0, {1, 0, 2, 0, 1});
    for (Stratum s : {1u, 2u, 4u, 8u}) g.strata[s] = graded(ring, 0, {1, 0, 1});
    for (Stratum s : {5u, 9u, 6u, 10u}) g.strata[s] = graded(ring, 0, {1});
    for (Stratum s : {1u, 2u})
        g.gysin[{0u, s}] = {{0, mat(ring, 2, 1, {0, 1})}, {2, mat(ring, 1, 1, {1})}};
    for (Stratum s : {4u, 8u})
        g.gysin[{0u, s}] = {{0, mat(ring, 2, 1, {1, 0})}, {2, mat(ring, 1, 1, {1})}};
    for (auto [i, j] : std::vector<std::pair<Stratum, Stratum>>{
             {1u, 5u}, {4u, 5u}, {1u, 9u}, {8u, 9u}, {2u, 6u}, {4u, 6u}, {2u, 10u}, {8u, 10u}})
        g.gysin[{i, j}] = {{0, mat(ring, 1, 1, {1})}};
    return make_gysin_datum(g);
}

GysinDatum serre_ruled(const Ring& ring) {
    // ruled surface over an elliptic curve, one boundary section C0;
    // H^2 basis: (fiber f, section s), [C0] = s
    GysinDatum g;
    g.ring = ring;
    g.num_components = 1;
    g.strata[0u] = graded(ring, 0, {1, 2, 2, 2, 1});
    g.strata[1u] = graded(ring, 0, {1, 2, 1});
    g.gysin[{0u, 1u}] = {{0, mat(ring, 2, 1, {0, 1})},
                         {1, Matrix::identity(ring, 2)},
                         {2, mat(ring, 1, 1, {1})}};
    return make_gysin_datum(g);
}

GysinDatum real_punctured_plane() {
    Ring f2 = Ring::prime_field(2);
    // Klein bottle with two disjoint boundary circles: the exceptional line
    // and the line at infinity; their classes form a basis of H^1
    GysinDatum g;
    g.ring = f2;
    g.real_mode = true;
    g.num_components = 2;
    g.strata[0u] = graded(f2, 0, {1, 2, 1});
    g.strata[1u] = graded(f2, 0, {1, 1});
    g.strata[2u] = graded(f2, 0, {1, 1});
    g.gysin[{0u, 1u}] = {{0, mat(f2, 2, 1, {1, 0})}, {1, mat(f2, 1, 1, {1})}};
    g.gysin[{0u, 2u}] = {{0, mat(f2, 2, 1, {0, 1})}, {1, mat(f2, 1, 1, {1})}};
    return make_gysin_datum(g);
}

GysinDatum real_cylinder() {
    Ring f2 = Ring::prime_field(2);
    // torus with one boundary circle
    GysinDatum g;
    g.ring = f2;
    g.real_mode = true;
    g.num_components = 1;
    g.strata[0u] = graded(f2, 0, {1, 2, 1});
    g.strata[1u] = graded(f2, 0, {1, 1});
    g.gysin[{0u, 1u}] = {{0, mat(f2, 2, 1, {1, 0})}, {1, mat(f2, 1, 1, {1})}};
    return make_gysin_datum(g);
}

GysinDatum compact_smooth(const Ring& ring, const std::vector<int>& h_ranks) {
    GysinDatum g;
    g.ring = ring;
    g.num_components = 0;
    g.strata[0u] = graded(ring, 0, h_ranks);
    return make_gysin_datum(g);
}

namespace {

GysinDatum p2_with_line(const Ring& ring) {
    GysinDatum g;
    g.ring = ring;
    g.num_components = 1;
    g.strata[0u] = graded(ring, 0, {1, 0, 1, 0, 1});
    g.strata[1u] = graded(ring, 0, {1, 0, 1});
    g.gysin[{0u, 1u}] = {{0, mat(ring, 1, 1, {1})}, {2, mat(ring, 1, 1, {1})}};
    return make_gysin_datum(g);
}

// blown-up P2, boundary = strict transform of the line only (center off the
// line); H^2 basis (h, e)
GysinDatum blp2_line_off(const Ring& ring) {
    GysinDatum g;
    g.ring = ring;
    g.num_components = 1;
    g.strata[0u] = graded(ring, 0, {1, 0, 2, 0, 1});
    g.strata[1u] = graded(ring, 0, {1, 0, 1});
    g.gysin[{0u, 1u}] = {{0, mat(ring, 2, 1, {1, 0})}, {2, mat(ring, 1, 1, {1})}};
    return make_gysin_datum(g);
}

// blown-up P2 with boundary = strict transform + exceptional line (center on
// the line); components 1 = Lt, 2 = E, meeting in one point
GysinDatum blp2_line_on(const Ring& ring) {
    GysinDatum g;
    g.ring = ring;
    g.num_components = 2;
    g.strata[0u] = graded(ring, 0, {1, 0, 2, 0, 1});
    g.strata[1u] = graded(ring, 0, {1, 0, 1});
    g.strata[2u] = graded(ring, 0, {1, 0, 1});
    g.strata[3u] = graded(ring, 0, {1});
    g.gysin[{0u, 1u}] = {{0, mat(ring, 2, 1, {1, -1})}, {2, mat(ring, 1, 1, {1})}};
    g.gysin[{0u, 2u}] = {{0, mat(ring, 2, 1, {0, 1})}, {2, mat(ring, 1, 1, {1})}};
    g.gysin[{1u, 3u}] = {{0, mat(ring, 1, 1, {1})}};
    g.gysin[{2u, 3u}] = {{0, mat(ring, 1, 1, {1})}};
    return make_gysin_datum(g);
}

// twice blown-up P2, boundary = Lt'' + E'' + F; H^2 basis (h, e1, e2);
// [Lt''] = h - e1 - e2, [E''] = e1 - e2, [F] = e2; Lt'' and E'' are disjoint
GysinDatum blp2_twice(const Ring& ring) {
    GysinDatum g;
    g.ring = ring;
    g.num_components = 3;
    g.strata[0u] = graded(ring, 0, {1, 0, 3, 0, 1});
    g.strata[1u] = graded(ring, 0, {1, 0, 1});
    g.strata[2u] = graded(ring, 0, {1, 0, 1});
    g.strata[4u] = graded(ring, 0, {1, 0, 1});
    g.strata[5u] = graded(ring, 0, {1});
    g.strata[6u] = graded(ring, 0, {1});
    g.gysin[{0u, 1u}] = {{0, mat(ring, 3, 1, {1, -1, -1})}, {2, mat(ring, 1, 1, {1})}};
    g.gysin[{0u, 2u}] = {{0, mat(ring, 3, 1, {0, 1, -1})}, {2, mat(ring, 1, 1, {1})}};
    g.gysin[{0u, 4u}] = {{0, mat(ring, 3, 1, {0, 0, 1})}, {2, mat(ring, 1, 1, {1})}};
    g.gysin[{1u, 5u}] = {{0, mat(ring, 1, 1, {1})}};
    g.gysin[{4u, 5u}] = {{0, mat(ring, 1, 1, {1})}};
    g.gysin[{2u, 6u}] = {{0, mat(ring, 1, 1, {1})}};
    g.gysin[{4u, 6u}] = {{0, mat(ring, 1, 1, {1})}};
    return make_gysin_datum(g);
}

}  // namespace

GysinMorphismDatum identity_morphism(const GysinDatum& g) {
    GysinMorphismDatum m;
    m.source = g;
    m.target = g;
    m.multiplicity = Matrix::identity(g.ring, g.num_components);
    for (auto& [s, gm] : g.strata) {
        std::map<int, Matrix> per;
        for (auto& [k, part] : gm.parts) per.emplace(k, Matrix::identity(g.ring, part.gen_count()));
        m.pullbacks[{s, s}] = per;
    }
    return make_gysin_morphism(m);
}

GysinSquare blowup_p2_center_off_divisor(const Ring& ring) {
    GysinSquare s;
    s.x = p2_with_line(ring);
    s.xt = blp2_line_off(ring);
    s.y = compact_smooth(ring, {1});            // point
    s.yt = compact_smooth(ring, {1, 0, 1});     // exceptional P1, no boundary

    s.f.source = s.xt;
    s.f.target = s.x;
    s.f.multiplicity = mat(ring, 1, 1, {1});
    s.f.pullbacks[{0u, 0u}] = {{0, mat(ring, 1, 1, {1})},
                               {2, mat(ring, 2, 1, {1, 0})},
                               {4, mat(ring, 1, 1, {1})}};
    s.f.pullbacks[{1u, 1u}] = {{0, mat(ring, 1, 1, {1})}, {2, mat(ring, 1, 1, {1})}};

    s.i.source = s.y;
    s.i.target = s.x;
    s.i.multiplicity = Matrix(ring, 1, 0);
    s.i.pullbacks[{0u, 0u}] = {{0, mat(ring, 1, 1, {1})}};

    s.j.source = s.yt;
    s.j.target = s.xt;
    s.j.multiplicity = Matrix(ring, 1, 0);
    s.j.pullbacks[{0u, 0u}] = {{0, mat(ring, 1, 1, {1})}, {2, mat(ring, 1, 2, {0, -1})}};

    s.g.source = s.yt;
    s.g.target = s.y;
    s.g.multiplicity = Matrix(ring, 0, 0);
    s.g.pullbacks[{0u, 0u}] = {{0, mat(ring, 1, 1, {1})}};

    return make_gysin_square(s);
}

GysinMorphismDatum blowup_p2_center_on_divisor(const Ring& ring) {
    GysinMorphismDatum m;
    m.source = blp2_line_on(ring);
    m.target = p2_with_line(ring);
    m.multiplicity = mat(ring, 1, 2, {1, 1});
    m.pullbacks[{0u, 0u}] = {{0, mat(ring, 1, 1, {1})},
                             {2, mat(ring, 2, 1, {1, 0})},
                             {4, mat(ring, 1, 1, {1})}};
    m.pullbacks[{1u, 1u}] = {{0, mat(ring, 1, 1, {1})}, {2, mat(ring, 1, 1, {1})}};
    m.pullbacks[{1u, 2u}] = {{0, mat(ring, 1, 1, {1})}};
    return make_gysin_morphism(m);
}

DoubleBlowupData double_blowup_p2(const Ring& ring) {
    DoubleBlowupData out;
    out.first = blowup_p2_center_on_divisor(ring);

    GysinMorphismDatum second;
    second.source = blp2_twice(ring);
    second.target = out.first.source;  // blown-up P2 with Lt + E
    second.multiplicity = mat(ring, 2, 3, {1, 0, 1, 0, 1, 1});
    second.pullbacks[{0u, 0u}] = {
        {0, mat(ring, 1, 1, {1})},
        {2, mat(ring, 3, 2, {1, 0, 0, 1, 0, 0})},  // h -> h, e -> e1
        {4, mat(ring, 1, 1, {1})}};
    second.pullbacks[{1u, 1u}] = {{0, mat(ring, 1, 1, {1})}, {2, mat(ring, 1, 1, {1})}};
    second.pullbacks[{1u, 4u}] = {{0, mat(ring, 1, 1, {1})}};
    second.pullbacks[{2u, 2u}] = {{0, mat(ring, 1, 1, {1})}, {2, mat(ring, 1, 1, {1})}};
    second.pullbacks[{2u, 4u}] = {{0, mat(ring, 1, 1, {1})}};
    second.pullbacks[{3u, 5u}] = {{0, mat(ring, 1, 1, {1})}};
    second.pullbacks[{3u, 6u}] = {{0, mat(ring, 1, 1, {1})}};
    out.second = make_gysin_morphism(second);

    GysinMorphismDatum comp;
    comp.source = out.second.source;
    comp.target = out.first.target;
    comp.multiplicity = out.first.multiplicity.mul(out.second.multiplicity);
    comp.pullbacks[{0u, 0u}] = {{0, mat(ring, 1, 1, {1})},
                                {2, mat(ring, 3, 1, {1, 0, 0})},
                                {4, mat(ring, 1, 1, {1})}};
    comp.pullbacks[{1u, 1u}] = {{0, mat(ring, 1, 1, {1})}, {2, mat(ring, 1, 1, {1})}};
    comp.pullbacks[{1u, 2u}] = {{0, mat(ring, 1, 1, {1})}};
    comp.pullbacks[{1u, 4u}] = {{0, mat(ring, 1, 1, {1})}};
    out.composite = make_gysin_morphism(comp);
    return out;
}

namespace {

ComplexDiagram edge_diagram(const Ring& rg, CochainComplex a, CochainComplex b, CochainComplex c,
                            ChainMap u, ChainMap v) {
    std::map<Subset, CochainComplex> at{{1u, std::move(a)}, {2u, std::move(b)}, {3u, std::move(c)}};
    std::map<std::pair<Subset, Subset>, ChainMap> cof{{{1u, 3u}, std::move(u)},
                                                      {{2u, 3u}, std::move(v)}};
    return make_complex_diagram(rg, 1, at, cof);
}

}  // namespace

ComplexDiagram nodal_punctured_torus_square(const Ring& ring) {
    DeltaModel xt = wedge_circles(3);
    DeltaModel center = point();
    DeltaModel exc = points(2);
    ChainMap u = induced(make_cell_map(exc, xt, {{0, 0}}), ring);
    ChainMap v = induced(make_cell_map(exc, center, {{0, 0}}), ring);
    return edge_diagram(ring, cochains(xt, ring), cochains(center, ring), cochains(exc, ring), u,
                        v);
}

ComplexDiagram nodal_punctured_torus_square_redundant(const Ring& ring) {
    DeltaModel xt = wedge_circles(3);
    DeltaModel center = points(2);   // node image and one extra smooth point
    DeltaModel exc = points(3);      // two node preimages and the extra point
    ChainMap u = induced(make_cell_map(exc, xt, {{0, 0, 0}}), ring);
    ChainMap v = induced(make_cell_map(exc, center, {{0, 0, 1}}), ring);
    return edge_diagram(ring, cochains(xt, ring), cochains(center, ring), cochains(exc, ring), u,
                        v);
}

ComplexDiagram nodal_sphere_square(const Ring& ring) {
    DeltaModel xt = sphere2();
    DeltaModel center = point();
    DeltaModel exc = points(2);
    ChainMap u = induced(make_cell_map(exc, xt, {{0, 1}}), ring);
    ChainMap v = induced(make_cell_map(exc, center, {{0, 0}}), ring);
    return edge_diagram(ring, cochains(xt, ring), cochains(center, ring), cochains(exc, ring), u,
                        v);
}

ComplexDiagram two_p1_cycle_square(const Ring& ring) {
    DeltaModel xt = disjoint_union(sphere2(), sphere2());
    DeltaModel center = points(2);
    DeltaModel exc = points(4);
    // exceptional points (aN, aS, bN, bS) include into the two spheres and
    // map to the two nodes
    ChainMap u = induced(make_cell_map(exc, xt, {{0, 1, 4, 5}}), ring);
    ChainMap v = induced(make_cell_map(exc, center, {{0, 1, 0, 1}}), ring);
    return edge_diagram(ring, cochains(xt, ring), cochains(center, ring), cochains(exc, ring), u,
                        v);
}

ComplexDiagram n_times_cstar_square(const Ring& ring) {
    // formal cohomology models with zero differential:
    // Xt = P1 x C*, center = C*, exceptional = C* + C*
    CochainComplex xt = formal_complex(ring, 0, {1, 1, 1, 1});
    CochainComplex center = formal_complex(ring, 0, {1, 1});
    CochainComplex exc = formal_complex(ring, 0, {2, 2});
    Matrix diag2 = mat(ring, 2, 1, {1, 1});
    ChainMap u = make_chain_map(xt, exc, 0, {diag2, diag2, Matrix(ring, 0, 1), Matrix(ring, 0, 1)});
    ChainMap v = make_chain_map(center, exc, 0, {diag2, diag2});
    return edge_diagram(ring, xt, center, exc, u, v);
}

namespace {

// (P1 x P1, P1 x C*): two horizontal boundary lines, H^2 basis
// (a, b) = ([pt x P1], [P1 x pt]); both boundary classes are b
GysinDatum p1xcstar_pair(const Ring& ring) {
    GysinDatum g;
    g.ring = ring;
    g.num_components = 2;
    g.strata[0u] = free_graded(ring, 0, {1, 0, 2, 0, 1});
    g.strata[1u] = free_graded(ring, 0, {1, 0, 1});
    g.strata[2u] = free_graded(ring, 0, {1, 0, 1});
    g.gysin[{0u, 1u}] = {{0, mat(ring, 2, 1, {0, 1})}, {2, mat(ring, 1, 1, {1})}};
    g.gysin[{0u, 2u}] = {{0, mat(ring, 2, 1, {0, 1})}, {2, mat(ring, 1, 1, {1})}};
    return make_gysin_datum(g);
}

// (P1, C*): the two boundary points
GysinDatum cstar_pair(const Ring& ring) {
    GysinDatum g;
    g.ring = ring;
    g.num_components = 2;
    g.strata[0u] = free_graded(ring, 0, {1, 0, 1});
    g.strata[1u] = free_graded(ring, 0, {1});
    g.strata[2u] = free_graded(ring, 0, {1});
    g.gysin[{0u, 1u}] = {{0, mat(ring, 1, 1, {1})}};
    g.gysin[{0u, 2u}] = {{0, mat(ring, 1, 1, {1})}};
    return make_gysin_datum(g);
}

// (P1 + P1, C* + C*): four boundary points, two on each component
GysinDatum two_cstar_pair(const Ring& ring) {
    GysinDatum g;
    g.ring = ring;
    g.num_components = 4;
    g.strata[0u] = free_graded(ring, 0, {2, 0, 2});
    for (Stratum s : {1u, 2u, 4u, 8u}) g.strata[s] = free_graded(ring, 0, {1});
    g.gysin[{0u, 1u}] = {{0, mat(ring, 2, 1, {1, 0})}};
    g.gysin[{0u, 2u}] = {{0, mat(ring, 2, 1, {1, 0})}};
    g.gysin[{0u, 4u}] = {{0, mat(ring, 2, 1, {0, 1})}};
    g.gysin[{0u, 8u}] = {{0, mat(ring, 2, 1, {0, 1})}};
    return make_gysin_datum(g);
}

}  // namespace

GeneralWeightDatum n_times_cstar_general(const Ring& ring) {
    GeneralWeightDatum d;
    d.ring = ring;
    d.n = 1;
    d.at.emplace(1u, p1xcstar_pair(ring));
    d.at.emplace(2u, cstar_pair(ring));
    d.at.emplace(3u, two_cstar_pair(ring));

    // edge (Xt-bar side): P1_a + P1_b -> P1 x P1 as {0} x P1 and {inf} x P1
    GysinMorphismDatum f;
    f.source = d.at.at(3u);
    f.target = d.at.at(1u);
    f.multiplicity = mat(ring, 2, 4, {1, 0, 1, 0, 0, 1, 0, 1});
    f.pullbacks[{0u, 0u}] = {{0, mat(ring, 2, 1, {1, 1})},
                             {2, mat(ring, 2, 2, {0, 1, 0, 1})}};
    f.pullbacks[{1u, 1u}] = {{0, mat(ring, 1, 1, {1})}};
    f.pullbacks[{1u, 4u}] = {{0, mat(ring, 1, 1, {1})}};
    f.pullbacks[{2u, 2u}] = {{0, mat(ring, 1, 1, {1})}};
    f.pullbacks[{2u, 8u}] = {{0, mat(ring, 1, 1, {1})}};
    d.edges.emplace(std::make_pair(1u, 3u), make_gysin_morphism(f));

    // edge (center side): P1_a + P1_b -> P1, each component identically
    GysinMorphismDatum g;
    g.source = d.at.at(3u);
    g.target = d.at.at(2u);
    g.multiplicity = mat(ring, 2, 4, {1, 0, 1, 0, 0, 1, 0, 1});
    g.pullbacks[{0u, 0u}] = {{0, mat(ring, 2, 1, {1, 1})}, {2, mat(ring, 2, 1, {1, 1})}};
    g.pullbacks[{1u, 1u}] = {{0, mat(ring, 1, 1, {1})}};
    g.pullbacks[{1u, 4u}] = {{0, mat(ring, 1, 1, {1})}};
    g.pullbacks[{2u, 2u}] = {{0, mat(ring, 1, 1, {1})}};
    g.pullbacks[{2u, 8u}] = {{0, mat(ring, 1, 1, {1})}};
    d.edges.emplace(std::make_pair(2u, 3u), make_gysin_morphism(g));

    return make_general_weight_datum(d);
}

GeneralWeightDatum single_vertex_general(const GysinDatum& g) {
    GeneralWeightDatum d;
    d.ring = g.ring;
    d.n = 0;
    d.at.emplace(1u, g);
    return make_general_weight_datum(d);
}

}  // namespace wfilt::catalog
