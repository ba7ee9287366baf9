#include "wfilt/documents.hpp"

#include "wfilt/catalog.hpp"
#include "wfilt/spaces.hpp"

namespace wfilt {

namespace {

InputDocument resolution_doc(const Ring& rg, const ComplexDiagram& d) {
    InputDocument doc;
    doc.kind = "resolution";
    doc.ring = rg;
    ResolutionDatum r;
    r.diagram = d;
    doc.resolution = r;
    return doc;
}

InputDocument gysin_doc(const GysinDatum& g, std::optional<GradedModule> expected = {}) {
    InputDocument doc;
    doc.kind = "gysin";
    doc.ring = g.ring;
    doc.gysin = g;
    doc.expected_h = std::move(expected);
    return doc;
}

}  // namespace

std::map<std::string, InputDocument> shipped_documents() {
    std::map<std::string, InputDocument> out;
    Ring z = Ring::integers(), q = Ring::rationals();

    // resolution documents
    out.emplace("nodal_punctured_torus.json",
                resolution_doc(q, catalog::nodal_punctured_torus_square(q)));
    out.emplace("nodal_punctured_torus_z.json",
                resolution_doc(z, catalog::nodal_punctured_torus_square(z)));
    {
        InputDocument doc = resolution_doc(q, catalog::nodal_punctured_torus_square(q));
        ResolutionDatum alt;
        alt.diagram = catalog::nodal_punctured_torus_square_redundant(q);
        doc.alternate = alt;
        out.emplace("nodal_punctured_torus_pair.json", doc);
    }
    out.emplace("nodal_sphere.json", resolution_doc(z, catalog::nodal_sphere_square(z)));
    out.emplace("two_p1_cycle.json", resolution_doc(z, catalog::two_p1_cycle_square(z)));
    out.emplace("ncstar_resolution.json", resolution_doc(q, catalog::n_times_cstar_square(q)));
    {
        // smooth space: single-vertex resolution of the torus model
        CochainComplex t = cochains(torus(), z);
        std::map<Subset, CochainComplex> at{{1u, t}};
        out.emplace("smooth_torus_resolution.json",
                    resolution_doc(z, make_complex_diagram(z, 0, at, {})));
    }
    out.emplace("smooth_torus_gysin.json",
                gysin_doc(catalog::compact_smooth(z, {1, 2, 1})));

    // weight documents
    out.emplace("serre_p1xp1.json",
                gysin_doc(catalog::serre_p1xp1(q), free_graded(q, 0, {1, 2, 1})));
    out.emplace("serre_ruled.json",
                gysin_doc(catalog::serre_ruled(q), free_graded(q, 0, {1, 2, 1})));
    out.emplace("real_punctured_plane.json", gysin_doc(catalog::real_punctured_plane()));
    out.emplace("real_cylinder.json", gysin_doc(catalog::real_cylinder()));
    {
        InputDocument doc;
        doc.kind = "general_weight";
        doc.ring = q;
        doc.general_weight = catalog::n_times_cstar_general(q);
        out.emplace("ncstar_general.json", doc);
    }

    // elementary acyclic squares at the Gysin level
    {
        InputDocument doc;
        doc.kind = "gysin";
        doc.ring = z;
        doc.gysin_square = catalog::blowup_p2_center_off_divisor(z);
        out.emplace("gysin_square_off.json", doc);
    }
    {
        InputDocument doc;
        doc.kind = "gysin";
        doc.ring = z;
        doc.blowdown = catalog::blowup_p2_center_on_divisor(z);
        out.emplace("gysin_blowdown_on.json", doc);
    }

    // Mayer-Vietoris square of the synthesized point blow-up of P^2
    {
        InputDocument doc;
        doc.kind = "square";
        doc.ring = z;
        doc.square = blowup_synthesize(free_graded(z, 0, {1, 0, 1, 0, 1}),
                                       free_graded(z, 0, {1}), 2);
        out.emplace("mv_blowup_p2.json", doc);
    }

    // filtered complexes for the decalage checks
    {
        InputDocument doc;
        doc.kind = "filtered_complex";
        doc.ring = z;
        doc.filtered = canonical_filtration(cochains(sphere2(), z));
        out.emplace("decalage_sphere.json", doc);
    }
    {
        InputDocument doc;
        doc.kind = "filtered_complex";
        doc.ring = q;
        doc.filtered = trivial_filtration(zero_complex(q));
        out.emplace("empty.json", doc);
    }

    // cubical document with per-vertex canonical filtrations
    {
        InputDocument doc;
        doc.kind = "cubical";
        doc.ring = z;
        ComplexDiagram d = catalog::nodal_sphere_square(z);
        std::map<Subset, FilteredComplex> at;
        for (const auto& [a, k] : d.at) at.emplace(a, canonical_filtration(k));
        doc.cubical = make_filtered_diagram(z, d.n, at, d.cofaces);
        out.emplace("cubical_nodal_sphere.json", doc);
    }

    return out;
}

}  // namespace wfilt
