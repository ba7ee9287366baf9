#pragma once

#include "wfilt/cubical.hpp"
#include "wfilt/descent.hpp"
#include "wfilt/gysin.hpp"

namespace wfilt {

// Built-in example data: the worked examples shipped as documents and used by
// the acceptance suite. Everything here is validated on construction.
namespace catalog {

// (P1 x P1, C* x C*): four boundary lines meeting in four points.
GysinDatum serre_p1xp1(const Ring& ring);

// The ruled-surface compactification of C* x C* over an elliptic curve:
// one boundary section, H^1 survives restriction.
GysinDatum serre_ruled(const Ring& ring);

// Real mode: (blown-up RP^2, R^2 - {pt}), boundary = exceptional circle and
// the line at infinity, Z/2 coefficients.
GysinDatum real_punctured_plane();

// Real mode: (RP^1 x RP^1, cylinder), boundary = one circle.
GysinDatum real_cylinder();

// Compact smooth space with no boundary divisor (N = 0) and the given
// cohomology ranks from degree 0.
GysinDatum compact_smooth(const Ring& ring, const std::vector<int>& h_ranks);

// Blow-up of P^2 at a point away from the boundary line: the elementary
// acyclic square of pairs with the center not inside the divisor.
GysinSquare blowup_p2_center_off_divisor(const Ring& ring);

// Blow-up of P^2 at a point on the boundary line; the Gysin functor map
// G(X,U) -> G(Xt,Ut) for this square is a quasi-isomorphism.
GysinMorphismDatum blowup_p2_center_on_divisor(const Ring& ring);

// Second blow-up at the intersection of the strict transform and the
// exceptional line, as a morphism (X'',U'') -> (Xt,Ut), plus the composite
// (X'',U'') -> (X,U). Multiplicities: M_{f o g} = M_f * M_g.
struct DoubleBlowupData {
    GysinMorphismDatum first;      // (Xt,Ut) -> (X,U)
    GysinMorphismDatum second;     // (X'',U'') -> (Xt,Ut)
    GysinMorphismDatum composite;  // (X'',U'') -> (X,U)
};
DoubleBlowupData double_blowup_p2(const Ring& ring);

// Identity morphism datum on a Gysin datum.
GysinMorphismDatum identity_morphism(const GysinDatum& g);

// Chain-level resolution squares (cube dimension 1) over Delta-models.
// The augmentation base is not part of these; the assemblies work from the
// diagram alone.
ComplexDiagram nodal_punctured_torus_square(const Ring& ring);
ComplexDiagram nodal_punctured_torus_square_redundant(const Ring& ring);
ComplexDiagram nodal_sphere_square(const Ring& ring);
ComplexDiagram two_p1_cycle_square(const Ring& ring);
// Formal resolution square of N x C* (vertex cohomology models with d = 0).
ComplexDiagram n_times_cstar_square(const Ring& ring);

// General-weight datum of N x C*: the resolution square of the nodal factor,
// each vertex compactified (P1 x P1, P1, P1 + P1) with the edge morphisms.
GeneralWeightDatum n_times_cstar_general(const Ring& ring);

// Single-vertex general datum wrapping a smooth-compactification datum.
GeneralWeightDatum single_vertex_general(const GysinDatum& g);

}  // namespace catalog
}  // namespace wfilt
