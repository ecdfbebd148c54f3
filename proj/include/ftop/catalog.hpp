#pragma once

#include "ftop/complex.hpp"
#include "ftop/cover.hpp"
#include "ftop/cylinder.hpp"
#include "ftop/poset.hpp"

#include <string>

namespace ftop::catalog {

/// prefix1 < prefix2 < ... < prefix{n}.
Poset chain(const std::string& prefix, std::size_t n);
Poset antichain(const std::string& prefix, std::size_t n);

/// X0 = {a1<a2}, X1 = {b1<b2<b3}, X2 = {c1<c2}; R0 = {(a1,b1),(a2,b2)} going
/// right, R1 = {(c1,b2),(c2,b3)} going left.
CylinderSpec worked_example();

/// Triangles [v0,v1,v2] and [v0,v2,v3] sharing the edge [v0,v2].
SimplicialComplex triangle_a();
SimplicialComplex triangle_b();
Cover triangles_cover();

/// 8 vertices, 17 triangles.
SimplicialComplex dunce_hat();
/// 6-vertex projective plane.
SimplicialComplex projective_plane();

/// Hexagon v0..v5 covered by the arcs 1 = v0-v1-v2, 2 = v2-v3-v4, 3 = v4-v5-v0.
SimplicialComplex hexagon();
Cover circle_cover();

SimplicialComplex triangle_boundary();
SimplicialComplex solid_triangle();

}  // namespace ftop::catalog
