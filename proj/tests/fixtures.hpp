#pragma once

// Shared instances used by the test binaries and the acceptance suite. All of
// them go through the public constructors, so building a fixture already
// exercises the validation path it relies on.

#include "multifan/fan.hpp"
#include "multifan/polytope.hpp"
#include "multifan/rng.hpp"

namespace multifan::fixtures {

/// m=3, n=2, rays (1,0),(0,1),(-1,-1), every cone multiplicity +1.
MultiFan cp2();

/// Normal fan of the square: rays e1,e2,-e1,-e2 on the 4-cycle, weights +1.
MultiFan square();

/// n=3 octahedral fan: rays +-e1,+-e2,+-e3, all 8 octants, weights +1.
MultiFan octahedron();

/// Cross-polytope family generalizing square() and octahedron(): 2n rays
/// +-e1..+-en, facets pick one sign per axis, weights +1.
MultiFan crossPolytope(int n);

/// Pentagram fan: rays (1,0),(-2,1),(1,-2),(0,1),(-1,-1) on the 5-cycle
/// {12,23,34,45,51} (1-based), weights +1. Its DH function takes the value 2
/// in the middle chamber.
MultiFan star();

/// 7-vertex vertex-minimal torus (facets {i,i+1,i+3} and {i,i+2,i+3} mod 7)
/// with moment-curve rays lambda(i) = (i+1, (i+1)^2, (i+1)^3) and weights
/// +-1 along a fundamental cycle.
MultiFan torus();

/// Triangle bipyramid fan on 5 rays; its vertex set {1,2,4,5} (1-based)
/// carries a (2,2)-flip.
MultiFan bipyramid();

/// Icosahedron boundary: 12 vertices, 20 facets (two caps and an antiprism
/// band).
SimplicialComplex icosahedron();

/// Fundamental-cycle weights on the icosahedron with random integer rays,
/// resampled until every facet triple is linearly independent.
MultiFan icosahedronFan(Rng& rng);

/// Complete fan with random integer rays (entries in [-5,5]) and a random
/// rational cycle drawn from the kernel of the boundary map on the
/// independent n-subsets. Ghost slots may remain.
MultiFan randomCompleteFan(Rng& rng, int n, int m);

MultiPolytope withConstants(const MultiFan& fan, const QVector& c);
MultiPolytope unitConstants(const MultiFan& fan);

/// Closed 1-cochains spanning the cohomology of K modulo exact ones (the
/// torus yields two). Each returned cochain is exactly closed and provably
/// not a coboundary.
std::vector<Cochain> closedNonExactOneCochains(const SimplicialComplex& k);

}  // namespace multifan::fixtures
