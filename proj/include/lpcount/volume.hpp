#pragma once

#include "lpcount/multipoly.hpp"
#include "lpcount/polytope.hpp"
#include "lpcount/unipoly.hpp"

namespace lpcount {

/// vol(P(l1..ld)) as a polynomial in the facet offsets, valid on the
/// chamber of the base offsets (same combinatorial type). Total degree is
/// exactly n and evaluation at the base offsets gives the exact volume.
struct VolumePolynomial {
    MultiPoly poly;
    RationalVector base_offsets;
    CombinatorialType type_guard;
};

/// Sum of the lattice-normalized facet volumes of P(l1..ld) as a polynomial
/// in the offsets; total degree n-1.
struct BoundaryVolumePolynomial {
    MultiPoly poly;
    RationalVector base_offsets;
};

/// |det(v1-v0, ..., vn-v0)| / n! for n+1 points in R^n. Degenerate input
/// gives zero, not an error.
Rational simplex_volume(const std::vector<RationalVector>& vertices);

/// Exact Euclidean volume by coning a boundary triangulation to a base
/// vertex. Requires a full-dimensional VRep.
Rational polytope_volume(const VRep& v);

/// Integer basis of the lattice {x in Z^n : <x, normal> = 0} for a primitive
/// normal; n-1 vectors.
std::vector<std::vector<Int>> hyperplane_lattice_basis(const std::vector<Int>& normal);

/// Lattice-normalized (n-1)-volume of facet `facet`: the Euclidean volume
/// divided by the length of the primitive normal, computed rationally by
/// mapping the facet onto Z^{n-1} through a lattice basis of the facet
/// hyperplane. Each simplex is double-checked against its Gram determinant
/// (an exact comparison of squares). Facets of a 1-dimensional polytope are
/// points with normalized volume 1.
Rational facet_volume_normalized(const HRep& h, const VRep& v, int facet);

/// Sum of facet_volume_normalized over all facets.
Rational boundary_volume(const HRep& h, const VRep& v);

/// Exact interpolation of vol(P(l)) of total degree <= n from sample offsets
/// base + delta*beta, |beta| <= n, all verified to share the base
/// combinatorial type (the perturbation box halves on a mismatch, up to 10
/// retries); the result is checked on at least 5 held-out sample offsets.
VolumePolynomial volume_polynomial(const HRep& h);

/// Sum over i of d(vp)/d(l_i), cross-checked at the base offsets against
/// boundary_volume; a mismatch is a hard internal error.
BoundaryVolumePolynomial boundary_volume_polynomial(const HRep& h, const VolumePolynomial& vp);

}  // namespace lpcount
