#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lpcount/polytope.hpp"
#include "lpcount/series.hpp"
#include "lpcount/unipoly.hpp"
#include "lpcount/volume.hpp"

namespace lpcount {

/// The three counting polynomials of a Delzant integral polytope:
/// ehrhart(k) counts the lattice points of the k-fold dilate, interior(k)
/// its interior points, boundary(k) the points on the boundary. They satisfy
/// ehrhart - interior = boundary exactly.
struct CountingPolynomials {
    UniPoly ehrhart;
    UniPoly interior;
    UniPoly boundary;
    std::string polytope_digest;
};

/// Brute-force enumeration result for one dilation factor. The optional
/// weight list holds the boundary lattice points (the torus weights of the
/// formal quantization of the boundary), sorted lexicographically.
struct CountReport {
    long long k = 0;
    long long total = 0;
    long long boundary = 0;
    long long interior = 0;
    std::optional<std::vector<std::vector<long long>>> weights;
};

/// Everything the pipeline derives in one pass over a shared volume
/// polynomial, so verification reports do not recompute it per polynomial.
struct PipelineOutputs {
    CountingPolynomials polynomials;
    VolumePolynomial volume_poly;
    BoundaryVolumePolynomial boundary_poly;
    VRep vrep;
    Rational boundary_vol;
};

/// Computes all three polynomials from one volume polynomial. Validates that
/// the input is integral and Delzant, and enforces the subtraction identity
/// between the operator route and ehrhart - interior as a hard check.
PipelineOutputs run_pipeline(const HRep& h);

/// Todd-operator count of lattice points of the dilate: applies the product
/// of per-facet Todd operators to the volume polynomial and substitutes
/// offsets scaled by the dilation parameter.
UniPoly ehrhart_polynomial(const HRep& h);

/// Same with the sign-flipped Todd series: counts interior points.
UniPoly interior_polynomial(const HRep& h);

/// The boundary counting polynomial: per-facet Ahat operators times the
/// inverse-Ahat operator in the sum of the derivatives, applied to the
/// boundary volume polynomial.
UniPoly boundary_polynomial(const HRep& h);

/// ehrhart - interior; must match boundary_polynomial exactly (enforced).
UniPoly boundary_polynomial_by_subtraction(const HRep& h);

CountingPolynomials counting_polynomials(const HRep& h);

/// Exact lattice-point enumeration over the bounding box of the dilate with
/// per-slab constraint bounds on the innermost coordinate. Requires an
/// integral polytope and k >= 1; guarded by the enumeration cell limit.
CountReport count_lattice_points(const HRep& h, long long k, bool collect_weights = false,
                                 bool weights_boundary_only = true);

/// Sorted lattice points of the dilate (boundary_only = false) or of its
/// boundary (boundary_only = true).
std::vector<std::vector<long long>> quantization_weights(const HRep& h, long long k,
                                                         bool boundary_only);

/// Cell guard for the enumeration bounding box; default 10^8, overridable
/// through the LPCOUNT_CELL_GUARD environment variable.
Int enumeration_cell_guard();

}  // namespace lpcount
