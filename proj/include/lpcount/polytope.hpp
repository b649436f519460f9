#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lpcount/linalg.hpp"
#include "lpcount/rational.hpp"

namespace lpcount {

/// Half-space presentation of a bounded full-dimensional polytope:
/// the intersection over i of {x : <x, normals[i]> <= offsets[i]}.
/// Normals are primitive integer vectors; every half-space supports a facet.
/// Facet order in the source document defines facet indices everywhere
/// downstream.
struct HRep {
    int dimension = 0;
    std::vector<std::vector<Int>> normals;
    std::vector<Rational> offsets;

    int facet_count() const { return static_cast<int>(normals.size()); }
};

/// Enumerated vertex set. incidence[i] is the set of facet indices active at
/// vertices[i]; vertices are sorted lexicographically.
struct VRep {
    std::vector<RationalVector> vertices;
    std::vector<std::set<int>> incidence;

    int vertex_count() const { return static_cast<int>(vertices.size()); }
};

/// Which facet subsets meet in a vertex; invariant under offset
/// perturbations that preserve the face lattice.
using CombinatorialType = std::set<std::set<int>>;

inline constexpr int kMaxDimension = 4;       // hard desk-scale limit
inline constexpr int kSoftFacetLimit = 12;    // warning only

/// Divides out the gcd of the entries, keeping direction.
/// Returns the primitive vector and the (positive) scale removed.
std::pair<std::vector<Int>, Int> primitivize(const std::vector<Int>& v);

/// Validates and canonicalizes raw half-space data: primitivizes normals
/// (rescaling offsets, with a warning), rejects duplicates and redundant
/// half-spaces, and verifies the intersection is bounded, nonempty and
/// full-dimensional.
HRep make_hrep(int dimension, std::vector<std::vector<Int>> normals,
               std::vector<Rational> offsets, std::vector<std::string>* warnings = nullptr);

/// Parses the JSON input schema: {"dimension": n, "normals": [[int]],
/// "offsets": [int or "p/q"]}. Unknown keys are ignored.
HRep parse_hrep(const std::string& json_text, std::vector<std::string>* warnings = nullptr);

/// parse_hrep on a file's contents.
HRep load_hrep(const std::string& path, std::vector<std::string>* warnings = nullptr);

/// All vertices, found by solving every nonsingular n-subset of facet
/// equations and keeping solutions feasible for every constraint. Each
/// vertex carries its full active set.
VRep enumerate_vertices(const HRep& h);

bool is_integral(const VRep& v);

/// True iff every vertex lies on exactly n facets with linearly independent
/// edge directions.
bool is_simple(const VRep& v);

/// True iff at every vertex the primitive integer edge vectors form a matrix
/// of determinant +-1. Throws NotSimpleError on non-simple input.
bool is_delzant(const HRep& h, const VRep& v);

CombinatorialType combinatorial_type(const VRep& v);
CombinatorialType combinatorial_type(const HRep& h);

/// Edge directions at a simple vertex, one per active facet in ascending
/// facet order; each points along the edge leaving the vertex.
std::vector<RationalVector> vertex_edge_directions(const HRep& h, const VRep& v, int vertex);

/// Rational direction scaled to a primitive integer vector, same direction.
std::vector<Int> primitive_direction(const RationalVector& direction);

/// Stable 16-hex-digit digest of the canonical facet data.
std::string polytope_digest(const HRep& h);

}  // namespace lpcount
