#include "lpcount/volume.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace lpcount {

namespace {

RationalMatrix edge_matrix(const std::vector<RationalVector>& vertices) {
    RationalMatrix rows;
    rows.reserve(vertices.size() - 1);
    for (std::size_t i = 1; i < vertices.size(); ++i) {
        RationalVector row(vertices[i].size());
        for (std::size_t j = 0; j < row.size(); ++j) {
            row[j] = vertices[i][j] - vertices[0][j];
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Triangulates the face spanned by `face_verts` (vertex indices into v,
/// sorted) of dimension face_dim into simplices, each listed as face_dim+1
/// vertex indices. Cones the facets of the face that avoid the first vertex.
std::vector<std::vector<int>> triangulate_face(const VRep& v, const std::vector<int>& face_verts,
                                               int face_dim) {
    if (face_dim == 0) {
        return {{face_verts.front()}};
    }
    // Active set shared by the whole face.
    std::set<int> common = v.incidence[face_verts.front()];
    for (int vi : face_verts) {
        std::set<int> next;
        std::set_intersection(common.begin(), common.end(), v.incidence[vi].begin(),
                              v.incidence[vi].end(), std::inserter(next, next.begin()));
        common = std::move(next);
    }
    std::set<int> candidates;
    for (int vi : face_verts) {
        for (int f : v.incidence[vi]) {
            if (common.count(f) == 0) {
                candidates.insert(f);
            }
        }
    }
    const int apex = face_verts.front();
    std::set<std::vector<int>> children;
    for (int f : candidates) {
        std::vector<int> child;
        for (int vi : face_verts) {
            if (v.incidence[vi].count(f) != 0) {
                child.push_back(vi);
            }
        }
        if (child.empty() || child.size() == face_verts.size()) {
            continue;
        }
        std::vector<RationalVector> coords;
        coords.reserve(child.size());
        for (int vi : child) {
            coords.push_back(v.vertices[vi]);
        }
        if (affine_rank(coords) != face_dim - 1) {
            continue;  // a lower face; reached through some facet's recursion
        }
        children.insert(std::move(child));
    }
    std::vector<std::vector<int>> simplices;
    for (const auto& child : children) {
        if (std::find(child.begin(), child.end(), apex) != child.end()) {
            continue;
        }
        for (auto simplex : triangulate_face(v, child, face_dim - 1)) {
            simplex.push_back(apex);
            simplices.push_back(std::move(simplex));
        }
    }
    if (simplices.empty()) {
        throw InternalError("face triangulation produced no simplices");
    }
    return simplices;
}

std::vector<int> facet_vertex_indices(const VRep& v, int facet) {
    std::vector<int> verts;
    for (int k = 0; k < v.vertex_count(); ++k) {
        if (v.incidence[k].count(facet) != 0) {
            verts.push_back(k);
        }
    }
    return verts;
}

Rational norm_squared(const std::vector<Int>& v) {
    Rational acc(0);
    for (const Int& c : v) {
        acc += Rational(c * c);
    }
    return acc;
}

}  // namespace

Rational simplex_volume(const std::vector<RationalVector>& vertices) {
    if (vertices.empty()) {
        throw DimensionMismatchError("simplex_volume needs n+1 vertices");
    }
    const int n = static_cast<int>(vertices.front().size());
    if (static_cast<int>(vertices.size()) != n + 1) {
        throw DimensionMismatchError("simplex_volume needs n+1 vertices in R^n");
    }
    Rational det = determinant(edge_matrix(vertices));
    if (det < 0) {
        det = -det;
    }
    return det / Rational(factorial(n));
}

Rational polytope_volume(const VRep& v) {
    if (v.vertices.empty()) {
        throw DegenerateError("polytope_volume of an empty vertex set");
    }
    const int n = static_cast<int>(v.vertices.front().size());
    if (affine_rank(v.vertices) != n) {
        throw DegenerateError("polytope_volume requires a full-dimensional polytope");
    }
    if (n == 0) {
        return Rational(1);
    }
    const int base = 0;
    std::set<int> facets;
    for (const auto& active : v.incidence) {
        facets.insert(active.begin(), active.end());
    }
    Rational total(0);
    for (int f : facets) {
        if (v.incidence[base].count(f) != 0) {
            continue;  // cone degenerates on facets through the base vertex
        }
        auto verts = facet_vertex_indices(v, f);
        for (const auto& simplex : triangulate_face(v, verts, n - 1)) {
            std::vector<RationalVector> coords;
            coords.reserve(n + 1);
            coords.push_back(v.vertices[base]);
            for (int vi : simplex) {
                coords.push_back(v.vertices[vi]);
            }
            total += simplex_volume(coords);
        }
    }
    return total;
}

std::vector<std::vector<Int>> hyperplane_lattice_basis(const std::vector<Int>& normal) {
    const int n = static_cast<int>(normal.size());
    // Column reduction of the row vector `normal` by unimodular operations,
    // tracked in U; invariant: r[k] = <normal, U.col(k)>.
    std::vector<Int> r = normal;
    std::vector<std::vector<Int>> cols(n, std::vector<Int>(n, Int(0)));
    for (int i = 0; i < n; ++i) {
        cols[i][i] = 1;
    }
    while (true) {
        int pivot = -1;
        int nonzero = 0;
        for (int i = 0; i < n; ++i) {
            if (r[i] == 0) {
                continue;
            }
            ++nonzero;
            if (pivot < 0 || abs(r[i]) < abs(r[pivot])) {
                pivot = i;
            }
        }
        if (pivot < 0) {
            throw InternalError("hyperplane_lattice_basis on a zero vector");
        }
        if (nonzero == 1) {
            if (abs(r[pivot]) != 1) {
                throw InternalError("hyperplane_lattice_basis requires a primitive normal");
            }
            std::vector<std::vector<Int>> basis;
            for (int i = 0; i < n; ++i) {
                if (i != pivot) {
                    basis.push_back(cols[i]);
                }
            }
            return basis;
        }
        for (int i = 0; i < n; ++i) {
            if (i == pivot || r[i] == 0) {
                continue;
            }
            Int q = r[i] / r[pivot];  // truncated quotient reduces |r[i]|
            r[i] -= q * r[pivot];
            for (int j = 0; j < n; ++j) {
                cols[i][j] -= q * cols[pivot][j];
            }
        }
    }
}

Rational facet_volume_normalized(const HRep& h, const VRep& v, int facet) {
    const int n = h.dimension;
    auto verts = facet_vertex_indices(v, facet);
    if (verts.empty()) {
        throw InternalError("facet " + std::to_string(facet + 1) +
                            " has no vertices; upstream redundancy bug");
    }
    if (n == 1) {
        return Rational(1);  // facets are points
    }

    // Map the facet into the hyperplane's lattice coordinates: solve
    // [b_1 ... b_{n-1} | normal] y = vertex - vertex0 and keep the first
    // n-1 coordinates. Lattice points land on Z^{n-1}.
    auto basis = hyperplane_lattice_basis(h.normals[facet]);
    RationalMatrix system(n, RationalVector(n));
    for (int col = 0; col < n - 1; ++col) {
        for (int row = 0; row < n; ++row) {
            system[row][col] = Rational(basis[col][row]);
        }
    }
    for (int row = 0; row < n; ++row) {
        system[row][n - 1] = Rational(h.normals[facet][row]);
    }
    const RationalVector& origin = v.vertices[verts.front()];
    std::map<int, RationalVector> mapped;
    for (int vi : verts) {
        RationalVector rhs(n);
        for (int j = 0; j < n; ++j) {
            rhs[j] = v.vertices[vi][j] - origin[j];
        }
        RationalVector y = solve_linear_system(system, rhs);
        if (y[n - 1] != 0) {
            throw InternalError("facet vertex does not lie on the facet hyperplane");
        }
        y.pop_back();
        mapped.emplace(vi, std::move(y));
    }

    const Rational normal_sq = norm_squared(h.normals[facet]);
    const Int facet_factorial = factorial(n - 1);
    Rational total(0);
    for (const auto& simplex : triangulate_face(v, verts, n - 1)) {
        std::vector<RationalVector> mapped_coords;
        std::vector<RationalVector> ambient_coords;
        mapped_coords.reserve(simplex.size());
        ambient_coords.reserve(simplex.size());
        for (int vi : simplex) {
            mapped_coords.push_back(mapped.at(vi));
            ambient_coords.push_back(v.vertices[vi]);
        }
        Rational det = determinant(edge_matrix(mapped_coords));

        // Double-entry check of the normalization: the squared Euclidean
        // volume equals the squared lattice volume times |normal|^2.
        RationalMatrix edges = edge_matrix(ambient_coords);
        RationalMatrix gram(n - 1, RationalVector(n - 1));
        for (int a = 0; a < n - 1; ++a) {
            for (int b = 0; b < n - 1; ++b) {
                Rational s(0);
                for (int j = 0; j < n; ++j) {
                    s += edges[a][j] * edges[b][j];
                }
                gram[a][b] = s;
            }
        }
        if (determinant(gram) != det * det * normal_sq) {
            throw InternalError("facet volume normalization mismatch between lattice-basis and "
                                "Gram routes");
        }

        if (det < 0) {
            det = -det;
        }
        total += det / Rational(facet_factorial);
    }
    return total;
}

Rational boundary_volume(const HRep& h, const VRep& v) {
    Rational total(0);
    for (int f = 0; f < h.facet_count(); ++f) {
        total += facet_volume_normalized(h, v, f);
    }
    return total;
}

namespace {

/// All exponent vectors in N^d with |beta| <= max_total, lexicographic.
void enumerate_degrees(int d, int max_total, std::vector<int>& beta, int pos,
                       std::vector<std::vector<int>>& out) {
    if (pos == d) {
        out.push_back(beta);
        return;
    }
    int used = std::accumulate(beta.begin(), beta.begin() + pos, 0);
    for (int v = 0; v + used <= max_total; ++v) {
        beta[pos] = v;
        enumerate_degrees(d, max_total, beta, pos + 1, out);
    }
    beta[pos] = 0;
}

RationalVector offset_plus(const RationalVector& mu, const std::vector<int>& beta,
                           const Rational& delta) {
    RationalVector out = mu;
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (beta[i] != 0) {
            out[i] += delta * beta[i];
        }
    }
    return out;
}

/// Volume of the polytope with offsets `lambda`, or nullopt when the
/// combinatorial type differs from `expected`.
std::optional<Rational> typed_volume(const HRep& h, const RationalVector& lambda,
                                     const CombinatorialType& expected) {
    HRep perturbed = h;
    perturbed.offsets = lambda;
    VRep v = enumerate_vertices(perturbed);
    if (combinatorial_type(v) != expected) {
        return std::nullopt;
    }
    return polytope_volume(v);
}

}  // namespace

VolumePolynomial volume_polynomial(const HRep& h) {
    const int n = h.dimension;
    const int d = h.facet_count();
    const RationalVector& mu = h.offsets;
    const CombinatorialType base_type = combinatorial_type(h);

    Int denominator_bound(1);
    for (const auto& offset : mu) {
        denominator_bound = boost::multiprecision::lcm(denominator_bound, denominator(offset));
    }
    const Rational delta0 = Rational(Int(1), Int(4) * denominator_bound);

    std::vector<std::vector<int>> grid;
    {
        std::vector<int> beta(d, 0);
        enumerate_degrees(d, n, beta, 0, grid);
    }

    constexpr int kMaxRetries = 10;
    for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
        const Rational delta = delta0 / rational_pow(Rational(2), attempt);

        // Sample the exact volume on the principal lattice mu + delta*beta.
        std::map<std::vector<int>, Rational> values;
        bool type_ok = true;
        for (const auto& beta : grid) {
            auto vol = typed_volume(h, offset_plus(mu, beta, delta), base_type);
            if (!vol) {
                type_ok = false;
                break;
            }
            values.emplace(beta, std::move(*vol));
        }
        if (!type_ok) {
            continue;  // perturbation box too large; halve and retry
        }

        // Newton forward differences: on this grid the interpolation system
        // is nonsingular and the coefficient of the Newton basis polynomial
        // N_alpha is the mixed difference divided by delta^|alpha| alpha!.
        MultiPoly poly(d);
        for (const auto& alpha : grid) {
            Rational diff(0);
            std::vector<int> gamma(d, 0);
            while (true) {
                int parity = 0;
                Int multiplicity(1);
                for (int i = 0; i < d; ++i) {
                    parity += alpha[i] - gamma[i];
                    multiplicity *= binomial(alpha[i], gamma[i]);
                }
                const Rational& f = values.at(gamma);
                diff += (parity % 2 == 0 ? Rational(multiplicity) : -Rational(multiplicity)) * f;
                int pos = d - 1;
                while (pos >= 0 && gamma[pos] == alpha[pos]) {
                    gamma[pos] = 0;
                    --pos;
                }
                if (pos < 0) {
                    break;
                }
                ++gamma[pos];
            }
            if (diff == 0) {
                continue;
            }
            int total = std::accumulate(alpha.begin(), alpha.end(), 0);
            Int alpha_factorial(1);
            for (int a : alpha) {
                alpha_factorial *= factorial(a);
            }
            Rational coeff = diff / (rational_pow(delta, total) * Rational(alpha_factorial));

            MultiPoly newton = MultiPoly::constant(d, Rational(1));
            for (int i = 0; i < d; ++i) {
                for (int j = 0; j < alpha[i]; ++j) {
                    newton = newton * (MultiPoly::variable(d, i) -
                                       MultiPoly::constant(d, mu[i] + delta * j));
                }
            }
            poly += newton * coeff;
        }

        if (poly.total_degree() != n) {
            throw InternalError("interpolated volume polynomial has total degree " +
                                std::to_string(poly.total_degree()) + ", expected " +
                                std::to_string(n));
        }

        // Held-out verification on sample offsets away from the grid.
        std::vector<RationalVector> candidates;
        for (int i = 0; i < d; ++i) {
            RationalVector t(d, Rational(0));
            t[i] = -delta;
            candidates.push_back(t);
        }
        for (int i = 0; i < d; ++i) {
            RationalVector t(d, Rational(0));
            t[i] = delta / 2;
            candidates.push_back(t);
        }
        candidates.emplace_back(d, delta / 3);
        for (int i = 0; i < d; ++i) {
            RationalVector t(d, Rational(0));
            t[i] = delta;
            t[(i + 1) % d] += delta / 2;
            candidates.push_back(t);
        }
        int verified = 0;
        for (const auto& t : candidates) {
            RationalVector lambda = mu;
            for (int i = 0; i < d; ++i) {
                lambda[i] += t[i];
            }
            auto vol = typed_volume(h, lambda, base_type);
            if (!vol) {
                continue;
            }
            if (poly.evaluate(lambda) != *vol) {
                throw InternalError("volume polynomial fails held-out verification");
            }
            if (++verified == 5) {
                break;
            }
        }
        if (verified < 5) {
            throw InternalError("could not verify the volume polynomial on 5 held-out samples");
        }

        return {poly, mu, base_type};
    }
    throw InternalError("combinatorial type not preserved after " + std::to_string(kMaxRetries) +
                        " perturbation-box retries");
}

BoundaryVolumePolynomial boundary_volume_polynomial(const HRep& h, const VolumePolynomial& vp) {
    MultiPoly sum(vp.poly.var_count());
    for (int i = 0; i < vp.poly.var_count(); ++i) {
        sum += vp.poly.partial(i);
    }
    if (sum.total_degree() != h.dimension - 1) {
        throw InternalError("boundary volume polynomial has total degree " +
                            std::to_string(sum.total_degree()) + ", expected " +
                            std::to_string(h.dimension - 1));
    }
    VRep v = enumerate_vertices(h);
    if (sum.evaluate(vp.base_offsets) != boundary_volume(h, v)) {
        throw InternalError("derivative route and facet-sum route disagree on the boundary "
                            "volume");
    }
    return {sum, vp.base_offsets};
}

}  // namespace lpcount
