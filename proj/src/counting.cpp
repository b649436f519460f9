#include "lpcount/counting.hpp"

#include <algorithm>
#include <cstdlib>

namespace lpcount {

namespace {

void require_integral_delzant(const HRep& h, const VRep& v) {
    if (!is_integral(v)) {
        throw NotIntegralError("the polytope has non-integer vertices");
    }
    if (!is_simple(v)) {
        throw NotSimpleError("the polytope is not simple");
    }
    if (!is_delzant(h, v)) {
        throw NotDelzantError("the polytope is not Delzant");
    }
}

UniPoly todd_route(const HRep& h, const VolumePolynomial& vp, bool negate) {
    const int n = h.dimension;
    const int d = h.facet_count();
    std::vector<SeriesCoeffs> per_variable(d, todd_coeffs(n, negate));
    DiffOperator op = build_product_operator(per_variable, std::nullopt, n);
    return substitute_scaled(apply_operator(op, vp.poly), h.offsets);
}

UniPoly ahat_route(const HRep& h, const BoundaryVolumePolynomial& bvp) {
    const int d = h.facet_count();
    const int truncation = std::max(0, h.dimension - 1);
    std::vector<SeriesCoeffs> per_variable(d, ahat_coeffs(truncation));
    DiffOperator op = build_product_operator(per_variable, ahat_inv_coeffs(truncation),
                                             truncation);
    return substitute_scaled(apply_operator(op, bvp.poly), h.offsets);
}

}  // namespace

PipelineOutputs run_pipeline(const HRep& h) {
    VRep v = enumerate_vertices(h);
    require_integral_delzant(h, v);

    VolumePolynomial vp = volume_polynomial(h);
    BoundaryVolumePolynomial bvp = boundary_volume_polynomial(h, vp);

    UniPoly ehrhart = todd_route(h, vp, false);
    UniPoly interior = todd_route(h, vp, true);
    UniPoly boundary = ahat_route(h, bvp);
    if (ehrhart - interior != boundary) {
        throw InternalError("subtraction identity violated: (ehrhart - interior) differs from "
                            "the boundary polynomial");
    }

    Rational bvol = boundary_volume(h, v);
    return {CountingPolynomials{std::move(ehrhart), std::move(interior), std::move(boundary),
                                polytope_digest(h)},
            std::move(vp), std::move(bvp), std::move(v), std::move(bvol)};
}

UniPoly ehrhart_polynomial(const HRep& h) { return run_pipeline(h).polynomials.ehrhart; }

UniPoly interior_polynomial(const HRep& h) { return run_pipeline(h).polynomials.interior; }

UniPoly boundary_polynomial(const HRep& h) { return run_pipeline(h).polynomials.boundary; }

UniPoly boundary_polynomial_by_subtraction(const HRep& h) {
    auto out = run_pipeline(h);
    return out.polynomials.ehrhart - out.polynomials.interior;
}

CountingPolynomials counting_polynomials(const HRep& h) { return run_pipeline(h).polynomials; }

Int enumeration_cell_guard() {
    static const Int kDefault = Int(100000000);
    const char* env = std::getenv("LPCOUNT_CELL_GUARD");
    if (env == nullptr || *env == '\0') {
        return kDefault;
    }
    try {
        Int guard(env);
        if (guard > 0) {
            return guard;
        }
    } catch (const std::exception&) {
        // fall through to the default
    }
    return kDefault;
}

namespace {

constexpr long long kInt64SafeLimit = 1LL << 62;

struct ScaledConstraint {
    std::vector<long long> coeffs;  // denominator * normal
    long long bound = 0;            // k * numerator
};

}  // namespace

CountReport count_lattice_points(const HRep& h, long long k, bool collect_weights,
                                 bool weights_boundary_only) {
    if (k < 1) {
        throw ParseError("the dilation factor k must be a positive integer");
    }
    const int n = h.dimension;
    const int d = h.facet_count();
    VRep v = enumerate_vertices(h);
    if (!is_integral(v)) {
        throw NotIntegralError("lattice enumeration requires an integral polytope");
    }

    // Bounding box of the dilate from the dilated vertices.
    std::vector<long long> lo(n), hi(n);
    Int cells(1);
    for (int j = 0; j < n; ++j) {
        Rational mn = v.vertices.front()[j];
        Rational mx = mn;
        for (const auto& vertex : v.vertices) {
            mn = std::min(mn, vertex[j]);
            mx = std::max(mx, vertex[j]);
        }
        Int lo_j = rational_ceil(Rational(k) * mn);
        Int hi_j = rational_floor(Rational(k) * mx);
        if (lo_j < -Int(kInt64SafeLimit) || hi_j > Int(kInt64SafeLimit)) {
            throw GuardError("dilate coordinates exceed exact 64-bit enumeration bounds");
        }
        lo[j] = static_cast<long long>(lo_j);
        hi[j] = static_cast<long long>(hi_j);
        cells *= Int(hi[j] - lo[j] + 1);
    }
    const Int guard = enumeration_cell_guard();
    if (cells > guard) {
        throw GuardError("enumeration box has " + cells.str() + " cells, over the guard of " +
                         guard.str() + " (set LPCOUNT_CELL_GUARD to override)");
    }

    // Scale constraints to integers: den_i * <normal_i, x> <= k * num_i,
    // and verify everything stays inside 64-bit range.
    std::vector<ScaledConstraint> cons(d);
    for (int i = 0; i < d; ++i) {
        const Int den = denominator(h.offsets[i]);
        Int bound = Int(k) * numerator(h.offsets[i]);
        Int reach = abs(bound);
        cons[i].coeffs.resize(n);
        for (int j = 0; j < n; ++j) {
            Int c = den * h.normals[i][j];
            reach += abs(c) * std::max(std::abs(lo[j]), std::abs(hi[j]));
            if (abs(c) > Int(kInt64SafeLimit)) {
                throw GuardError("constraint coefficients exceed exact 64-bit enumeration "
                                 "bounds");
            }
            cons[i].coeffs[j] = static_cast<long long>(c);
        }
        if (reach > Int(kInt64SafeLimit)) {
            throw GuardError("constraint values exceed exact 64-bit enumeration bounds");
        }
        cons[i].bound = static_cast<long long>(bound);
    }

    CountReport report;
    report.k = k;
    if (collect_weights) {
        report.weights.emplace();
    }

    // Iterate prefixes x_0..x_{n-2}; the innermost coordinate is resolved to
    // one feasible interval per slab.
    std::vector<long long> x(n, 0);
    for (int j = 0; j + 1 < n; ++j) {
        x[j] = lo[j];
    }
    std::vector<long long> equality_points;
    while (true) {
        long long inner_lo = lo[n - 1];
        long long inner_hi = hi[n - 1];
        bool slab_feasible = true;
        bool slab_all_boundary = false;
        for (const auto& con : cons) {
            long long partial = 0;
            for (int j = 0; j + 1 < n; ++j) {
                partial += con.coeffs[j] * x[j];
            }
            const long long c = con.coeffs[n - 1];
            const long long rest = con.bound - partial;
            if (c == 0) {
                if (rest < 0) {
                    slab_feasible = false;
                    break;
                }
                if (rest == 0) {
                    slab_all_boundary = true;
                }
            } else if (c > 0) {
                // c * x_n <= rest
                long long q = rest >= 0 ? rest / c : -((-rest + c - 1) / c);
                inner_hi = std::min(inner_hi, q);
            } else {
                long long cpos = -c;  // cpos * x_n >= -rest
                long long r = -rest;
                long long q = r >= 0 ? (r + cpos - 1) / cpos : -((-r) / cpos);
                inner_lo = std::max(inner_lo, q);
            }
            if (inner_lo > inner_hi) {
                slab_feasible = false;
                break;
            }
        }

        if (slab_feasible && inner_lo <= inner_hi) {
            const long long slab_count = inner_hi - inner_lo + 1;
            report.total += slab_count;
            long long slab_boundary = 0;
            equality_points.clear();
            if (slab_all_boundary) {
                slab_boundary = slab_count;
            } else {
                for (const auto& con : cons) {
                    const long long c = con.coeffs[n - 1];
                    if (c == 0) {
                        continue;
                    }
                    long long partial = 0;
                    for (int j = 0; j + 1 < n; ++j) {
                        partial += con.coeffs[j] * x[j];
                    }
                    const long long rest = con.bound - partial;
                    if (rest % c != 0) {
                        continue;
                    }
                    const long long xe = rest / c;
                    if (xe >= inner_lo && xe <= inner_hi) {
                        equality_points.push_back(xe);
                    }
                }
                std::sort(equality_points.begin(), equality_points.end());
                equality_points.erase(
                    std::unique(equality_points.begin(), equality_points.end()),
                    equality_points.end());
                slab_boundary = static_cast<long long>(equality_points.size());
            }
            report.boundary += slab_boundary;

            if (collect_weights) {
                auto emit = [&](long long xn) {
                    std::vector<long long> point(x.begin(), x.end());
                    point[n - 1] = xn;
                    report.weights->push_back(std::move(point));
                };
                if (!weights_boundary_only || slab_all_boundary) {
                    for (long long xn = inner_lo; xn <= inner_hi; ++xn) {
                        emit(xn);
                    }
                } else {
                    for (long long xn : equality_points) {
                        emit(xn);
                    }
                }
            }
        }

        // Advance the prefix odometer.
        int pos = n - 2;
        while (pos >= 0 && x[pos] == hi[pos]) {
            x[pos] = lo[pos];
            --pos;
        }
        if (pos < 0) {
            break;
        }
        ++x[pos];
    }

    report.interior = report.total - report.boundary;
    if (collect_weights) {
        std::sort(report.weights->begin(), report.weights->end());
    }
    return report;
}

std::vector<std::vector<long long>> quantization_weights(const HRep& h, long long k,
                                                         bool boundary_only) {
    return *count_lattice_points(h, k, true, boundary_only).weights;
}

}  // namespace lpcount
