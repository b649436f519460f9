#include "lpcount/verify.hpp"

#include <sstream>

namespace lpcount {

namespace {

std::string poly_pair_detail(const UniPoly& lhs, const UniPoly& rhs) {
    return lhs.to_string() + " vs " + rhs.to_string();
}

}  // namespace

VerifyReport run_verify(const HRep& h, int kmax) {
    if (kmax < 1) {
        throw ParseError("kmax must be a positive integer");
    }
    VerifyReport report;
    report.digest = polytope_digest(h);
    report.dimension = h.dimension;
    report.facets = h.facet_count();

    VRep v = enumerate_vertices(h);
    report.vertices = v.vertex_count();
    report.integral = is_integral(v);
    report.simple = is_simple(v);
    report.delzant = report.integral && report.simple && is_delzant(h, v);
    if (!report.integral) {
        throw NotIntegralError("verification requires an integral polytope");
    }
    if (!report.simple) {
        throw NotSimpleError("verification requires a simple polytope");
    }
    if (!report.delzant) {
        throw NotDelzantError("verification requires a Delzant polytope");
    }

    PipelineOutputs out = run_pipeline(h);
    report.polynomials = out.polynomials;
    const int n = h.dimension;
    const UniPoly& ehrhart = out.polynomials.ehrhart;
    const UniPoly& interior = out.polynomials.interior;
    const UniPoly& boundary = out.polynomials.boundary;

    {
        UniPoly difference = ehrhart - interior;
        report.checks.push_back({"subtraction-identity", difference == boundary,
                                 poly_pair_detail(difference, boundary)});
    }
    {
        bool pass = true;
        std::string zeros;
        for (int j = 1; n - 2 * j >= 0; ++j) {
            const Rational c = boundary.coefficient(n - 2 * j);
            if (c != 0) {
                pass = false;
            }
            if (!zeros.empty()) {
                zeros += ", ";
            }
            zeros += "a_" + std::to_string(n - 2 * j) + "=" + format_rational(c);
        }
        report.checks.push_back(
            {"lacunarity", pass, zeros.empty() ? "no alternate coefficients in degree" : zeros});
    }
    {
        const bool degree_ok = boundary.degree() == n - 1;
        const bool value_ok = boundary.leading_coefficient() == out.boundary_vol;
        report.checks.push_back({"leading-coefficient", degree_ok && value_ok,
                                 "degree " + std::to_string(boundary.degree()) + ", leading " +
                                     format_rational(boundary.leading_coefficient()) +
                                     ", boundary volume " + format_rational(out.boundary_vol)});
    }
    {
        UniPoly reflected = ehrhart.reflected();
        if (n % 2 != 0) {
            reflected = -reflected;
        }
        report.checks.push_back(
            {"reciprocity", reflected == interior, poly_pair_detail(reflected, interior)});
    }
    {
        MultiPoly derivative_sum(out.volume_poly.poly.var_count());
        for (int i = 0; i < out.volume_poly.poly.var_count(); ++i) {
            derivative_sum += out.volume_poly.poly.partial(i);
        }
        const bool poly_ok = derivative_sum == out.boundary_poly.poly;
        const bool value_ok =
            out.boundary_poly.poly.evaluate(h.offsets) == out.boundary_vol;
        report.checks.push_back({"derivative-identity", poly_ok && value_ok,
                                 "facet-sum boundary volume " +
                                     format_rational(out.boundary_vol)});
    }

    for (long long k = 1; k <= kmax; ++k) {
        CountReport counts = count_lattice_points(h, k);
        OracleRow row;
        row.k = k;
        row.total = counts.total;
        row.boundary = counts.boundary;
        row.interior = counts.interior;
        row.pass = ehrhart.evaluate(Rational(k)) == Rational(counts.total) &&
                   interior.evaluate(Rational(k)) == Rational(counts.interior) &&
                   boundary.evaluate(Rational(k)) == Rational(counts.boundary);
        report.oracle.push_back(row);
    }

    report.pass = true;
    for (const auto& check : report.checks) {
        report.pass = report.pass && check.pass;
    }
    for (const auto& row : report.oracle) {
        report.pass = report.pass && row.pass;
    }
    return report;
}

std::string verify_to_text(const VerifyReport& report) {
    std::ostringstream out;
    out << "digest: " << report.digest << "\n";
    out << "dimension: " << report.dimension << "  facets: " << report.facets
        << "  vertices: " << report.vertices << "\n";
    out << "integral: " << (report.integral ? "true" : "false") << "\n";
    out << "simple: " << (report.simple ? "true" : "false") << "\n";
    out << "delzant: " << (report.delzant ? "true" : "false") << "\n";
    out << "ehrhart: " << report.polynomials.ehrhart.to_string() << "\n";
    out << "interior: " << report.polynomials.interior.to_string() << "\n";
    out << "boundary: " << report.polynomials.boundary.to_string() << "\n";
    for (const auto& check : report.checks) {
        out << "check " << check.name << ": " << (check.pass ? "pass" : "FAIL") << " ("
            << check.detail << ")\n";
    }
    for (const auto& row : report.oracle) {
        out << "oracle k=" << row.k << ": total " << row.total << " boundary " << row.boundary
            << " interior " << row.interior << ": " << (row.pass ? "pass" : "FAIL") << "\n";
    }
    out << "result: " << (report.pass ? "pass" : "FAIL") << "\n";
    return out.str();
}

nlohmann::ordered_json unipoly_to_json(const UniPoly& p) {
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (const auto& c : p.coefficients()) {
        coeffs.push_back(format_rational(c));
    }
    return {{"text", p.to_string()}, {"coefficients", coeffs}};
}

nlohmann::ordered_json verify_to_json(const VerifyReport& report) {
    nlohmann::ordered_json doc;
    doc["digest"] = report.digest;
    doc["dimension"] = report.dimension;
    doc["facets"] = report.facets;
    doc["vertices"] = report.vertices;
    doc["integral"] = report.integral;
    doc["simple"] = report.simple;
    doc["delzant"] = report.delzant;
    doc["polynomials"] = {{"ehrhart", unipoly_to_json(report.polynomials.ehrhart)},
                          {"interior", unipoly_to_json(report.polynomials.interior)},
                          {"boundary", unipoly_to_json(report.polynomials.boundary)}};
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& check : report.checks) {
        checks.push_back({{"name", check.name}, {"pass", check.pass}, {"detail", check.detail}});
    }
    doc["checks"] = checks;
    nlohmann::ordered_json oracle = nlohmann::ordered_json::array();
    for (const auto& row : report.oracle) {
        oracle.push_back({{"k", row.k},
                          {"total", row.total},
                          {"boundary", row.boundary},
                          {"interior", row.interior},
                          {"pass", row.pass}});
    }
    doc["oracle"] = oracle;
    doc["pass"] = report.pass;
    return doc;
}

}  // namespace lpcount
