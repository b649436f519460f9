#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lpcount/counting.hpp"
#include "lpcount/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 2;
constexpr int kExitNotDelzant = 3;
constexpr int kExitBadGeometry = 4;
constexpr int kExitVerifyFail = 5;

using lpcount::HRep;
using lpcount::VRep;
using nlohmann::ordered_json;

HRep load(const std::string& path) {
    std::vector<std::string> warnings;
    HRep h = lpcount::load_hrep(path, &warnings);
    for (const auto& w : warnings) {
        std::cerr << "warning: " << w << "\n";
    }
    return h;
}

int cmd_check(const std::string& path, bool structured) {
    HRep h = load(path);
    VRep v = lpcount::enumerate_vertices(h);
    const bool integral = lpcount::is_integral(v);
    const bool simple = lpcount::is_simple(v);
    // A Delzant polytope is integral and simple with unimodular edge bases.
    const bool delzant = integral && simple && lpcount::is_delzant(h, v);
    if (structured) {
        ordered_json doc;
        doc["digest"] = lpcount::polytope_digest(h);
        doc["dimension"] = h.dimension;
        doc["facets"] = h.facet_count();
        doc["vertices"] = v.vertex_count();
        doc["integral"] = integral;
        doc["simple"] = simple;
        doc["delzant"] = delzant;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "digest: " << lpcount::polytope_digest(h) << "\n";
        std::cout << "dimension: " << h.dimension << "  facets: " << h.facet_count()
                  << "  vertices: " << v.vertex_count() << "\n";
        std::cout << "integral: " << (integral ? "true" : "false") << "\n";
        std::cout << "simple: " << (simple ? "true" : "false") << "\n";
        std::cout << "delzant: " << (delzant ? "true" : "false") << "\n";
    }
    return integral && delzant ? kExitOk : kExitNotDelzant;
}

int cmd_polynomials(const std::string& path, bool structured) {
    HRep h = load(path);
    lpcount::CountingPolynomials polys = lpcount::counting_polynomials(h);
    if (structured) {
        ordered_json doc;
        doc["digest"] = polys.polytope_digest;
        doc["dimension"] = h.dimension;
        doc["polynomials"] = {{"ehrhart", lpcount::unipoly_to_json(polys.ehrhart)},
                              {"interior", lpcount::unipoly_to_json(polys.interior)},
                              {"boundary", lpcount::unipoly_to_json(polys.boundary)}};
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "ehrhart: " << polys.ehrhart.to_string() << "\n";
        std::cout << "interior: " << polys.interior.to_string() << "\n";
        std::cout << "boundary: " << polys.boundary.to_string() << "\n";
    }
    return kExitOk;
}

int cmd_count(const std::string& path, long long k, bool weights, bool boundary_only,
              bool structured) {
    HRep h = load(path);
    // Counting itself only needs integrality, but this command promises the
    // full Delzant contract.
    VRep v = lpcount::enumerate_vertices(h);
    if (!lpcount::is_integral(v)) {
        throw lpcount::NotIntegralError("count requires an integral polytope");
    }
    if (!lpcount::is_simple(v) || !lpcount::is_delzant(h, v)) {
        throw lpcount::NotDelzantError("count requires a Delzant polytope");
    }
    lpcount::CountReport report = lpcount::count_lattice_points(h, k, weights, boundary_only);
    if (structured) {
        ordered_json doc;
        doc["digest"] = lpcount::polytope_digest(h);
        doc["k"] = report.k;
        doc["total"] = report.total;
        doc["boundary"] = report.boundary;
        doc["interior"] = report.interior;
        if (report.weights) {
            doc["weights_boundary_only"] = boundary_only;
            doc["weights"] = *report.weights;
        }
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "k: " << report.k << "\n";
        std::cout << "total: " << report.total << "\n";
        std::cout << "boundary: " << report.boundary << "\n";
        std::cout << "interior: " << report.interior << "\n";
        if (report.weights) {
            std::cout << (boundary_only ? "boundary weights:" : "weights:") << "\n";
            for (const auto& point : *report.weights) {
                for (std::size_t j = 0; j < point.size(); ++j) {
                    std::cout << (j == 0 ? "" : " ") << point[j];
                }
                std::cout << "\n";
            }
        }
    }
    return kExitOk;
}

int cmd_verify(const std::string& path, int kmax, bool structured) {
    HRep h = load(path);
    lpcount::VerifyReport report = lpcount::run_verify(h, kmax);
    if (structured) {
        std::cout << lpcount::verify_to_json(report).dump(2) << "\n";
    } else {
        std::cout << lpcount::verify_to_text(report);
    }
    return report.pass ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact counting polynomials for lattice points of Delzant polytopes and their "
                 "boundaries"};
    app.require_subcommand(1);

    std::string format = "human";
    const std::vector<std::string> formats{"human", "structured"};

    std::string check_file;
    auto* check = app.add_subcommand("check", "Validate a polytope file");
    check->add_option("file", check_file, "polytope JSON file")->required();
    check->add_option("--format", format, "output format")->check(CLI::IsMember(formats));

    std::string poly_file;
    auto* polynomials =
        app.add_subcommand("polynomials", "Print the three counting polynomials");
    polynomials->add_option("file", poly_file, "polytope JSON file")->required();
    polynomials->add_option("--format", format, "output format")->check(CLI::IsMember(formats));

    std::string count_file;
    long long count_k = 1;
    bool count_weights = false;
    bool count_boundary_only = false;
    auto* count = app.add_subcommand("count", "Brute-force lattice point counts for one dilate");
    count->add_option("file", count_file, "polytope JSON file")->required();
    count->add_option("--k", count_k, "dilation factor (positive integer)")->required();
    auto* weights_flag = count->add_flag("--weights", count_weights, "list the lattice points");
    count->add_flag("--boundary-only", count_boundary_only, "restrict the list to boundary points")
        ->needs(weights_flag);
    count->add_option("--format", format, "output format")->check(CLI::IsMember(formats));

    std::string verify_file;
    int verify_kmax = 5;
    auto* verify = app.add_subcommand("verify", "Run the full invariant and oracle checklist");
    verify->add_option("file", verify_file, "polytope JSON file")->required();
    verify->add_option("--kmax", verify_kmax, "largest dilation factor to cross-check");
    verify->add_option("--format", format, "output format")->check(CLI::IsMember(formats));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInputError;
    }

    const bool structured = format == "structured";
    try {
        if (check->parsed()) {
            return cmd_check(check_file, structured);
        }
        if (polynomials->parsed()) {
            return cmd_polynomials(poly_file, structured);
        }
        if (count->parsed()) {
            return cmd_count(count_file, count_k, count_weights, count_boundary_only, structured);
        }
        if (verify->parsed()) {
            return cmd_verify(verify_file, verify_kmax, structured);
        }
    } catch (const lpcount::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const lpcount::GuardError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const lpcount::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNotDelzant;
    } catch (const lpcount::GeometryError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadGeometry;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitVerifyFail;
    }
    return kExitInputError;
}
