#include "lpcount/polytope.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include "json.hpp"

namespace lpcount {

namespace {

/// Visits every size-m subset of {0..count-1} in lexicographic order.
template <typename Fn>
void for_each_subset(int count, int m, Fn&& fn) {
    if (m > count || m < 0) {
        return;
    }
    std::vector<int> idx(m);
    for (int i = 0; i < m; ++i) {
        idx[i] = i;
    }
    while (true) {
        fn(static_cast<const std::vector<int>&>(idx));
        int i = m - 1;
        while (i >= 0 && idx[i] == count - m + i) {
            --i;
        }
        if (i < 0) {
            return;
        }
        ++idx[i];
        for (int j = i + 1; j < m; ++j) {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

RationalMatrix normal_rows(const HRep& h, const std::vector<int>& facets) {
    RationalMatrix rows;
    rows.reserve(facets.size());
    for (int f : facets) {
        RationalVector row(h.dimension);
        for (int j = 0; j < h.dimension; ++j) {
            row[j] = Rational(h.normals[f][j]);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

bool has_recession_ray(const HRep& h) {
    const int n = h.dimension;
    const int d = h.facet_count();
    bool found = false;
    for_each_subset(d, n - 1, [&](const std::vector<int>& subset) {
        if (found) {
            return;
        }
        RationalMatrix rows = normal_rows(h, subset);
        auto basis = kernel_basis(rows, n);
        if (basis.size() != 1) {
            return;  // extreme rays need exactly n-1 independent active normals
        }
        RationalVector negated = basis[0];
        for (auto& c : negated) {
            c = -c;
        }
        for (const RationalVector& ray : {basis[0], negated}) {
            bool feasible = true;
            for (int f = 0; f < d && feasible; ++f) {
                Rational s(0);
                for (int j = 0; j < n; ++j) {
                    s += Rational(h.normals[f][j]) * ray[j];
                }
                if (s > 0) {
                    feasible = false;
                }
            }
            if (feasible) {
                found = true;
                return;
            }
        }
    });
    return found;
}

}  // namespace

std::pair<std::vector<Int>, Int> primitivize(const std::vector<Int>& v) {
    Int g(0);
    for (const Int& c : v) {
        g = boost::multiprecision::gcd(g, abs(c));
    }
    if (g == 0) {
        throw ParseError("cannot primitivize the zero vector");
    }
    std::vector<Int> out = v;
    for (Int& c : out) {
        c /= g;
    }
    return {std::move(out), g};
}

HRep make_hrep(int dimension, std::vector<std::vector<Int>> normals,
               std::vector<Rational> offsets, std::vector<std::string>* warnings) {
    if (dimension < 1) {
        throw ParseError("dimension must be a positive integer");
    }
    if (dimension > kMaxDimension) {
        throw ParseError("dimension " + std::to_string(dimension) +
                         " exceeds the supported limit " + std::to_string(kMaxDimension));
    }
    const int d = static_cast<int>(normals.size());
    if (static_cast<int>(offsets.size()) != d) {
        throw ParseError("normals and offsets have different lengths");
    }
    if (d == 0) {
        throw ParseError("at least one half-space is required");
    }
    // Fewer than n+1 half-spaces cannot bound R^n; the recession checks
    // below report that as unboundedness.
    if (d > kSoftFacetLimit && warnings != nullptr) {
        warnings->push_back("facet count " + std::to_string(d) + " exceeds the desk-scale " +
                            std::to_string(kSoftFacetLimit) + "; expect slow exact runs");
    }

    for (int i = 0; i < d; ++i) {
        if (static_cast<int>(normals[i].size()) != dimension) {
            throw ParseError("normal " + std::to_string(i + 1) + " has wrong length");
        }
        bool all_zero = std::all_of(normals[i].begin(), normals[i].end(),
                                    [](const Int& c) { return c == 0; });
        if (all_zero) {
            throw ParseError("normal " + std::to_string(i + 1) + " is the zero vector");
        }
        auto [prim, scale] = primitivize(normals[i]);
        if (scale != 1) {
            normals[i] = std::move(prim);
            offsets[i] /= Rational(scale);
            if (warnings != nullptr) {
                warnings->push_back("normal " + std::to_string(i + 1) +
                                    " was not primitive; divided by " + scale.str() +
                                    " and rescaled its offset");
            }
        }
    }

    // Parallel same-direction half-spaces: the looser one cannot support a facet.
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            if (normals[i] == normals[j]) {
                throw ParseError("redundant half-space: facets " + std::to_string(i + 1) +
                                 " and " + std::to_string(j + 1) + " share a normal");
            }
        }
    }

    HRep h{dimension, std::move(normals), std::move(offsets)};

    std::vector<int> all(d);
    for (int i = 0; i < d; ++i) {
        all[i] = i;
    }
    if (matrix_rank(normal_rows(h, all)) < dimension || has_recession_ray(h)) {
        throw UnboundedError("the half-space intersection is unbounded");
    }

    VRep v = enumerate_vertices(h);
    if (v.vertices.empty()) {
        throw EmptyError("the half-space intersection is empty");
    }
    if (affine_rank(v.vertices) < dimension) {
        throw DegenerateError("the polytope is not full-dimensional");
    }
    for (int i = 0; i < d; ++i) {
        std::vector<RationalVector> on_facet;
        for (int k = 0; k < v.vertex_count(); ++k) {
            if (v.incidence[k].count(i) != 0) {
                on_facet.push_back(v.vertices[k]);
            }
        }
        if (affine_rank(on_facet) != dimension - 1) {
            throw ParseError("redundant half-space: facet " + std::to_string(i + 1) +
                             " does not support a facet");
        }
    }
    return h;
}

VRep enumerate_vertices(const HRep& h) {
    const int n = h.dimension;
    const int d = h.facet_count();
    std::map<RationalVector, std::set<int>> found;
    for_each_subset(d, n, [&](const std::vector<int>& subset) {
        RationalMatrix a = normal_rows(h, subset);
        RationalVector b(n);
        for (int i = 0; i < n; ++i) {
            b[i] = h.offsets[subset[i]];
        }
        auto x = try_solve_linear_system(a, b);
        if (!x) {
            return;
        }
        std::set<int> active;
        for (int f = 0; f < d; ++f) {
            Rational s = dot(h.normals[f], *x);
            if (s > h.offsets[f]) {
                return;  // infeasible
            }
            if (s == h.offsets[f]) {
                active.insert(f);
            }
        }
        found.emplace(std::move(*x), std::move(active));
    });
    VRep v;
    v.vertices.reserve(found.size());
    v.incidence.reserve(found.size());
    for (auto& [vertex, active] : found) {
        v.vertices.push_back(vertex);
        v.incidence.push_back(active);
    }
    return v;
}

bool is_integral(const VRep& v) {
    for (const auto& vertex : v.vertices) {
        for (const auto& coord : vertex) {
            if (!is_integer(coord)) {
                return false;
            }
        }
    }
    return true;
}

std::vector<RationalVector> vertex_edge_directions(const HRep& h, const VRep& v, int vertex) {
    const int n = h.dimension;
    const auto& active = v.incidence.at(vertex);
    if (static_cast<int>(active.size()) != n) {
        throw NotSimpleError("vertex " + std::to_string(vertex) + " lies on " +
                             std::to_string(active.size()) + " facets, expected " +
                             std::to_string(n));
    }
    std::vector<int> facets(active.begin(), active.end());
    RationalMatrix a = normal_rows(h, facets);
    // Edge leaving facet j keeps the other n-1 constraints active and moves
    // off the j-th: solve N e = -unit_j.
    std::vector<RationalVector> edges;
    edges.reserve(n);
    for (int j = 0; j < n; ++j) {
        RationalVector rhs(n, Rational(0));
        rhs[j] = -1;
        edges.push_back(solve_linear_system(a, rhs));
    }
    return edges;
}

bool is_simple(const VRep& v) {
    if (v.vertices.empty()) {
        return false;
    }
    const int n = static_cast<int>(v.vertices.front().size());
    for (int k = 0; k < v.vertex_count(); ++k) {
        if (static_cast<int>(v.incidence[k].size()) != n) {
            return false;
        }
    }
    return true;
}

std::vector<Int> primitive_direction(const RationalVector& direction) {
    Int common_den(1);
    for (const auto& c : direction) {
        common_den = boost::multiprecision::lcm(common_den, denominator(c));
    }
    std::vector<Int> scaled(direction.size());
    for (std::size_t i = 0; i < direction.size(); ++i) {
        scaled[i] = numerator(direction[i]) * (common_den / denominator(direction[i]));
    }
    return primitivize(scaled).first;
}

bool is_delzant(const HRep& h, const VRep& v) {
    if (!is_simple(v)) {
        throw NotSimpleError("Delzant check requires a simple polytope");
    }
    const int n = h.dimension;
    for (int k = 0; k < v.vertex_count(); ++k) {
        auto edges = vertex_edge_directions(h, v, k);
        RationalMatrix m(n, RationalVector(n));
        for (int j = 0; j < n; ++j) {
            auto prim = primitive_direction(edges[j]);
            for (int c = 0; c < n; ++c) {
                m[j][c] = Rational(prim[c]);
            }
        }
        Rational det = determinant(m);
        if (det != 1 && det != -1) {
            return false;
        }
    }
    return true;
}

CombinatorialType combinatorial_type(const VRep& v) {
    CombinatorialType type;
    for (const auto& active : v.incidence) {
        type.insert(active);
    }
    return type;
}

CombinatorialType combinatorial_type(const HRep& h) {
    return combinatorial_type(enumerate_vertices(h));
}

HRep parse_hrep(const std::string& json_text, std::vector<std::string>* warnings) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ParseError("top-level JSON value must be an object");
    }
    for (const char* key : {"dimension", "normals", "offsets"}) {
        if (!doc.contains(key)) {
            throw ParseError(std::string("missing required key \"") + key + "\"");
        }
    }
    if (!doc["dimension"].is_number_integer()) {
        throw ParseError("\"dimension\" must be an integer");
    }
    const int dimension = doc["dimension"].get<int>();

    if (!doc["normals"].is_array()) {
        throw ParseError("\"normals\" must be an array of integer arrays");
    }
    std::vector<std::vector<Int>> normals;
    for (const auto& row : doc["normals"]) {
        if (!row.is_array()) {
            throw ParseError("\"normals\" must be an array of integer arrays");
        }
        std::vector<Int> normal;
        for (const auto& entry : row) {
            if (!entry.is_number_integer()) {
                throw ParseError("normal entries must be integers");
            }
            normal.emplace_back(entry.get<std::int64_t>());
        }
        normals.push_back(std::move(normal));
    }

    if (!doc["offsets"].is_array()) {
        throw ParseError("\"offsets\" must be an array of integers or \"p/q\" strings");
    }
    std::vector<Rational> offsets;
    for (const auto& entry : doc["offsets"]) {
        if (entry.is_number_integer()) {
            offsets.emplace_back(Int(entry.get<std::int64_t>()));
        } else if (entry.is_string()) {
            offsets.push_back(parse_rational(entry.get<std::string>()));
        } else {
            throw ParseError("offsets must be integers or \"p/q\" strings");
        }
    }

    return make_hrep(dimension, std::move(normals), std::move(offsets), warnings);
}

HRep load_hrep(const std::string& path, std::vector<std::string>* warnings) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot read file \"" + path + "\"");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_hrep(buffer.str(), warnings);
}

std::string polytope_digest(const HRep& h) {
    std::ostringstream canon;
    canon << "n=" << h.dimension << ";d=" << h.facet_count() << ";";
    for (int i = 0; i < h.facet_count(); ++i) {
        canon << "N";
        for (const Int& c : h.normals[i]) {
            canon << c.str() << ",";
        }
        canon << "o" << format_rational(h.offsets[i]) << ";";
    }
    // FNV-1a, 64-bit
    std::uint64_t hash = 1469598103934665603ULL;
    for (unsigned char byte : canon.str()) {
        hash ^= byte;
        hash *= 1099511628211ULL;
    }
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << hash;
    return out.str();
}

}  // namespace lpcount
