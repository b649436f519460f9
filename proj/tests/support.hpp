#pragma once

#include <string>
#include <vector>

#include "lpcount/polytope.hpp"

namespace lpcount::testing {

inline std::string data_path(const std::string& file) {
    return std::string(LPCOUNT_DATA_DIR) + "/" + file;
}

inline HRep unit_simplex(int n) {
    std::vector<std::vector<Int>> normals;
    std::vector<Rational> offsets;
    for (int i = 0; i < n; ++i) {
        std::vector<Int> e(n, Int(0));
        e[i] = -1;
        normals.push_back(std::move(e));
        offsets.emplace_back(0);
    }
    normals.emplace_back(n, Int(1));
    offsets.emplace_back(1);
    return make_hrep(n, std::move(normals), std::move(offsets));
}

inline HRep box(const std::vector<Rational>& sides) {
    const int n = static_cast<int>(sides.size());
    std::vector<std::vector<Int>> normals;
    std::vector<Rational> offsets;
    for (int i = 0; i < n; ++i) {
        std::vector<Int> e(n, Int(0));
        e[i] = -1;
        normals.push_back(std::move(e));
        offsets.emplace_back(0);
    }
    for (int i = 0; i < n; ++i) {
        std::vector<Int> e(n, Int(0));
        e[i] = 1;
        normals.push_back(std::move(e));
        offsets.push_back(sides[i]);
    }
    return make_hrep(n, std::move(normals), std::move(offsets));
}

inline HRep unit_square() { return box({Rational(1), Rational(1)}); }
inline HRep unit_cube() { return box({Rational(1), Rational(1), Rational(1)}); }

/// Vertices (0,0), (2,0), (1,1), (0,1).
inline HRep trapezoid() {
    return make_hrep(2, {{-1, 0}, {0, -1}, {0, 1}, {1, 1}},
                     {Rational(0), Rational(0), Rational(1), Rational(2)});
}

/// Square pyramid: apex (0,0,1) over the base square [-1,1]^2; not simple.
inline HRep square_pyramid() {
    return make_hrep(3, {{0, 0, -1}, {1, 0, 1}, {-1, 0, 1}, {0, 1, 1}, {0, -1, 1}},
                     {Rational(0), Rational(1), Rational(1), Rational(1), Rational(1)});
}

/// Cartesian product: block-diagonal normals, concatenated offsets.
inline HRep product(const HRep& a, const HRep& b) {
    const int n = a.dimension + b.dimension;
    std::vector<std::vector<Int>> normals;
    std::vector<Rational> offsets;
    for (int i = 0; i < a.facet_count(); ++i) {
        std::vector<Int> row(n, Int(0));
        for (int j = 0; j < a.dimension; ++j) {
            row[j] = a.normals[i][j];
        }
        normals.push_back(std::move(row));
        offsets.push_back(a.offsets[i]);
    }
    for (int i = 0; i < b.facet_count(); ++i) {
        std::vector<Int> row(n, Int(0));
        for (int j = 0; j < b.dimension; ++j) {
            row[a.dimension + j] = b.normals[i][j];
        }
        normals.push_back(std::move(row));
        offsets.push_back(b.offsets[i]);
    }
    return make_hrep(n, std::move(normals), std::move(offsets));
}

/// The m-fold dilate: same normals, offsets scaled by m.
inline HRep dilate(const HRep& h, int m) {
    HRep out = h;
    for (auto& offset : out.offsets) {
        offset *= m;
    }
    return out;
}

}  // namespace lpcount::testing
