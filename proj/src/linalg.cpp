#include "lpcount/linalg.hpp"

#include <numeric>
#include <utility>

namespace lpcount {

namespace {

void check_square(const RationalMatrix& a, const RationalVector& b) {
    const std::size_t n = a.size();
    if (b.size() != n) {
        throw DimensionMismatchError("matrix has " + std::to_string(n) + " rows but rhs has " +
                                     std::to_string(b.size()) + " entries");
    }
    for (const auto& row : a) {
        if (row.size() != n) {
            throw DimensionMismatchError("matrix is not square");
        }
    }
}

}  // namespace

std::optional<RationalVector> try_solve_linear_system(const RationalMatrix& a,
                                                      const RationalVector& b) {
    check_square(a, b);
    const int n = static_cast<int>(a.size());
    if (n == 0) {
        return RationalVector{};
    }
    RationalMatrix m = a;
    RationalVector rhs = b;
    std::vector<int> colperm(n);
    std::iota(colperm.begin(), colperm.end(), 0);

    for (int step = 0; step < n; ++step) {
        // Full pivot: largest |numerator| in the remaining submatrix.
        int prow = -1;
        int pcol = -1;
        Int best(-1);
        for (int r = step; r < n; ++r) {
            for (int c = step; c < n; ++c) {
                if (m[r][c] == 0) {
                    continue;
                }
                Int mag = abs(numerator(m[r][c]));
                if (mag > best) {
                    best = mag;
                    prow = r;
                    pcol = c;
                }
            }
        }
        if (prow < 0) {
            return std::nullopt;  // singular
        }
        std::swap(m[step], m[prow]);
        std::swap(rhs[step], rhs[prow]);
        if (pcol != step) {
            for (int r = 0; r < n; ++r) {
                std::swap(m[r][step], m[r][pcol]);
            }
            std::swap(colperm[step], colperm[pcol]);
        }
        for (int r = step + 1; r < n; ++r) {
            if (m[r][step] == 0) {
                continue;
            }
            Rational factor = m[r][step] / m[step][step];
            m[r][step] = 0;
            for (int c = step + 1; c < n; ++c) {
                m[r][c] -= factor * m[step][c];
            }
            rhs[r] -= factor * rhs[step];
        }
    }

    RationalVector permuted(n);
    for (int r = n - 1; r >= 0; --r) {
        Rational acc = rhs[r];
        for (int c = r + 1; c < n; ++c) {
            acc -= m[r][c] * permuted[c];
        }
        permuted[r] = acc / m[r][r];
    }
    RationalVector x(n);
    for (int i = 0; i < n; ++i) {
        x[colperm[i]] = permuted[i];
    }
    return x;
}

RationalVector solve_linear_system(const RationalMatrix& a, const RationalVector& b) {
    auto x = try_solve_linear_system(a, b);
    if (!x) {
        throw SingularMatrixError("singular matrix in exact solve");
    }
    return *x;
}

Rational determinant(const RationalMatrix& a) {
    const int n = static_cast<int>(a.size());
    for (const auto& row : a) {
        if (static_cast<int>(row.size()) != n) {
            throw DimensionMismatchError("determinant requires a square matrix");
        }
    }
    RationalMatrix m = a;
    Rational det(1);
    for (int step = 0; step < n; ++step) {
        int prow = -1;
        for (int r = step; r < n; ++r) {
            if (m[r][step] != 0) {
                prow = r;
                break;
            }
        }
        if (prow < 0) {
            return Rational(0);
        }
        if (prow != step) {
            std::swap(m[step], m[prow]);
            det = -det;
        }
        det *= m[step][step];
        for (int r = step + 1; r < n; ++r) {
            if (m[r][step] == 0) {
                continue;
            }
            Rational factor = m[r][step] / m[step][step];
            for (int c = step; c < n; ++c) {
                m[r][c] -= factor * m[step][c];
            }
        }
    }
    return det;
}

namespace {

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> rref(RationalMatrix& m, int cols) {
    std::vector<int> pivot_cols;
    int row = 0;
    const int rows = static_cast<int>(m.size());
    for (int col = 0; col < cols && row < rows; ++col) {
        int prow = -1;
        for (int r = row; r < rows; ++r) {
            if (m[r][col] != 0) {
                prow = r;
                break;
            }
        }
        if (prow < 0) {
            continue;
        }
        std::swap(m[row], m[prow]);
        Rational inv = Rational(1) / m[row][col];
        for (int c = col; c < cols; ++c) {
            m[row][c] *= inv;
        }
        for (int r = 0; r < rows; ++r) {
            if (r == row || m[r][col] == 0) {
                continue;
            }
            Rational factor = m[r][col];
            for (int c = col; c < cols; ++c) {
                m[r][c] -= factor * m[row][c];
            }
        }
        pivot_cols.push_back(col);
        ++row;
    }
    return pivot_cols;
}

}  // namespace

int matrix_rank(const RationalMatrix& a) {
    if (a.empty()) {
        return 0;
    }
    RationalMatrix m = a;
    return static_cast<int>(rref(m, static_cast<int>(a.front().size())).size());
}

std::vector<RationalVector> kernel_basis(const RationalMatrix& a, int cols) {
    RationalMatrix m = a;
    for (const auto& row : m) {
        if (static_cast<int>(row.size()) != cols) {
            throw DimensionMismatchError("kernel_basis: row width disagrees with cols");
        }
    }
    std::vector<int> pivot_cols = rref(m, cols);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_cols) {
        is_pivot[c] = true;
    }
    std::vector<RationalVector> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) {
            continue;
        }
        RationalVector v(cols, Rational(0));
        v[f] = 1;
        for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
            v[pivot_cols[r]] = -m[r][f];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

int affine_rank(const std::vector<RationalVector>& points) {
    if (points.empty()) {
        return -1;
    }
    if (points.size() == 1) {
        return 0;
    }
    RationalMatrix diffs;
    diffs.reserve(points.size() - 1);
    for (std::size_t i = 1; i < points.size(); ++i) {
        RationalVector row(points[i].size());
        for (std::size_t j = 0; j < row.size(); ++j) {
            row[j] = points[i][j] - points[0][j];
        }
        diffs.push_back(std::move(row));
    }
    return matrix_rank(diffs);
}

Rational dot(const std::vector<Int>& a, const RationalVector& x) {
    if (a.size() != x.size()) {
        throw DimensionMismatchError("dot: length mismatch");
    }
    Rational acc(0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += Rational(a[i]) * x[i];
    }
    return acc;
}

}  // namespace lpcount
