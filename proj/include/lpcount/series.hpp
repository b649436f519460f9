#pragma once

#include <map>
#include <optional>
#include <vector>

#include "lpcount/multipoly.hpp"
#include "lpcount/rational.hpp"

namespace lpcount {

enum class SeriesKind { Todd, ToddNeg, Ahat, AhatInv, ExpHalf };

/// Truncated formal power series with exact rational coefficients;
/// coeffs[j] multiplies x^j. Every kind here has constant term 1.
struct SeriesCoeffs {
    SeriesKind kind;
    std::vector<Rational> coeffs;

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
    Rational at(int power) const {
        return power >= 0 && power <= order() ? coeffs[power] : Rational(0);
    }
};

/// Truncated series product, result carried to `order`.
std::vector<Rational> series_mul(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                 int order);

/// Multiplicative inverse of a series with nonzero constant term.
std::vector<Rational> series_inverse(const std::vector<Rational>& a, int order);

/// sinh(x/2)/(x/2): entries 1/(4^j (2j+1)!) at even powers, zero at odd.
SeriesCoeffs ahat_inv_coeffs(int order);

/// (x/2)/sinh(x/2), computed by exact series inversion of ahat_inv_coeffs.
SeriesCoeffs ahat_coeffs(int order);

/// x/(1 - e^{-x}), solved by exact series division; negate flips the sign of
/// odd coefficients, giving the series of Td(-x) = -x/(1 - e^{x}).
SeriesCoeffs todd_coeffs(int order, bool negate);

/// e^{x/2}.
SeriesCoeffs exp_half_coeffs(int order);

/// Constant-coefficient differential operator with commuting symbols
/// d1..dd: sum over exponent vectors of coeff * d^alpha, truncated at a
/// fixed total order. Composition is polynomial multiplication with
/// truncation.
struct DiffOperator {
    int var_count = 0;
    int truncation = 0;
    std::map<std::vector<int>, Rational> terms;

    Rational coefficient(const std::vector<int>& alpha) const {
        auto it = terms.find(alpha);
        return it == terms.end() ? Rational(0) : it->second;
    }
};

/// The formal product S_1(d_1) ... S_d(d_d), optionally multiplied by
/// S_diag(d_1 + ... + d_d), expanded and truncated at total degree
/// <= truncation. The per-variable list fixes the variable count.
DiffOperator build_product_operator(const std::vector<SeriesCoeffs>& per_variable,
                                    const std::optional<SeriesCoeffs>& diagonal, int truncation);

/// Applies the operator termwise: sum over alpha of coeff * d^alpha p.
/// Requires matching variable counts and truncation >= total degree of p.
MultiPoly apply_operator(const DiffOperator& op, const MultiPoly& p);

}  // namespace lpcount
