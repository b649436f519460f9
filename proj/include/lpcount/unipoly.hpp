#pragma once

#include <string>
#include <vector>

#include "lpcount/multipoly.hpp"
#include "lpcount/rational.hpp"

namespace lpcount {

/// Univariate polynomial in the dilation parameter over exact rationals.
/// Coefficients are stored in ascending degree with a nonzero leading
/// coefficient (the zero polynomial stores nothing).
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> ascending_coefficients);

    bool is_zero() const { return coefficients_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
    Rational coefficient(int power) const;
    Rational leading_coefficient() const;
    const std::vector<Rational>& coefficients() const { return coefficients_; }

    Rational evaluate(const Rational& x) const;

    /// p(-k).
    UniPoly reflected() const;

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const Rational& c);
    bool operator==(const UniPoly& rhs) const = default;

    /// Terms in decreasing degree, e.g. "5/6*k^3 + 25/6*k".
    std::string to_string(const std::string& symbol = "k") const;

private:
    void trim();

    std::vector<Rational> coefficients_;
};

/// q(k) = p(k*mu_1, ..., k*mu_d), exact. Throws DimensionMismatchError when
/// mu does not match p's variable count.
UniPoly substitute_scaled(const MultiPoly& p, const RationalVector& mu);

}  // namespace lpcount
