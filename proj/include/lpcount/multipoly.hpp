#pragma once

#include <map>
#include <string>
#include <vector>

#include "lpcount/linalg.hpp"
#include "lpcount/rational.hpp"

namespace lpcount {

/// Sparse multivariate polynomial over exact rationals in variables
/// l1..ld. Terms map exponent vectors to nonzero coefficients; the zero
/// polynomial has no terms. Values are immutable in spirit: every operation
/// returns a fresh polynomial.
class MultiPoly {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, Rational>;

    explicit MultiPoly(int var_count);

    static MultiPoly constant(int var_count, const Rational& c);
    static MultiPoly monomial(int var_count, Exponents exponents, const Rational& c);
    /// The variable l_{index+1} as a polynomial.
    static MultiPoly variable(int var_count, int index);

    int var_count() const { return var_count_; }
    bool is_zero() const { return terms_.empty(); }
    /// Maximum total degree over all terms; -1 for the zero polynomial.
    int total_degree() const;
    const TermMap& terms() const { return terms_; }
    Rational coefficient(const Exponents& exponents) const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);

    friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
    friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
    friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
    friend MultiPoly operator*(const MultiPoly& lhs, const Rational& c);
    friend MultiPoly operator*(const Rational& c, const MultiPoly& rhs) { return rhs * c; }

    bool operator==(const MultiPoly& rhs) const;

    /// Partial derivative with respect to variable `index` (0-based).
    MultiPoly partial(int index) const;

    Rational evaluate(const RationalVector& point) const;

    /// Terms in decreasing total degree, e.g. "1/2*l1^2*l2 + l3 - 2".
    std::string to_string(const std::string& var_prefix = "l") const;

private:
    void check_same_vars(const MultiPoly& rhs) const;
    void add_term(const Exponents& exponents, const Rational& c);

    int var_count_;
    TermMap terms_;
};

}  // namespace lpcount
