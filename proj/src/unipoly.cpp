#include "lpcount/unipoly.hpp"

#include <numeric>
#include <sstream>

namespace lpcount {

UniPoly::UniPoly(std::vector<Rational> ascending_coefficients)
    : coefficients_(std::move(ascending_coefficients)) {
    trim();
}

void UniPoly::trim() {
    while (!coefficients_.empty() && coefficients_.back() == 0) {
        coefficients_.pop_back();
    }
}

Rational UniPoly::coefficient(int power) const {
    if (power < 0 || power >= static_cast<int>(coefficients_.size())) {
        return Rational(0);
    }
    return coefficients_[power];
}

Rational UniPoly::leading_coefficient() const {
    return coefficients_.empty() ? Rational(0) : coefficients_.back();
}

Rational UniPoly::evaluate(const Rational& x) const {
    Rational acc(0);
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

UniPoly UniPoly::reflected() const {
    std::vector<Rational> out = coefficients_;
    for (std::size_t j = 1; j < out.size(); j += 2) {
        out[j] = -out[j];
    }
    return UniPoly(std::move(out));
}

UniPoly UniPoly::operator-() const {
    std::vector<Rational> out = coefficients_;
    for (auto& c : out) {
        c = -c;
    }
    return UniPoly(std::move(out));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> out(std::max(a.coefficients_.size(), b.coefficients_.size()),
                              Rational(0));
    for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
        out[i] += a.coefficients_[i];
    }
    for (std::size_t i = 0; i < b.coefficients_.size(); ++i) {
        out[i] += b.coefficients_[i];
    }
    return UniPoly(std::move(out));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    return a + (-b);
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) {
        return UniPoly();
    }
    std::vector<Rational> out(a.coefficients_.size() + b.coefficients_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
        for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
            out[i + j] += a.coefficients_[i] * b.coefficients_[j];
        }
    }
    return UniPoly(std::move(out));
}

UniPoly operator*(const UniPoly& a, const Rational& c) {
    std::vector<Rational> out = a.coefficients_;
    for (auto& coeff : out) {
        coeff *= c;
    }
    return UniPoly(std::move(out));
}

std::string UniPoly::to_string(const std::string& symbol) const {
    if (coefficients_.empty()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (int power = degree(); power >= 0; --power) {
        const Rational& c = coefficients_[power];
        if (c == 0) {
            continue;
        }
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) {
                out << "-";
            }
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (power == 0) {
            out << format_rational(mag);
        } else {
            if (mag != 1) {
                out << format_rational(mag) << "*";
            }
            out << symbol;
            if (power > 1) {
                out << "^" << power;
            }
        }
    }
    return out.str();
}

UniPoly substitute_scaled(const MultiPoly& p, const RationalVector& mu) {
    if (static_cast<int>(mu.size()) != p.var_count()) {
        throw DimensionMismatchError("substitute_scaled: mu length " +
                                     std::to_string(mu.size()) + " does not match " +
                                     std::to_string(p.var_count()) + " variables");
    }
    std::vector<Rational> coeffs(std::max(0, p.total_degree()) + 1, Rational(0));
    for (const auto& [exponents, c] : p.terms()) {
        Rational scale = c;
        int total = 0;
        for (int i = 0; i < p.var_count(); ++i) {
            scale *= rational_pow(mu[i], exponents[i]);
            total += exponents[i];
        }
        coeffs[total] += scale;
    }
    return UniPoly(std::move(coeffs));
}

}  // namespace lpcount
