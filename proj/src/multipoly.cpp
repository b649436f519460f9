#include "lpcount/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lpcount {

MultiPoly::MultiPoly(int var_count) : var_count_(var_count) {
    if (var_count < 1) {
        throw DimensionMismatchError("MultiPoly needs at least one variable");
    }
}

MultiPoly MultiPoly::constant(int var_count, const Rational& c) {
    MultiPoly p(var_count);
    p.add_term(Exponents(var_count, 0), c);
    return p;
}

MultiPoly MultiPoly::monomial(int var_count, Exponents exponents, const Rational& c) {
    MultiPoly p(var_count);
    if (static_cast<int>(exponents.size()) != var_count) {
        throw DimensionMismatchError("monomial exponent vector has wrong length");
    }
    for (int e : exponents) {
        if (e < 0) {
            throw DimensionMismatchError("monomial exponents must be non-negative");
        }
    }
    p.add_term(exponents, c);
    return p;
}

MultiPoly MultiPoly::variable(int var_count, int index) {
    Exponents e(var_count, 0);
    e.at(index) = 1;
    return monomial(var_count, std::move(e), Rational(1));
}

int MultiPoly::total_degree() const {
    int degree = -1;
    for (const auto& [exponents, c] : terms_) {
        degree = std::max(degree, std::accumulate(exponents.begin(), exponents.end(), 0));
    }
    return degree;
}

Rational MultiPoly::coefficient(const Exponents& exponents) const {
    auto it = terms_.find(exponents);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::check_same_vars(const MultiPoly& rhs) const {
    if (var_count_ != rhs.var_count_) {
        throw DimensionMismatchError("polynomials have different variable counts (" +
                                     std::to_string(var_count_) + " vs " +
                                     std::to_string(rhs.var_count_) + ")");
    }
}

void MultiPoly::add_term(const Exponents& exponents, const Rational& c) {
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.emplace(exponents, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out(var_count_);
    for (const auto& [exponents, c] : terms_) {
        out.terms_.emplace(exponents, -c);
    }
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
    check_same_vars(rhs);
    for (const auto& [exponents, c] : rhs.terms_) {
        add_term(exponents, c);
    }
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
    check_same_vars(rhs);
    for (const auto& [exponents, c] : rhs.terms_) {
        add_term(exponents, -c);
    }
    return *this;
}

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
    lhs.check_same_vars(rhs);
    MultiPoly out(lhs.var_count_);
    MultiPoly::Exponents sum(lhs.var_count_);
    for (const auto& [ea, ca] : lhs.terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            for (int i = 0; i < lhs.var_count_; ++i) {
                sum[i] = ea[i] + eb[i];
            }
            out.add_term(sum, ca * cb);
        }
    }
    return out;
}

MultiPoly operator*(const MultiPoly& lhs, const Rational& c) {
    MultiPoly out(lhs.var_count_);
    if (c == 0) {
        return out;
    }
    for (const auto& [exponents, coeff] : lhs.terms_) {
        out.terms_.emplace(exponents, coeff * c);
    }
    return out;
}

bool MultiPoly::operator==(const MultiPoly& rhs) const {
    return var_count_ == rhs.var_count_ && terms_ == rhs.terms_;
}

MultiPoly MultiPoly::partial(int index) const {
    if (index < 0 || index >= var_count_) {
        throw DimensionMismatchError("partial derivative index out of range");
    }
    MultiPoly out(var_count_);
    for (const auto& [exponents, c] : terms_) {
        if (exponents[index] == 0) {
            continue;
        }
        Exponents e = exponents;
        --e[index];
        out.add_term(e, c * exponents[index]);
    }
    return out;
}

Rational MultiPoly::evaluate(const RationalVector& point) const {
    if (static_cast<int>(point.size()) != var_count_) {
        throw DimensionMismatchError("evaluation point has wrong length");
    }
    Rational acc(0);
    for (const auto& [exponents, c] : terms_) {
        Rational term = c;
        for (int i = 0; i < var_count_; ++i) {
            term *= rational_pow(point[i], exponents[i]);
        }
        acc += term;
    }
    return acc;
}

std::string MultiPoly::to_string(const std::string& var_prefix) const {
    if (terms_.empty()) {
        return "0";
    }
    // Decreasing total degree, then decreasing lexicographic exponents.
    std::vector<const TermMap::value_type*> order;
    order.reserve(terms_.size());
    for (const auto& term : terms_) {
        order.push_back(&term);
    }
    auto degree_of = [](const Exponents& e) {
        return std::accumulate(e.begin(), e.end(), 0);
    };
    std::sort(order.begin(), order.end(), [&](const auto* a, const auto* b) {
        int da = degree_of(a->first);
        int db = degree_of(b->first);
        if (da != db) {
            return da > db;
        }
        return a->first > b->first;
    });

    std::ostringstream out;
    bool first = true;
    for (const auto* term : order) {
        const auto& [exponents, c] = *term;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) {
                out << "-";
            }
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        std::string vars;
        for (int i = 0; i < var_count_; ++i) {
            if (exponents[i] == 0) {
                continue;
            }
            if (!vars.empty()) {
                vars += "*";
            }
            vars += var_prefix + std::to_string(i + 1);
            if (exponents[i] > 1) {
                vars += "^" + std::to_string(exponents[i]);
            }
        }
        if (vars.empty()) {
            out << format_rational(mag);
        } else if (mag == 1) {
            out << vars;
        } else {
            out << format_rational(mag) << "*" << vars;
        }
    }
    return out.str();
}

}  // namespace lpcount
