#include "lpcount/rational.hpp"

#include <cctype>

namespace lpcount {

bool is_integer(const Rational& q) { return denominator(q) == 1; }

Int to_integer(const Rational& q) {
    if (!is_integer(q)) {
        throw InternalError("to_integer called on non-integer rational " + format_rational(q));
    }
    return numerator(q);
}

Int rational_floor(const Rational& q) {
    Int num = numerator(q);
    Int den = denominator(q);
    Int quot = num / den;  // truncates toward zero
    if (num % den != 0 && num < 0) {
        --quot;
    }
    return quot;
}

Int rational_ceil(const Rational& q) {
    Int num = numerator(q);
    Int den = denominator(q);
    Int quot = num / den;
    if (num % den != 0 && num > 0) {
        ++quot;
    }
    return quot;
}

namespace {

bool valid_integer_token(const std::string& s, bool allow_sign) {
    if (s.empty()) {
        return false;
    }
    std::size_t start = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) {
        start = 1;
    }
    if (start == s.size()) {
        return false;
    }
    for (std::size_t i = start; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return false;
        }
    }
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!valid_integer_token(text, true)) {
            throw ParseError("invalid rational literal \"" + text + "\"");
        }
        return Rational(Int(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!valid_integer_token(num, true) || !valid_integer_token(den, false)) {
        throw ParseError("invalid rational literal \"" + text + "\"");
    }
    Int d(den);
    if (d == 0) {
        throw ParseError("zero denominator in rational literal \"" + text + "\"");
    }
    return Rational(Int(num), d);
}

std::string format_rational(const Rational& q) {
    std::string out = numerator(q).str();
    if (denominator(q) != 1) {
        out += "/" + denominator(q).str();
    }
    return out;
}

Rational rational_pow(const Rational& base, int exponent) {
    if (exponent < 0) {
        throw InternalError("rational_pow requires a non-negative exponent");
    }
    Rational result(1);
    for (int i = 0; i < exponent; ++i) {
        result *= base;
    }
    return result;
}

Int factorial(int m) {
    if (m < 0) {
        throw InternalError("factorial of a negative integer");
    }
    Int result(1);
    for (int i = 2; i <= m; ++i) {
        result *= i;
    }
    return result;
}

Int binomial(int n, int k) {
    if (k < 0 || k > n) {
        return Int(0);
    }
    Int result(1);
    for (int i = 0; i < k; ++i) {
        result = result * (n - i) / (i + 1);
    }
    return result;
}

}  // namespace lpcount
