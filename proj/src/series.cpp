#include "lpcount/series.hpp"

#include <functional>
#include <numeric>

namespace lpcount {

std::vector<Rational> series_mul(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                 int order) {
    std::vector<Rational> out(order + 1, Rational(0));
    for (int i = 0; i <= order && i < static_cast<int>(a.size()); ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (int j = 0; i + j <= order && j < static_cast<int>(b.size()); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

std::vector<Rational> series_inverse(const std::vector<Rational>& a, int order) {
    if (a.empty() || a[0] == 0) {
        throw DimensionMismatchError("series_inverse requires a nonzero constant term");
    }
    std::vector<Rational> out(order + 1, Rational(0));
    out[0] = Rational(1) / a[0];
    for (int k = 1; k <= order; ++k) {
        Rational acc(0);
        for (int j = 1; j <= k && j < static_cast<int>(a.size()); ++j) {
            acc += a[j] * out[k - j];
        }
        out[k] = -acc / a[0];
    }
    return out;
}

SeriesCoeffs ahat_inv_coeffs(int order) {
    std::vector<Rational> coeffs(order + 1, Rational(0));
    for (int j = 0; 2 * j <= order; ++j) {
        // (x/2)^{2j} / (2j+1)! term of sinh(x/2)/(x/2)
        Int four_pow(1);
        for (int i = 0; i < j; ++i) {
            four_pow *= 4;
        }
        coeffs[2 * j] = Rational(Int(1), four_pow * factorial(2 * j + 1));
    }
    return {SeriesKind::AhatInv, std::move(coeffs)};
}

SeriesCoeffs ahat_coeffs(int order) {
    return {SeriesKind::Ahat, series_inverse(ahat_inv_coeffs(order).coeffs, order)};
}

SeriesCoeffs todd_coeffs(int order, bool negate) {
    // (1 - e^{-x})/x = sum_{k>=0} (-1)^k x^k / (k+1)!
    std::vector<Rational> divisor(order + 1);
    for (int k = 0; k <= order; ++k) {
        Rational c(Int(1), factorial(k + 1));
        divisor[k] = (k % 2 == 0) ? c : -c;
    }
    std::vector<Rational> coeffs = series_inverse(divisor, order);
    if (negate) {
        for (int k = 1; k <= order; k += 2) {
            coeffs[k] = -coeffs[k];
        }
    }
    return {negate ? SeriesKind::ToddNeg : SeriesKind::Todd, std::move(coeffs)};
}

SeriesCoeffs exp_half_coeffs(int order) {
    std::vector<Rational> coeffs(order + 1);
    Int two_pow(1);
    for (int k = 0; k <= order; ++k) {
        coeffs[k] = Rational(Int(1), two_pow * factorial(k));
        two_pow *= 2;
    }
    return {SeriesKind::ExpHalf, std::move(coeffs)};
}

namespace {

using TermMap = std::map<std::vector<int>, Rational>;

void add_term(TermMap& terms, const std::vector<int>& alpha, const Rational& c) {
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms.emplace(alpha, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms.erase(it);
        }
    }
}

/// Enumerates all gamma in N^d with |gamma| = m.
void for_each_composition(int m, int d, std::vector<int>& gamma, int pos,
                          const std::function<void(const std::vector<int>&)>& fn) {
    if (pos == d - 1) {
        gamma[pos] = m;
        fn(gamma);
        return;
    }
    for (int v = 0; v <= m; ++v) {
        gamma[pos] = v;
        for_each_composition(m - v, d, gamma, pos + 1, fn);
    }
}

}  // namespace

DiffOperator build_product_operator(const std::vector<SeriesCoeffs>& per_variable,
                                    const std::optional<SeriesCoeffs>& diagonal,
                                    int truncation) {
    const int d = static_cast<int>(per_variable.size());
    if (d == 0) {
        throw DimensionMismatchError("build_product_operator needs at least one variable");
    }
    if (truncation < 0) {
        throw DimensionMismatchError("truncation must be non-negative");
    }

    TermMap acc;
    acc.emplace(std::vector<int>(d, 0), Rational(1));
    for (int i = 0; i < d; ++i) {
        const SeriesCoeffs& s = per_variable[i];
        TermMap next;
        for (const auto& [alpha, c] : acc) {
            const int used = std::accumulate(alpha.begin(), alpha.end(), 0);
            std::vector<int> beta = alpha;
            for (int j = 0; used + j <= truncation; ++j) {
                const Rational sj = s.at(j);
                if (sj == 0) {
                    continue;
                }
                beta[i] = alpha[i] + j;
                add_term(next, beta, c * sj);
            }
        }
        acc = std::move(next);
    }

    if (diagonal) {
        // S(d_1 + ... + d_d) expands through multinomials:
        // (sum_i d_i)^m = sum_{|gamma| = m} m!/gamma! d^gamma.
        TermMap diag;
        for (int m = 0; m <= truncation; ++m) {
            const Rational sm = diagonal->at(m);
            if (sm == 0) {
                continue;
            }
            const Int m_fact = factorial(m);
            std::vector<int> gamma(d, 0);
            for_each_composition(m, d, gamma, 0, [&](const std::vector<int>& g) {
                Int denom(1);
                for (int gi : g) {
                    denom *= factorial(gi);
                }
                add_term(diag, g, sm * Rational(m_fact, denom));
            });
        }
        TermMap next;
        std::vector<int> sum(d);
        for (const auto& [alpha, ca] : acc) {
            const int deg_a = std::accumulate(alpha.begin(), alpha.end(), 0);
            for (const auto& [gamma, cg] : diag) {
                const int deg_g = std::accumulate(gamma.begin(), gamma.end(), 0);
                if (deg_a + deg_g > truncation) {
                    continue;
                }
                for (int i = 0; i < d; ++i) {
                    sum[i] = alpha[i] + gamma[i];
                }
                add_term(next, sum, ca * cg);
            }
        }
        acc = std::move(next);
    }

    return {d, truncation, std::move(acc)};
}

MultiPoly apply_operator(const DiffOperator& op, const MultiPoly& p) {
    if (op.var_count != p.var_count()) {
        throw DimensionMismatchError("operator and polynomial variable counts differ");
    }
    if (op.truncation < p.total_degree()) {
        throw InternalError("apply_operator: truncation " + std::to_string(op.truncation) +
                            " is below the operand degree " + std::to_string(p.total_degree()));
    }
    const int d = op.var_count;
    MultiPoly out(d);
    MultiPoly::Exponents shifted(d);
    for (const auto& [alpha, a] : op.terms) {
        for (const auto& [beta, c] : p.terms()) {
            // d^alpha annihilates the term unless beta >= alpha componentwise.
            Rational scale = a * c;
            bool alive = true;
            for (int i = 0; i < d && alive; ++i) {
                if (beta[i] < alpha[i]) {
                    alive = false;
                    break;
                }
                shifted[i] = beta[i] - alpha[i];
                for (int f = beta[i]; f > beta[i] - alpha[i]; --f) {
                    scale *= f;
                }
            }
            if (alive) {
                out += MultiPoly::monomial(d, shifted, scale);
            }
        }
    }
    return out;
}

}  // namespace lpcount
