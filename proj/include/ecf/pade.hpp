#ifndef ECF_PADE_HPP
#define ECF_PADE_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ecf/cf.hpp"
#include "ecf/linsolve.hpp"
#include "ecf/polynomial.hpp"
#include "ecf/rational.hpp"

namespace ecf {

struct DegreeViolation : std::runtime_error {
    DegreeViolation() : std::runtime_error("Pade construction produced out-of-bound degrees") {}
};

struct PoleAtOne : std::runtime_error {
    PoleAtOne() : std::runtime_error("Pade denominator vanishes at z = 1") {}
};

/// Rational function p(z)/q(z) with deg p <= m, deg q <= n, q(0) = 1, whose
/// Taylor series matches e^z through order m+n.
struct PadeApproximant {
    std::size_t m = 0;
    std::size_t n = 0;
    Polynomial numerator;
    Polynomial denominator;

    friend bool operator==(const PadeApproximant& a, const PadeApproximant& b) {
        return a.m == b.m && a.n == b.n && a.numerator == b.numerator &&
               a.denominator == b.denominator;
    }
};

/// Taylor coefficient 1/k! of e^z.
inline Rational exp_series_coeff(std::size_t k) {
    return make_rational(Int(1), factorial(static_cast<unsigned long>(k)));
}

/// For r of degree k, the polynomials with
///   integral_0^1 r(x) e^{zx} dx = (q(z) e^z - p(z)) / z^{k+1},
/// namely q(z) = r(1)z^k - r'(1)z^{k-1} + ... and
/// p(z) = r(0)z^k - r'(0)z^{k-1} + ... (unnormalized).
inline std::pair<Polynomial, Polynomial> lemma_polynomials(const Polynomial& r) {
    if (r.is_zero()) throw std::invalid_argument("lemma_polynomials: zero polynomial");
    const std::size_t k = *r.degree();
    std::vector<Rational> p_coeffs(k + 1, Rational(0));
    std::vector<Rational> q_coeffs(k + 1, Rational(0));
    Polynomial deriv = r;
    Rational sign(1);
    for (std::size_t j = 0; j <= k; ++j) {
        // j-th derivative contributes to the coefficient of z^{k-j}
        p_coeffs[k - j] = sign * deriv.eval(Rational(0));
        q_coeffs[k - j] = sign * deriv.eval(Rational(1));
        deriv = deriv.derivative();
        sign = -sign;
    }
    return {Polynomial(std::move(p_coeffs)), Polynomial(std::move(q_coeffs))};
}

/// Constructs the type (m,n) approximant from r(x) = x^n (x-1)^m, then
/// normalizes so q(0) = 1. Degree bounds hold because r has a root of order
/// m at 1 and order n at 0; a violation signals an implementation bug.
inline PadeApproximant pade_by_lemma(std::size_t m, std::size_t n) {
    if (m == 0 && n == 0) {
        Polynomial one = Polynomial::constant(Rational(1));
        return {0, 0, one, one};
    }
    Polynomial x = Polynomial::monomial(Rational(1), 1);
    Polynomial xm1({Rational(-1), Rational(1)});
    Polynomial r = x.pow(static_cast<unsigned>(n)) * xm1.pow(static_cast<unsigned>(m));
    auto [p, q] = lemma_polynomials(r);
    if ((p.degree() && *p.degree() > m) || (q.degree() && *q.degree() > n))
        throw DegreeViolation();
    Rational q0 = q.coeff(0);
    if (q0 == 0) throw DegreeViolation();
    Rational inv = Rational(1) / q0;
    return {m, n, p.scale(inv), q.scale(inv)};
}

/// Independent construction: with q(0) = 1, the coefficients m+1 .. m+n of
/// q(z) e^z must vanish, which is n linear equations in the n unknown
/// denominator coefficients. p(z) is then the degree-m truncation of
/// q(z) e^z.
inline PadeApproximant pade_by_linear_system(std::size_t m, std::size_t n) {
    std::vector<Rational> q_coeffs(n + 1, Rational(0));
    q_coeffs[0] = Rational(1);
    if (n > 0) {
        Matrix a(n, std::vector<Rational>(n, Rational(0)));
        std::vector<Rational> b(n, Rational(0));
        for (std::size_t row = 0; row < n; ++row) {
            std::size_t j = m + 1 + row;  // series coefficient forced to zero
            for (std::size_t i = 1; i <= n; ++i)
                if (i <= j) a[row][i - 1] = exp_series_coeff(j - i);
            b[row] = -exp_series_coeff(j);
        }
        auto x = solve_linear_system(std::move(a), std::move(b));
        for (std::size_t i = 1; i <= n; ++i) q_coeffs[i] = x[i - 1];
    }
    Polynomial q(q_coeffs);

    std::vector<Rational> p_coeffs(m + 1, Rational(0));
    for (std::size_t j = 0; j <= m; ++j) {
        Rational acc(0);
        for (std::size_t i = 0; i <= n && i <= j; ++i)
            acc += q.coeff(i) * exp_series_coeff(j - i);
        p_coeffs[j] = acc;
    }
    return {m, n, Polynomial(std::move(p_coeffs)), q};
}

/// Index of the first Taylor coefficient of q(z) e^z - p(z) that is nonzero,
/// or check_order if none is found below it. At least m+n+1 for a valid
/// approximant.
inline std::size_t order_of_agreement(const PadeApproximant& approx, std::size_t check_order) {
    for (std::size_t j = 0; j < check_order; ++j) {
        Rational acc = -approx.numerator.coeff(j);
        for (std::size_t i = 0; i <= j; ++i) {
            const Rational& qi = approx.denominator.coeff(i);
            if (qi != 0) acc += qi * exp_series_coeff(j - i);
        }
        if (acc != 0) return j;
    }
    return check_order;
}

/// Cross-multiplication criterion for uniqueness: two approximants of the
/// same type represent the same rational function iff p_a q_b - p_b q_a = 0.
inline bool uniqueness_check(const PadeApproximant& a, const PadeApproximant& b) {
    return (a.numerator * b.denominator - b.numerator * a.denominator).is_zero();
}

inline Rational evaluate_at_one(const PadeApproximant& approx) {
    Rational q1 = approx.denominator.eval(Rational(1));
    if (q1 == 0) throw PoleAtOne();
    return approx.numerator.eval(Rational(1)) / q1;
}

struct CorrespondenceRow {
    std::size_t n = 0;
    bool diag = false;       // r_{n,n}(1)   = p_{3n}/q_{3n}
    bool superdiag = false;  // r_{n,n+1}(1) = p_{3n+1}/q_{3n+1}
    bool subdiag = false;    // r_{n+1,n}(1) = p_{3n+2}/q_{3n+2}
    bool pass() const { return diag && superdiag && subdiag; }
};

struct CorrespondenceReport {
    std::vector<CorrespondenceRow> rows;
    bool all_pass() const {
        for (const auto& r : rows)
            if (!r.pass()) return false;
        return true;
    }
};

/// Verifies that the approximants of types (n,n), (n,n+1), (n+1,n) evaluated
/// at 1 equal the convergents of e, comparing rational values so that the
/// non-uniqueness of CF representations never enters.
inline CorrespondenceReport convergent_correspondence(std::size_t N) {
    CorrespondenceReport report;
    auto conv = convergents(e_term, 3 * N + 3);
    for (std::size_t n = 1; n <= N; ++n) {
        CorrespondenceRow row;
        row.n = n;
        row.diag = evaluate_at_one(pade_by_lemma(n, n)) == conv[3 * n].value();
        row.superdiag = evaluate_at_one(pade_by_lemma(n, n + 1)) == conv[3 * n + 1].value();
        row.subdiag = evaluate_at_one(pade_by_lemma(n + 1, n)) == conv[3 * n + 2].value();
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace ecf

#endif
