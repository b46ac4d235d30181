#ifndef ECF_HERMITE_HPP
#define ECF_HERMITE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "ecf/cf.hpp"
#include "ecf/polynomial.hpp"
#include "ecf/rational.hpp"

namespace ecf {

/// Exact value a + b*e. Zero iff both components are zero (e is irrational,
/// so this never needs a numeric check).
struct LinearFormInE {
    Rational constant;       // a
    Rational e_coefficient;  // b

    friend LinearFormInE operator+(const LinearFormInE& x, const LinearFormInE& y) {
        return {x.constant + y.constant, x.e_coefficient + y.e_coefficient};
    }
    friend LinearFormInE operator-(const LinearFormInE& x, const LinearFormInE& y) {
        return {x.constant - y.constant, x.e_coefficient - y.e_coefficient};
    }
    LinearFormInE scale(const Rational& c) const {
        return {constant * c, e_coefficient * c};
    }
    friend bool operator==(const LinearFormInE& x, const LinearFormInE& y) {
        return x.constant == y.constant && x.e_coefficient == y.e_coefficient;
    }

    std::string str() const {
        return to_string(constant) + " + " + to_string(e_coefficient) + "*e";
    }
};

/// The integrals A_n, B_n, C_n of x-power products times e^x over [0,1],
/// scaled by 1/n!. Always satisfies C = B - A.
struct HermiteTriple {
    std::size_t n = 0;
    LinearFormInE A;
    LinearFormInE B;
    LinearFormInE C;
};

/// Iterates A_n = -B_{n-1} - C_{n-1}, B_n = -2n A_n + C_{n-1}, C_n = B_n - A_n
/// from A_0 = e - 1, B_0 = 1, C_0 = 2 - e.
inline HermiteTriple hermite_by_recurrence(std::size_t n) {
    HermiteTriple t;
    t.n = 0;
    t.A = {Rational(-1), Rational(1)};
    t.B = {Rational(1), Rational(0)};
    t.C = {Rational(2), Rational(-1)};
    for (std::size_t k = 1; k <= n; ++k) {
        LinearFormInE a = (t.B + t.C).scale(Rational(-1));
        LinearFormInE b = a.scale(Rational(-2 * static_cast<long>(k))) + t.C;
        t = {k, a, b, b - a};
    }
    return t;
}

/// Exact value of the integral of f(x) e^x over [0,1] as a linear form in e,
/// via the monomial reduction I_k = e - k I_{k-1}, I_0 = e - 1.
inline LinearFormInE integral_poly_exp(const Polynomial& f) {
    if (f.is_zero()) return {Rational(0), Rational(0)};
    std::size_t deg = *f.degree();
    std::vector<LinearFormInE> moments(deg + 1);
    moments[0] = {Rational(-1), Rational(1)};
    for (std::size_t k = 1; k <= deg; ++k) {
        Rational mk(-static_cast<long>(k));
        moments[k] = moments[k - 1].scale(mk) + LinearFormInE{Rational(0), Rational(1)};
    }
    LinearFormInE acc{Rational(0), Rational(0)};
    for (std::size_t k = 0; k <= deg; ++k)
        acc = acc + moments[k].scale(f.coeff(k));
    return acc;
}

/// The same triple computed by symbolic integration of the defining
/// integrands. Never consults the convergents, so it serves as the
/// independent oracle for the recurrence path.
inline HermiteTriple hermite_by_integration(std::size_t n) {
    Polynomial x = Polynomial::monomial(Rational(1), 1);
    Polynomial xm1({Rational(-1), Rational(1)});
    Polynomial xn = x.pow(static_cast<unsigned>(n));
    Polynomial xm1n = xm1.pow(static_cast<unsigned>(n));
    Rational inv_fact = make_rational(Int(1), factorial(static_cast<unsigned long>(n)));

    Polynomial base = (xn * xm1n).scale(inv_fact);
    HermiteTriple t;
    t.n = n;
    t.A = integral_poly_exp(base);
    t.B = integral_poly_exp(base * x);
    t.C = integral_poly_exp(base * xm1);
    return t;
}

struct VerificationRow {
    std::size_t n = 0;
    bool pass = false;
    std::string detail;
};

struct VerificationReport {
    std::vector<VerificationRow> rows;
    bool all_pass() const {
        for (const auto& r : rows)
            if (!r.pass) return false;
        return true;
    }
};

/// Checks A_n = q_{3n} e - p_{3n}, B_n = p_{3n+1} - q_{3n+1} e,
/// C_n = p_{3n+2} - q_{3n+2} e exactly against the e-sequence convergents,
/// for all n <= N.
inline VerificationReport verify_prop1(std::size_t N) {
    VerificationReport report;
    auto conv = convergents(e_term, 3 * N + 3);
    HermiteTriple t = hermite_by_recurrence(0);
    for (std::size_t n = 0; n <= N; ++n) {
        if (n > 0) t = hermite_by_recurrence(n);
        const auto& c0 = conv[3 * n];
        const auto& c1 = conv[3 * n + 1];
        const auto& c2 = conv[3 * n + 2];
        LinearFormInE expect_a{make_rational(-c0.p, Int(1)), make_rational(c0.q, Int(1))};
        LinearFormInE expect_b{make_rational(c1.p, Int(1)), make_rational(-c1.q, Int(1))};
        LinearFormInE expect_c{make_rational(c2.p, Int(1)), make_rational(-c2.q, Int(1))};
        bool ok = t.A == expect_a && t.B == expect_b && t.C == expect_c;
        report.rows.push_back({n, ok,
                               "A=" + t.A.str() + " B=" + t.B.str() + " C=" + t.C.str()});
    }
    return report;
}

/// The two polynomial identities underlying the recurrences for A_n and B_n.
/// Each side is P(x) e^x; the derivative side reduces to (f + f') e^x by the
/// product rule, so both checks are exact polynomial equalities.
inline VerificationReport verify_derivative_identities(std::size_t n_max) {
    VerificationReport report;
    Polynomial x = Polynomial::monomial(Rational(1), 1);
    Polynomial xm1({Rational(-1), Rational(1)});
    for (std::size_t n = 1; n <= n_max; ++n) {
        Rational inv_n = make_rational(Int(1), factorial(static_cast<unsigned long>(n)));
        Rational inv_nm1 = make_rational(Int(1), factorial(static_cast<unsigned long>(n - 1)));
        Polynomial xn = x.pow(static_cast<unsigned>(n));
        Polynomial xnm1 = x.pow(static_cast<unsigned>(n - 1));
        Polynomial xm1n = xm1.pow(static_cast<unsigned>(n));
        Polynomial xm1nm1 = xm1.pow(static_cast<unsigned>(n - 1));

        // x^n(x-1)^n/n! + x^n(x-1)^{n-1}/(n-1)! + x^{n-1}(x-1)^n/(n-1)!
        //   = d/dx [ x^n(x-1)^n/n! e^x ] / e^x
        Polynomial f = (xn * xm1n).scale(inv_n);
        Polynomial lhs_a = f + (xn * xm1nm1).scale(inv_nm1) + (xnm1 * xm1n).scale(inv_nm1);
        bool ok_a = lhs_a == f + f.derivative();

        // x^{n+1}(x-1)^n/n! + 2n x^n(x-1)^n/n! - x^{n-1}(x-1)^n/(n-1)!
        //   = d/dx [ x^n(x-1)^{n+1}/n! e^x ] / e^x
        Polynomial g = (xn * xm1n * xm1).scale(inv_n);
        Polynomial lhs_b = (xn * x * xm1n).scale(inv_n) +
                           (xn * xm1n).scale(inv_n * Rational(2 * static_cast<long>(n))) -
                           (xnm1 * xm1n).scale(inv_nm1);
        bool ok_b = lhs_b == g + g.derivative();

        report.rows.push_back({n, ok_a && ok_b,
                               std::string("eq2 ") + (ok_a ? "ok" : "FAIL") +
                                   ", eq3 " + (ok_b ? "ok" : "FAIL")});
    }
    return report;
}

/// Proven upper bound 3/(4^n n!) on |A_n|, |B_n|, |C_n|: on [0,1],
/// |x(x-1)| <= 1/4 and e^x <= 3, and the extra factor of |x| or |x-1| in
/// B_n, C_n is at most 1.
inline Rational hermite_bound(std::size_t n) {
    Int den = pow_int(Int(4), static_cast<unsigned long>(n)) *
              factorial(static_cast<unsigned long>(n));
    return make_rational(Int(3), den);
}

}  // namespace ecf

#endif
