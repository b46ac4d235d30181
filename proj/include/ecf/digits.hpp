#ifndef ECF_DIGITS_HPP
#define ECF_DIGITS_HPP

#include <chrono>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ecf/cf.hpp"
#include "ecf/hermite.hpp"
#include "ecf/rational.hpp"

namespace ecf {

struct DigitMismatch : std::runtime_error {
    explicit DigitMismatch(const std::string& what) : std::runtime_error(what) {}
};

/// Correctly rounded decimal rendering of e with a certified error bound.
struct DecimalResult {
    std::string digits;        // "2." followed by exactly D fractional digits
    std::size_t terms_used;    // convergent index / number of series terms
    Rational bound;            // proven bound on |e - rendered value|
};

/// Truncated (not rounded) decimal expansion of a positive rational with
/// exactly frac_digits fractional digits.
inline std::string decimal_truncate(const Rational& v, std::size_t frac_digits) {
    Int num = v.get_num();
    Int den = v.get_den();
    Int ipart = num / den;
    Int rem = num - ipart * den;
    Int scaled = rem * pow_int(Int(10), static_cast<unsigned long>(frac_digits)) / den;
    std::string frac = scaled.get_str();
    if (frac.size() < frac_digits)
        frac.insert(0, frac_digits - frac.size(), '0');
    return ipart.get_str() + "." + frac;
}

namespace detail {

struct Rounded {
    std::string digits;
    Rational rendered;
    bool ambiguous = false;
};

// Round-half-up at the D-th fractional digit of a value known only up to the
// truncation error of its D+G digit string. The guard digits decide the
// rounding; boundary patterns (all 0s, all 9s, 5 then 0s, 4 then 9s) are
// flagged ambiguous because a 1-ulp error in the last guard digit could flip
// either the truncation or the rounding decision.
inline Rounded round_at(const Rational& v, std::size_t d, std::size_t guard) {
    std::string full = decimal_truncate(v, d + guard);
    std::size_t dot = full.find('.');
    std::string ipart = full.substr(0, dot);
    std::string frac = full.substr(dot + 1);
    std::string keep = frac.substr(0, d);
    std::string guards = frac.substr(d);

    auto all_of_char = [](const std::string& s, char c, std::size_t from = 0) {
        for (std::size_t i = from; i < s.size(); ++i)
            if (s[i] != c) return false;
        return true;
    };
    Rounded out;
    out.ambiguous = all_of_char(guards, '0') || all_of_char(guards, '9') ||
                    (guards[0] == '5' && all_of_char(guards, '0', 1)) ||
                    (guards[0] == '4' && all_of_char(guards, '9', 1));
    if (out.ambiguous) return out;

    Int scale = pow_int(Int(10), static_cast<unsigned long>(d));
    Int frac_val(keep.empty() ? "0" : keep, 10);
    Int int_val(ipart, 10);
    if (guards[0] >= '5') {
        frac_val += 1;
        if (frac_val == scale) {
            frac_val = 0;
            int_val += 1;
        }
    }
    std::string frac_str = frac_val.get_str();
    if (frac_str.size() < d) frac_str.insert(0, d - frac_str.size(), '0');
    out.digits = int_val.get_str() + "." + frac_str;
    out.rendered = make_rational(int_val * scale + frac_val, scale);
    return out;
}

}  // namespace detail

/// Digits of e from the continued-fraction convergents. Picks the smallest n
/// with hermite_bound(n)/q_{3n} below the working precision, renders
/// p_{3n}/q_{3n} by exact long division, and retries with more guard digits
/// on rounding ambiguity. Terminates because e is irrational.
inline DecimalResult e_decimal(std::size_t d) {
    if (d < 1) throw std::invalid_argument("e_decimal: need at least one digit");
    std::size_t guard = 5;
    while (true) {
        Int threshold = Int(3) * pow_int(Int(10), static_cast<unsigned long>(d + guard));
        // need 3 * 10^{d+guard} < 4^n n! q_{3n}
        Int pm1(1), qm1(0), pm2(0), qm2(1);
        Int p3n(0), q3n(0);
        Int four_n_fact(1);  // 4^n n!
        std::size_t n = 0;
        for (std::size_t i = 0;; ++i) {
            Int a = e_term(i);
            Int p = a * pm1 + pm2;
            Int q = a * qm1 + qm2;
            pm2 = std::move(pm1);
            qm2 = std::move(qm1);
            pm1 = p;
            qm1 = q;
            if (i % 3 == 0) {
                n = i / 3;
                if (n > 0) four_n_fact *= 4 * static_cast<unsigned long>(n);
                if (n >= 1 && four_n_fact * q > threshold) {
                    p3n = std::move(p);
                    q3n = std::move(q);
                    break;
                }
            }
        }
        Rational value = make_rational(p3n, q3n);
        auto rounded = detail::round_at(value, d, guard);
        if (rounded.ambiguous) {
            guard *= 2;
            continue;
        }
        Rational approx_err = hermite_bound(n) / Rational(q3n);
        Rational render_err = abs(value - rounded.rendered);
        return {rounded.digits, 3 * n, approx_err + render_err};
    }
}

/// Independent oracle: partial sums of the exponential series with the
/// certified tail bound sum_{k>N} 1/k! < 3/(N+1)!.
inline DecimalResult e_by_taylor(std::size_t d) {
    if (d < 1) throw std::invalid_argument("e_by_taylor: need at least one digit");
    std::size_t guard = 5;
    while (true) {
        Int threshold = Int(3) * pow_int(Int(10), static_cast<unsigned long>(d + guard));
        // need 3 * 10^{d+guard} < (N+1)!
        std::size_t n_terms = 0;
        Int next_fact(1);  // (N+1)!
        while (next_fact <= threshold) {
            ++n_terms;
            next_fact *= static_cast<unsigned long>(n_terms + 1);
        }
        // sum_{k=0}^{N} N!/k! over N!, built by s_j = s_{j-1} * j + 1
        Int num(1);
        Int den(1);
        for (std::size_t k = 1; k <= n_terms; ++k) {
            num = num * static_cast<unsigned long>(k) + 1;
            den *= static_cast<unsigned long>(k);
        }
        Rational value = make_rational(num, den);
        auto rounded = detail::round_at(value, d, guard);
        if (rounded.ambiguous) {
            guard *= 2;
            continue;
        }
        Rational tail = make_rational(Int(3), next_fact);
        Rational render_err = abs(value - rounded.rendered);
        return {rounded.digits, n_terms, tail + render_err};
    }
}

struct BenchmarkRecord {
    std::string method;
    std::size_t terms = 0;
    double wall_ms = 0.0;
    std::size_t digits_agreed = 0;
};

struct BenchmarkReport {
    std::vector<BenchmarkRecord> records;
    std::string digits;
};

/// Runs both methods, times them, and requires digit-for-digit agreement.
inline BenchmarkReport benchmark(std::size_t d) {
    using clock = std::chrono::steady_clock;

    auto t0 = clock::now();
    DecimalResult cf = e_decimal(d);
    auto t1 = clock::now();
    DecimalResult taylor = e_by_taylor(d);
    auto t2 = clock::now();

    if (cf.digits != taylor.digits)
        throw DigitMismatch("convergent and Taylor digit strings disagree at D=" +
                            std::to_string(d));

    auto ms = [](auto a, auto b) {
        return std::chrono::duration<double, std::milli>(b - a).count();
    };
    BenchmarkReport report;
    report.digits = cf.digits;
    report.records.push_back({"convergents", cf.terms_used, ms(t0, t1), d});
    report.records.push_back({"taylor", taylor.terms_used, ms(t1, t2), d});
    return report;
}

}  // namespace ecf

#endif
