#ifndef ECF_RATIONAL_HPP
#define ECF_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ecf {

// Exact scalars. GMP keeps mpq_class canonical (denominator > 0, reduced,
// zero is 0/1) after every arithmetic operation, which is exactly the
// contract the rest of the library relies on.
using Int = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Int(num), Int(den));
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Int pow_int(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

// floor(num / den) for den > 0, rounding toward -infinity.
inline Int floor_div(const Int& num, const Int& den) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

inline std::string to_string(const Int& x) { return x.get_str(); }

// "a/b", or just "a" when the denominator is 1.
inline std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace ecf

#endif
