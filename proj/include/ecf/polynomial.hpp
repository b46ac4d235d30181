#ifndef ECF_POLYNOMIAL_HPP
#define ECF_POLYNOMIAL_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ecf/rational.hpp"

namespace ecf {

/// Dense univariate polynomial with exact rational coefficients, ascending
/// degree order. The zero polynomial is the empty coefficient vector; any
/// other polynomial has a nonzero leading coefficient.
class Polynomial {
  public:
    Polynomial() = default;

    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        trim();
    }

    Polynomial(std::initializer_list<Rational> coeffs)
        : Polynomial(std::vector<Rational>(coeffs)) {}

    static Polynomial zero() { return Polynomial(); }

    static Polynomial constant(Rational c) { return Polynomial({std::move(c)}); }

    /// c * x^k
    static Polynomial monomial(Rational c, std::size_t k) {
        std::vector<Rational> v(k + 1, Rational(0));
        v[k] = std::move(c);
        return Polynomial(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }

    /// No value for the zero polynomial.
    std::optional<std::size_t> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }

    const std::vector<Rational>& coefficients() const { return coeffs_; }

    /// Coefficient of x^k, zero beyond the stored length.
    const Rational& coeff(std::size_t k) const {
        static const Rational kZero(0);
        return k < coeffs_.size() ? coeffs_[k] : kZero;
    }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    Polynomial derivative() const {
        if (coeffs_.size() <= 1) return Polynomial();
        std::vector<Rational> d(coeffs_.size() - 1);
        for (std::size_t k = 1; k < coeffs_.size(); ++k)
            d[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
        return Polynomial(std::move(d));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> s(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (std::size_t k = 0; k < s.size(); ++k)
            s[k] = a.coeff(k) + b.coeff(k);
        return Polynomial(std::move(s));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> s(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (std::size_t k = 0; k < s.size(); ++k)
            s[k] = a.coeff(k) - b.coeff(k);
        return Polynomial(std::move(s));
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<Rational> p(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                p[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(p));
    }

    Polynomial scale(const Rational& c) const {
        if (c == 0) return Polynomial();
        std::vector<Rational> s(coeffs_);
        for (auto& v : s) v *= c;
        return Polynomial(std::move(s));
    }

    Polynomial pow(unsigned exp) const {
        Polynomial result = constant(Rational(1));
        for (unsigned i = 0; i < exp; ++i) result = result * *this;
        return result;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

    /// Human-readable coefficient list, ascending: "[c0, c1, ...]".
    std::string str() const {
        std::string out = "[";
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (k) out += ", ";
            out += to_string(coeffs_[k]);
        }
        return out + "]";
    }

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

}  // namespace ecf

#endif
