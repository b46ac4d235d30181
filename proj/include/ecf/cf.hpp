#ifndef ECF_CF_HPP
#define ECF_CF_HPP

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ecf/rational.hpp"

namespace ecf {

struct UndefinedConvergent : std::runtime_error {
    UndefinedConvergent() : std::runtime_error("convergent undefined: q = 0") {}
};

struct MalformedSequence : std::runtime_error {
    explicit MalformedSequence(const std::string& what) : std::runtime_error(what) {}
};

/// Canonical form requires a_i >= 1 for i >= 1 (a_0 unrestricted). Raw form
/// permits zero terms, as in the expansion [1,0,1,1,2,1,...] of e.
enum class CfForm { Canonical, Raw };

struct TermSequence {
    std::vector<Int> terms;
    CfForm form = CfForm::Canonical;
};

/// Convergent p/q of a continued fraction truncated after term `index`.
struct ConvergentPair {
    Int p;
    Int q;
    std::size_t index = 0;

    bool evaluable() const { return q != 0; }

    Rational value() const {
        if (q == 0) throw UndefinedConvergent();
        return make_rational(p, q);
    }
};

/// Terms of the continued fraction of e in the zero-padded pattern:
/// a_{3i} = a_{3i+2} = 1 and a_{3i+1} = 2i.
inline Int e_term(std::size_t i) {
    if (i % 3 == 1) return Int(2 * static_cast<unsigned long>(i / 3));
    return Int(1);
}

inline TermSequence e_terms(std::size_t count) {
    TermSequence seq;
    seq.form = CfForm::Raw;
    seq.terms.reserve(count);
    for (std::size_t i = 0; i < count; ++i) seq.terms.push_back(e_term(i));
    return seq;
}

/// A term generator must be a pure function of the index.
using TermGenerator = std::function<Int(std::size_t)>;

/// The standard two-term recurrence p_n = a_n p_{n-1} + p_{n-2},
/// q_n = a_n q_{n-1} + q_{n-2}. Never divides, so zero terms are harmless.
inline std::vector<ConvergentPair> convergents(const TermGenerator& term, std::size_t count) {
    std::vector<ConvergentPair> out;
    out.reserve(count);
    Int pm1(1), qm1(0);  // virtual (p_{-1}, q_{-1})
    Int pm2(0), qm2(1);  // virtual (p_{-2}, q_{-2})
    for (std::size_t i = 0; i < count; ++i) {
        Int a = term(i);
        Int p = a * pm1 + pm2;
        Int q = a * qm1 + qm2;
        out.push_back({p, q, i});
        pm2 = std::move(pm1);
        qm2 = std::move(qm1);
        pm1 = p;
        qm1 = q;
    }
    return out;
}

inline std::vector<ConvergentPair> convergents(const TermSequence& seq, std::size_t count) {
    if (count > seq.terms.size())
        throw std::invalid_argument("convergents: count exceeds available terms");
    return convergents([&seq](std::size_t i) { return seq.terms[i]; }, count);
}

/// Value of a finite continued fraction via the recurrence (never nested
/// division). Throws UndefinedConvergent when the final q is zero.
inline Rational eval_cf(const TermSequence& seq) {
    if (seq.terms.empty()) throw std::invalid_argument("eval_cf: empty sequence");
    auto conv = convergents(seq, seq.terms.size());
    return conv.back().value();
}

/// Which of the two finite-CF representations of a rational to produce.
/// Canonical has last term >= 2 unless the expansion is a single term;
/// UnitTail rewrites the final term a_k as a_k - 1, 1 (integers n become
/// [n-1, 1]).
enum class CfConvention { Canonical, UnitTail };

/// Euclidean continued fraction expansion. Floor-based steps keep a_i >= 1
/// for i >= 1 on negative inputs.
inline TermSequence cf_of_rational(const Rational& r, CfConvention convention) {
    TermSequence out;
    out.form = CfForm::Canonical;
    Int num = r.get_num();
    Int den = r.get_den();
    while (true) {
        Int a = floor_div(num, den);
        out.terms.push_back(a);
        Int rem = num - a * den;
        if (rem == 0) break;
        num = std::move(den);
        den = std::move(rem);
    }
    if (convention == CfConvention::UnitTail) {
        out.terms.back() -= 1;
        out.terms.push_back(Int(1));
    }
    return out;
}

/// Turns a raw sequence into canonical form by repeatedly merging
/// [..., a, 0, b, ...] -> [..., a + b, ...]. Bounded number of passes;
/// sequences that cannot reach canonical form (e.g. trailing zero) are
/// rejected.
inline TermSequence normalize_cf(const TermSequence& seq) {
    std::vector<Int> t = seq.terms;
    if (t.empty()) throw MalformedSequence("normalize_cf: empty sequence");
    const std::size_t max_passes = t.size();
    for (std::size_t pass = 0; pass < max_passes; ++pass) {
        bool merged = false;
        for (std::size_t i = 1; i + 1 < t.size(); ++i) {
            if (t[i] == 0) {
                t[i - 1] += t[i + 1];
                t.erase(t.begin() + static_cast<std::ptrdiff_t>(i),
                        t.begin() + static_cast<std::ptrdiff_t>(i) + 2);
                merged = true;
                break;
            }
        }
        if (!merged) break;
    }
    for (std::size_t i = 1; i < t.size(); ++i)
        if (t[i] < 1)
            throw MalformedSequence("normalize_cf: cannot reach canonical form");
    return TermSequence{std::move(t), CfForm::Canonical};
}

}  // namespace ecf

#endif
