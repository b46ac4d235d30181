#ifndef ECF_LINSOLVE_HPP
#define ECF_LINSOLVE_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ecf/rational.hpp"

namespace ecf {

struct SingularMatrix : std::runtime_error {
    SingularMatrix() : std::runtime_error("singular matrix: no nonzero pivot") {}
};

using Matrix = std::vector<std::vector<Rational>>;

/// Exact Gaussian elimination over the rationals. Any nonzero pivot is
/// exact, so pivoting just takes the first nonzero entry in the column
/// (deterministic tie-break).
inline std::vector<Rational> solve_linear_system(Matrix a, std::vector<Rational> b) {
    const std::size_t n = a.size();
    if (b.size() != n) throw std::invalid_argument("solve_linear_system: size mismatch");
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("solve_linear_system: non-square matrix");

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) throw SingularMatrix();
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            std::swap(b[pivot], b[col]);
        }
        for (std::size_t row = col + 1; row < n; ++row) {
            if (a[row][col] == 0) continue;
            Rational factor = a[row][col] / a[col][col];
            for (std::size_t k = col; k < n; ++k)
                a[row][k] -= factor * a[col][k];
            b[row] -= factor * b[col];
        }
    }

    std::vector<Rational> x(n, Rational(0));
    for (std::size_t i = n; i-- > 0;) {
        Rational acc = b[i];
        for (std::size_t k = i + 1; k < n; ++k)
            acc -= a[i][k] * x[k];
        x[i] = acc / a[i][i];
    }
    return x;
}

}  // namespace ecf

#endif
