#pragma once

#include <gmpxx.h>

#include "qpaths/algebra/matrix.hpp"
#include "qpaths/laurent/laurent_poly.hpp"

namespace qp {

// Fraction-free elimination; every intermediate division is exact.
LaurentPoly bareiss_det(Matrix<LaurentPoly> m);

// Plain Gaussian elimination over the rationals.
mpq_class rational_det(Matrix<mpq_class> m);

// Division-free determinant (Berkowitz), usable over any commutative ring.
template <class T>
T berkowitz_det(const Matrix<T>& a) {
    const std::size_t n = a.rows();
    if (n != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    if (n == 0) return T(1);
    // vect holds the characteristic polynomial coefficients of the leading
    // principal submatrix processed so far, highest degree first.
    std::vector<T> vect{T(1), -a(0, 0)};
    for (std::size_t k = 1; k < n; ++k) {
        // Column k above the diagonal and row k left of it.
        std::vector<T> col(k), row(k);
        for (std::size_t i = 0; i < k; ++i) {
            col[i] = a(i, k);
            row[i] = a(k, i);
        }
        // Toeplitz column: 1, -a_kk, then -row * A_k^j * col for j < k.
        std::vector<T> c(k + 2, T(0));
        c[0] = T(1);
        c[1] = -a(k, k);
        std::vector<T> v = col;
        for (std::size_t j = 0; j < k; ++j) {
            T s(0);
            for (std::size_t i = 0; i < k; ++i) s += row[i] * v[i];
            c[j + 2] = -s;
            if (j + 1 == k) break;
            std::vector<T> nv(k, T(0));
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t l = 0; l < k; ++l) nv[i] += a(i, l) * v[l];
            v = std::move(nv);
        }
        // Toeplitz product: new_vect = C * vect, C lower triangular of size
        // (k+2) x (k+1) with first column c.
        std::vector<T> nvect(k + 2, T(0));
        for (std::size_t i = 0; i < k + 2; ++i)
            for (std::size_t j = 0; j <= i && j < k + 1; ++j) nvect[i] += c[i - j] * vect[j];
        vect = std::move(nvect);
    }
    T det = vect[n];
    return (n % 2 == 0) ? det : -det;
}

}  // namespace qp
