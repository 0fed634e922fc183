#include "qpaths/algebra/determinant.hpp"

#include <stdexcept>
#include <utility>

namespace qp {

LaurentPoly bareiss_det(Matrix<LaurentPoly> m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    if (n == 0) return LaurentPoly(1);
    int sign = 1;
    LaurentPoly prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            // Prefer the pivot with fewest terms to keep intermediates small.
            std::size_t best = n;
            for (std::size_t i = k + 1; i < n; ++i)
                if (!m(i, k).is_zero() && (best == n || m(i, k).size() < m(best, k).size())) best = i;
            if (best == n) return LaurentPoly(0);
            for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(best, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                LaurentPoly v = m(k, k) * m(i, j) - m(i, k) * m(k, j);
                m(i, j) = exact_div(v, prev);
            }
            m(i, k) = LaurentPoly(0);
        }
        prev = m(k, k);
    }
    LaurentPoly d = m(n - 1, n - 1);
    return sign > 0 ? d : -d;
}

mpq_class rational_det(Matrix<mpq_class> m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    mpq_class det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m(p, k) == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(p, j));
            det = -det;
        }
        det *= m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m(i, k) == 0) continue;
            mpq_class f = m(i, k) / m(k, k);
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return det;
}

}  // namespace qp
