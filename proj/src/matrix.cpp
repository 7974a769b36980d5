#include "omvar/matrix.hpp"

#include <cassert>

#include "json.hpp"

namespace omvar {

bool is_identity(const PolyMatrix& a) {
    if (a.rows() != a.cols()) return false;
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) {
            if (i == j ? !a(i, j).is_one() : !a(i, j).is_zero())
                return false;
        }
    return true;
}

bool is_identity(const ModMatrix& a) {
    if (a.rows() != a.cols()) return false;
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) {
            if (i == j ? !a(i, j).is_one() : !a(i, j).is_zero())
                return false;
        }
    return true;
}

PolyMatrix poly_identity(size_t n, uint32_t nvars) {
    PolyMatrix out(n, n, MultiPoly(nvars));
    for (size_t i = 0; i < n; ++i)
        out(i, i) = MultiPoly::constant(nvars, 1);
    return out;
}

MultiPoly det_symbolic(const PolyMatrix& a, size_t max_size, bool force) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("determinant of a non-square matrix");
    const size_t n = a.rows();
    if (n > max_size && !force)
        throw guard_error("symbolic determinant guard: " + std::to_string(n) +
                          " exceeds " + std::to_string(max_size));
    uint32_t nvars = n ? a(0, 0).nvars() : 0;
    if (n == 0) return MultiPoly::constant(nvars, 1);

    PolyMatrix m = a;
    int sign = 1;
    MultiPoly prev = MultiPoly::constant(nvars, 1);
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t piv = k;
        while (piv < n && m(piv, k).is_zero()) ++piv;
        if (piv == n) return MultiPoly(nvars);
        if (piv != k) {
            for (size_t j = 0; j < n; ++j)
                std::swap(m(k, j), m(piv, j));
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                MultiPoly num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                auto q = num.divided_exact(prev);
                // The Bareiss identity guarantees exactness.
                assert(q.has_value());
                if (!q)
                    throw std::logic_error("Bareiss interior division failed");
                m(i, j) = std::move(*q);
            }
        prev = m(k, k);
    }
    MultiPoly det = m(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

Fp det_modp(const ModMatrix& a) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("determinant of a non-square matrix");
    const size_t n = a.rows();
    if (n == 0) return Fp(1, Fp::default_prime);
    uint64_t p = a(0, 0).p;
    ModMatrix m = a;
    Fp det(1, p);
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        while (piv < n && m(piv, k).is_zero()) ++piv;
        if (piv == n) return Fp(0, p);
        if (piv != k) {
            for (size_t j = 0; j < n; ++j)
                std::swap(m(k, j), m(piv, j));
            det = -det;
        }
        det = det * m(k, k);
        Fp inv = m(k, k).inverse();
        for (size_t i = k + 1; i < n; ++i) {
            Fp f = m(i, k) * inv;
            if (f.is_zero()) continue;
            for (size_t j = k; j < n; ++j)
                m(i, j) = m(i, j) - f * m(k, j);
        }
    }
    return det;
}

ModMatrix eval_matrix(const PolyMatrix& a, std::span<const Fp> point) {
    uint64_t p = point.empty() ? Fp::default_prime : point[0].p;
    ModMatrix out(a.rows(), a.cols(), Fp(0, p));
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j)
            out(i, j) = a(i, j).eval_modp(point);
    return out;
}

std::string matrix_to_json(const PolyMatrix& a) {
    nlohmann::json rows = nlohmann::json::array();
    for (size_t i = 0; i < a.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (size_t j = 0; j < a.cols(); ++j)
            row.push_back(a(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows.dump();
}

} // namespace omvar
