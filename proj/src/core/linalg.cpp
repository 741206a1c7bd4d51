#include "core/linalg.hpp"

namespace bccst {

RatMatrix rat_identity(size_t n) {
    RatMatrix m(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

namespace {

// Eliminates column k below (and optionally above) the pivot row, in place.
size_t find_pivot(const RatMatrix& a, size_t k) {
    for (size_t r = k; r < a.size(); ++r)
        if (a[r][k] != 0) return r;
    return a.size();
}

}  // namespace

RatMatrix rat_invert(RatMatrix a) {
    size_t n = a.size();
    RatMatrix inv = rat_identity(n);
    for (size_t k = 0; k < n; ++k) {
        size_t p = find_pivot(a, k);
        if (p == n) fail(Errc::invalid_arg, "matrix is singular");
        if (p != k) {
            std::swap(a[p], a[k]);
            std::swap(inv[p], inv[k]);
        }
        Rat piv = a[k][k];
        for (size_t j = 0; j < n; ++j) {
            a[k][j] /= piv;
            inv[k][j] /= piv;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == k || a[r][k] == 0) continue;
            Rat f = a[r][k];
            for (size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[k][j];
                inv[r][j] -= f * inv[k][j];
            }
        }
    }
    return inv;
}

Rat rat_determinant(RatMatrix a) {
    size_t n = a.size();
    Rat det(1);
    for (size_t k = 0; k < n; ++k) {
        size_t p = find_pivot(a, k);
        if (p == n) return Rat(0);
        if (p != k) {
            std::swap(a[p], a[k]);
            det = -det;
        }
        det *= a[k][k];
        Rat inv_piv = Rat(1) / a[k][k];
        for (size_t r = k + 1; r < n; ++r) {
            if (a[r][k] == 0) continue;
            Rat f = a[r][k] * inv_piv;
            for (size_t j = k; j < n; ++j) a[r][j] -= f * a[k][j];
        }
    }
    return det;
}

std::vector<Rat> rat_solve(RatMatrix a, std::vector<Rat> b) {
    size_t n = a.size();
    for (size_t k = 0; k < n; ++k) {
        size_t p = find_pivot(a, k);
        if (p == n) fail(Errc::invalid_arg, "matrix is singular");
        if (p != k) {
            std::swap(a[p], a[k]);
            std::swap(b[p], b[k]);
        }
        Rat inv_piv = Rat(1) / a[k][k];
        for (size_t r = k + 1; r < n; ++r) {
            if (a[r][k] == 0) continue;
            Rat f = a[r][k] * inv_piv;
            for (size_t j = k; j < n; ++j) a[r][j] -= f * a[k][j];
            b[r] -= f * b[k];
        }
    }
    for (size_t k = n; k-- > 0;) {
        Rat s = b[k];
        for (size_t j = k + 1; j < n; ++j) s -= a[k][j] * b[j];
        b[k] = s / a[k][k];
    }
    return b;
}

}  // namespace bccst
