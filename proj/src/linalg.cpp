#include "curvezeta/linalg.hpp"

#include "curvezeta/errors.hpp"

namespace curvezeta {

Rat exact_det(const Mat& m) {
    std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw Error("exact_det expects a square matrix");
    if (n == 0) return Rat(1);
    // clear denominators row by row, track the scale factor
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    Rat scale(1);
    for (std::size_t i = 0; i < n; ++i) {
        Int l = 1;
        for (const Rat& x : m[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), rat_den(x).get_mpz_t());
        scale /= Rat(l);
        for (std::size_t j = 0; j < n; ++j) a[i][j] = rat_num(m[i][j] * Rat(l));
    }
    // Bareiss
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return Rat(0);
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return Rat(sign) * Rat(a[n - 1][n - 1]) * scale;
}

std::vector<Rat> exact_solve(const Mat& m, const std::vector<Rat>& rhs) {
    std::size_t n = m.size();
    if (rhs.size() != n) throw Error("exact_solve dimension mismatch");
    Mat a = m;
    std::vector<Rat> b = rhs;
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) throw SingularMatrix("singular matrix in exact_solve");
        std::swap(a[k], a[p]);
        std::swap(b[k], b[p]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k] == 0) continue;
            Rat f = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
            b[i] -= f * b[k];
        }
    }
    std::vector<Rat> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

} // namespace curvezeta
