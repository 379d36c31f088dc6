#include "curvezeta/contfrac.hpp"

#include <numeric>

#include "curvezeta/errors.hpp"

namespace curvezeta {

std::vector<long> continued_fraction(long a, long b) {
    if (a <= 0 || b <= 0 || a <= b) throw Error("continued_fraction expects a > b >= 1");
    if (std::gcd(a, b) != 1) throw NonCoprime("gcd(" + std::to_string(a) + "," + std::to_string(b) + ") != 1");
    std::vector<long> q;
    while (b != 0) {
        q.push_back(a / b);
        long r = a % b;
        a = b;
        b = r;
    }
    return q; // Euclid yields the short form (last entry >= 2 when length > 1)
}

std::vector<long> even_normalize(std::vector<long> cf) {
    if (cf.empty()) throw Error("empty continued fraction");
    std::size_t w = cf.size() - 1;
    if (w % 2 == 1) {
        if (cf.back() < 2) throw Error("continued fraction not in canonical short form");
        cf.back() -= 1;
        cf.push_back(1);
    }
    return cf;
}

std::pair<Int, Int> cf_value(const std::vector<long>& cf) {
    if (cf.empty()) throw Error("empty continued fraction");
    Int num = cf.back(), den = 1;
    for (std::size_t i = cf.size() - 1; i-- > 0;) {
        // q_i + den/num
        Int n = Int(cf[i]) * num + den;
        den = num;
        num = n;
    }
    Int g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return {num / g, den / g};
}

} // namespace curvezeta
