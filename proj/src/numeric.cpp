#include "curvezeta/numeric.hpp"

#include <algorithm>
#include <cstdlib>

#include "curvezeta/errors.hpp"

namespace curvezeta {

Rat rat_parse(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw ParseError("empty rational literal", 0);
    mpq_t q;
    mpq_init(q);
    if (mpq_set_str(q, t.c_str(), 10) != 0) {
        mpq_clear(q);
        throw ParseError("bad rational literal '" + text + "'", 0);
    }
    Rat r(q);
    mpq_clear(q);
    if (r.get_den() == 0) throw DivisionByZero("rational literal with zero denominator");
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& q) { return q.get_str(); }
std::string int_str(const Int& n) { return n.get_str(); }

long to_long(const Int& n) {
    if (!n.fits_slong_p()) throw Error("integer out of machine range: " + n.get_str());
    return n.get_si();
}

bool is_perfect_square(const Int& n, Int* root) {
    if (n < 0) return false;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
    if (root) mpz_sqrt(root->get_mpz_t(), n.get_mpz_t());
    return true;
}

bool rat_is_square(const Rat& q, Rat* root) {
    Int rn, rd;
    if (!is_perfect_square(rat_num(q), &rn)) return false;
    if (!is_perfect_square(rat_den(q), &rd)) return false;
    if (root) *root = Rat(rn) / Rat(rd);
    return true;
}

namespace {

bool is_probable_prime(const Int& n) { return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0; }

// Pollard-Brent rho; n odd composite, not a prime power of a tiny prime.
Int pollard_brent(const Int& n) {
    if (n % 2 == 0) return 2;
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0xC0FFEEul);
    while (true) {
        Int y = rng.get_z_range(n - 1) + 1;
        Int c = rng.get_z_range(n - 1) + 1;
        Int m = 128, g = 1, r = 1, q = 1, x = 0, ys = 0;
        while (g == 1) {
            x = y;
            for (Int i = 0; i < r; ++i) y = (y * y + c) % n;
            Int k = 0;
            while (k < r && g == 1) {
                ys = y;
                Int rk = r - k;
                Int lim = std::min(m, rk);
                for (Int i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                Int d = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
            }
        }
        if (g != n) return g;
    }
}

void factor_rec(Int n, std::vector<Int>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out.push_back(n);
        return;
    }
    Int d = pollard_brent(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

} // namespace

std::vector<Int> prime_factors(Int n) {
    if (n < 1) throw Error("prime_factors expects n >= 1");
    std::vector<Int> out;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
        while (n % p == 0) {
            out.emplace_back(p);
            n /= p;
        }
    }
    Int p = 41;
    while (n > 1 && p * p <= n && p < 100000) {
        while (n % p == 0) {
            out.push_back(p);
            n /= p;
        }
        p += 2;
    }
    if (n > 1) factor_rec(n, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Int> divisors(const Int& n) {
    std::vector<Int> divs{1};
    Int prev = 0;
    int run = 0;
    std::vector<Int> fs = prime_factors(n < 0 ? Int(-n) : n);
    // group equal primes
    for (std::size_t i = 0; i < fs.size();) {
        std::size_t j = i;
        while (j < fs.size() && fs[j] == fs[i]) ++j;
        std::size_t e = j - i;
        std::size_t base = divs.size();
        Int pk = 1;
        for (std::size_t k = 1; k <= e; ++k) {
            pk *= fs[i];
            for (std::size_t d = 0; d < base; ++d) divs.push_back(divs[d] * pk);
        }
        i = j;
    }
    (void)prev;
    (void)run;
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::vector<long> divisors_long(long n) {
    std::vector<long> out;
    for (const Int& d : divisors(Int(n))) out.push_back(to_long(d));
    return out;
}

long euler_phi(long n) {
    if (n <= 0) throw Error("euler_phi expects n >= 1");
    std::vector<Int> fs = prime_factors(Int(n));
    Int phi = n;
    for (std::size_t i = 0; i < fs.size();) {
        phi = phi / fs[i] * (fs[i] - 1);
        Int p = fs[i];
        while (i < fs.size() && fs[i] == p) ++i;
    }
    return to_long(phi);
}

long nth_prime(int k) {
    if (k < 0) throw Error("nth_prime expects k >= 0");
    Int p = 2;
    for (int i = 0; i < k; ++i) mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    return to_long(p);
}

} // namespace curvezeta
