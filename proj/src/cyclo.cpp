#include "curvezeta/cyclo.hpp"

#include <map>

#include "curvezeta/errors.hpp"

namespace curvezeta {

void CycloVector::strip() {
    for (auto it = e_.begin(); it != e_.end();)
        it = it->second == 0 ? e_.erase(it) : std::next(it);
}

CycloVector CycloVector::of_power(long N) {
    if (N < 1) throw Error("of_power expects N >= 1");
    std::map<long, int> e;
    for (long d : divisors_long(N)) e[d] = 1;
    return CycloVector(std::move(e));
}

int CycloVector::exponent(long k) const {
    auto it = e_.find(k);
    return it == e_.end() ? 0 : it->second;
}

CycloVector CycloVector::operator*(const CycloVector& o) const {
    std::map<long, int> e = e_;
    for (const auto& [k, v] : o.e_) e[k] += v;
    return CycloVector(std::move(e));
}

CycloVector CycloVector::pow(int p) const {
    std::map<long, int> e;
    for (const auto& [k, v] : e_) e[k] = v * p;
    return CycloVector(std::move(e));
}

long CycloVector::degree() const {
    long d = 0;
    for (const auto& [k, v] : e_) d += euler_phi(k) * v;
    return d;
}

UniPoly cyclotomic_poly(long k) {
    static std::map<long, UniPoly> cache;
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    // Phi_k = (t^k - 1) / prod_{d | k, d < k} Phi_d
    std::vector<Rat> c(static_cast<std::size_t>(k) + 1, Rat(0));
    c[0] = -1;
    c.back() = 1;
    UniPoly p((std::vector<Rat>(c)));
    for (long d : divisors_long(k))
        if (d < k) p = p.exact_div(cyclotomic_poly(d));
    cache[k] = p;
    return p;
}

RatFun CycloVector::expand() const {
    UniPoly num = UniPoly::one(), den = UniPoly::one();
    for (const auto& [k, v] : e_) {
        UniPoly phi = cyclotomic_poly(k);
        if (v > 0)
            num = num * phi.pow(v);
        else
            den = den * phi.pow(-v);
    }
    return RatFun(num, den);
}

std::string CycloVector::str() const {
    if (e_.empty()) return "1";
    std::string pos, neg;
    auto render = [](std::string& out, long k, int e) {
        if (!out.empty()) out += " * ";
        out += "Phi_" + std::to_string(k);
        if (e > 1) out += "^" + std::to_string(e);
    };
    for (const auto& [k, v] : e_)
        if (v > 0) render(pos, k, v);
    for (const auto& [k, v] : e_)
        if (v < 0) render(neg, k, -v);
    if (neg.empty()) return pos;
    if (pos.empty()) return "1 / (" + neg + ")";
    return pos + " / " + (neg.find('*') == std::string::npos ? neg : "(" + neg + ")");
}

} // namespace curvezeta
