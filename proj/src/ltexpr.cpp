#include "curvezeta/ltexpr.hpp"

#include <sstream>

#include "curvezeta/errors.hpp"

namespace curvezeta {

LTPoly LTPoly::monomial(const Int& c, long i, long j) {
    LTPoly p;
    if (c != 0) p.m_[{i, j}] = c;
    return p;
}

LTPoly LTPoly::pole_factor(long nu, long N) {
    return monomial(1, nu, 0) - monomial(1, 0, N);
}

LTPoly LTPoly::operator-() const {
    LTPoly r(*this);
    for (auto& [k, c] : r.m_) c = -c;
    return r;
}

LTPoly LTPoly::operator+(const LTPoly& o) const {
    LTPoly r(*this);
    for (const auto& [k, c] : o.m_) {
        auto it = r.m_.find(k);
        if (it == r.m_.end())
            r.m_[k] = c;
        else {
            it->second += c;
            if (it->second == 0) r.m_.erase(it);
        }
    }
    return r;
}

LTPoly LTPoly::operator-(const LTPoly& o) const { return *this + (-o); }

LTPoly LTPoly::operator*(const LTPoly& o) const {
    LTPoly r;
    for (const auto& [k1, c1] : m_)
        for (const auto& [k2, c2] : o.m_) {
            Key k{k1.first + k2.first, k1.second + k2.second};
            auto it = r.m_.find(k);
            if (it == r.m_.end())
                r.m_[k] = c1 * c2;
            else {
                it->second += c1 * c2;
                if (it->second == 0) r.m_.erase(it);
            }
        }
    return r;
}

bool LTPoly::try_divide(const LTPoly& d, LTPoly* q) const {
    if (d.is_zero()) throw DivisionByZero("LT polynomial division by zero");
    // the only divisors used are pole factors L^nu - T^N; divisibility is a
    // cheap fold L^nu -> T^N, checked before running the actual division
    if (d.m_.size() == 2) {
        auto hi = d.m_.rbegin();
        auto lo = d.m_.begin();
        if (hi->second == 1 && lo->second == -1 && hi->first.second == 0 &&
            lo->first.first == 0) {
            long nu = hi->first.first, N = lo->first.second;
            std::map<Key, Int> folded;
            for (const auto& [k, c] : m_) {
                Key fk{k.first % nu, k.second + (k.first / nu) * N};
                folded[fk] += c;
                if (folded[fk] == 0) folded.erase(fk);
            }
            if (!folded.empty()) return false;
        }
    }
    LTPoly quot, rem(*this);
    // lex on (L, T): divide by the largest monomial of d
    Key dk = d.m_.rbegin()->first;
    const Int& dc = d.m_.rbegin()->second;
    while (!rem.is_zero()) {
        Key rk = rem.m_.rbegin()->first;
        const Int& rc = rem.m_.rbegin()->second;
        if (rk.first < dk.first || rk.second < dk.second) return false;
        if (rc % dc != 0) return false;
        LTPoly t = monomial(rc / dc, rk.first - dk.first, rk.second - dk.second);
        quot = quot + t;
        rem = rem - t * d;
    }
    *q = quot;
    return true;
}

std::string LTPoly::str() const {
    if (m_.empty()) return "0";
    std::string out;
    for (auto it = m_.rbegin(); it != m_.rend(); ++it) {
        const auto& [k, c] = *it;
        bool first = out.empty();
        if (!first) out += c > 0 ? " + " : " - ";
        Int a = first ? c : Int(abs(c));
        std::string mono;
        if (k.first > 0) mono += k.first == 1 ? "L" : "L^" + std::to_string(k.first);
        if (k.second > 0) {
            if (!mono.empty()) mono += "*";
            mono += k.second == 1 ? "T" : "T^" + std::to_string(k.second);
        }
        if (mono.empty())
            out += a.get_str();
        else if (a == 1)
            out += mono;
        else if (a == -1)
            out += "-" + mono;
        else
            out += a.get_str() + "*" + mono;
    }
    return out;
}

void LTRatExpr::reduce() {
    for (auto it = den.begin(); it != den.end();) {
        LTPoly f = LTPoly::pole_factor(it->first.first, it->first.second);
        while (it->second > 0) {
            LTPoly q;
            if (!num.try_divide(f, &q)) break;
            num = q;
            --it->second;
        }
        it = it->second == 0 ? den.erase(it) : std::next(it);
    }
}

LTPoly LTRatExpr::denominator_poly() const {
    LTPoly d(Int(1));
    for (const auto& [k, e] : den) {
        LTPoly f = LTPoly::pole_factor(k.first, k.second);
        for (int i = 0; i < e; ++i) d = d * f;
    }
    return d;
}

bool LTRatExpr::equals(const LTRatExpr& o) const {
    // clear only the factors missing from each side's denominator
    LTPoly a = num, b = o.num;
    std::map<std::pair<long, long>, int> all = den;
    for (const auto& [k, e] : o.den) all[k] = std::max(all[k], e);
    for (const auto& [k, e] : all) {
        auto mine = den.find(k);
        auto theirs = o.den.find(k);
        int da = e - (mine == den.end() ? 0 : mine->second);
        int db = e - (theirs == o.den.end() ? 0 : theirs->second);
        LTPoly f = LTPoly::pole_factor(k.first, k.second);
        for (int i = 0; i < da; ++i) a = a * f;
        for (int i = 0; i < db; ++i) b = b * f;
    }
    return a == b;
}

LTRatExpr lt_add(const LTRatExpr& a, const LTRatExpr& b) {
    LTRatExpr out;
    out.den = a.den;
    for (const auto& [k, e] : b.den) out.den[k] = std::max(out.den[k], e);
    LTPoly na = a.num, nb = b.num;
    for (const auto& [k, e] : out.den) {
        auto ia = a.den.find(k);
        auto ib = b.den.find(k);
        int da = e - (ia == a.den.end() ? 0 : ia->second);
        int db = e - (ib == b.den.end() ? 0 : ib->second);
        LTPoly f = LTPoly::pole_factor(k.first, k.second);
        for (int i = 0; i < da; ++i) na = na * f;
        for (int i = 0; i < db; ++i) nb = nb * f;
    }
    out.num = na + nb;
    out.reduce();
    return out;
}

LTRatExpr lt_sum(std::vector<LTRatExpr> terms) {
    if (terms.empty()) return LTRatExpr{};
    while (terms.size() > 1) {
        std::vector<LTRatExpr> next;
        for (std::size_t i = 0; i + 1 < terms.size(); i += 2)
            next.push_back(lt_add(terms[i], terms[i + 1]));
        if (terms.size() % 2 == 1) next.push_back(terms.back());
        terms = std::move(next);
    }
    return terms.front();
}

std::string LTRatExpr::str() const {
    std::ostringstream os;
    os << "(" << num.str() << ")";
    if (!den.empty()) {
        os << " / (";
        bool first = true;
        for (const auto& [k, e] : den) {
            if (!first) os << " * ";
            first = false;
            os << "(L^" << k.first << " - T^" << k.second << ")";
            if (e > 1) os << "^" << e;
        }
        os << ")";
    }
    return os.str();
}

} // namespace curvezeta
