#include "curvezeta/unipoly.hpp"

#include <algorithm>

#include "curvezeta/errors.hpp"

namespace curvezeta {

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::monomial(const Rat& c, int k) {
    if (c == 0) return UniPoly();
    std::vector<Rat> v(static_cast<std::size_t>(k) + 1, Rat(0));
    v.back() = c;
    return UniPoly(std::move(v));
}

const Rat& UniPoly::leading() const {
    if (c_.empty()) throw Error("leading coefficient of zero polynomial");
    return c_.back();
}

int UniPoly::order() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<int>(i);
    return -1;
}

UniPoly UniPoly::operator-() const {
    UniPoly r(*this);
    for (Rat& c : r.c_) c = -c;
    return r;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rat> v(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Rat> v(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    }
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator*(const Rat& c) const {
    if (c == 0) return UniPoly();
    UniPoly r(*this);
    for (Rat& x : r.c_) x *= c;
    return r;
}

Rat UniPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rat> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return UniPoly(std::move(v));
}

UniPoly UniPoly::pow(int e) const {
    if (e < 0) throw Error("negative polynomial power");
    UniPoly r = one(), b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return *this * (Rat(1) / leading());
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& d) const {
    if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
    UniPoly q, r = *this;
    while (!r.is_zero() && r.degree() >= d.degree()) {
        Rat c = r.leading() / d.leading();
        int k = r.degree() - d.degree();
        UniPoly t = monomial(c, k);
        q = q + t;
        r = r - t * d;
    }
    return {q, r};
}

UniPoly UniPoly::exact_div(const UniPoly& d) const {
    auto [q, r] = divrem(d);
    if (!r.is_zero()) throw Error("inexact polynomial division");
    return q;
}

UniPoly UniPoly::primitive_integer(Rat* content) const {
    if (is_zero()) {
        if (content) *content = 0;
        return *this;
    }
    Int l = 1, g = 0;
    for (const Rat& c : c_)
        if (c != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), rat_den(c).get_mpz_t());
    for (const Rat& c : c_) {
        Int n = rat_num(c * Rat(l));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    Rat cont = Rat(g) / Rat(l);
    if (content) *content = cont;
    return *this * (Rat(1) / cont);
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        Rat c = c_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        bool first = out.empty();
        if (!first) out += c > 0 ? " + " : " - ";
        Rat a = first ? c : Rat(abs(rat_num(c))) / Rat(rat_den(c));
        std::string cs = rat_str(a);
        if (k == 0) {
            out += cs;
        } else {
            if (cs == "1")
                ;
            else if (cs == "-1")
                out += "-";
            else
                out += cs + "*";
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = x.divrem(y).second;
        x = y;
        y = r;
    }
    return x.is_zero() ? x : x.monic();
}

UniPoly lcm(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    return (a * b).exact_div(gcd(a, b)).monic();
}

} // namespace curvezeta
