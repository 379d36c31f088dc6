#include "curvezeta/ratfun.hpp"

#include "curvezeta/errors.hpp"
#include "curvezeta/uniroots.hpp"

namespace curvezeta {

RatFun::RatFun(const UniPoly& num, const UniPoly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    normalize();
}

void RatFun::normalize() {
    if (num_.is_zero()) {
        den_ = UniPoly::one();
        return;
    }
    UniPoly g = gcd(num_, den_);
    num_ = num_.exact_div(g);
    den_ = den_.exact_div(g);
    Rat lc = den_.leading();
    num_ = num_ * (Rat(1) / lc);
    den_ = den_ * (Rat(1) / lc);
}

RatFun RatFun::operator-() const {
    RatFun r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFun RatFun::operator+(const RatFun& o) const {
    return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator-(const RatFun& o) const { return *this + (-o); }

RatFun RatFun::operator*(const RatFun& o) const {
    return RatFun(num_ * o.num_, den_ * o.den_);
}

RatFun RatFun::operator/(const RatFun& o) const {
    if (o.is_zero()) throw DivisionByZero("division by zero rational function");
    return RatFun(num_ * o.den_, den_ * o.num_);
}

Rat RatFun::eval(const Rat& x) const {
    Rat d = den_.eval(x);
    if (d == 0) throw DivisionByZero("evaluation at a pole");
    return num_.eval(x) / d;
}

std::string RatFun::str(const std::string& var) const {
    if (den_ == UniPoly::one()) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

std::string RatFun::str_factored(const std::string& var) const {
    if (den_ == UniPoly::one()) return num_.str(var);
    UniFactors f = factor_rationals(den_);
    if (!f.irreducible.empty())
        return str(var); // cannot fully split; fall back to expanded form
    // scale so every factor is integer-primitive: root p/q -> (q*s - p)
    Rat scale(1);
    std::string dstr;
    auto add_factor = [&](const std::string& fs, int e) {
        if (!dstr.empty()) dstr += "*";
        dstr += fs;
        if (e > 1) dstr += "^" + std::to_string(e);
    };
    if (f.zero_mult > 0) add_factor(var, f.zero_mult);
    for (const auto& [root, e] : f.rational_roots) {
        Int q = rat_den(root), p = rat_num(root);
        UniPoly lin(std::vector<Rat>{Rat(-p), Rat(q)});
        for (int i = 0; i < e; ++i) scale *= Rat(q);
        add_factor("(" + lin.str(var) + ")", e);
    }
    UniPoly n = num_ * (scale / f.unit);
    std::string nstr = n.str(var);
    Rat cden(rat_den(n.degree() == 0 ? n.coeff(0) : Rat(1)));
    // pull an integer constant out of the denominator when the numerator is 1/c
    if (n.degree() == 0 && rat_num(n.coeff(0)) == 1 && rat_den(n.coeff(0)) != 1) {
        return "1/(" + rat_den(n.coeff(0)).get_str() + "*" + dstr + ")";
    }
    (void)cden;
    if (n.degree() > 0) nstr = "(" + nstr + ")";
    return nstr + "/(" + dstr + ")";
}

std::vector<std::pair<Rat, int>> poles_with_orders(const RatFun& f) {
    std::vector<std::pair<Rat, int>> out;
    if (f.den() == UniPoly::one()) return out;
    UniFactors fac = factor_rationals(f.den());
    if (!fac.irreducible.empty())
        throw NonLinearFactor("denominator has an irreducible factor of degree >= 2: " +
                              fac.irreducible.front().first.str());
    if (fac.zero_mult > 0) out.emplace_back(Rat(0), fac.zero_mult);
    for (const auto& [r, e] : fac.rational_roots) out.emplace_back(r, e);
    std::sort(out.begin(), out.end());
    return out;
}

Rat residue_at(const RatFun& f, const Rat& p) {
    UniPoly lin(std::vector<Rat>{-p, Rat(1)});
    UniPoly den = f.den();
    int order = 0;
    while (true) {
        auto [q, r] = den.divrem(lin);
        if (!r.is_zero()) break;
        den = q;
        ++order;
    }
    if (order == 0) throw Error("residue requested at a non-pole");
    // residue = coefficient of (x-p)^{order-1} in Taylor expansion of num/den at p
    UniPoly num = f.num();
    // expand num/den around p via repeated synthetic division
    Rat d0 = den.eval(p);
    if (d0 == 0) throw Error("internal: pole order miscount");
    std::vector<Rat> taylor; // of num/den
    UniPoly n = num, d = den;
    // Taylor coefficients t_k of n/d at p: t_0 = n(p)/d(p);
    // then n := (n - t_0 d) / (x - p), repeat.
    for (int k = 0; k < order; ++k) {
        Rat tk = n.eval(p) / d.eval(p);
        taylor.push_back(tk);
        n = (n - d * tk).divrem(lin).first;
    }
    return taylor.back();
}

} // namespace curvezeta
