#pragma once

#include <string>
#include <utility>
#include <vector>

#include "curvezeta/unipoly.hpp"

namespace curvezeta {

// Rational function in one variable over Q, kept reduced with a monic
// denominator.
class RatFun {
public:
    RatFun() : num_(), den_(UniPoly::one()) {}
    explicit RatFun(const Rat& c) : num_(UniPoly(c)), den_(UniPoly::one()) {}
    explicit RatFun(const UniPoly& p) : num_(p), den_(UniPoly::one()) {}
    RatFun(const UniPoly& num, const UniPoly& den);

    static RatFun zero() { return RatFun(); }
    static RatFun one() { return RatFun(Rat(1)); }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFun operator-() const;
    RatFun operator+(const RatFun& o) const;
    RatFun operator-(const RatFun& o) const;
    RatFun operator*(const RatFun& o) const;
    RatFun operator/(const RatFun& o) const;
    bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFun& o) const { return !(*this == o); }

    // Exact evaluation; throws DivisionByZero at a pole.
    Rat eval(const Rat& x) const;

    std::string str(const std::string& var = "s") const;
    // Denominator displayed as c*(q1*s+p1)^e1*...; requires a denominator
    // splitting into rational linear factors.
    std::string str_factored(const std::string& var = "s") const;

private:
    void normalize();
    UniPoly num_, den_;
};

// All roots of the reduced denominator with multiplicities, sorted by value.
// Throws NonLinearFactor if an irreducible factor of degree >= 2 remains.
std::vector<std::pair<Rat, int>> poles_with_orders(const RatFun& f);

// Residue of a simple or higher-order pole: coefficient of 1/(x - p) in the
// Laurent expansion at p (p must be a pole of order >= 1; exact).
Rat residue_at(const RatFun& f, const Rat& p);

} // namespace curvezeta
