#pragma once

#include <string>
#include <utility>
#include <vector>

#include "curvezeta/numeric.hpp"

namespace curvezeta {

// Dense univariate polynomial over Q, constant term first.  The zero
// polynomial has an empty coefficient vector; otherwise the leading
// coefficient is nonzero.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(const Rat& c) { if (c != 0) c_ = {c}; }
    explicit UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly zero() { return UniPoly(); }
    static UniPoly one() { return UniPoly(Rat(1)); }
    static UniPoly x() { return UniPoly(std::vector<Rat>{Rat(0), Rat(1)}); }
    // c * x^k
    static UniPoly monomial(const Rat& c, int k);

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    const Rat& leading() const;
    Rat coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Rat(0); }
    const std::vector<Rat>& coeffs() const { return c_; }

    // lowest k with nonzero coefficient; -1 for the zero polynomial
    int order() const;

    UniPoly operator-() const;
    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Rat& c) const;
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return c_ != o.c_; }

    Rat eval(const Rat& x) const;
    UniPoly derivative() const;
    UniPoly pow(int e) const;
    UniPoly monic() const;

    // Quotient and remainder; divisor must be nonzero.
    std::pair<UniPoly, UniPoly> divrem(const UniPoly& d) const;
    // Exact division; throws Error if the remainder is nonzero.
    UniPoly exact_div(const UniPoly& d) const;

    // Primitive integer form: p such that *this = content * p with p in Z[x],
    // content > 0, gcd of p's coefficients 1, and p's leading coefficient > 0
    // ... except sign: sign of the leading coefficient is preserved.
    UniPoly primitive_integer(Rat* content = nullptr) const;

    std::string str(const std::string& var = "s") const;

private:
    void trim();
    std::vector<Rat> c_;
};

UniPoly gcd(const UniPoly& a, const UniPoly& b); // monic gcd
UniPoly lcm(const UniPoly& a, const UniPoly& b);

} // namespace curvezeta
