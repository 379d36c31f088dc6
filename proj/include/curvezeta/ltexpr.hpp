#pragma once

#include <map>
#include <string>
#include <utility>

#include "curvezeta/numeric.hpp"

namespace curvezeta {

// Integer-coefficient polynomial in the two indeterminates L and T; the key
// (i, j) is the monomial L^i T^j.
class LTPoly {
public:
    using Key = std::pair<long, long>;

    LTPoly() = default;
    explicit LTPoly(const Int& c) { if (c != 0) m_[{0, 0}] = c; }
    static LTPoly monomial(const Int& c, long i, long j);
    static LTPoly L() { return monomial(1, 1, 0); }
    static LTPoly T() { return monomial(1, 0, 1); }
    // L^nu - T^N
    static LTPoly pole_factor(long nu, long N);

    bool is_zero() const { return m_.empty(); }
    const std::map<Key, Int>& terms() const { return m_; }

    LTPoly operator-() const;
    LTPoly operator+(const LTPoly& o) const;
    LTPoly operator-(const LTPoly& o) const;
    LTPoly operator*(const LTPoly& o) const;
    bool operator==(const LTPoly& o) const { return m_ == o.m_; }
    bool operator!=(const LTPoly& o) const { return m_ != o.m_; }

    // Exact division attempt; returns false and leaves q untouched when the
    // division is inexact.
    bool try_divide(const LTPoly& d, LTPoly* q) const;

    std::string str() const;

private:
    std::map<Key, Int> m_;
};

// Rational expression num / prod (L^nu - T^N)^e, the shape of the motivic
// zeta function.  Kept with the displayed fraction cancelled: no factor of
// the denominator divides the numerator.
struct LTRatExpr {
    LTPoly num;
    std::map<std::pair<long, long>, int> den; // (nu, N) -> exponent

    void reduce();
    LTPoly denominator_poly() const;
    bool equals(const LTRatExpr& o) const; // cross-multiplied exact equality
    std::string str() const;
};

// Sum over a common denominator, cancelled.
LTRatExpr lt_add(const LTRatExpr& a, const LTRatExpr& b);
LTRatExpr lt_sum(std::vector<LTRatExpr> terms); // balanced reducing fold

} // namespace curvezeta
