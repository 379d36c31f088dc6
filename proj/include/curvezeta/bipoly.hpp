#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "curvezeta/unipoly.hpp"

namespace curvezeta {

// Sparse bivariate polynomial over Q; key (i, j) is the monomial x^i y^j.
// Zero coefficients are never stored.
class BiPoly {
public:
    using Key = std::pair<int, int>;

    BiPoly() = default;
    explicit BiPoly(const Rat& c) { set(0, 0, c); }

    static BiPoly zero() { return BiPoly(); }
    static BiPoly one() { return BiPoly(Rat(1)); }
    static BiPoly x() { return monomial(Rat(1), 1, 0); }
    static BiPoly y() { return monomial(Rat(1), 0, 1); }
    static BiPoly monomial(const Rat& c, int i, int j);

    bool is_zero() const { return m_.empty(); }
    bool is_constant() const { return m_.empty() || (m_.size() == 1 && m_.begin()->first == Key{0, 0}); }
    const std::map<Key, Rat>& terms() const { return m_; }
    Rat coeff(int i, int j) const;
    int total_degree() const;
    int degree_x() const;
    int degree_y() const;
    // lowest total degree of a term, i.e. the multiplicity at the origin;
    // -1 for the zero polynomial
    int order_origin() const;

    BiPoly operator-() const;
    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator*(const BiPoly& o) const;
    BiPoly operator*(const Rat& c) const;
    bool operator==(const BiPoly& o) const { return m_ == o.m_; }
    bool operator!=(const BiPoly& o) const { return m_ != o.m_; }

    BiPoly pow(int e) const;
    BiPoly dx() const;
    BiPoly dy() const;
    Rat eval(const Rat& x, const Rat& y) const;

    // substitutions used by blow-up charts
    BiPoly subst_chart_a() const; // (x, y) -> (x, x*y)
    BiPoly subst_chart_b() const; // (x, y) -> (x*y, y)
    BiPoly divide_x(int k) const; // exact division by x^k
    BiPoly divide_y(int k) const;
    BiPoly translate_x(const Rat& t) const; // x -> x + t
    BiPoly translate_y(const Rat& t) const; // y -> y + t
    BiPoly swap_xy() const;
    UniPoly at_x0() const; // f(0, y) as a polynomial in y
    UniPoly at_y0() const; // f(x, 0) as a polynomial in x

    // view as a polynomial in y with UniPoly-in-x coefficients (constant
    // y-degree first)
    std::vector<UniPoly> y_coefficients() const;
    static BiPoly from_y_coefficients(const std::vector<UniPoly>& c);

    // canonical rendering: descending total degree, then descending x-degree
    std::string str() const;

private:
    void set(int i, int j, const Rat& c);
    std::map<Key, Rat> m_;
    friend BiPoly operator*(const Rat& c, const BiPoly& p);
};

inline BiPoly operator*(const Rat& c, const BiPoly& p) { return p * c; }

// Parses +, -, *, ^, parentheses, integer and a/b literals, variables x, y.
// Throws ParseError with a position on malformed input.
BiPoly parse_bipoly(const std::string& text);

BiPoly bgcd(const BiPoly& a, const BiPoly& b);
BiPoly bipoly_exact_div(const BiPoly& a, const BiPoly& b);

// g = prod_k layer_k ^ k with each layer squarefree, pairwise coprime.
// Returned as (layer, multiplicity) pairs, constants dropped.
std::vector<std::pair<BiPoly, int>> squarefree_layers(const BiPoly& g);

bool is_squarefree(const BiPoly& f);

} // namespace curvezeta
