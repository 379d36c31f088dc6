#include "curvezeta/bipoly.hpp"

#include <algorithm>
#include <cctype>

#include "curvezeta/errors.hpp"

namespace curvezeta {

void BiPoly::set(int i, int j, const Rat& c) {
    if (c == 0)
        m_.erase({i, j});
    else
        m_[{i, j}] = c;
}

BiPoly BiPoly::monomial(const Rat& c, int i, int j) {
    BiPoly p;
    p.set(i, j, c);
    return p;
}

Rat BiPoly::coeff(int i, int j) const {
    auto it = m_.find({i, j});
    return it == m_.end() ? Rat(0) : it->second;
}

int BiPoly::total_degree() const {
    int d = -1;
    for (const auto& [k, c] : m_) d = std::max(d, k.first + k.second);
    return d;
}

int BiPoly::degree_x() const {
    int d = -1;
    for (const auto& [k, c] : m_) d = std::max(d, k.first);
    return d;
}

int BiPoly::degree_y() const {
    int d = -1;
    for (const auto& [k, c] : m_) d = std::max(d, k.second);
    return d;
}

int BiPoly::order_origin() const {
    int d = -1;
    for (const auto& [k, c] : m_) {
        int t = k.first + k.second;
        if (d < 0 || t < d) d = t;
    }
    return d;
}

BiPoly BiPoly::operator-() const {
    BiPoly r(*this);
    for (auto& [k, c] : r.m_) c = -c;
    return r;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    BiPoly r(*this);
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

BiPoly BiPoly::operator-(const BiPoly& o) const { return *this + (-o); }

BiPoly BiPoly::operator*(const BiPoly& o) const {
    BiPoly r;
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

BiPoly BiPoly::operator*(const Rat& c) const {
    if (c == 0) return BiPoly();
    BiPoly r(*this);
    for (auto& [k, v] : r.m_) v *= c;
    return r;
}

BiPoly BiPoly::pow(int e) const {
    if (e < 0) throw Error("negative polynomial power");
    BiPoly r = one(), b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

BiPoly BiPoly::dx() const {
    BiPoly r;
    for (const auto& [k, c] : m_)
        if (k.first > 0) r.set(k.first - 1, k.second, c * Rat(k.first));
    return r;
}

BiPoly BiPoly::dy() const {
    BiPoly r;
    for (const auto& [k, c] : m_)
        if (k.second > 0) r.set(k.first, k.second - 1, c * Rat(k.second));
    return r;
}

Rat BiPoly::eval(const Rat& x, const Rat& y) const {
    Rat acc(0);
    for (const auto& [k, c] : m_) {
        Rat t = c;
        for (int i = 0; i < k.first; ++i) t *= x;
        for (int j = 0; j < k.second; ++j) t *= y;
        acc += t;
    }
    return acc;
}

BiPoly BiPoly::subst_chart_a() const {
    BiPoly r;
    for (const auto& [k, c] : m_) r.set(k.first + k.second, k.second, c);
    return r;
}

BiPoly BiPoly::subst_chart_b() const {
    BiPoly r;
    for (const auto& [k, c] : m_) r.set(k.first, k.first + k.second, c);
    return r;
}

BiPoly BiPoly::divide_x(int k) const {
    BiPoly r;
    for (const auto& [key, c] : m_) {
        if (key.first < k) throw Error("inexact division by x^k");
        r.set(key.first - k, key.second, c);
    }
    return r;
}

BiPoly BiPoly::divide_y(int k) const {
    BiPoly r;
    for (const auto& [key, c] : m_) {
        if (key.second < k) throw Error("inexact division by y^k");
        r.set(key.first, key.second - k, c);
    }
    return r;
}

BiPoly BiPoly::translate_y(const Rat& t) const {
    if (t == 0) return *this;
    // binomial expansion of (y + t)^j, cached per j
    int dy_ = degree_y();
    std::vector<std::vector<Rat>> binom(static_cast<std::size_t>(dy_) + 1);
    for (int j = 0; j <= dy_; ++j) {
        binom[j].resize(j + 1);
        Rat b(1);
        for (int m = j; m >= 0; --m) {
            binom[j][m] = b; // C(j, m) t^{j-m}
            if (m > 0) b = b * Rat(m) / Rat(j - m + 1) * t;
        }
    }
    BiPoly r;
    for (const auto& [k, c] : m_)
        for (int m = 0; m <= k.second; ++m) {
            Rat add = c * binom[k.second][m];
            auto it = r.m_.find({k.first, m});
            if (it == r.m_.end())
                r.m_[{k.first, m}] = add;
            else {
                it->second += add;
                if (it->second == 0) r.m_.erase(it);
            }
        }
    return r;
}

BiPoly BiPoly::translate_x(const Rat& t) const { return swap_xy().translate_y(t).swap_xy(); }

BiPoly BiPoly::swap_xy() const {
    BiPoly r;
    for (const auto& [k, c] : m_) r.set(k.second, k.first, c);
    return r;
}

UniPoly BiPoly::at_x0() const {
    std::vector<Rat> c(static_cast<std::size_t>(std::max(degree_y(), 0)) + 1, Rat(0));
    for (const auto& [k, v] : m_)
        if (k.first == 0) c[k.second] = v;
    return UniPoly(std::move(c));
}

UniPoly BiPoly::at_y0() const {
    std::vector<Rat> c(static_cast<std::size_t>(std::max(degree_x(), 0)) + 1, Rat(0));
    for (const auto& [k, v] : m_)
        if (k.second == 0) c[k.first] = v;
    return UniPoly(std::move(c));
}

std::vector<UniPoly> BiPoly::y_coefficients() const {
    int dy_ = degree_y();
    if (dy_ < 0) return {};
    std::vector<std::vector<Rat>> rows(static_cast<std::size_t>(dy_) + 1);
    int dx_ = std::max(degree_x(), 0);
    for (auto& row : rows) row.assign(static_cast<std::size_t>(dx_) + 1, Rat(0));
    for (const auto& [k, c] : m_) rows[k.second][k.first] = c;
    std::vector<UniPoly> out;
    out.reserve(rows.size());
    for (auto& row : rows) out.emplace_back(std::move(row));
    return out;
}

BiPoly BiPoly::from_y_coefficients(const std::vector<UniPoly>& c) {
    BiPoly r;
    for (std::size_t j = 0; j < c.size(); ++j)
        for (int i = 0; i <= c[j].degree(); ++i) r.set(i, static_cast<int>(j), c[j].coeff(i));
    return r;
}

std::string BiPoly::str() const {
    if (m_.empty()) return "0";
    std::vector<std::pair<Key, Rat>> terms(m_.begin(), m_.end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        int ta = a.first.first + a.first.second, tb = b.first.first + b.first.second;
        if (ta != tb) return ta > tb;
        return a.first.first > b.first.first;
    });
    std::string out;
    for (const auto& [k, c] : terms) {
        bool first = out.empty();
        if (!first) out += c > 0 ? " + " : " - ";
        Rat a = first ? c : Rat(abs(rat_num(c))) / Rat(rat_den(c));
        std::string cs = rat_str(a);
        std::string mono;
        if (k.first > 0) {
            mono += "x";
            if (k.first > 1) mono += "^" + std::to_string(k.first);
        }
        if (k.second > 0) {
            if (!mono.empty()) mono += "*";
            mono += "y";
            if (k.second > 1) mono += "^" + std::to_string(k.second);
        }
        if (mono.empty()) {
            out += cs;
        } else {
            if (cs == "1")
                ;
            else if (cs == "-1")
                out += "-";
            else
                out += cs + "*";
            out += mono;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// parser

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    BiPoly expr() {
        BiPoly r = accept('-') ? -term() : term();
        while (true) {
            if (accept('+'))
                r = r + term();
            else if (accept('-'))
                r = r - term();
            else
                break;
        }
        return r;
    }

    BiPoly term() {
        BiPoly r = factor();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos;
                r = r * factor();
            } else if (c == '(' || c == 'x' || c == 'y' ||
                       std::isdigit(static_cast<unsigned char>(c))) {
                r = r * factor(); // juxtaposition: 2x, x y, 3(x+1)
            } else {
                break;
            }
        }
        return r;
    }

    BiPoly factor() {
        BiPoly b = base();
        if (accept('^')) {
            long e = to_long(integer());
            if (e < 0) throw ParseError("negative exponent", pos);
            b = b.pow(static_cast<int>(e));
        }
        return b;
    }

    BiPoly base() {
        char c = peek();
        if (c == '(') {
            ++pos;
            BiPoly r = expr();
            if (!accept(')')) throw ParseError("expected ')'", pos);
            return r;
        }
        if (c == 'x') {
            ++pos;
            return BiPoly::x();
        }
        if (c == 'y') {
            ++pos;
            return BiPoly::y();
        }
        if (c == '-') {
            ++pos;
            return -base();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int n = integer();
            skip();
            if (pos < s.size() && s[pos] == '/') {
                std::size_t save = pos;
                ++pos;
                if (std::isdigit(static_cast<unsigned char>(peek()))) {
                    Int d = integer();
                    if (d == 0) throw ParseError("zero denominator", pos);
                    Rat q(n, d);
                    q.canonicalize();
                    return BiPoly(q);
                }
                pos = save;
            }
            return BiPoly(Rat(n));
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos);
    }

    Int integer() {
        skip();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw ParseError("expected integer", pos);
        return Int(s.substr(start, pos - start));
    }
};

} // namespace

BiPoly parse_bipoly(const std::string& text) {
    Parser p(text);
    BiPoly r = p.expr();
    p.skip();
    if (p.pos != text.size()) throw ParseError("trailing input", p.pos);
    return r;
}

// ---------------------------------------------------------------------------
// gcd machinery (Q[x][y] with primitive PRS)

namespace {

UniPoly content_x(const std::vector<UniPoly>& c) {
    UniPoly g;
    for (const UniPoly& p : c) g = gcd(g, p);
    return g;
}

std::vector<UniPoly> divide_coeffs(const std::vector<UniPoly>& c, const UniPoly& d) {
    std::vector<UniPoly> out;
    out.reserve(c.size());
    for (const UniPoly& p : c) out.push_back(p.is_zero() ? p : p.exact_div(d));
    return out;
}

int degy(const std::vector<UniPoly>& c) { return static_cast<int>(c.size()) - 1; }

void trim_y(std::vector<UniPoly>& c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

// pseudo-remainder of a by b in (Q[x])[y]; b nonzero, degy(b) >= 1
std::vector<UniPoly> prem(std::vector<UniPoly> a, const std::vector<UniPoly>& b) {
    const UniPoly& lb = b.back();
    while (!a.empty() && degy(a) >= degy(b)) {
        int sh = degy(a) - degy(b);
        UniPoly la = a.back();
        // a := lb * a - la * y^sh * b
        for (UniPoly& p : a) p = p * lb;
        for (int i = 0; i <= degy(b); ++i)
            a[static_cast<std::size_t>(i + sh)] =
                a[static_cast<std::size_t>(i + sh)] - la * b[static_cast<std::size_t>(i)];
        trim_y(a);
    }
    return a;
}

BiPoly lift_x(const UniPoly& p) {
    BiPoly r;
    for (int i = 0; i <= p.degree(); ++i) r = r + BiPoly::monomial(p.coeff(i), i, 0);
    return r;
}

} // namespace

BiPoly bgcd(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    std::vector<UniPoly> ca = a.y_coefficients(), cb = b.y_coefficients();
    UniPoly conta = content_x(ca), contb = content_x(cb);
    UniPoly contg = gcd(conta, contb);
    std::vector<UniPoly> pa = divide_coeffs(ca, conta), pb = divide_coeffs(cb, contb);
    if (degy(pa) < degy(pb)) std::swap(pa, pb);
    while (degy(pb) > 0) {
        std::vector<UniPoly> r = prem(pa, pb);
        if (r.empty()) {
            pb = divide_coeffs(pb, content_x(pb));
            return BiPoly::from_y_coefficients(pb) * lift_x(contg);
        }
        pa = pb;
        pb = divide_coeffs(r, content_x(r));
    }
    // gcd of the primitive parts is trivial
    return lift_x(contg);
}

BiPoly bipoly_exact_div(const BiPoly& a, const BiPoly& b) {
    if (b.is_zero()) throw DivisionByZero("bivariate division by zero");
    if (a.is_zero()) return a;
    std::vector<UniPoly> ca = a.y_coefficients(), cb = b.y_coefficients();
    std::vector<UniPoly> q(static_cast<std::size_t>(std::max(degy(ca) - degy(cb) + 1, 0)));
    std::vector<UniPoly> r = ca;
    const UniPoly& lb = cb.back();
    while (!r.empty() && degy(r) >= degy(cb)) {
        UniPoly qc = r.back().exact_div(lb);
        int sh = degy(r) - degy(cb);
        q[static_cast<std::size_t>(sh)] = qc;
        for (int i = 0; i <= degy(cb); ++i)
            r[static_cast<std::size_t>(i + sh)] =
                r[static_cast<std::size_t>(i + sh)] - qc * cb[static_cast<std::size_t>(i)];
        trim_y(r);
    }
    if (!r.empty()) throw Error("inexact bivariate division");
    return BiPoly::from_y_coefficients(q);
}

std::vector<std::pair<BiPoly, int>> squarefree_layers(const BiPoly& g) {
    std::vector<std::pair<BiPoly, int>> layers;
    if (g.is_zero() || g.is_constant()) return layers;
    // T_k = prod p_i^{max(e_i - k, 0)}; A_k = T_{k-1} / T_k = prod_{e_i >= k} p_i
    std::vector<BiPoly> T{g};
    while (!T.back().is_constant()) {
        const BiPoly& t = T.back();
        BiPoly d = bgcd(bgcd(t, t.dx()), t.dy());
        T.push_back(d);
    }
    std::vector<BiPoly> A;
    for (std::size_t k = 1; k < T.size(); ++k) A.push_back(bipoly_exact_div(T[k - 1], T[k]));
    A.push_back(BiPoly::one());
    for (std::size_t k = 0; k + 1 < A.size(); ++k) {
        BiPoly s = bipoly_exact_div(A[k], A[k + 1]);
        if (!s.is_constant()) layers.emplace_back(s, static_cast<int>(k) + 1);
    }
    return layers;
}

bool is_squarefree(const BiPoly& f) {
    if (f.is_zero()) return false;
    if (f.is_constant()) return true;
    return bgcd(bgcd(f, f.dx()), f.dy()).is_constant();
}

} // namespace curvezeta
