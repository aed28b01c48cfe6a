#include "nonint/parampoly.hpp"

#include <sstream>

#include "nonint/paramscalar.hpp"

namespace nonint {

namespace {

constexpr const char* names[sym_count] = {
    "A", "B", "C", "D", "E", "F", "G", "h",
    "alpha", "p", "delta", "gamma", "mu", "g2", "g3",
};

} // namespace

const char* sym_name(sym s) { return names[static_cast<std::size_t>(s)]; }

std::optional<sym> sym_from_name(const std::string& name) {
    for (std::size_t i = 0; i < sym_count; ++i)
        if (name == names[i]) return static_cast<sym>(i);
    return std::nullopt;
}

unsigned monomial::total_degree() const {
    unsigned d = 0;
    for (auto x : e) d += x;
    return d;
}

monomial monomial::operator*(const monomial& o) const {
    monomial r;
    for (std::size_t i = 0; i < sym_count; ++i)
        r.e[i] = static_cast<std::uint16_t>(e[i] + o.e[i]);
    return r;
}

std::optional<monomial> monomial::divided_by(const monomial& o) const {
    monomial r;
    for (std::size_t i = 0; i < sym_count; ++i) {
        if (e[i] < o.e[i]) return std::nullopt;
        r.e[i] = static_cast<std::uint16_t>(e[i] - o.e[i]);
    }
    return r;
}

bool operator<(const monomial& a, const monomial& b) {
    const unsigned da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    return a.e < b.e;
}

std::string monomial::str() const {
    std::string s;
    for (std::size_t i = 0; i < sym_count; ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += names[i];
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

param_poly::param_poly(const rational& c) {
    if (!c.is_zero()) t_.emplace(monomial{}, c);
}

param_poly param_poly::variable(sym s) {
    param_poly p;
    monomial m;
    m.e[static_cast<std::size_t>(s)] = 1;
    p.t_.emplace(m, rational(1));
    return p;
}

std::optional<rational> param_poly::as_constant() const {
    if (t_.empty()) return rational(0);
    if (t_.size() == 1 && t_.begin()->first.is_unit()) return t_.begin()->second;
    return std::nullopt;
}

unsigned param_poly::degree() const {
    return t_.empty() ? 0 : t_.rbegin()->first.total_degree();
}

unsigned param_poly::degree(sym s) const {
    unsigned d = 0;
    for (const auto& [m, c] : t_) d = std::max(d, m.deg(s));
    return d;
}

param_poly param_poly::operator-() const {
    param_poly r;
    for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
    return r;
}

param_poly& param_poly::operator+=(const param_poly& o) {
    for (const auto& [m, c] : o.t_) {
        auto it = t_.find(m);
        if (it == t_.end()) {
            t_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }
    return *this;
}

param_poly& param_poly::operator-=(const param_poly& o) {
    for (const auto& [m, c] : o.t_) {
        auto it = t_.find(m);
        if (it == t_.end()) {
            t_.emplace(m, -c);
        } else {
            it->second -= c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }
    return *this;
}

param_poly operator*(const param_poly& a, const param_poly& b) {
    param_poly r;
    for (const auto& [ma, ca] : a.t_) {
        for (const auto& [mb, cb] : b.t_) {
            const monomial m = ma * mb;
            auto it = r.t_.find(m);
            if (it == r.t_.end()) {
                r.t_.emplace(m, ca * cb);
            } else {
                it->second += ca * cb;
                if (it->second.is_zero()) r.t_.erase(it);
            }
        }
    }
    return r;
}

param_poly param_poly::scaled(const rational& c) const {
    param_poly r;
    if (c.is_zero()) return r;
    for (const auto& [m, k] : t_) r.t_.emplace(m, k * c);
    return r;
}

param_poly param_poly::pow(unsigned e) const {
    param_poly r(rational(1));
    param_poly base = *this;
    while (e > 0) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return r;
}

param_poly param_poly::substitute(sym s, const param_poly& value) const {
    const auto si = static_cast<std::size_t>(s);
    param_poly r;
    for (const auto& [m, c] : t_) {
        monomial rest = m;
        const unsigned k = rest.e[si];
        rest.e[si] = 0;
        param_poly term;
        term.t_.emplace(rest, c);
        if (k > 0) term = term * value.pow(k);
        r += term;
    }
    return r;
}

param_scalar param_poly::substitute(sym s, const param_scalar& value) const {
    // Horner over the powers of s.
    const unsigned d = degree(s);
    param_scalar acc;
    for (unsigned k = d + 1; k-- > 0;) {
        acc = acc * value + param_scalar(coeff_of(s, k));
    }
    return acc;
}

param_poly param_poly::coeff_of(sym s, unsigned k) const {
    const auto si = static_cast<std::size_t>(s);
    param_poly r;
    for (const auto& [m, c] : t_) {
        if (m.e[si] != k) continue;
        monomial rest = m;
        rest.e[si] = 0;
        r.t_.emplace(rest, c);
    }
    return r;
}

rational param_poly::signed_content() const {
    if (t_.empty()) return rational(0);
    rational g(0);
    for (const auto& [m, c] : t_) g = rational_content_gcd(g, c);
    if (t_.rbegin()->second.sign() < 0) g = -g;
    return g;
}

const rational& param_poly::leading_coeff() const {
    if (t_.empty()) throw internal_error("param_poly: leading_coeff of zero");
    return t_.rbegin()->second;
}

const monomial& param_poly::leading_monomial() const {
    if (t_.empty()) throw internal_error("param_poly: leading_monomial of zero");
    return t_.rbegin()->first;
}

std::vector<sym> param_poly::symbols_used() const {
    std::array<bool, sym_count> seen{};
    for (const auto& [m, c] : t_)
        for (std::size_t i = 0; i < sym_count; ++i)
            if (m.e[i] > 0) seen[i] = true;
    std::vector<sym> r;
    for (std::size_t i = 0; i < sym_count; ++i)
        if (seen[i]) r.push_back(static_cast<sym>(i));
    return r;
}

void param_poly::set_term(const monomial& m, const rational& c) {
    if (c.is_zero())
        t_.erase(m);
    else
        t_[m] = c;
}

std::string param_poly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // Leading (highest) term first.
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const auto& [m, c] = *it;
        rational a = c;
        if (first) {
            if (a.sign() < 0) {
                out << "-";
                a = -a;
            }
            first = false;
        } else if (a.sign() < 0) {
            out << " - ";
            a = -a;
        } else {
            out << " + ";
        }
        if (m.is_unit()) {
            out << a.str();
        } else if (a.is_one()) {
            out << m.str();
        } else {
            out << a.str() << "*" << m.str();
        }
    }
    return out.str();
}

} // namespace nonint
