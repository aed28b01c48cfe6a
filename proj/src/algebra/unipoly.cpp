#include "nonint/unipoly.hpp"

#include <sstream>

namespace nonint {

namespace {
const param_scalar k_zero_scalar{};

void require_same_var(var a, var b, const char* who) {
    if (a != b)
        throw structural_error(std::string(who) + ": variable mismatch");
}
} // namespace

const char* var_name(var v) {
    switch (v) {
        case var::z: return "z";
        case var::x: return "x";
        case var::t: return "t";
    }
    return "?";
}

unipoly::unipoly(var v, std::vector<param_scalar> coeffs) : v_(v), c_(std::move(coeffs)) {
    trim();
}

unipoly unipoly::constant(var v, const param_scalar& c) {
    unipoly p(v);
    if (!c.is_zero()) p.c_.push_back(c);
    return p;
}

unipoly unipoly::monomial(var v, const param_scalar& c, unsigned degree) {
    unipoly p(v);
    if (!c.is_zero()) {
        p.c_.assign(degree + 1, param_scalar());
        p.c_.back() = c;
    }
    return p;
}

void unipoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const param_scalar& unipoly::coeff(unsigned k) const {
    return k < c_.size() ? c_[k] : k_zero_scalar;
}

const param_scalar& unipoly::leading_coeff() const {
    if (c_.empty()) throw internal_error("unipoly: leading_coeff of zero");
    return c_.back();
}

unipoly unipoly::operator-() const {
    unipoly r(v_);
    r.c_.reserve(c_.size());
    for (const auto& c : c_) r.c_.push_back(-c);
    return r;
}

unipoly operator+(const unipoly& a, const unipoly& b) {
    require_same_var(a.v_, b.v_, "unipoly add");
    unipoly r(a.v_);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(i) + b.coeff(i);
    r.trim();
    return r;
}

unipoly operator-(const unipoly& a, const unipoly& b) {
    require_same_var(a.v_, b.v_, "unipoly sub");
    unipoly r(a.v_);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(i) - b.coeff(i);
    r.trim();
    return r;
}

unipoly operator*(const unipoly& a, const unipoly& b) {
    require_same_var(a.v_, b.v_, "unipoly mul");
    unipoly r(a.v_);
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, param_scalar());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    r.trim();
    return r;
}

unipoly unipoly::scaled(const param_scalar& c) const {
    unipoly r(v_);
    if (c.is_zero()) return r;
    r.c_.reserve(c_.size());
    for (const auto& k : c_) r.c_.push_back(k * c);
    return r;
}

bool operator==(const unipoly& a, const unipoly& b) {
    if (a.v_ != b.v_ || a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        if (a.c_[i] != b.c_[i]) return false;
    return true;
}

unipoly unipoly::derivative() const {
    unipoly r(v_);
    if (c_.size() <= 1) return r;
    r.c_.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        r.c_.push_back(c_[i] * param_scalar(rational(static_cast<long>(i))));
    r.trim();
    return r;
}

param_scalar unipoly::eval(const param_scalar& at) const {
    param_scalar acc;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * at + c_[i];
    return acc;
}

unipoly unipoly::reversed(unsigned target_degree) const {
    const unsigned n = std::max<unsigned>(target_degree, degree() < 0 ? 0 : degree());
    unipoly r(v_);
    if (is_zero()) return r;
    r.c_.assign(n + 1, param_scalar());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[n - i] = c_[i];
    r.trim();
    return r;
}

unipoly unipoly::monic() const {
    if (is_zero()) return *this;
    return scaled(leading_coeff().inverse());
}

std::pair<unipoly, unipoly> unipoly::divrem(const unipoly& d) const {
    require_same_var(v_, d.v_, "unipoly divrem");
    if (d.is_zero()) throw domain_error("unipoly: division by zero polynomial");
    unipoly q(v_), r = *this;
    if (r.degree() < d.degree()) return {q, r};
    q.c_.assign(r.degree() - d.degree() + 1, param_scalar());
    const param_scalar lead_inv = d.leading_coeff().inverse();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        const unsigned k = static_cast<unsigned>(r.degree() - d.degree());
        const param_scalar f = r.leading_coeff() * lead_inv;
        q.c_[k] = f;
        // r -= f * x^k * d
        for (std::size_t i = 0; i < d.c_.size(); ++i) r.c_[k + i] -= f * d.c_[i];
        r.trim();
    }
    q.trim();
    return {q, r};
}

unipoly gcd(const unipoly& a, const unipoly& b) {
    require_same_var(a.v_, b.v_, "unipoly gcd");
    unipoly f = a, g = b;
    while (!g.is_zero()) {
        unipoly r = f.divrem(g).second;
        f = std::move(g);
        g = r.is_zero() ? r : r.monic();
    }
    return f.is_zero() ? f : f.monic();
}

bool unipoly::is_squarefree() const {
    if (degree() <= 0) return true;
    return gcd(*this, derivative()).degree() == 0;
}

param_scalar resultant(const unipoly& a, const unipoly& b) {
    require_same_var(a.v_, b.v_, "unipoly resultant");
    if (a.is_zero() || b.is_zero()) return param_scalar();
    const int m = a.degree(), n = b.degree();
    if (m == 0) {
        param_scalar r(1);
        for (int i = 0; i < n; ++i) r *= a.leading_coeff();
        return r;
    }
    if (n == 0) {
        param_scalar r(1);
        for (int i = 0; i < m; ++i) r *= b.leading_coeff();
        return r;
    }
    const std::size_t size = static_cast<std::size_t>(m + n);
    std::vector<std::vector<param_scalar>> s(size, std::vector<param_scalar>(size));
    for (int row = 0; row < n; ++row)
        for (int j = 0; j <= m; ++j) s[row][row + j] = a.coeff(static_cast<unsigned>(m - j));
    for (int row = 0; row < m; ++row)
        for (int j = 0; j <= n; ++j) s[n + row][row + j] = b.coeff(static_cast<unsigned>(n - j));
    // Fraction-field Gaussian elimination.
    param_scalar det(1);
    bool negate = false;
    for (std::size_t col = 0; col < size; ++col) {
        std::size_t pivot = col;
        while (pivot < size && s[pivot][col].is_zero()) ++pivot;
        if (pivot == size) return param_scalar();
        if (pivot != col) {
            std::swap(s[pivot], s[col]);
            negate = !negate;
        }
        det *= s[col][col];
        const param_scalar inv = s[col][col].inverse();
        for (std::size_t r2 = col + 1; r2 < size; ++r2) {
            if (s[r2][col].is_zero()) continue;
            const param_scalar f = s[r2][col] * inv;
            for (std::size_t c2 = col; c2 < size; ++c2) s[r2][c2] -= f * s[col][c2];
        }
    }
    return negate ? -det : det;
}

param_scalar unipoly::discriminant() const {
    if (degree() < 1) throw domain_error("unipoly: discriminant needs degree >= 1");
    // disc = (-1)^(n(n-1)/2) res(p, p') / lc(p)
    const param_scalar r = resultant(*this, derivative());
    const int n = degree();
    param_scalar d = r / leading_coeff();
    if (((n * (n - 1)) / 2) % 2 == 1) d = -d;
    return d;
}

std::string unipoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!first) out << " + ";
        first = false;
        out << "(" << c_[i].str() << ")";
        if (i > 0) {
            out << "*" << var_name(v_);
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

rational_function::rational_function(unipoly num, unipoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    require_same_var(num_.variable(), den_.variable(), "rational_function");
    if (den_.is_zero()) throw domain_error("rational_function: zero denominator");
    normalize();
}

rational_function rational_function::from_poly(unipoly p) {
    const var v = p.variable();
    return rational_function(std::move(p), unipoly::constant(v, param_scalar(1)));
}

void rational_function::normalize() {
    if (num_.is_zero()) {
        den_ = unipoly::constant(num_.variable(), param_scalar(1));
        return;
    }
    const unipoly g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divrem(g).first;
        den_ = den_.divrem(g).first;
    }
    const param_scalar lead_inv = den_.leading_coeff().inverse();
    num_ = num_.scaled(lead_inv);
    den_ = den_.scaled(lead_inv);
}

rational_function rational_function::operator-() const {
    rational_function r = *this;
    r.num_ = -r.num_;
    return r;
}

rational_function operator+(const rational_function& a, const rational_function& b) {
    return rational_function(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

rational_function operator-(const rational_function& a, const rational_function& b) {
    return rational_function(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

rational_function operator*(const rational_function& a, const rational_function& b) {
    return rational_function(a.num_ * b.num_, a.den_ * b.den_);
}

rational_function operator/(const rational_function& a, const rational_function& b) {
    if (b.is_zero()) throw domain_error("rational_function: division by zero");
    return rational_function(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const rational_function& a, const rational_function& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
}

param_scalar rational_function::eval(const param_scalar& at) const {
    const param_scalar d = den_.eval(at);
    if (d.is_zero()) throw domain_error("rational_function: pole at evaluation point");
    return num_.eval(at) / d;
}

rational_function rational_function::compose_reciprocal(var new_var) const {
    const int dn = std::max(num_.degree(), 0);
    const int dd = std::max(den_.degree(), 0);
    const unsigned n = static_cast<unsigned>(std::max(dn, dd));
    // p(1/x) = rev_n(p)(x) / x^n with a common padding degree n.
    std::vector<param_scalar> nc(n + 1), dc(n + 1);
    for (unsigned i = 0; i <= n; ++i) {
        nc[n - i] = num_.coeff(i);
        dc[n - i] = den_.coeff(i);
    }
    return rational_function(unipoly(new_var, std::move(nc)), unipoly(new_var, std::move(dc)));
}

std::string rational_function::str() const {
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

} // namespace nonint
