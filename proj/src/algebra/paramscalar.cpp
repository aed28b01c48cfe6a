#include "nonint/paramscalar.hpp"

namespace nonint {

param_scalar::param_scalar(param_poly num, param_poly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw domain_error("param_scalar: zero denominator");
    normalize();
}

void param_scalar::normalize() {
    if (num_.is_zero()) {
        den_ = param_poly(1);
        return;
    }
    const rational c = den_.signed_content();
    if (!c.is_one()) {
        const rational inv = rational(1) / c;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

bool param_scalar::is_one() const { return num_ == den_; }

std::optional<rational> param_scalar::as_rational() const {
    const auto n = num_.as_constant();
    if (!n) return std::nullopt;
    const auto d = den_.as_constant();
    if (!d) return std::nullopt;
    return *n / *d;
}

param_scalar param_scalar::operator-() const {
    param_scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

param_scalar& param_scalar::operator+=(const param_scalar& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

param_scalar& param_scalar::operator-=(const param_scalar& o) {
    if (den_ == o.den_) {
        num_ -= o.num_;
    } else {
        num_ = num_ * o.den_ - o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

param_scalar& param_scalar::operator*=(const param_scalar& o) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

param_scalar& param_scalar::operator/=(const param_scalar& o) {
    if (o.is_zero()) throw domain_error("param_scalar: division by zero");
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    normalize();
    return *this;
}

param_scalar param_scalar::inverse() const {
    if (is_zero()) throw domain_error("param_scalar: inverse of zero");
    return param_scalar(den_, num_);
}

bool operator==(const param_scalar& a, const param_scalar& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
}

param_scalar param_scalar::substitute(sym s, const param_scalar& value) const {
    const param_scalar d = den_.substitute(s, value);
    if (d.is_zero())
        throw domain_error("param_scalar: substitution makes the denominator vanish");
    return num_.substitute(s, value) / d;
}

std::string param_scalar::str() const {
    if (const auto d = den_.as_constant(); d && d->is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

} // namespace nonint
