// paramscalar.hpp -- the parameter fraction field Q(A,...,h,...).
//
// A value is num/den with den != 0. Normalization removes the rational
// content of den and fixes the sign of its leading term, so den is a
// primitive integer-coefficient polynomial with positive leading
// coefficient (and exactly 1 whenever it is constant). Full multivariate
// gcd reduction is deliberately not attempted: equality is decided by
// cross-multiplication and zero-testing by the numerator alone.
#pragma once

#include <optional>
#include <string>

#include "nonint/parampoly.hpp"

namespace nonint {

class param_scalar {
public:
    param_scalar() : num_(), den_(param_poly(1)) {}
    param_scalar(const rational& c) : num_(param_poly(c)), den_(param_poly(1)) {}
    param_scalar(long c) : param_scalar(rational(c)) {}
    explicit param_scalar(param_poly p) : num_(std::move(p)), den_(param_poly(1)) {}
    param_scalar(param_poly num, param_poly den);

    static param_scalar variable(sym s) { return param_scalar(param_poly::variable(s)); }

    const param_poly& num() const { return num_; }
    const param_poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    std::optional<rational> as_rational() const;

    param_scalar operator-() const;
    param_scalar& operator+=(const param_scalar& o);
    param_scalar& operator-=(const param_scalar& o);
    param_scalar& operator*=(const param_scalar& o);
    param_scalar& operator/=(const param_scalar& o);

    friend param_scalar operator+(param_scalar a, const param_scalar& b) { return a += b; }
    friend param_scalar operator-(param_scalar a, const param_scalar& b) { return a -= b; }
    friend param_scalar operator*(param_scalar a, const param_scalar& b) { return a *= b; }
    friend param_scalar operator/(param_scalar a, const param_scalar& b) { return a /= b; }

    param_scalar inverse() const;

    friend bool operator==(const param_scalar& a, const param_scalar& b);
    friend bool operator!=(const param_scalar& a, const param_scalar& b) { return !(a == b); }

    param_scalar substitute(sym s, const param_scalar& value) const;

    std::string str() const;

private:
    void normalize();

    param_poly num_, den_;
};

} // namespace nonint
