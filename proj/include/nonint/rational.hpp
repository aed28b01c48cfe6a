// rational.hpp -- arbitrary-precision rational numbers, GMP backed.
//
// Invariants: gcd(|num|, den) = 1, den > 0, zero is 0/1. Every constructor
// canonicalizes, so values compare with plain ==.
#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <optional>
#include <string>

#include "nonint/errors.hpp"

namespace nonint {

class rational {
public:
    rational() : v_(0) {}
    rational(long n) : v_(n) {}
    rational(long n, long d) : v_(n, d) {
        if (d == 0) throw domain_error("rational: zero denominator");
        canonicalize();
    }
    explicit rational(const mpz_class& n) : v_(n) {}
    rational(const mpz_class& n, const mpz_class& d) : v_(n, d) {
        if (d == 0) throw domain_error("rational: zero denominator");
        canonicalize();
    }
    explicit rational(const mpq_class& q) : v_(q) { canonicalize(); }

    // Accepts "n", "-n", "n/d" with arbitrary-size decimal integers.
    static rational parse(const std::string& text);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    rational operator-() const { return rational(mpq_class(-v_), already_canonical{}); }

    rational& operator+=(const rational& o) { v_ += o.v_; return *this; }
    rational& operator-=(const rational& o) { v_ -= o.v_; return *this; }
    rational& operator*=(const rational& o) { v_ *= o.v_; return *this; }
    rational& operator/=(const rational& o) {
        if (o.is_zero()) throw domain_error("rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend rational operator+(rational a, const rational& b) { return a += b; }
    friend rational operator-(rational a, const rational& b) { return a -= b; }
    friend rational operator*(rational a, const rational& b) { return a *= b; }
    friend rational operator/(rational a, const rational& b) { return a /= b; }

    friend bool operator==(const rational& a, const rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const rational& a, const rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const rational& a, const rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const rational& a, const rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const rational& a, const rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const rational& a, const rational& b) { return a.v_ >= b.v_; }

    rational abs() const { return sign() < 0 ? -*this : *this; }

    // Integer power, negative exponents allowed for nonzero values.
    rational pow(long e) const;

    // sqrt when the value is the square of a rational, nullopt otherwise.
    static std::optional<rational> sqrt_if_square(const rational& q);

    // Positive denominator of the reduced fraction ("N(p)" of the gate test).
    const mpz_class& reduced_denominator() const { return v_.get_den(); }

    mpz_class floor_z() const;
    mpz_class ceil_z() const;
    // The value as a long; throws when not an integer or out of range.
    long to_long() const;

    std::string str() const;

private:
    struct already_canonical {};
    rational(mpq_class q, already_canonical) : v_(std::move(q)) {}
    void canonicalize() { v_.canonicalize(); }

    mpq_class v_;
};

// gcd of numerators / lcm of denominators; the natural content of a
// rational-coefficient polynomial. Both arguments may be negative; the
// result is nonnegative and zero only if both are zero.
rational rational_content_gcd(const rational& a, const rational& b);

} // namespace nonint
