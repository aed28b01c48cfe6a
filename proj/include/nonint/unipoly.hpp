// unipoly.hpp -- univariate polynomials and rational functions over the
// parameter field, in one of the chart variables z, x = 1/z, or t.
#pragma once

#include <string>
#include <vector>

#include "nonint/paramscalar.hpp"

namespace nonint {

enum class var : unsigned char { z, x, t };

const char* var_name(var v);

class unipoly {
public:
    explicit unipoly(var v = var::z) : v_(v) {}
    unipoly(var v, std::vector<param_scalar> coeffs); // ascending degree
    static unipoly constant(var v, const param_scalar& c);
    static unipoly monomial(var v, const param_scalar& c, unsigned degree);

    var variable() const { return v_; }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    // Zero beyond the degree.
    const param_scalar& coeff(unsigned k) const;
    const param_scalar& leading_coeff() const;
    const std::vector<param_scalar>& coeffs() const { return c_; }

    unipoly operator-() const;
    friend unipoly operator+(const unipoly& a, const unipoly& b);
    friend unipoly operator-(const unipoly& a, const unipoly& b);
    friend unipoly operator*(const unipoly& a, const unipoly& b);
    unipoly scaled(const param_scalar& c) const;

    friend bool operator==(const unipoly& a, const unipoly& b);
    friend bool operator!=(const unipoly& a, const unipoly& b) { return !(a == b); }

    unipoly derivative() const;
    param_scalar eval(const param_scalar& at) const;

    // x^n * p(1/x) for n = max(degree, target_degree).
    unipoly reversed(unsigned target_degree) const;

    unipoly monic() const;

    // Field-coefficient division: *this = q * d + r with deg r < deg d.
    std::pair<unipoly, unipoly> divrem(const unipoly& d) const;

    friend unipoly gcd(const unipoly& a, const unipoly& b); // monic result
    bool is_squarefree() const;

    // Determinant of the Sylvester matrix; exact.
    friend param_scalar resultant(const unipoly& a, const unipoly& b);
    param_scalar discriminant() const;

    std::string str() const;

private:
    void trim();

    var v_;
    std::vector<param_scalar> c_;
};

class rational_function {
public:
    explicit rational_function(var v = var::z)
        : num_(v), den_(unipoly::constant(v, param_scalar(1))) {}
    rational_function(unipoly num, unipoly den);
    static rational_function from_poly(unipoly p);

    var variable() const { return num_.variable(); }
    const unipoly& num() const { return num_; }
    const unipoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    rational_function operator-() const;
    friend rational_function operator+(const rational_function& a, const rational_function& b);
    friend rational_function operator-(const rational_function& a, const rational_function& b);
    friend rational_function operator*(const rational_function& a, const rational_function& b);
    friend rational_function operator/(const rational_function& a, const rational_function& b);

    // Equality of the represented functions (cross-multiplication).
    friend bool operator==(const rational_function& a, const rational_function& b);
    friend bool operator!=(const rational_function& a, const rational_function& b) {
        return !(a == b);
    }

    param_scalar eval(const param_scalar& at) const;

    // f(1/x), retagged to the given variable.
    rational_function compose_reciprocal(var new_var) const;

    std::string str() const;

private:
    void normalize();

    unipoly num_, den_;
};

} // namespace nonint
