// parampoly.hpp -- sparse multivariate polynomials over the parameter symbols.
//
// The symbol set covers the Hamiltonian coefficients A..G, the energy
// constant h, the quartic family parameter alpha, the resonance parameter p
// (for runs that keep it symbolic), the local Galois group parameters
// delta/gamma/mu, and the Weierstrass invariants g2/g3. Terms live in a map
// keyed by graded-lex monomials, so iteration order is canonical and
// equality is structural.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nonint/rational.hpp"

namespace nonint {

enum class sym : unsigned char {
    A, B, C, D, E, F, G, h, alpha, p, delta, gamma, mu, g2, g3
};

inline constexpr std::size_t sym_count = 15;

const char* sym_name(sym s);
std::optional<sym> sym_from_name(const std::string& name);

struct monomial {
    std::array<std::uint16_t, sym_count> e{};

    unsigned total_degree() const;
    bool is_unit() const { return total_degree() == 0; }
    unsigned deg(sym s) const { return e[static_cast<std::size_t>(s)]; }

    monomial operator*(const monomial& o) const;
    // Componentwise quotient when divisible.
    std::optional<monomial> divided_by(const monomial& o) const;

    // Graded lex: lower total degree first, then lex on the exponent array.
    friend bool operator<(const monomial& a, const monomial& b);
    friend bool operator==(const monomial& a, const monomial& b) { return a.e == b.e; }

    std::string str() const;
};

class param_scalar; // forward; substitution into the fraction field

class param_poly {
public:
    param_poly() = default;
    explicit param_poly(const rational& c);
    explicit param_poly(long c) : param_poly(rational(c)) {}

    static param_poly variable(sym s);

    bool is_zero() const { return t_.empty(); }
    std::optional<rational> as_constant() const;

    unsigned degree() const;
    unsigned degree(sym s) const;

    param_poly operator-() const;
    param_poly& operator+=(const param_poly& o);
    param_poly& operator-=(const param_poly& o);
    friend param_poly operator+(param_poly a, const param_poly& b) { return a += b; }
    friend param_poly operator-(param_poly a, const param_poly& b) { return a -= b; }
    friend param_poly operator*(const param_poly& a, const param_poly& b);
    param_poly& operator*=(const param_poly& o) { return *this = *this * o; }

    param_poly scaled(const rational& c) const;
    param_poly pow(unsigned e) const;

    friend bool operator==(const param_poly& a, const param_poly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const param_poly& a, const param_poly& b) { return !(a == b); }

    // Replace s by a polynomial (exact, expands powers).
    param_poly substitute(sym s, const param_poly& value) const;
    // Replace s by a field element; result lands in the fraction field.
    param_scalar substitute(sym s, const param_scalar& value) const;

    // Coefficient of s^k, as a polynomial in the remaining symbols.
    param_poly coeff_of(sym s, unsigned k) const;

    // gcd of coefficient numerators over lcm of denominators, carrying the
    // sign of the leading (graded-lex greatest) term. Zero for the zero
    // polynomial. Dividing by it yields a primitive, positive-leading poly.
    rational signed_content() const;

    const rational& leading_coeff() const;
    const monomial& leading_monomial() const;

    std::vector<sym> symbols_used() const;

    const std::map<monomial, rational>& terms() const { return t_; }
    void set_term(const monomial& m, const rational& c); // c == 0 erases

    std::string str() const;

private:
    std::map<monomial, rational> t_;
};

} // namespace nonint
