// ode.hpp -- second-order linear ODEs y'' + c1 y' + c2 y = 0 with rational
// function coefficients: singular point structure, indicial equations at the
// finite simple roots and at infinity, and the local monodromy-trace data.
#pragma once

#include <optional>
#include <vector>

#include "nonint/series.hpp"
#include "nonint/unipoly.hpp"

namespace nonint {

struct linear_ode2 {
    linear_ode2(rational_function c1_in, rational_function c2_in);

    var variable() const { return c1.variable(); }

    rational_function c1, c2;
};

// Exact change of variable x = 1/z. The variable tag flips z <-> x, so the
// transform is an involution.
linear_ode2 transform_to_infinity(const linear_ode2& ode);

// Finite singular points are the roots of the (monic) common denominator q.
// Rational roots are split out when they can be found exactly; the rest stay
// as the symbolic simple roots of the deflated polynomial. Throws
// repeated_roots_error when q is not squarefree.
struct singularity_info {
    unipoly q;                             // monic common denominator
    std::vector<rational> rational_roots;  // explicit simple roots
    unipoly symbolic_factor;               // q with rational roots removed
    unsigned symbolic_count() const {
        return symbolic_factor.degree() > 0 ? static_cast<unsigned>(symbolic_factor.degree()) : 0;
    }
    unsigned finite_count() const {
        return static_cast<unsigned>(rational_roots.size()) + symbolic_count();
    }
    bool at_infinity = true;
};
singularity_info singular_points(const linear_ode2& ode);

struct indicial_data {
    enum class location { finite_simple_roots, infinity };
    enum class root_kind { rational_pair, irrational, symbolic };

    location loc;
    // Monic quadratic rho^2 + p1*rho + p0 = 0.
    param_scalar p1, p0;
    root_kind kind;
    rational r1, r2;          // valid for rational_pair, r1 >= r2
    param_scalar discriminant; // p1^2 - 4 p0

    rational exponent_difference() const { return r1 - r2; } // rational_pair only
};

// The structural rule for the simultaneous indicial equation at every simple
// root of q: requires c1 = kappa * q'/q up to a pole-free part and c2 with at
// most simple poles there. Throws finite_exponent_unknown_error otherwise.
indicial_data indicial_finite_simple_root(const linear_ode2& ode);

// Indicial equation in the x = 1/z chart: rho(rho-1) + (2-a_inf) rho + b_inf
// with a_inf = lim z c1, b_inf = lim z^2 c2. Throws
// irregular_singularity_error when either limit does not exist.
indicial_data indicial_at_infinity(const linear_ode2& ode);

struct trace_value {
    enum class kind { zero, two_cos_pi, two_cos_pi_irrational, symbolic };
    kind k = kind::symbolic;
    rational arg; // valid for two_cos_pi

    // 2 cos(pi * arg) when that is rational, i.e. arg in (1/2)Z or (1/3)Z.
    std::optional<rational> exact_value() const;
};

struct churchill_point {
    param_scalar a, b;
    param_scalar delta_square;     // (1-a)^2 - 4b, exact
    std::optional<rational> delta; // set when delta_square is a rational square
    trace_value trace;
};

struct churchill_data {
    churchill_point finite;  // shared by every finite simple root
    unsigned finite_count;
    churchill_point infinity;
};

churchill_data churchill_invariants(const linear_ode2& ode);

} // namespace nonint
