// frobenius.hpp -- exact Frobenius expansions at a regular singular point,
// including the logarithmic second solution when the exponents differ by an
// integer. The recurrence is solved over the parameter field, so the
// obstruction coefficient that decides between a log-free and a logarithmic
// second solution comes out as an exact polynomial in the parameters.
#pragma once

#include <utility>

#include "nonint/ode.hpp"
#include "nonint/series.hpp"

namespace nonint {

struct frobenius_solution {
    rational exponent;
    // Relative part: the solution is v^exponent * (body.s0 + body.s1 ln v),
    // body.s0 starting with coefficient 1 at relative exponent 0 (or at the
    // resonance offset for a forced-log equal-exponent case).
    log_series body;
    // Zero iff no logarithm is required.
    param_scalar log_obstruction;

    // Absolute series, exponent folded in.
    puiseux_series series0() const { return body.s0().shifted(exponent); }
    log_series full() const {
        return log_series(body.s0().shifted(exponent), body.s1().shifted(exponent));
    }
    bool has_log() const { return body.has_log(); }
};

// Local solutions at v = 0 of P v^2 y'' + Q v y' + R y = 0 where P, Q, R are
// integer-lattice series with P(0) != 0 and Q, R regular. `order` is the
// number of lattice steps computed past each leading exponent. The first
// solution carries the larger exponent.
std::pair<frobenius_solution, frobenius_solution>
frobenius_from_series(const puiseux_series& P, const puiseux_series& Q, const puiseux_series& R,
                      unsigned order);

// Same, for an ODE with rational-function coefficients; the equation is
// normalized by clearing denominators. Throws irregular_singularity_error
// when v = 0 is not a regular (or ordinary) point and
// degenerate_indicial_error when the exponents are not exact rationals.
std::pair<frobenius_solution, frobenius_solution> frobenius_solve(const linear_ode2& ode,
                                                                  unsigned order);

// L[y] for L = P v^2 d^2 + Q v d + R, applied to a (possibly logarithmic)
// candidate; used by tests to certify solutions by back substitution.
log_series apply_operator(const puiseux_series& P, const puiseux_series& Q,
                          const puiseux_series& R, const log_series& y);

// The same operator data extracted from an ODE: returns {P, Q, R} exact.
struct operator_series {
    puiseux_series P, Q, R;
};
operator_series ode_operator_series(const linear_ode2& ode);

} // namespace nonint
