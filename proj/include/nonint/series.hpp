// series.hpp -- truncated Puiseux series and series with a single logarithm.
//
// A puiseux_series holds coefficients on the lattice lead + (1/d)Z for a
// ramification index d. Everything below the leading exponent is exactly
// zero; everything at or beyond the truncation bound is unknown. A missing
// bound means the series is exact (a Laurent polynomial). Arithmetic
// propagates bounds so a stored coefficient is always the true one; asking
// past the bound raises precision_error.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nonint/unipoly.hpp"

namespace nonint {

class puiseux_series {
public:
    explicit puiseux_series(var v = var::x) : v_(v), ram_(1), lead_(0) {}

    static puiseux_series zero(var v, std::optional<rational> trunc = std::nullopt);
    // c * v^e; ramification taken from the denominator of e.
    static puiseux_series monomial(var v, const param_scalar& c, const rational& e);
    static puiseux_series from_poly(const unipoly& p); // exact

    var variable() const { return v_; }
    unsigned ramification() const { return ram_; }
    // Exponent step between stored slots.
    rational step() const { return rational(1, static_cast<long>(ram_)); }

    bool known_zero() const { return c_.empty(); }
    bool is_exact() const { return !trunc_.has_value(); }
    const std::optional<rational>& truncation() const { return trunc_; }

    // Leading exponent; nullopt when no nonzero term is known.
    std::optional<rational> lead_exponent() const;
    const param_scalar& lead_coeff() const;

    // First exponent at which the series is not known to vanish: the lead
    // exponent for a nonzero series, the truncation bound otherwise.
    rational known_from() const;

    // Exact coefficient at exponent e; throws precision_error when e lies
    // at or beyond the truncation bound.
    param_scalar coeff_at(const rational& e) const;

    std::size_t term_count() const { return c_.size(); }

    puiseux_series operator-() const;
    friend puiseux_series operator+(const puiseux_series& a, const puiseux_series& b);
    friend puiseux_series operator-(const puiseux_series& a, const puiseux_series& b);
    friend puiseux_series operator*(const puiseux_series& a, const puiseux_series& b);

    puiseux_series scaled(const param_scalar& c) const;
    puiseux_series shifted(const rational& dexp) const; // multiply by v^dexp
    puiseux_series truncated_at(const rational& bound) const;
    puiseux_series derivative() const;

    struct integral_result {
        puiseux_series antiderivative;
        param_scalar residue; // coefficient that sat at exponent -1
    };
    integral_result integrate() const;

    // Coefficient at exponent -1 (exact; precision_error if unknowable).
    param_scalar residue() const;

    // Multiplicative inverse; the leading coefficient must be known nonzero.
    // Relative precision is preserved; exact input yields n_terms slots.
    puiseux_series inverse(unsigned n_terms = 0) const;

    // Substitute explicit values for parameter symbols in every coefficient.
    puiseux_series substituted(sym s, const param_scalar& value) const;

    std::string str() const;

private:
    friend class series_builder;
    void normalize();
    puiseux_series rebased(unsigned new_ram) const;

    var v_;
    unsigned ram_;
    rational lead_;                 // exponent of c_[0]
    std::vector<param_scalar> c_;  // c_[k] at lead_ + k/ram_
    std::optional<rational> trunc_;
};

// Incremental construction on a fixed lattice.
class series_builder {
public:
    series_builder(var v, unsigned ram, const rational& lead, std::size_t slots);
    param_scalar& at(std::size_t k);
    const param_scalar& at(std::size_t k) const;
    puiseux_series finish(std::optional<rational> trunc) &&;

private:
    puiseux_series s_;
};

// Reciprocal square root of a polynomial: returns (series, scale) with
// series^2 * p == scale exactly through the bound, where scale is the
// coefficient of p's lowest-order term. Overall constant square roots are
// never taken, so all series coefficients stay in the parameter field;
// residue tests are insensitive to that fixed constant.
struct sqrt_inverse_result {
    puiseux_series series;
    param_scalar scale;
};
sqrt_inverse_result series_sqrt_inverse(const unipoly& p, const rational& order);

// Series expansion of num/den around 0, correct below `bound`.
puiseux_series rf_to_series(const rational_function& f, const rational& bound);

// A series plus an optional log-carrying part: s0 + s1 * ln(v).
class log_series {
public:
    log_series() = default;
    explicit log_series(puiseux_series s0) : s0_(std::move(s0)), s1_(s0_.variable()) {
        s1_ = puiseux_series::zero(s0_.variable());
    }
    log_series(puiseux_series s0, puiseux_series s1);

    const puiseux_series& s0() const { return s0_; }
    const puiseux_series& s1() const { return s1_; }
    bool has_log() const { return !s1_.known_zero(); }
    var variable() const { return s0_.variable(); }

    log_series operator-() const;
    friend log_series operator+(const log_series& a, const log_series& b);
    friend log_series operator-(const log_series& a, const log_series& b);
    // Defined when at most one factor carries a log.
    friend log_series operator*(const log_series& a, const log_series& b);

    log_series scaled(const param_scalar& c) const;
    log_series derivative() const; // d/dv (s0 + s1 ln v) = s0' + s1/v + s1' ln v

    std::string str() const;

private:
    puiseux_series s0_, s1_;
};

} // namespace nonint
