#include "nonint/series.hpp"

#include <numeric>
#include <sstream>

namespace nonint {

namespace {

void require_same_var(var a, var b, const char* who) {
    if (a != b)
        throw structural_error(std::string(who) + ": variable mismatch");
}

unsigned lcm_u(unsigned a, unsigned b) {
    return static_cast<unsigned>(std::lcm<unsigned long>(a, b));
}

unsigned denom_as_ram(const rational& e) {
    if (!e.den().fits_ulong_p())
        throw structural_error("puiseux_series: exponent denominator too large");
    return static_cast<unsigned>(e.den().get_ui());
}

// Number of lattice slots k >= 0 with lead + k/ram < bound, clamped to >= 0.
std::size_t slots_below(const rational& lead, unsigned ram, const rational& bound) {
    const rational n = (bound - lead) * rational(static_cast<long>(ram));
    mpz_class c = n.ceil_z();
    if (c <= 0) return 0;
    if (!c.fits_ulong_p() || c.get_ui() > (1u << 24))
        throw structural_error("puiseux_series: truncation window too large");
    return static_cast<std::size_t>(c.get_ui());
}

std::optional<rational> min_opt(const std::optional<rational>& a, const std::optional<rational>& b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}

} // namespace

puiseux_series puiseux_series::zero(var v, std::optional<rational> trunc) {
    puiseux_series s(v);
    s.trunc_ = std::move(trunc);
    return s;
}

puiseux_series puiseux_series::monomial(var v, const param_scalar& c, const rational& e) {
    puiseux_series s(v);
    if (c.is_zero()) return s;
    s.ram_ = denom_as_ram(e);
    s.lead_ = e;
    s.c_.push_back(c);
    return s;
}

puiseux_series puiseux_series::from_poly(const unipoly& p) {
    puiseux_series s(p.variable());
    if (p.is_zero()) return s;
    s.ram_ = 1;
    s.lead_ = rational(0);
    s.c_ = p.coeffs();
    s.normalize();
    return s;
}

void puiseux_series::normalize() {
    // Drop terms at or beyond the truncation bound.
    if (trunc_) {
        const std::size_t keep = slots_below(lead_, ram_, *trunc_);
        if (c_.size() > keep) c_.resize(keep);
    }
    std::size_t skip = 0;
    while (skip < c_.size() && c_[skip].is_zero()) ++skip;
    if (skip == c_.size()) {
        c_.clear();
        lead_ = rational(0);
        return;
    }
    if (skip > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(skip));
        lead_ += rational(static_cast<long>(skip), static_cast<long>(ram_));
    }
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

puiseux_series puiseux_series::rebased(unsigned new_ram) const {
    if (new_ram == ram_) return *this;
    if (new_ram % ram_ != 0)
        throw internal_error("puiseux_series: rebase to incompatible ramification");
    puiseux_series s(v_);
    s.ram_ = new_ram;
    s.lead_ = lead_;
    s.trunc_ = trunc_;
    if (c_.empty()) return s;
    const unsigned f = new_ram / ram_;
    s.c_.assign((c_.size() - 1) * f + 1, param_scalar());
    for (std::size_t k = 0; k < c_.size(); ++k) s.c_[k * f] = c_[k];
    return s;
}

std::optional<rational> puiseux_series::lead_exponent() const {
    if (c_.empty()) return std::nullopt;
    return lead_;
}

const param_scalar& puiseux_series::lead_coeff() const {
    if (c_.empty()) throw internal_error("puiseux_series: lead_coeff of zero series");
    return c_.front();
}

rational puiseux_series::known_from() const {
    if (!c_.empty()) return lead_;
    if (trunc_) return *trunc_;
    throw internal_error("puiseux_series: known_from of exact zero");
}

param_scalar puiseux_series::coeff_at(const rational& e) const {
    if (trunc_ && e >= *trunc_) {
        const rational need = (e - *trunc_) * rational(static_cast<long>(ram_)) + rational(1);
        throw precision_error("puiseux_series: coefficient at " + e.str() +
                                  " is beyond the truncation bound " + trunc_->str(),
                              need.ceil_z().get_si());
    }
    if (c_.empty()) return param_scalar();
    const rational off = (e - lead_) * rational(static_cast<long>(ram_));
    if (!off.is_integer() || off.sign() < 0) return param_scalar();
    const mpz_class k = off.num();
    if (!k.fits_ulong_p() || k.get_ui() >= c_.size()) return param_scalar();
    return c_[k.get_ui()];
}

puiseux_series puiseux_series::operator-() const {
    puiseux_series s = *this;
    for (auto& c : s.c_) c = -c;
    return s;
}

puiseux_series operator+(const puiseux_series& a, const puiseux_series& b) {
    require_same_var(a.v_, b.v_, "series add");
    const std::optional<rational> bound = min_opt(a.trunc_, b.trunc_);
    if (a.c_.empty() && b.c_.empty()) return puiseux_series::zero(a.v_, bound);
    if (a.c_.empty() && !bound) return b;
    if (b.c_.empty() && !bound) return a;

    unsigned ram = lcm_u(a.ram_, b.ram_);
    rational start;
    if (a.c_.empty())
        start = b.lead_;
    else if (b.c_.empty())
        start = a.lead_;
    else {
        start = std::min(a.lead_, b.lead_);
        ram = lcm_u(ram, denom_as_ram(a.lead_ - b.lead_));
    }

    // Highest exponent that must be represented.
    rational top = start;
    if (!a.c_.empty())
        top = std::max(top, a.lead_ + rational(static_cast<long>(a.c_.size()) - 1,
                                               static_cast<long>(a.ram_)));
    if (!b.c_.empty())
        top = std::max(top, b.lead_ + rational(static_cast<long>(b.c_.size()) - 1,
                                               static_cast<long>(b.ram_)));
    rational stop = top + rational(1, static_cast<long>(ram));
    if (bound) stop = std::min(stop, *bound);

    series_builder out(a.v_, ram, start, slots_below(start, ram, stop));
    const rational step(1, static_cast<long>(ram));
    rational e = start;
    for (std::size_t k = 0; k < slots_below(start, ram, stop); ++k, e += step) {
        param_scalar va, vb;
        if (!a.c_.empty()) {
            const rational off = (e - a.lead_) * rational(static_cast<long>(a.ram_));
            if (off.is_integer() && off.sign() >= 0 && off.num().fits_ulong_p() &&
                off.num().get_ui() < a.c_.size())
                va = a.c_[off.num().get_ui()];
        }
        if (!b.c_.empty()) {
            const rational off = (e - b.lead_) * rational(static_cast<long>(b.ram_));
            if (off.is_integer() && off.sign() >= 0 && off.num().fits_ulong_p() &&
                off.num().get_ui() < b.c_.size())
                vb = b.c_[off.num().get_ui()];
        }
        out.at(k) = va + vb;
    }
    return std::move(out).finish(bound);
}

puiseux_series operator-(const puiseux_series& a, const puiseux_series& b) { return a + (-b); }

puiseux_series operator*(const puiseux_series& a, const puiseux_series& b) {
    require_same_var(a.v_, b.v_, "series mul");
    // An exactly-zero factor annihilates everything, unknown tail included.
    if (a.c_.empty() && a.is_exact()) return puiseux_series::zero(a.v_);
    if (b.c_.empty() && b.is_exact()) return puiseux_series::zero(a.v_);

    std::optional<rational> bound;
    if (a.trunc_) bound = min_opt(bound, *a.trunc_ + b.known_from());
    if (b.trunc_) bound = min_opt(bound, *b.trunc_ + a.known_from());
    if (a.c_.empty() || b.c_.empty()) return puiseux_series::zero(a.v_, bound);

    const unsigned ram = lcm_u(a.ram_, b.ram_);
    const puiseux_series ra = a.rebased(ram), rb = b.rebased(ram);
    const rational lead = ra.lead_ + rb.lead_;
    std::size_t slots = ra.c_.size() + rb.c_.size() - 1;
    if (bound) slots = std::min(slots, slots_below(lead, ram, *bound));
    if (slots == 0) return puiseux_series::zero(a.v_, bound);

    series_builder out(a.v_, ram, lead, slots);
    for (std::size_t i = 0; i < ra.c_.size() && i < slots; ++i) {
        if (ra.c_[i].is_zero()) continue;
        const std::size_t jmax = std::min(rb.c_.size(), slots - i);
        for (std::size_t j = 0; j < jmax; ++j) {
            if (rb.c_[j].is_zero()) continue;
            out.at(i + j) += ra.c_[i] * rb.c_[j];
        }
    }
    return std::move(out).finish(bound);
}

puiseux_series puiseux_series::scaled(const param_scalar& c) const {
    if (c.is_zero()) return zero(v_);
    puiseux_series s = *this;
    for (auto& k : s.c_) k *= c;
    return s;
}

puiseux_series puiseux_series::shifted(const rational& dexp) const {
    puiseux_series s = rebased(lcm_u(ram_, denom_as_ram(dexp)));
    s.lead_ += dexp;
    if (s.trunc_) s.trunc_ = *s.trunc_ + dexp;
    return s;
}

puiseux_series puiseux_series::truncated_at(const rational& bound) const {
    puiseux_series s = *this;
    s.trunc_ = min_opt(s.trunc_, bound);
    s.normalize();
    return s;
}

puiseux_series puiseux_series::derivative() const {
    puiseux_series s(v_);
    s.ram_ = ram_;
    s.lead_ = lead_ - rational(1);
    if (trunc_) s.trunc_ = *trunc_ - rational(1);
    s.c_.resize(c_.size());
    const rational step(1, static_cast<long>(ram_));
    rational e = lead_;
    for (std::size_t k = 0; k < c_.size(); ++k, e += step) s.c_[k] = c_[k] * param_scalar(e);
    s.normalize();
    return s;
}

puiseux_series::integral_result puiseux_series::integrate() const {
    // The residue slot must be decidable before we hand back an antiderivative.
    param_scalar res = residue();
    puiseux_series s(v_);
    s.ram_ = ram_;
    s.lead_ = lead_ + rational(1);
    if (trunc_) s.trunc_ = *trunc_ + rational(1);
    s.c_.resize(c_.size());
    const rational step(1, static_cast<long>(ram_));
    rational e = lead_;
    for (std::size_t k = 0; k < c_.size(); ++k, e += step) {
        if (e == rational(-1))
            s.c_[k] = param_scalar(); // the ln-term; reported via residue
        else
            s.c_[k] = c_[k] / param_scalar(e + rational(1));
    }
    s.normalize();
    return {std::move(s), std::move(res)};
}

param_scalar puiseux_series::residue() const { return coeff_at(rational(-1)); }

puiseux_series puiseux_series::inverse(unsigned n_terms) const {
    if (c_.empty()) throw domain_error("puiseux_series: inverse of a series with no known terms");
    std::size_t slots;
    if (trunc_) {
        slots = slots_below(lead_, ram_, *trunc_);
    } else {
        if (n_terms == 0)
            throw structural_error("puiseux_series: inverse of an exact series needs an order");
        slots = n_terms;
    }
    if (slots == 0) throw internal_error("puiseux_series: empty inversion window");

    const param_scalar c0_inv = c_.front().inverse();
    std::vector<param_scalar> w(slots);
    w[0] = param_scalar(1);
    for (std::size_t k = 1; k < slots; ++k) {
        param_scalar acc;
        for (std::size_t j = 1; j <= k && j < c_.size(); ++j) {
            if (c_[j].is_zero() || w[k - j].is_zero()) continue;
            acc += c_[j] * c0_inv * w[k - j];
        }
        w[k] = -acc;
    }
    series_builder out(v_, ram_, -lead_, slots);
    for (std::size_t k = 0; k < slots; ++k) out.at(k) = w[k] * c0_inv;
    const rational bound = -lead_ + rational(static_cast<long>(slots), static_cast<long>(ram_));
    return std::move(out).finish(bound);
}

puiseux_series puiseux_series::substituted(sym s, const param_scalar& value) const {
    puiseux_series r = *this;
    for (auto& c : r.c_) c = c.substitute(s, value);
    r.normalize();
    return r;
}

std::string puiseux_series::str() const {
    std::ostringstream out;
    const char* vn = var_name(v_);
    bool first = true;
    const rational step(1, static_cast<long>(ram_));
    rational e = lead_;
    for (std::size_t k = 0; k < c_.size(); ++k, e += step) {
        if (c_[k].is_zero()) continue;
        if (!first) out << " + ";
        first = false;
        out << "(" << c_[k].str() << ")";
        if (!e.is_zero()) {
            out << "*" << vn;
            if (e != rational(1)) out << "^(" << e.str() << ")";
        }
    }
    if (first) out << "0";
    if (trunc_) out << " + O(" << vn << "^(" << trunc_->str() << "))";
    return out.str();
}

series_builder::series_builder(var v, unsigned ram, const rational& lead, std::size_t slots)
    : s_(v) {
    s_.ram_ = lcm_u(ram, denom_as_ram(lead));
    if (s_.ram_ != ram)
        throw internal_error("series_builder: lead exponent off the requested lattice");
    s_.lead_ = lead;
    s_.c_.assign(slots, param_scalar());
}

param_scalar& series_builder::at(std::size_t k) {
    if (k >= s_.c_.size()) throw internal_error("series_builder: slot out of range");
    return s_.c_[k];
}

const param_scalar& series_builder::at(std::size_t k) const {
    if (k >= s_.c_.size()) throw internal_error("series_builder: slot out of range");
    return s_.c_[k];
}

puiseux_series series_builder::finish(std::optional<rational> trunc) && {
    s_.trunc_ = std::move(trunc);
    s_.normalize();
    return std::move(s_);
}

sqrt_inverse_result series_sqrt_inverse(const unipoly& p, const rational& order) {
    if (p.is_zero()) throw domain_error("series_sqrt_inverse: zero polynomial");
    unsigned m = 0;
    while (p.coeff(m).is_zero()) ++m;
    const param_scalar scale = p.coeff(m);
    const rational lead = rational(-static_cast<long>(m), 2);
    const unsigned ram = (m % 2 == 0) ? 1u : 2u;

    // Relative window: lead + K < order.
    const rational rel = order - lead;
    mpz_class kz = rel.ceil_z();
    if (kz < 1) kz = 1;
    const std::size_t K = static_cast<std::size_t>(kz.get_ui());

    // u_j are the relative coefficients of p past its lowest term.
    const param_scalar c0_inv = scale.inverse();
    std::vector<param_scalar> u(K);
    for (std::size_t j = 1; j < K; ++j)
        u[j] = p.coeff(m + static_cast<unsigned>(j)) * c0_inv;

    // y = (1+u)^{-1}
    std::vector<param_scalar> y(K);
    y[0] = param_scalar(1);
    for (std::size_t k = 1; k < K; ++k) {
        param_scalar acc;
        for (std::size_t j = 1; j <= k; ++j) acc += u[j] * y[k - j];
        y[k] = -acc;
    }
    // w = sqrt(y), w0 = 1
    std::vector<param_scalar> w(K);
    w[0] = param_scalar(1);
    const param_scalar half(rational(1, 2));
    for (std::size_t k = 1; k < K; ++k) {
        param_scalar acc;
        for (std::size_t i = 1; i < k; ++i) acc += w[i] * w[k - i];
        w[k] = (y[k] - acc) * half;
    }

    series_builder out(p.variable(), ram, lead, (K - 1) * ram + 1);
    for (std::size_t k = 0; k < K; ++k) out.at(k * ram) = w[k];
    const rational bound = lead + rational(static_cast<long>(K));
    return {std::move(out).finish(bound), scale};
}

puiseux_series rf_to_series(const rational_function& f, const rational& bound) {
    if (f.is_zero()) return puiseux_series::zero(f.variable(), bound);
    const puiseux_series num = puiseux_series::from_poly(f.num());
    puiseux_series den = puiseux_series::from_poly(f.den());
    const rational num_lead = *num.lead_exponent();
    const rational den_lead = *den.lead_exponent();
    rational den_bound = bound - num_lead + den_lead + den_lead;
    const rational den_min = den_lead + rational(1);
    if (den_bound < den_min) den_bound = den_min;
    den = den.truncated_at(den_bound);
    return (num * den.inverse()).truncated_at(bound);
}

log_series::log_series(puiseux_series s0, puiseux_series s1)
    : s0_(std::move(s0)), s1_(std::move(s1)) {
    require_same_var(s0_.variable(), s1_.variable(), "log_series");
}

log_series log_series::operator-() const { return log_series(-s0_, -s1_); }

log_series operator+(const log_series& a, const log_series& b) {
    return log_series(a.s0_ + b.s0_, a.s1_ + b.s1_);
}

log_series operator-(const log_series& a, const log_series& b) {
    return log_series(a.s0_ - b.s0_, a.s1_ - b.s1_);
}

log_series operator*(const log_series& a, const log_series& b) {
    if (a.has_log() && b.has_log())
        throw structural_error("log_series: product would need ln^2 terms");
    return log_series(a.s0_ * b.s0_, a.s1_ * b.s0_ + a.s0_ * b.s1_);
}

log_series log_series::scaled(const param_scalar& c) const {
    return log_series(s0_.scaled(c), s1_.scaled(c));
}

log_series log_series::derivative() const {
    return log_series(s0_.derivative() + s1_.shifted(rational(-1)), s1_.derivative());
}

std::string log_series::str() const {
    if (!has_log()) return s0_.str();
    return s0_.str() + " + ln(" + std::string(var_name(variable())) + ")*[" + s1_.str() + "]";
}

} // namespace nonint
