#include "nonint/ode.hpp"

namespace nonint {

namespace {

var flipped(var v) {
    if (v == var::z) return var::x;
    if (v == var::x) return var::z;
    return v;
}

// Exact quotient of two polynomials; the division must be exact.
unipoly exact_div(const unipoly& a, const unipoly& b) {
    auto [q, r] = a.divrem(b);
    if (!r.is_zero()) throw internal_error("exact_div: division not exact");
    return q;
}

// Rational roots of a rational-coefficient polynomial, found by the rational
// root theorem with small divisor enumeration. Returns nullopt when the
// coefficients are not all rational or the bounds are too large to try.
std::optional<std::vector<rational>> rational_roots_of(const unipoly& p, unipoly& deflated) {
    for (int i = 0; i <= p.degree(); ++i)
        if (!p.coeff(static_cast<unsigned>(i)).as_rational()) return std::nullopt;

    const auto divisors = [](const mpz_class& n) -> std::optional<std::vector<mpz_class>> {
        mpz_class a = ::abs(n);
        if (a == 0 || !a.fits_ulong_p() || a.get_ui() > 1000000ul) return std::nullopt;
        std::vector<mpz_class> out;
        const unsigned long v = a.get_ui();
        for (unsigned long d = 1; d * d <= v; ++d) {
            if (v % d != 0) continue;
            out.emplace_back(d);
            out.emplace_back(v / d);
        }
        return out;
    };

    std::vector<rational> roots;
    unipoly rem = p.monic();
    bool changed = true;
    while (changed && rem.degree() > 0) {
        changed = false;
        // Trailing coefficient zero means root 0.
        if (rem.coeff(0).is_zero()) {
            roots.emplace_back(0);
            std::vector<param_scalar> shifted(rem.coeffs().begin() + 1, rem.coeffs().end());
            rem = unipoly(rem.variable(), std::move(shifted));
            changed = true;
            continue;
        }
        std::vector<rational> rc;
        for (int i = 0; i <= rem.degree(); ++i) rc.push_back(*rem.coeff(static_cast<unsigned>(i)).as_rational());
        rational c2(0);
        for (const auto& c : rc) c2 = rational_content_gcd(c2, c);
        std::vector<mpz_class> irem;
        for (const auto& c : rc) irem.push_back((c / c2).num());

        const auto ds0 = divisors(irem.front());
        const auto dsn = divisors(irem.back());
        if (!ds0 || !dsn) break;
        for (const auto& pn : *ds0) {
            for (const auto& qd : *dsn) {
                for (int s : {1, -1}) {
                    const rational cand(s < 0 ? mpz_class(-pn) : pn, qd);
                    if (rem.eval(param_scalar(cand)).is_zero()) {
                        roots.push_back(cand);
                        // Deflate by (v - cand).
                        unipoly lin(rem.variable(),
                                    {param_scalar(-cand), param_scalar(rational(1))});
                        rem = exact_div(rem, lin);
                        changed = true;
                        goto next_round;
                    }
                }
            }
        }
    next_round:;
    }
    deflated = rem;
    std::sort(roots.begin(), roots.end());
    return roots;
}

// c1 written over the denominator q: returns N with c1 = poly_part + N/q.
unipoly proper_numerator_over(const rational_function& f, const unipoly& q) {
    auto [quot, rem] = f.num().divrem(f.den());
    (void)quot;
    return rem * exact_div(q, f.den());
}

indicial_data make_indicial(indicial_data::location loc, const param_scalar& p1,
                            const param_scalar& p0) {
    indicial_data d;
    d.loc = loc;
    d.p1 = p1;
    d.p0 = p0;
    d.discriminant = p1 * p1 - param_scalar(4) * p0;
    const auto rp1 = p1.as_rational();
    const auto rp0 = p0.as_rational();
    if (!rp1 || !rp0) {
        d.kind = indicial_data::root_kind::symbolic;
        return d;
    }
    const rational disc = *rp1 * *rp1 - rational(4) * *rp0;
    const auto sq = rational::sqrt_if_square(disc);
    if (!sq) {
        d.kind = indicial_data::root_kind::irrational;
        return d;
    }
    d.kind = indicial_data::root_kind::rational_pair;
    d.r1 = (-*rp1 + *sq) / rational(2);
    d.r2 = (-*rp1 - *sq) / rational(2);
    return d;
}

// 2 cos(pi d) for rational d, when the value is itself rational.
std::optional<rational> two_cos_pi_rational(const rational& d) {
    // Reduce d mod 2 into [0, 2).
    rational r = d - rational(2) * rational(mpz_class((d / rational(2)).floor_z()));
    if (r == rational(0)) return rational(2);
    if (r == rational(1, 3) || r == rational(5, 3)) return rational(1);
    if (r == rational(1, 2) || r == rational(3, 2)) return rational(0);
    if (r == rational(2, 3) || r == rational(4, 3)) return rational(-1);
    if (r == rational(1)) return rational(-2);
    return std::nullopt;
}

trace_value make_trace(const churchill_point& pt) {
    trace_value t;
    if (!pt.delta) {
        const auto ds = pt.delta_square.as_rational();
        t.k = ds ? trace_value::kind::two_cos_pi_irrational : trace_value::kind::symbolic;
        return t;
    }
    t.arg = *pt.delta;
    const auto v = two_cos_pi_rational(t.arg);
    if (v && v->is_zero()) {
        t.k = trace_value::kind::zero;
    } else {
        t.k = trace_value::kind::two_cos_pi;
    }
    return t;
}

churchill_point make_churchill_point(const param_scalar& a, const param_scalar& b) {
    churchill_point pt;
    pt.a = a;
    pt.b = b;
    const param_scalar one_minus_a = param_scalar(1) - a;
    pt.delta_square = one_minus_a * one_minus_a - param_scalar(4) * b;
    if (const auto ds = pt.delta_square.as_rational()) {
        if (const auto sq = rational::sqrt_if_square(*ds)) pt.delta = *sq;
    }
    pt.trace = make_trace(pt);
    return pt;
}

} // namespace

std::optional<rational> trace_value::exact_value() const {
    if (k == kind::zero) return rational(0);
    if (k == kind::two_cos_pi) return two_cos_pi_rational(arg);
    return std::nullopt;
}

linear_ode2::linear_ode2(rational_function c1_in, rational_function c2_in)
    : c1(std::move(c1_in)), c2(std::move(c2_in)) {
    if (c1.variable() != c2.variable())
        throw structural_error("linear_ode2: coefficient variable mismatch");
}

linear_ode2 transform_to_infinity(const linear_ode2& ode) {
    const var nv = flipped(ode.variable());
    const rational_function c1i = ode.c1.compose_reciprocal(nv);
    const rational_function c2i = ode.c2.compose_reciprocal(nv);
    const unipoly xv(nv, {param_scalar(), param_scalar(rational(1))});
    const rational_function x = rational_function::from_poly(xv);
    const rational_function x2 = x * x;
    const rational_function two_over_x(unipoly::constant(nv, param_scalar(2)), xv);
    return linear_ode2(two_over_x - c1i / x2, c2i / (x2 * x2));
}

singularity_info singular_points(const linear_ode2& ode) {
    const unipoly d1 = ode.c1.den(), d2 = ode.c2.den();
    const unipoly g = gcd(d1, d2);
    unipoly q = (d1 * d2);
    if (g.degree() > 0) q = q.divrem(g).first;
    q = q.monic();

    if (!q.is_squarefree())
        throw repeated_roots_error(
            "singular_points: the common denominator has a repeated root");

    singularity_info info;
    info.q = q;
    info.symbolic_factor = q;
    if (q.degree() > 0) {
        unipoly deflated(q.variable());
        if (const auto roots = rational_roots_of(q, deflated)) {
            info.rational_roots = *roots;
            info.symbolic_factor = deflated;
        }
    }
    return info;
}

indicial_data indicial_finite_simple_root(const linear_ode2& ode) {
    const singularity_info info = singular_points(ode);
    const unipoly& q = info.q;
    if (q.degree() <= 0)
        throw finite_exponent_unknown_error(
            "indicial_finite_simple_root: no finite singular points");

    // a = kappa with c1 = kappa q'/q + (pole-free part): the proper numerator
    // of c1 over q must be exactly kappa * q'.
    const unipoly n1 = proper_numerator_over(ode.c1, q);
    const unipoly dq = q.derivative();
    param_scalar kappa;
    if (!n1.is_zero()) {
        if (n1.degree() != dq.degree())
            throw finite_exponent_unknown_error(
                "indicial_finite_simple_root: c1 is not proportional to q'/q");
        kappa = n1.leading_coeff() / dq.leading_coeff();
        if (n1 != dq.scaled(kappa))
            throw finite_exponent_unknown_error(
                "indicial_finite_simple_root: residues of c1 differ between roots");
    }

    // b = 0 at simple poles; q squarefree guarantees c2's poles are simple.
    // lambda(lambda-1) + kappa lambda + 0.
    return make_indicial(indicial_data::location::finite_simple_roots,
                         kappa - param_scalar(1), param_scalar());
}

namespace {

// lim_{z->inf} z^k f(z); throws irregular_singularity_error when infinite.
param_scalar limit_zk(const rational_function& f, unsigned k) {
    if (f.is_zero()) return param_scalar();
    const int dn = f.num().degree() + static_cast<int>(k);
    const int dd = f.den().degree();
    if (dn > dd)
        throw irregular_singularity_error("indicial_at_infinity: irregular singular point");
    if (dn < dd) return param_scalar();
    return f.num().leading_coeff() / f.den().leading_coeff();
}

} // namespace

indicial_data indicial_at_infinity(const linear_ode2& ode) {
    const param_scalar a_inf = limit_zk(ode.c1, 1);
    const param_scalar b_inf = limit_zk(ode.c2, 2);
    // rho(rho-1) + (2 - a_inf) rho + b_inf = 0.
    return make_indicial(indicial_data::location::infinity, param_scalar(1) - a_inf, b_inf);
}

churchill_data churchill_invariants(const linear_ode2& ode) {
    const singularity_info info = singular_points(ode);
    const indicial_data fin = indicial_finite_simple_root(ode);
    const indicial_data inf = indicial_at_infinity(ode);

    churchill_data out;
    // Recover a from the monic quadratic: p1 = a - 1 at finite points.
    out.finite = make_churchill_point(fin.p1 + param_scalar(1), fin.p0);
    out.finite_count = info.finite_count();
    // p1 = 1 - a_inf at infinity.
    out.infinity = make_churchill_point(param_scalar(1) - inf.p1, inf.p0);
    return out;
}

} // namespace nonint
