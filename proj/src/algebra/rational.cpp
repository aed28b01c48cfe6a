#include "nonint/rational.hpp"

namespace nonint {

namespace {

bool looks_like_integer(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

} // namespace

rational rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!looks_like_integer(text))
            throw structural_error("rational: cannot parse '" + text + "'");
        return rational(mpz_class(text));
    }
    const std::string n = text.substr(0, slash);
    const std::string d = text.substr(slash + 1);
    if (!looks_like_integer(n) || !looks_like_integer(d))
        throw structural_error("rational: cannot parse '" + text + "'");
    mpz_class dz(d);
    if (dz == 0) throw domain_error("rational: zero denominator in '" + text + "'");
    return rational(mpz_class(n), dz);
}

rational rational::pow(long e) const {
    if (e == 0) return rational(1);
    if (is_zero()) {
        if (e < 0) throw domain_error("rational: 0 to a negative power");
        return rational(0);
    }
    const bool invert = e < 0;
    unsigned long k = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), k);
    return invert ? rational(d, n) : rational(n, d);
}

std::optional<rational> rational::sqrt_if_square(const rational& q) {
    if (q.sign() < 0) return std::nullopt;
    if (q.is_zero()) return rational(0);
    if (mpz_perfect_square_p(q.num().get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(q.den().get_mpz_t()) == 0) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), q.num().get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), q.den().get_mpz_t());
    return rational(rn, rd);
}

mpz_class rational::floor_z() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
    return q;
}

mpz_class rational::ceil_z() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
    return q;
}

long rational::to_long() const {
    if (!is_integer()) throw domain_error("rational: to_long of non-integer " + str());
    if (!num().fits_slong_p()) throw domain_error("rational: to_long overflow");
    return num().get_si();
}

std::string rational::str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

rational rational_content_gcd(const rational& a, const rational& b) {
    if (a.is_zero()) return b.abs();
    if (b.is_zero()) return a.abs();
    mpz_class n, d;
    mpz_gcd(n.get_mpz_t(), a.num().get_mpz_t(), b.num().get_mpz_t());
    mpz_lcm(d.get_mpz_t(), a.den().get_mpz_t(), b.den().get_mpz_t());
    return rational(n, d);
}

} // namespace nonint
