#include "umbral/rational.hpp"

#include <cctype>

namespace umbral {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DivisionByZero();
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero();
    v_ /= o.v_;
    return *this;
}

Rational Rational::pow(unsigned e) const {
    Rational r(1);
    Rational base = *this;
    while (e > 0) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

std::string Rational::text() const {
    std::string s = v_.get_num().get_str();
    if (v_.get_den() != 1) s += "/" + v_.get_den().get_str();
    return s;
}

Rational Rational::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty rational");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(mpz_class(s));
        mpz_class num(s.substr(0, slash));
        mpz_class den(s.substr(slash + 1));
        if (den == 0) throw DivisionByZero();
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational '" + std::string(text) + "'");
    }
}

Rational gcd(const Rational& a, const Rational& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.num().get_mpz_t(), b.num().get_mpz_t());
    return Rational(g);
}

mpz_class gcd(const mpz_class& a, const mpz_class& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

}  // namespace umbral
