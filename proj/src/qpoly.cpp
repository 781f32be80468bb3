#include "umbral/qpoly.hpp"

#include <cctype>
#include <cstdint>

namespace umbral {

void QPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

QPoly::QPoly(const Rational& constant) {
    if (!constant.is_zero()) c_.push_back(constant);
}

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::variable() { return monomial(1, Rational(1)); }

QPoly QPoly::monomial(int deg, const Rational& c) {
    QPoly p;
    if (c.is_zero()) return p;
    p.c_.assign(static_cast<size_t>(deg) + 1, Rational(0));
    p.c_.back() = c;
    return p;
}

Rational QPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
    return c_[static_cast<size_t>(i)];
}

const Rational& QPoly::lc() const { return c_.back(); }

Rational QPoly::eval(const Rational& q0) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q0 + *it;
    return acc;
}

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
    QPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
    r.trim();
    return r;
}

QPoly operator-(const QPoly& a, const QPoly& b) {
    QPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] -= b.c_[i];
    r.trim();
    return r;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    QPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

QPoly operator*(const QPoly& a, const Rational& s) {
    QPoly r;
    if (s.is_zero()) return r;
    r.c_ = a.c_;
    for (auto& c : r.c_) c *= s;
    return r;
}

void QPoly::divrem(const QPoly& a, const QPoly& b, QPoly& quo, QPoly& rem) {
    if (b.is_zero()) throw DivisionByZero();
    quo = QPoly();
    rem = a;
    if (a.degree() < b.degree()) return;
    quo.c_.assign(static_cast<size_t>(a.degree() - b.degree()) + 1, Rational(0));
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int shift = rem.degree() - b.degree();
        Rational f = rem.lc() / b.lc();
        quo.c_[static_cast<size_t>(shift)] = f;
        for (int i = 0; i <= b.degree(); ++i)
            rem.c_[static_cast<size_t>(i + shift)] -= f * b.c_[static_cast<size_t>(i)];
        rem.trim();
    }
    quo.trim();
}

QPoly QPoly::divided_exactly_by(const QPoly& d) const {
    QPoly q, r;
    divrem(*this, d, q, r);
    if (!r.is_zero()) throw Inconsistent("inexact polynomial division");
    return q;
}

Rational QPoly::content() const {
    if (is_zero()) return Rational(0);
    mpz_class den_lcm = 1;
    for (const auto& c : c_) den_lcm = lcm(den_lcm, c.den());
    mpz_class num_gcd = 0;
    for (const auto& c : c_) {
        mpz_class scaled = c.num() * (den_lcm / c.den());
        num_gcd = umbral::gcd(num_gcd, scaled);
    }
    return Rational(num_gcd, den_lcm);
}

QPoly QPoly::primitive() const {
    if (is_zero()) return QPoly();
    Rational c = content();
    QPoly r = *this;
    for (auto& x : r.c_) x /= c;
    return r;
}

namespace {

using ZVec = std::vector<mpz_class>;

int zdeg(const ZVec& v) { return static_cast<int>(v.size()) - 1; }

void ztrim(ZVec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

void zstrip_content(ZVec& v) {
    if (v.empty()) return;
    mpz_class g = 0;
    for (const auto& c : v) g = gcd(g, c);
    if (g > 1)
        for (auto& c : v) c /= g;
}

// Pseudo-remainder of u by v (v nonzero, deg u >= deg v allowed to fail gracefully).
ZVec zprem(ZVec u, const ZVec& v) {
    const mpz_class& l = v.back();
    const int n = zdeg(v);
    while (zdeg(u) >= n) {
        mpz_class c = u.back();
        int k = zdeg(u) - n;
        for (auto& x : u) x *= l;
        for (int i = 0; i <= n; ++i)
            u[static_cast<size_t>(k + i)] -= c * v[static_cast<size_t>(i)];
        ztrim(u);
    }
    return u;
}

ZVec to_primitive_int(const QPoly& p) {
    ZVec v;
    if (p.is_zero()) return v;
    QPoly pr = p.primitive();
    v.reserve(static_cast<size_t>(pr.degree()) + 1);
    for (int i = 0; i <= pr.degree(); ++i) v.push_back(pr.coeff(i).num());
    return v;
}

QPoly from_int(const ZVec& v) {
    std::vector<Rational> coeffs;
    coeffs.reserve(v.size());
    for (const auto& c : v) coeffs.emplace_back(c);
    return QPoly(std::move(coeffs));
}

// --- machine-prime helpers for the modular gcd ---

using u64 = std::uint64_t;

u64 mulm(u64 a, u64 b, u64 p) { return static_cast<u64>((unsigned __int128)a * b % p); }

u64 powm(u64 a, u64 e, u64 p) {
    u64 r = 1;
    while (e) {
        if (e & 1u) r = mulm(r, a, p);
        a = mulm(a, a, p);
        e >>= 1u;
    }
    return r;
}

bool is_prime_u32(u64 n) {
    if (n < 2) return false;
    for (u64 d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
        if (n % d == 0) return n == d;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1u) == 0) {
        d >>= 1u;
        ++s;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull}) {  // deterministic below 3.2e9
        u64 x = powm(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulm(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

const std::vector<u64>& prime_pool() {
    static const std::vector<u64> pool = [] {
        std::vector<u64> ps;
        for (u64 n = 2147483647ull; ps.size() < 40; n -= 2) {
            if (is_prime_u32(n)) ps.push_back(n);
        }
        return ps;
    }();
    return pool;
}

std::vector<u64> reduce_mod(const ZVec& v, u64 p) {
    std::vector<u64> r(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        u64 m = mpz_fdiv_ui(v[i].get_mpz_t(), static_cast<unsigned long>(p));
        r[i] = m;
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// monic gcd over Z_p
std::vector<u64> zp_gcd(std::vector<u64> a, std::vector<u64> b, u64 p) {
    auto deg = [](const std::vector<u64>& v) { return static_cast<int>(v.size()) - 1; };
    auto trim = [](std::vector<u64>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    if (deg(a) < deg(b)) std::swap(a, b);
    while (!b.empty()) {
        u64 binv = powm(b.back(), p - 2, p);
        while (deg(a) >= deg(b) && !a.empty()) {
            u64 f = mulm(a.back(), binv, p);
            int shift = deg(a) - deg(b);
            for (int i = 0; i <= deg(b); ++i) {
                u64 t = mulm(f, b[static_cast<size_t>(i)], p);
                u64& dst = a[static_cast<size_t>(i + shift)];
                dst = dst >= t ? dst - t : dst + p - t;
            }
            trim(a);
        }
        std::swap(a, b);
    }
    if (!a.empty()) {
        u64 inv = powm(a.back(), p - 2, p);
        for (auto& c : a) c = mulm(c, inv, p);
    }
    return a;
}

// exact-divisibility test over Q
bool divides_exactly(const ZVec& d, const ZVec& v) {
    QPoly q, r;
    QPoly::divrem(from_int(v), from_int(d), q, r);
    return r.is_zero();
}

ZVec prs_gcd(ZVec u, ZVec v) {
    while (!v.empty()) {
        if (zdeg(u) < zdeg(v)) std::swap(u, v);
        ZVec r = zprem(u, v);
        zstrip_content(r);
        u = std::move(v);
        v = std::move(r);
    }
    return u;
}

// Modular gcd with CRT reconstruction; every positive answer is verified by
// exact division, and a single prime with trivial image settles coprimality.
ZVec int_gcd(const ZVec& a, const ZVec& b) {
    mpz_class l = gcd(a.back(), b.back());
    ZVec acc;          // CRT accumulation of l * monic-gcd, symmetric residues
    mpz_class modulus = 1;
    int acc_deg = -1;
    int used = 0;
    for (u64 p : prime_pool()) {
        if (mpz_fdiv_ui(a.back().get_mpz_t(), static_cast<unsigned long>(p)) == 0 ||
            mpz_fdiv_ui(b.back().get_mpz_t(), static_cast<unsigned long>(p)) == 0)
            continue;
        std::vector<u64> gp = zp_gcd(reduce_mod(a, p), reduce_mod(b, p), p);
        int dg = static_cast<int>(gp.size()) - 1;
        if (dg == 0) return {mpz_class(1)};  // coprime over Q
        if (acc_deg != -1 && dg > acc_deg) continue;  // unlucky prime
        u64 lp = mpz_fdiv_ui(l.get_mpz_t(), static_cast<unsigned long>(p));
        for (auto& c : gp) c = mulm(c, lp, p);
        if (acc_deg == -1 || dg < acc_deg) {
            acc.assign(gp.size(), mpz_class(0));
            modulus = 1;
            acc_deg = dg;
        }
        // combine residues
        mpz_class pz(static_cast<unsigned long>(p));
        if (modulus == 1) {
            for (size_t i = 0; i < acc.size(); ++i) acc[i] = mpz_class(static_cast<unsigned long>(gp[i]));
            modulus = pz;
        } else {
            mpz_class minv;
            mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t());
            for (size_t i = 0; i < acc.size(); ++i) {
                mpz_class cur = acc[i] % pz;
                if (cur < 0) cur += pz;
                mpz_class delta = (mpz_class(static_cast<unsigned long>(gp[i])) - cur) * minv % pz;
                if (delta < 0) delta += pz;
                acc[i] += delta * modulus;
            }
            modulus *= pz;
        }
        // symmetric range and verification
        ZVec cand = acc;
        mpz_class half = modulus / 2;
        for (auto& c : cand)
            if (c > half) c -= modulus;
        while (!cand.empty() && cand.back() == 0) cand.pop_back();
        if (!cand.empty() && static_cast<int>(cand.size()) - 1 == acc_deg) {
            ZVec prim = cand;
            zstrip_content(prim);
            if (divides_exactly(prim, a) && divides_exactly(prim, b)) return prim;
        }
        if (++used > 24) break;  // give up on the modular route
    }
    return prs_gcd(a, b);
}

}  // namespace

QPoly QPoly::gcd(const QPoly& a, const QPoly& b) {
    if (a.is_zero() && b.is_zero()) return QPoly();
    ZVec u = to_primitive_int(a);
    ZVec v = to_primitive_int(b);
    if (u.empty()) std::swap(u, v);
    if (v.empty() || zdeg(u) == 0 || zdeg(v) == 0) {
        // constant involved (inputs are primitive, so the gcd is 1), or one side zero
        if (!v.empty()) return QPoly(1);
    } else {
        u = int_gcd(u, v);
    }
    if (u.back() < 0)
        for (auto& c : u) c = -c;
    std::vector<Rational> coeffs;
    coeffs.reserve(u.size());
    for (const auto& c : u) coeffs.emplace_back(c);
    return QPoly(std::move(coeffs));
}

std::string QPoly::text() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int i = 0; i <= degree(); ++i) {
        const Rational c = coeff(i);
        if (c.is_zero()) continue;
        Rational mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) out += "-";
            first = false;
        } else {
            out += c.sign() < 0 ? "-" : "+";
        }
        bool unit = mag.is_one();
        if (i == 0 || !unit) out += mag.text();
        if (i >= 1) {
            out += "q";
            if (i >= 2) out += "^" + std::to_string(i);
        }
    }
    return out;
}

namespace {

struct PolyLexer {
    std::string s;
    size_t pos = 0;
    explicit PolyLexer(std::string_view in) {
        for (char c : in)
            if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    }
    bool done() const { return pos >= s.size(); }
    char peek() const { return done() ? '\0' : s[pos]; }
    mpz_class integer() {
        size_t start = pos;
        while (!done() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw ParseError("expected integer in '" + s + "'");
        return mpz_class(s.substr(start, pos - start));
    }
};

}  // namespace

QPoly QPoly::parse(std::string_view text) {
    PolyLexer lx(text);
    if (lx.done()) throw ParseError("empty polynomial");
    QPoly acc;
    while (!lx.done()) {
        int sign = 1;
        while (lx.peek() == '+' || lx.peek() == '-') {
            if (lx.peek() == '-') sign = -sign;
            ++lx.pos;
        }
        Rational coeff(1);
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
            coeff = Rational(lx.integer());
            have_coeff = true;
            if (lx.peek() == '*') ++lx.pos;
        }
        int deg = 0;
        if (lx.peek() == 'q') {
            ++lx.pos;
            deg = 1;
            if (lx.peek() == '^') {
                ++lx.pos;
                deg = static_cast<int>(lx.integer().get_si());
            }
        } else if (!have_coeff) {
            throw ParseError("expected term in '" + std::string(text) + "'");
        }
        if (sign < 0) coeff = -coeff;
        acc = acc + QPoly::monomial(deg, coeff);
    }
    return acc;
}

}  // namespace umbral
