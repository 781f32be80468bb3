#include "umbral/scalar.hpp"

#include <atomic>

namespace umbral {

namespace {
std::atomic<long> g_max_degree{0};

void note_degree(int d) {
    long cur = g_max_degree.load(std::memory_order_relaxed);
    while (d > cur && !g_max_degree.compare_exchange_weak(cur, d, std::memory_order_relaxed)) {
    }
}
}  // namespace

long Scalar::max_degree_seen() { return g_max_degree.load(std::memory_order_relaxed); }
void Scalar::reset_degree_stat() { g_max_degree.store(0, std::memory_order_relaxed); }

Scalar::Scalar(const Rational& r)
    : num_(Rational(r.num())), den_(Rational(r.den())) {}

Scalar::Scalar(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero();
    normalize();
}

void Scalar::normalize() {
    if (num_.is_zero()) {
        den_ = QPoly(1);
        return;
    }
    if (num_.degree() > 0 && den_.degree() > 0) {
        QPoly g = QPoly::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.divided_exactly_by(g);
            den_ = den_.divided_exactly_by(g);
        }
    }
    // Scale so both sides are integer with coprime contents.
    Rational ratio = num_.content() / den_.content();  // positive
    num_ = num_.primitive() * Rational(ratio.num());
    den_ = den_.primitive() * Rational(ratio.den());
    if (den_.lc().sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    note_degree(std::max(num_.degree(), den_.degree()));
}

Rational Scalar::eval(const Rational& q0) const {
    Rational d = den_.eval(q0);
    if (d.is_zero()) throw PoleAtPoint(q0.text());
    return num_.eval(q0) / d;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    return Scalar(den_, num_);
}

Scalar Scalar::make_reduced(QPoly num, QPoly den) {
    Scalar r;
    if (num.is_zero()) return r;
    Rational ratio = num.content() / den.content();
    r.num_ = num.primitive() * Rational(ratio.num());
    r.den_ = den.primitive() * Rational(ratio.den());
    if (r.den_.lc().sign() < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    note_degree(std::max(r.num_.degree(), r.den_.degree()));
    return r;
}

// Reduced addition of canonical fractions: any common factor of the raw sum
// and the raw denominator divides g = gcd of the input denominators.
Scalar Scalar::add_impl(const Scalar& sa, const Scalar& sb, bool sub) {
    const QPoly &an = sa.num_, &ad = sa.den_, &bn = sb.num_, &bd = sb.den_;
    QPoly g = QPoly::gcd(ad, bd);
    QPoly bd_red = g.is_one() ? bd : bd.divided_exactly_by(g);
    QPoly ad_red = g.is_one() ? ad : ad.divided_exactly_by(g);
    QPoly t = sub ? an * bd_red - bn * ad_red : an * bd_red + bn * ad_red;
    if (t.is_zero()) return Scalar();
    if (g.degree() > 0 && t.degree() > 0) {
        QPoly h = QPoly::gcd(t, g);
        if (h.degree() > 0)
            return Scalar::make_reduced(t.divided_exactly_by(h), ad_red * bd.divided_exactly_by(h));
    }
    return Scalar::make_reduced(t, ad_red * bd);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.den_.is_one() && b.den_.is_one()) {
        Scalar r;
        r.num_ = a.num_ + b.num_;
        note_degree(r.num_.degree());
        return r;  // integer polys stay canonical over denominator 1
    }
    return Scalar::add_impl(a, b, false);
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    if (a.den_.is_one() && b.den_.is_one()) {
        Scalar r;
        r.num_ = a.num_ - b.num_;
        note_degree(r.num_.degree());
        return r;
    }
    return Scalar::add_impl(a, b, true);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return Scalar();
    if (a.den_.is_one() && b.den_.is_one()) {
        Scalar r;
        r.num_ = a.num_ * b.num_;
        note_degree(r.num_.degree());
        return r;
    }
    // Cross-reduce before multiplying to keep gcd inputs small.
    QPoly an = a.num_, bd = b.den_, bn = b.num_, ad = a.den_;
    if (an.degree() > 0 && bd.degree() > 0) {
        QPoly g = QPoly::gcd(an, bd);
        if (g.degree() > 0) {
            an = an.divided_exactly_by(g);
            bd = bd.divided_exactly_by(g);
        }
    }
    if (bn.degree() > 0 && ad.degree() > 0) {
        QPoly g = QPoly::gcd(bn, ad);
        if (g.degree() > 0) {
            bn = bn.divided_exactly_by(g);
            ad = ad.divided_exactly_by(g);
        }
    }
    return Scalar::make_reduced(an * bn, ad * bd);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw DivisionByZero();
    return a * b.inverse();
}

std::string Scalar::text() const {
    auto multi_term = [](const QPoly& p) {
        int terms = 0;
        for (int i = 0; i <= p.degree(); ++i)
            if (!p.coeff(i).is_zero()) ++terms;
        return terms > 1;
    };
    if (den_.is_one()) return num_.text();
    std::string n = num_.text();
    if (multi_term(num_)) n = "(" + n + ")";
    std::string d = den_.text();
    if (multi_term(den_)) d = "(" + d + ")";
    return n + "/" + d;
}

Scalar Scalar::parse(std::string_view text) {
    // Split on the single top-level '/', honoring parentheses.
    int depth = 0;
    size_t slash = std::string_view::npos;
    for (size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '(') ++depth;
        else if (c == ')') --depth;
        else if (c == '/' && depth == 0) {
            if (slash != std::string_view::npos)
                throw ParseError("multiple '/' in scalar '" + std::string(text) + "'");
            slash = i;
        }
    }
    if (depth != 0) throw ParseError("unbalanced parentheses in '" + std::string(text) + "'");

    auto strip = [](std::string_view sv) -> std::string_view {
        while (!sv.empty() && std::isspace(static_cast<unsigned char>(sv.front()))) sv.remove_prefix(1);
        while (!sv.empty() && std::isspace(static_cast<unsigned char>(sv.back()))) sv.remove_suffix(1);
        if (sv.size() >= 2 && sv.front() == '(' && sv.back() == ')') {
            int d = 0;
            bool wraps = true;
            for (size_t i = 0; i < sv.size(); ++i) {
                if (sv[i] == '(') ++d;
                else if (sv[i] == ')') {
                    --d;
                    if (d == 0 && i + 1 != sv.size()) wraps = false;
                }
            }
            if (wraps) {
                sv.remove_prefix(1);
                sv.remove_suffix(1);
            }
        }
        return sv;
    };

    if (slash == std::string_view::npos) return Scalar(QPoly::parse(strip(text)));
    QPoly num = QPoly::parse(strip(text.substr(0, slash)));
    QPoly den = QPoly::parse(strip(text.substr(slash + 1)));
    return Scalar(num, den);
}

}  // namespace umbral
