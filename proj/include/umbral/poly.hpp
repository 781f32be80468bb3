#pragma once

#include <functional>
#include <string>
#include <vector>

#include "umbral/psi.hpp"

namespace umbral {

/// Dense univariate polynomial over the field K in the formal variable x.
/// Canonical: ascending coefficients, no trailing zeros, zero = empty list.
template <ExactField K>
class Poly {
public:
    Poly() = default;
    explicit Poly(const K& constant) {
        if (!constant.is_zero()) c_.push_back(constant);
    }
    explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(K(1)); }
    static Poly x() { return monomial(1); }
    static Poly monomial(int deg, const K& c = K(1)) {
        Poly p;
        if (c.is_zero()) return p;
        p.c_.assign(static_cast<size_t>(deg) + 1, K(0));
        p.c_.back() = c;
        return p;
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    K coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return K(0);
        return c_[static_cast<size_t>(i)];
    }
    K at0() const { return coeff(0); }
    const K& lc() const { return c_.back(); }

    K eval(const K& x0) const {
        K acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x0 + *it;
        return acc;
    }

    /// Multiplication by x^k.
    Poly shifted_up(int k = 1) const {
        if (is_zero()) return Poly();
        Poly r;
        r.c_.assign(static_cast<size_t>(k), K(0));
        r.c_.insert(r.c_.end(), c_.begin(), c_.end());
        return r;
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), K(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        if (a.is_zero() || b.is_zero()) return r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, K(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }
    friend Poly operator*(const K& s, const Poly& p) {
        Poly r;
        if (s.is_zero()) return r;
        r.c_ = p.c_;
        for (auto& c : r.c_) c = s * c;
        return r;
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }

    std::string text(const char* var = "x") const {
        if (is_zero()) return "0";
        std::string out;
        bool first = true;
        for (int i = 0; i <= degree(); ++i) {
            K c = coeff(i);
            if (c.is_zero()) continue;
            if (!first) out += " + ";
            first = false;
            std::string cs = c.text();
            bool needs_parens = cs.find_first_of("+-/") != std::string::npos;
            if (i == 0) {
                out += needs_parens && cs.front() != '-' ? "(" + cs + ")" : cs;
                continue;
            }
            if (c.is_one()) {
                // bare power
            } else {
                out += needs_parens ? "(" + cs + ")" : cs;
                out += "*";
            }
            out += var;
            if (i >= 2) out += "^" + std::to_string(i);
        }
        return out;
    }

private:
    std::vector<K> c_;
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
};

/// Bivariate polynomial in (x, y) stored as y-power rows of x-polynomials;
/// used for the exact two-variable identity checks.
template <ExactField K>
class BiPoly {
public:
    BiPoly() = default;

    static BiPoly from_x(const Poly<K>& p) {
        BiPoly b;
        if (!p.is_zero()) b.rows_.push_back(p);
        return b;
    }
    static BiPoly from_y(const Poly<K>& p) {
        BiPoly b;
        for (int j = 0; j <= p.degree(); ++j) b.rows_.push_back(Poly<K>(p.coeff(j)));
        b.trim();
        return b;
    }
    /// px(x) * py(y).
    static BiPoly outer(const Poly<K>& px, const Poly<K>& py) {
        BiPoly b;
        for (int j = 0; j <= py.degree(); ++j) b.rows_.push_back(py.coeff(j) * px);
        b.trim();
        return b;
    }

    int y_degree() const { return static_cast<int>(rows_.size()) - 1; }
    bool is_zero() const { return rows_.empty(); }
    Poly<K> row(int j) const {
        if (j < 0 || j >= static_cast<int>(rows_.size())) return Poly<K>();
        return rows_[static_cast<size_t>(j)];
    }
    K coeff(int i, int j) const { return row(j).coeff(i); }

    void add_row(int j, const Poly<K>& p) {
        if (j >= static_cast<int>(rows_.size())) rows_.resize(static_cast<size_t>(j) + 1);
        rows_[static_cast<size_t>(j)] += p;
        trim();
    }

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
        BiPoly r;
        r.rows_.resize(std::max(a.rows_.size(), b.rows_.size()));
        for (size_t j = 0; j < a.rows_.size(); ++j) r.rows_[j] += a.rows_[j];
        for (size_t j = 0; j < b.rows_.size(); ++j) r.rows_[j] += b.rows_[j];
        r.trim();
        return r;
    }
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b) {
        BiPoly nb = b;
        for (auto& r : nb.rows_) r = -r;
        return a + nb;
    }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly r;
        if (a.is_zero() || b.is_zero()) return r;
        r.rows_.resize(a.rows_.size() + b.rows_.size() - 1);
        for (size_t i = 0; i < a.rows_.size(); ++i)
            for (size_t j = 0; j < b.rows_.size(); ++j) r.rows_[i + j] += a.rows_[i] * b.rows_[j];
        r.trim();
        return r;
    }
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.rows_ == b.rows_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    /// Apply a linear operator in the x variable to every y-row.
    BiPoly map_x(const std::function<Poly<K>(const Poly<K>&)>& op) const {
        BiPoly r;
        r.rows_.reserve(rows_.size());
        for (const auto& p : rows_) r.rows_.push_back(op(p));
        r.trim();
        return r;
    }

    /// Substitute a field value for y.
    Poly<K> eval_y(const K& y0) const {
        Poly<K> acc;
        K pw(1);
        for (size_t j = 0; j < rows_.size(); ++j) {
            acc += pw * rows_[j];
            pw = pw * y0;
        }
        return acc;
    }

    /// First monomial (ascending in y, then x) where the two differ; empty if equal.
    static std::string first_difference(const BiPoly& a, const BiPoly& b) {
        int ymax = std::max(a.y_degree(), b.y_degree());
        for (int j = 0; j <= ymax; ++j) {
            int xmax = std::max(a.row(j).degree(), b.row(j).degree());
            for (int i = 0; i <= xmax; ++i) {
                K l = a.coeff(i, j), r = b.coeff(i, j);
                if (!(l == r))
                    return "x^" + std::to_string(i) + " y^" + std::to_string(j) + ": " + l.text() +
                           " vs " + r.text();
            }
        }
        return {};
    }

    std::string text() const {
        if (is_zero()) return "0";
        std::string out;
        bool first = true;
        for (size_t j = 0; j < rows_.size(); ++j) {
            if (rows_[j].is_zero()) continue;
            if (!first) out += " + ";
            first = false;
            out += "(" + rows_[j].text() + ")";
            if (j >= 1) {
                out += "*y";
                if (j >= 2) out += "^" + std::to_string(j);
            }
        }
        return out;
    }

private:
    std::vector<Poly<K>> rows_;  // rows_[j] = coefficient of y^j
    void trim() {
        while (!rows_.empty() && rows_.back().is_zero()) rows_.pop_back();
    }
};

/// Operator acting diagonally on the monomial basis: x^n -> weight(n) x^n.
/// Hosts the dilation-type operators, which are generally not shift invariant.
template <ExactField K>
struct DiagonalOp {
    std::function<K(int)> weight;
};

template <ExactField K>
Poly<K> diagonal_apply(const DiagonalOp<K>& d, const Poly<K>& p) {
    std::vector<K> c;
    c.reserve(static_cast<size_t>(p.degree()) + 1);
    for (int n = 0; n <= p.degree(); ++n) c.push_back(d.weight(n) * p.coeff(n));
    return Poly<K>(std::move(c));
}

/// psi-derivative: linear extension of x^n -> n_psi x^{n-1}.
template <ExactField K>
Poly<K> psi_derivative(const PsiSequence<K>& psi, const Poly<K>& p) {
    std::vector<K> c;
    for (int n = 1; n <= p.degree(); ++n) c.push_back(psi.number(n) * p.coeff(n));
    return Poly<K>(std::move(c));
}

/// x-hat_psi: linear extension of x^n -> ((n+1)/(n+1)_psi) x^{n+1}.
template <ExactField K>
Poly<K> x_hat_psi(const PsiSequence<K>& psi, const Poly<K>& p) {
    if (p.is_zero()) return Poly<K>();
    std::vector<K> c(1, K(0));
    for (int n = 0; n <= p.degree(); ++n) c.push_back(K(n + 1) / psi.number(n + 1) * p.coeff(n));
    return Poly<K>(std::move(c));
}

/// Left inverse of x_hat_psi: x^n -> (n_psi/n) x^{n-1}, defined on p with p(0) = 0.
template <ExactField K>
Poly<K> x_hat_psi_inv(const PsiSequence<K>& psi, const Poly<K>& p) {
    if (!p.at0().is_zero()) throw NotInRange("x_hat_psi_inv needs zero constant term");
    std::vector<K> c;
    for (int n = 1; n <= p.degree(); ++n) c.push_back(psi.number(n) / K(n) * p.coeff(n));
    return Poly<K>(std::move(c));
}

/// The psi-shifted power (x +_psi a)^n = sum_k binom_psi(n,k) a^k x^{n-k}.
/// Not multiplicative in n unless psi is classical.
template <ExactField K>
Poly<K> psi_shifted_power(const PsiSequence<K>& psi, const K& a, int n) {
    std::vector<K> c(static_cast<size_t>(n) + 1, K(0));
    K ak(1);
    for (int k = 0; k <= n; ++k) {
        c[static_cast<size_t>(n - k)] = psi.binomial(n, k) * ak;
        ak = ak * a;
    }
    return Poly<K>(std::move(c));
}

/// Generalized translation E^a(partial_psi) p = sum_k (a^k/k_psi!) partial_psi^k p.
/// Computed by the finite series action; there is no substitution semantics.
template <ExactField K>
Poly<K> translate(const PsiSequence<K>& psi, const K& a, const Poly<K>& p) {
    Poly<K> acc = p;
    Poly<K> dk = p;
    K ak(1);
    for (int k = 1; k <= p.degree(); ++k) {
        dk = psi_derivative(psi, dk);
        ak = ak * a;
        acc += ak / psi.factorial(k) * dk;
    }
    return acc;
}

/// Expansion of p(x +_psi y) with symbolic y: sum_k (y^k/k_psi!) partial_psi^k p(x).
template <ExactField K>
BiPoly<K> translate_symbolic(const PsiSequence<K>& psi, const Poly<K>& p) {
    BiPoly<K> acc;
    Poly<K> dk = p;
    for (int k = 0; k <= p.degree(); ++k) {
        if (k > 0) dk = psi_derivative(psi, dk);
        acc.add_row(k, K(1) / psi.factorial(k) * dk);
    }
    return acc;
}

}  // namespace umbral
