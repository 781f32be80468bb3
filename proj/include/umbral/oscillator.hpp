#pragma once

#include "umbral/sequences.hpp"

namespace umbral {

/// Linear operator given by its exact action on the coordinates of a basic
/// sequence basis {p_0, ..., p_n}; column j holds the image of p_j.
/// Raising operators consume one degree of budget: images that would leave
/// the window are dropped and must not be read (checks stay below the top).
template <ExactField K>
struct BasisOp {
    int size = 0;  // number of basis elements tracked
    std::vector<std::vector<K>> col;

    static BasisOp zero(int size) {
        return {size, std::vector<std::vector<K>>(static_cast<size_t>(size),
                                                  std::vector<K>(static_cast<size_t>(size), K(0)))};
    }
    static BasisOp identity(int size) {
        BasisOp b = zero(size);
        for (int j = 0; j < size; ++j) b.col[static_cast<size_t>(j)][static_cast<size_t>(j)] = K(1);
        return b;
    }

    std::vector<K> apply(const std::vector<K>& coords) const {
        std::vector<K> out(static_cast<size_t>(size), K(0));
        for (int j = 0; j < size; ++j) {
            if (coords[static_cast<size_t>(j)].is_zero()) continue;
            for (int i = 0; i < size; ++i)
                out[static_cast<size_t>(i)] +=
                    coords[static_cast<size_t>(j)] * col[static_cast<size_t>(j)][static_cast<size_t>(i)];
        }
        return out;
    }

    friend BasisOp compose(const BasisOp& a, const BasisOp& b) {  // a after b
        BasisOp r = zero(a.size);
        for (int j = 0; j < a.size; ++j) r.col[static_cast<size_t>(j)] = a.apply(b.col[static_cast<size_t>(j)]);
        return r;
    }
};

/// The operator dual to Q: the raising map x_Q p_n = p_{n+1} in the basic basis.
template <ExactField K>
BasisOp<K> dual_shift(const PolySeq<K>& seq) {
    int size = seq.n_max() + 1;
    BasisOp<K> b = BasisOp<K>::zero(size);
    for (int j = 0; j + 1 < size; ++j) b.col[static_cast<size_t>(j)][static_cast<size_t>(j + 1)] = K(1);
    return b;
}

/// Mutator weight w_n = ((n+1)_psi - 1)/n_psi. The n = 0 quotient is 0/0 by
/// the conventions; it is fixed to 1_psi - 1, and every commutation assertion
/// stays on indices where Q p_0 = 0 makes the choice irrelevant.
template <ExactField K>
K mutator_weight(const PsiSequence<K>& psi, int n) {
    K top = psi.number(n + 1) - K(1);
    return n == 0 ? top : top / psi.number(n);
}

/// Diagonal q-hat_{psi,Q} operator in the basic basis.
template <ExactField K>
BasisOp<K> q_mutator(const PsiSequence<K>& psi, const PolySeq<K>& seq) {
    int size = seq.n_max() + 1;
    BasisOp<K> b = BasisOp<K>::zero(size);
    for (int j = 0; j < size; ++j)
        b.col[static_cast<size_t>(j)][static_cast<size_t>(j)] = mutator_weight(psi, j);
    return b;
}

/// Lowering matrix of Q in its own basic basis: p_n -> n_psi p_{n-1}.
template <ExactField K>
BasisOp<K> lowering(const PsiSequence<K>& psi, const PolySeq<K>& seq) {
    int size = seq.n_max() + 1;
    BasisOp<K> b = BasisOp<K>::zero(size);
    for (int j = 1; j < size; ++j)
        b.col[static_cast<size_t>(j)][static_cast<size_t>(j - 1)] = psi.number(j);
    return b;
}

/// Deformed commutation relation [Q, x_Q]_{q-hat} = id, checked exactly on
/// p_0 ... p_{n_max - 1} (the top index consumes the raising budget).
template <ExactField K>
CheckResult commutation_check(const Indicator<K>& q, const PolySeq<K>& seq) {
    const auto& psi = *seq.psi;
    BasisOp<K> low = lowering(psi, seq);
    BasisOp<K> raise = dual_shift(seq);
    BasisOp<K> mut = q_mutator(psi, seq);
    BasisOp<K> lhs = compose(low, raise);
    BasisOp<K> rhs = compose(mut, compose(raise, low));
    for (int n = 0; n + 1 <= seq.n_max(); ++n) {
        for (int i = 0; i < lhs.size; ++i) {
            K v = lhs.col[static_cast<size_t>(n)][static_cast<size_t>(i)] -
                  rhs.col[static_cast<size_t>(n)][static_cast<size_t>(i)];
            K expected = i == n ? K(1) : K(0);
            if (!(v == expected))
                return CheckResult::fail("p_" + std::to_string(n) + " component " +
                                         std::to_string(i) + ": " + v.text());
        }
    }
    // cross-check on polynomials for one index: Q(x_Q p_n) - qhat(x_Q(Q p_n)) = p_n
    if (seq.n_max() >= 2) {
        int n = seq.n_max() - 1;
        Poly<K> direct = q.apply(seq.at(n + 1)) -
                         mutator_weight(psi, n) * (psi.number(n) * seq.at(n));
        if (direct != seq.at(n)) return CheckResult::fail("polynomial route disagrees");
    }
    return CheckResult::ok();
}

/// Dilation weights b_n solving b_n = b_{n-1} ((n+1)_psi - 1)/n_psi with the
/// printed convention b_0 = 0 and b_n the telescoping product for n > 0.
template <ExactField K>
std::vector<K> qplane_weights(const PsiSequence<K>& psi, int n_max) {
    std::vector<K> b(static_cast<size_t>(n_max) + 1, K(0));
    K acc(1);
    for (int n = 1; n <= n_max; ++n) {
        acc = acc * mutator_weight(psi, n);
        b[static_cast<size_t>(n)] = acc;
    }
    return b;
}

/// Per-degree outcome of the quantum-plane binomial identity.
template <ExactField K>
struct QPlaneReport {
    struct Entry {
        int n;
        bool equal;
        std::string lhs, rhs;
    };
    std::vector<Entry> entries;
    std::optional<int> first_violation;

    bool all_equal() const { return !first_violation.has_value(); }
};

/// Compare (A+B)^n [1] with sum_k binom_psi(n,k) A^k B^{n-k} [1] for
/// A = multiplication by x and B = y Q-hat(b), y symbolic. The dilation
/// fixes constants (weight 1 at n = 0), which is what the identification of
/// the shifted power with p_n(A + B)[1] requires; the printed b_0 = 0 is kept
/// only in qplane_weights.
template <ExactField K>
QPlaneReport<K> qplane_binomial_obstruction(const PsiSequence<K>& psi, int n_max) {
    std::vector<K> b = qplane_weights(psi, n_max);
    b[0] = K(1);
    DiagonalOp<K> dil{[&b](int n) {
        return n < static_cast<int>(b.size()) ? b[static_cast<size_t>(n)] : K(0);
    }};
    auto apply_a = [](const BiPoly<K>& v) {
        return v.map_x([](const Poly<K>& row) { return row.shifted_up(); });
    };
    auto apply_b = [&dil](const BiPoly<K>& v) {
        BiPoly<K> out;
        for (int j = 0; j <= v.y_degree(); ++j)
            out.add_row(j + 1, diagonal_apply(dil, v.row(j)));
        return out;
    };

    QPlaneReport<K> rep;
    for (int n = 0; n <= n_max; ++n) {
        BiPoly<K> lhs = BiPoly<K>::from_x(Poly<K>::one());
        for (int i = 0; i < n; ++i) lhs = apply_a(lhs) + apply_b(lhs);

        BiPoly<K> rhs;
        for (int k = 0; k <= n; ++k) {
            BiPoly<K> term = BiPoly<K>::from_x(Poly<K>::one());
            for (int i = 0; i < n - k; ++i) term = apply_b(term);
            for (int i = 0; i < k; ++i) term = apply_a(term);
            K c = psi.binomial(n, k);
            rhs = rhs + (BiPoly<K>::from_x(Poly<K>(c)) * term);
        }
        bool equal = lhs == rhs;
        rep.entries.push_back({n, equal, lhs.text(), rhs.text()});
        if (!equal && !rep.first_violation) rep.first_violation = n;
    }
    return rep;
}

/// The quantum-plane identification p_n(x +_psi y) = p_n(A + B)[1] evaluated
/// for a basic sequence; reported per degree (asserted only in the q case).
template <ExactField K>
QPlaneReport<K> qplane_identity_report(const PsiSequence<K>& psi, const PolySeq<K>& seq) {
    std::vector<K> b = qplane_weights(psi, seq.n_max());
    b[0] = K(1);
    DiagonalOp<K> dil{[&b](int n) {
        return n < static_cast<int>(b.size()) ? b[static_cast<size_t>(n)] : K(0);
    }};
    QPlaneReport<K> rep;
    for (int n = 0; n <= seq.n_max(); ++n) {
        BiPoly<K> lhs = translate_symbolic(psi, seq.at(n));
        // p_n(A + B)[1] by Horner on the operator argument
        const Poly<K>& p = seq.at(n);
        BiPoly<K> acc;
        for (int d = p.degree(); d >= 0; --d) {
            // acc = (A + B) acc + c_d
            BiPoly<K> next = acc.map_x([](const Poly<K>& row) { return row.shifted_up(); });
            for (int j = 0; j <= acc.y_degree(); ++j)
                next.add_row(j + 1, diagonal_apply(dil, acc.row(j)));
            next.add_row(0, Poly<K>(p.coeff(d)));
            acc = next;
        }
        bool equal = lhs == acc;
        rep.entries.push_back({n, equal, lhs.text(), acc.text()});
        if (!equal && !rep.first_violation) rep.first_violation = n;
    }
    return rep;
}

}  // namespace umbral
