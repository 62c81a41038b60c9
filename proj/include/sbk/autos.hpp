#pragma once

#include "sbk/bialgebra.hpp"
#include "sbk/linsolve.hpp"
#include "sbk/superalgebra.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace sbk {

/// Parameters (a, b, c, d; m) of the GL(2) (+) Z2 automorphism family of the
/// osp(2|2) basis. Requires k = ad - bc != 0; m = 1 composes with the V <-> W
/// swap S.
struct AutoParams {
    Rational a, b, c, d;
    int m = 0;

    Rational det() const { return a * d - b * c; }
};

/// Even invertible change of basis g~ = A g, block diagonal over the bosonic
/// and fermionic sectors.
struct BasisChange {
    RationalMatrix matrix;  // 8x8

    static BasisChange identity() { return {RationalMatrix::identity(8)}; }

    BasisChange then(const BasisChange& next) const {
        // first *this, then next: g~~ = next.matrix * this->matrix * g
        return {next.matrix * matrix};
    }
};

/// Builds the automorphism of the fixed (H, X+, X-, B | V+, V-, W+, W-)
/// basis from (a, b, c, d; m):
///   fermions: A_F = S^m . blockdiag(M, M/k),   M = [[a,b],[c,d]], k = det M
///   bosons:   H~  = ((ad+bc) H + ac X+ + bd X-) / k
///             X~+ = (2ab H + a^2 X+ + b^2 X-) / k
///             X~- = (2cd H + c^2 X+ + d^2 X-) / k
///             B~  = (-1)^m B
/// The H-row coefficient ad+bc is forced by the fermionic action through
/// {V~+, W~-} + {W~+, V~-} = 2 H~; the published table's ac+bc variant fails
/// the automorphism test (see build_automorphism_published_hrow).
inline BasisChange build_automorphism(const AutoParams& p) {
    Rational k = p.det();
    if (k == 0)
        throw std::invalid_argument("automorphism parameters require ad - bc != 0");
    RationalMatrix A(8, 8);
    Rational sign_b = p.m ? Rational(-1) : Rational(1);
    // bosonic block (H, X+, X-, B)
    A(0, 0) = (p.a * p.d + p.b * p.c) / k;
    A(0, 1) = p.a * p.c / k;
    A(0, 2) = p.b * p.d / k;
    A(1, 0) = 2 * p.a * p.b / k;
    A(1, 1) = p.a * p.a / k;
    A(1, 2) = p.b * p.b / k;
    A(2, 0) = 2 * p.c * p.d / k;
    A(2, 1) = p.c * p.c / k;
    A(2, 2) = p.d * p.d / k;
    A(3, 3) = sign_b;
    // fermionic block (V+, V-, W+, W-)
    const Rational m2[2][2] = {{p.a, p.b}, {p.c, p.d}};
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            std::size_t vrow = 4 + i, wrow = 6 + i;
            if (p.m) std::swap(vrow, wrow);
            A(vrow, 4 + j) = m2[i][j];
            A(wrow, 6 + j) = m2[i][j] / k;
        }
    return {A};
}

/// The same construction with the published H-row entry (ac+bc)/k, kept so
/// the automorphism test can demonstrate that variant is wrong.
inline BasisChange build_automorphism_published_hrow(const AutoParams& p) {
    BasisChange bc = build_automorphism(p);
    bc.matrix(0, 0) = (p.a * p.c + p.b * p.c) / p.det();
    return bc;
}

/// True iff the transformed basis satisfies the identical structure
/// constants: sum_pq A_i^p A_j^q c_pq^s = c_ij^t A_t^s for all (i, j, s).
/// Throws on a singular matrix; parity-mixing matrices simply fail.
inline bool is_automorphism(const SuperAlgebra& alg, const RationalMatrix& A) {
    const std::size_t n = alg.dim();
    if (A.rows() != n || A.cols() != n)
        throw std::invalid_argument("is_automorphism: dimension mismatch");
    if (!A.inverse()) throw std::invalid_argument("is_automorphism: singular matrix");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t s = 0; s < n; ++s) {
                Rational lhs(0);
                for (std::size_t p = 0; p < n; ++p) {
                    if (A(i, p) == 0) continue;
                    for (std::size_t q = 0; q < n; ++q) {
                        if (A(j, q) == 0) continue;
                        const Rational& c = alg.c(p, q, s);
                        if (c != 0) lhs += A(i, p) * A(j, q) * c;
                    }
                }
                Rational rhs(0);
                for (std::size_t t = 0; t < n; ++t)
                    if (alg.c(i, j, t) != 0) rhs += alg.c(i, j, t) * A(t, s);
                if (lhs != rhs) return false;
            }
    return true;
}

inline bool is_automorphism(const SuperAlgebra& alg, const BasisChange& A) {
    return is_automorphism(alg, A.matrix);
}

/// Action of the basis change g~ = A g on r-matrix coefficients:
/// r~ = (A^-1)^T r (A^-1). Preserves evenness and graded antisymmetry and
/// satisfies act(A1, act(A2, r)) = act(A1 A2, r).
inline RMatrix act_on_r(const BasisChange& A, const RMatrix& r) {
    auto inv = A.matrix.inverse();
    if (!inv) throw std::invalid_argument("act_on_r: singular basis change");
    return RMatrix(inv->transposed() * r.matrix() * *inv);
}

/// Pushforward of a cobracket along g~ = A g: the tensor of the same map
/// expressed in the new basis.
inline Cobracket pushforward(const BasisChange& A, const Cobracket& f) {
    const std::size_t n = f.dim();
    auto inv_opt = A.matrix.inverse();
    if (!inv_opt) throw std::invalid_argument("pushforward: singular basis change");
    const RationalMatrix& inv = *inv_opt;
    RationalMatrix inv_t = inv.transposed();
    Cobracket out(n);
    for (std::size_t i = 0; i < n; ++i) {
        RationalMatrix fi(n, n);
        for (std::size_t p = 0; p < n; ++p) {
            if (A.matrix(i, p) == 0) continue;
            for (std::size_t q = 0; q < n; ++q)
                for (std::size_t r = 0; r < n; ++r)
                    if (f.at(p, q, r) != 0) fi(q, r) += A.matrix(i, p) * f.at(p, q, r);
        }
        RationalMatrix res = inv_t * fi * inv;
        for (std::size_t q = 0; q < n; ++q)
            for (std::size_t r = 0; r < n; ++r) out.at(i, q, r) = res(q, r);
    }
    return out;
}

/// Outcome of the fermionic normalization steps: the swap that orders the
/// V/W block ranks followed by a congruence diagonalizing r_WW.
struct NormalStepResult {
    RMatrix r;
    BasisChange change = BasisChange::identity();
    bool swapped = false;
    /// False when full normalization to diag(1, 0)-style entries would need
    /// an irrational square root; the rational congruence result is still
    /// returned ("normalizable up to square factor").
    bool exact = true;
    std::string note;
};

namespace detail {

/// Congruence N^T M N while keeping the result symmetric; M is 2x2 symmetric.
inline RationalMatrix congruence(const RationalMatrix& n, const RationalMatrix& m) {
    return n.transposed() * m * n;
}

/// Automorphism whose action performs the congruence r_WW -> N^T r_WW N:
/// the V-sector matrix M with adj(M) = ... is M = adj(N), since act_on_r
/// transforms the W block by k^2 (M^-1)^T r_WW M^-1 and k M^-1 = adj(M).
inline AutoParams wblock_congruence_params(const RationalMatrix& n) {
    return AutoParams{n(1, 1), -n(0, 1), -n(1, 0), n(0, 0), 0};
}

}  // namespace detail

/// Step 1-2 of the canonicalization strategy: swap V <-> W when rank(r_VV) <
/// rank(r_WW), then diagonalize the symmetric block r_WW by congruence,
/// scaling diagonal entries to 1 where an exact rational square root exists.
inline NormalStepResult fermionic_normal_step(const SuperAlgebra& alg, const RMatrix& r) {
    NormalStepResult out;
    out.r = r;
    auto blocks = block_split(alg, r);  // validates the layout
    auto sub2 = [](const RationalMatrix& f, std::size_t row0, std::size_t col0) {
        RationalMatrix s(2, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) s(i, j) = f(row0 + i, col0 + j);
        return s;
    };
    auto rank2 = [](const RationalMatrix& m) { return rank(m); };

    RationalMatrix r_vv = sub2(blocks.fermionic, 0, 0);
    RationalMatrix r_ww = sub2(blocks.fermionic, 2, 2);
    if (rank2(r_vv) < rank2(r_ww)) {
        BasisChange s = build_automorphism({1, 0, 0, 1, 1});
        out.r = act_on_r(s, out.r);
        out.change = out.change.then(s);
        out.swapped = true;
        blocks = block_split(alg, out.r);
        r_ww = sub2(blocks.fermionic, 2, 2);
    }

    // diagonalize r_WW = [[alpha, beta], [beta, gamma]] by congruence
    const Rational alpha = r_ww(0, 0), beta = r_ww(0, 1), gamma = r_ww(1, 1);
    RationalMatrix n = RationalMatrix::identity(2);
    if (alpha == 0 && gamma == 0 && beta != 0) {
        n(0, 0) = 1; n(0, 1) = 1; n(1, 0) = 1; n(1, 1) = -1;  // -> diag(2b, -2b)
    } else if (alpha == 0 && gamma != 0) {
        n(0, 0) = 0; n(0, 1) = 1; n(1, 0) = 1; n(1, 1) = 0;   // move pivot first
    }
    RationalMatrix d = detail::congruence(n, r_ww);
    if (d(0, 0) != 0 && d(0, 1) != 0) {
        RationalMatrix shear = RationalMatrix::identity(2);
        shear(0, 1) = -d(0, 1) / d(0, 0);
        n = n * shear;
        d = detail::congruence(n, r_ww);
    }
    // scale diagonal entries that are exact rational squares down to 1
    for (std::size_t i = 0; i < 2; ++i) {
        if (d(i, i) == 0) continue;
        if (auto root = rational_sqrt(d(i, i))) {
            RationalMatrix scale = RationalMatrix::identity(2);
            scale(i, i) = 1 / *root;
            n = n * scale;
            d = detail::congruence(n, r_ww);
        } else {
            out.exact = false;
            out.note = "normalizable up to square factor";
        }
    }
    if (!(n == RationalMatrix::identity(2))) {
        BasisChange c = build_automorphism(detail::wblock_congruence_params(n));
        out.r = act_on_r(c, out.r);
        out.change = out.change.then(c);
    }
    return out;
}

}  // namespace sbk
