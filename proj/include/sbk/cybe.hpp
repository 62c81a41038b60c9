#pragma once

#include "sbk/bialgebra.hpp"
#include "sbk/superalgebra.hpp"

#include <cstddef>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace sbk {

/// Element of G (x) G (x) G by components t^ijk. Houses the Yang-Baxter
/// obstruction [[r, r]].
class Tensor3 {
public:
    Tensor3() = default;
    explicit Tensor3(std::size_t dim) : dim_(dim), t_(dim * dim * dim, Rational(0)) {}

    std::size_t dim() const { return dim_; }
    Rational& at(std::size_t i, std::size_t j, std::size_t k) { return t_[idx(i, j, k)]; }
    const Rational& at(std::size_t i, std::size_t j, std::size_t k) const {
        return t_[idx(i, j, k)];
    }
    bool is_zero() const {
        for (const auto& q : t_)
            if (q != 0) return false;
        return true;
    }
    /// Sparse (i, j, k, value) listing.
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rational>> entries() const {
        std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rational>> out;
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                for (std::size_t k = 0; k < dim_; ++k)
                    if (at(i, j, k) != 0) out.emplace_back(i, j, k, at(i, j, k));
        return out;
    }
    friend bool operator==(const Tensor3&, const Tensor3&) = default;

private:
    std::size_t idx(std::size_t i, std::size_t j, std::size_t k) const {
        if (i >= dim_ || j >= dim_ || k >= dim_)
            throw std::out_of_range("tensor index out of range");
        return (i * dim_ + j) * dim_ + k;
    }
    std::size_t dim_ = 0;
    std::vector<Rational> t_;
};

/// Graded Schouten square [[r, r]] = [r12, r13] + [r12, r23] + [r13, r23]:
///   [[r,r]]^ijk =   sum_{a,b} z(j,b) r^aj r^bk c_ab^i
///               +   sum_{a,b}        r^ia r^bk c_ab^j
///               +   sum_{a,b} z(a,j) r^ia r^jb c_ab^k
/// with Koszul signs for an even r. Vanishes exactly on solutions of the
/// classical Yang-Baxter equation.
inline Tensor3 schouten_square(const SuperAlgebra& alg, const RMatrix& r) {
    const std::size_t n = alg.dim();
    if (r.dim() != n) throw std::invalid_argument("schouten_square: dimension mismatch");
    Tensor3 t(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            bool has_c = false;
            for (std::size_t k = 0; k < n; ++k)
                if (alg.c(a, b, k) != 0) { has_c = true; break; }
            if (!has_c) continue;
            for (std::size_t k = 0; k < n; ++k) {
                const Rational& cab = alg.c(a, b, k);
                if (cab == 0) continue;
                for (std::size_t p = 0; p < n; ++p)
                    for (std::size_t q = 0; q < n; ++q) {
                        // term 1: i = k, j = p, k' = q with r^{a p} r^{b q}
                        if (r.at(a, p) != 0 && r.at(b, q) != 0)
                            t.at(k, p, q) += alg.z_sign(p, b) * r.at(a, p) * r.at(b, q) * cab;
                        // term 2: j = k: r^{p a} r^{b q}
                        if (r.at(p, a) != 0 && r.at(b, q) != 0)
                            t.at(p, k, q) += r.at(p, a) * r.at(b, q) * cab;
                        // term 3: k' = k: r^{p a} r^{q b}
                        if (r.at(p, a) != 0 && r.at(q, b) != 0)
                            t.at(p, q, k) += alg.z_sign(a, q) * r.at(p, a) * r.at(q, b) * cab;
                    }
            }
        }
    return t;
}

/// True iff [[r, r]] = 0 identically.
inline bool is_cybe(const SuperAlgebra& alg, const RMatrix& r) {
    return schouten_square(alg, r).is_zero();
}

/// Graded adjoint action of generator x on a rank-3 tensor: acting in slot s
/// carries the Koszul sign z(x, combined parity of the slots before s).
inline Tensor3 ad_action(const SuperAlgebra& alg, std::size_t x, const Tensor3& t) {
    const std::size_t n = alg.dim();
    Tensor3 out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Rational s(0);
                for (std::size_t a = 0; a < n; ++a) {
                    if (alg.c(x, a, i) != 0) s += alg.c(x, a, i) * t.at(a, j, k);
                    if (alg.c(x, a, j) != 0)
                        s += alg.z_sign(x, i) * alg.c(x, a, j) * t.at(i, a, k);
                    if (alg.c(x, a, k) != 0)
                        s += alg.z_sign(x, i) * alg.z_sign(x, j) * alg.c(x, a, k) *
                             t.at(i, j, a);
                }
                out.at(i, j, k) = s;
            }
    return out;
}

/// True iff the graded adjoint action of every generator annihilates T.
/// For T = [[r, r]] this is exactly the condition for the coboundary
/// cobracket of r to satisfy co-Jacobi (the modified CYBE).
inline bool ad_invariant(const SuperAlgebra& alg, const Tensor3& t) {
    if (t.dim() != alg.dim()) throw std::invalid_argument("ad_invariant: dimension mismatch");
    for (std::size_t x = 0; x < alg.dim(); ++x)
        if (!ad_action(alg, x, t).is_zero()) return false;
    return true;
}

}  // namespace sbk
