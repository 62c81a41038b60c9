#pragma once

#include "sbk/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace sbk {

/// Z2 grade of a generator: 0 = boson, 1 = fermion.
struct Parity {
    int value = 0;
    constexpr Parity() = default;
    constexpr explicit Parity(int v) : value(v) {
        if (v != 0 && v != 1) throw std::invalid_argument("parity must be 0 or 1");
    }
    constexpr bool odd() const { return value == 1; }
    friend constexpr bool operator==(Parity, Parity) = default;
};

/// Finite-dimensional Lie superalgebra given by structure constants
/// c_ij^k over exact rationals, in a fixed generator basis.
class SuperAlgebra {
public:
    SuperAlgebra(std::string name, std::vector<std::string> generator_names,
                 std::vector<Parity> parities)
        : name_(std::move(name)),
          names_(std::move(generator_names)),
          parities_(std::move(parities)),
          dim_(names_.size()),
          c_(dim_ * dim_ * dim_, Rational(0)) {
        if (names_.empty() || names_.size() != parities_.size())
            throw std::invalid_argument("generator names/parities mismatch");
    }

    const std::string& name() const { return name_; }
    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& generator_names() const { return names_; }
    Parity parity(std::size_t i) const { return parities_.at(i); }

    std::size_t index_of(const std::string& gen) const {
        auto it = std::find(names_.begin(), names_.end(), gen);
        if (it == names_.end())
            throw std::invalid_argument("unknown generator '" + gen + "'");
        return static_cast<std::size_t>(it - names_.begin());
    }

    const Rational& c(std::size_t i, std::size_t j, std::size_t k) const {
        return c_[idx(i, j, k)];
    }

    /// Sets [g_i, g_j] ∋ coef·g_k and the graded-antisymmetric partner entry.
    void set_bracket_term(std::size_t i, std::size_t j, std::size_t k, const Rational& coef) {
        c_[idx(i, j, k)] = coef;
        if (i != j) c_[idx(j, i, k)] = -z_sign(j, i) * coef;
    }

    /// Koszul sign (-1)^(grade(g_i)*grade(g_j)).
    Rational z_sign(std::size_t i, std::size_t j) const {
        check_index(i);
        check_index(j);
        return (parities_[i].odd() && parities_[j].odd()) ? Rational(-1) : Rational(1);
    }

    bool parities_grouped_even_first() const {
        bool seen_odd = false;
        for (auto p : parities_) {
            if (p.odd()) seen_odd = true;
            else if (seen_odd) return false;
        }
        return true;
    }

private:
    std::size_t idx(std::size_t i, std::size_t j, std::size_t k) const {
        check_index(i);
        check_index(j);
        check_index(k);
        return (i * dim_ + j) * dim_ + k;
    }
    void check_index(std::size_t i) const {
        if (i >= dim_) throw std::out_of_range("generator index out of range");
    }

    std::string name_;
    std::vector<std::string> names_;
    std::vector<Parity> parities_;
    std::size_t dim_;
    std::vector<Rational> c_;
};

/// Element of the algebra in generator coordinates.
struct AlgebraElement {
    std::vector<Rational> coeffs;

    static AlgebraElement zero(const SuperAlgebra& alg) {
        return AlgebraElement{std::vector<Rational>(alg.dim(), Rational(0))};
    }
    static AlgebraElement generator(const SuperAlgebra& alg, std::size_t i) {
        auto e = zero(alg);
        e.coeffs.at(i) = 1;
        return e;
    }
    bool is_zero() const {
        return std::all_of(coeffs.begin(), coeffs.end(),
                           [](const Rational& q) { return q == 0; });
    }
    friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
};

/// Bilinear extension of [g_i, g_j] = c_ij^k g_k.
inline AlgebraElement bracket(const SuperAlgebra& alg, const AlgebraElement& x,
                              const AlgebraElement& y) {
    const std::size_t n = alg.dim();
    if (x.coeffs.size() != n || y.coeffs.size() != n)
        throw std::invalid_argument("element dimension mismatch");
    auto out = AlgebraElement::zero(alg);
    for (std::size_t i = 0; i < n; ++i) {
        if (x.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y.coeffs[j] == 0) continue;
            for (std::size_t k = 0; k < n; ++k) {
                const Rational& cijk = alg.c(i, j, k);
                if (cijk != 0) out.coeffs[k] += x.coeffs[i] * y.coeffs[j] * cijk;
            }
        }
    }
    return out;
}

/// Index tuple of a violated axiom instance.
struct Violation {
    std::string axiom;
    std::vector<std::size_t> indices;
    Rational residual;
};

struct AxiomReport {
    bool parity_closure = true;
    bool graded_antisymmetry = true;
    bool graded_jacobi = true;
    std::vector<Violation> violations;

    bool pass() const { return parity_closure && graded_antisymmetry && graded_jacobi; }
};

/// Exact verification of parity closure, graded antisymmetry and the graded
/// Jacobi identity. Residuals are exact rationals; a pass means identically
/// zero, not small.
inline AxiomReport verify_lie_superalgebra(const SuperAlgebra& alg,
                                           std::size_t max_violations = 32) {
    AxiomReport rep;
    const std::size_t n = alg.dim();
    auto add = [&](const char* ax, std::initializer_list<std::size_t> ix, Rational res) {
        if (rep.violations.size() < max_violations)
            rep.violations.push_back({ax, std::vector<std::size_t>(ix), std::move(res)});
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Rational& cijk = alg.c(i, j, k);
                if (cijk != 0 &&
                    (alg.parity(i).value + alg.parity(j).value) % 2 != alg.parity(k).value) {
                    rep.parity_closure = false;
                    add("parity-closure", {i, j, k}, cijk);
                }
                Rational anti = cijk + alg.z_sign(i, j) * alg.c(j, i, k);
                if (anti != 0) {
                    rep.graded_antisymmetry = false;
                    add("graded-antisymmetry", {i, j, k}, anti);
                }
            }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l)
                for (std::size_t m = 0; m < n; ++m) {
                    Rational s(0);
                    for (std::size_t k = 0; k < n; ++k) {
                        s += alg.c(i, j, k) * alg.c(k, l, m) * alg.z_sign(i, l);
                        s += alg.c(j, l, k) * alg.c(k, i, m) * alg.z_sign(j, i);
                        s += alg.c(l, i, k) * alg.c(k, j, m) * alg.z_sign(l, j);
                    }
                    if (s != 0) {
                        rep.graded_jacobi = false;
                        add("graded-jacobi", {i, j, l, m}, s);
                    }
                }
    return rep;
}

}  // namespace sbk
