#pragma once

#include "sbk/bialgebra.hpp"
#include "sbk/linsolve.hpp"
#include "sbk/superalgebra.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

namespace sbk {

/// Independent entries (i, j, k) of a cobracket tensor after parity closure
/// and graded antisymmetry: lexicographic in (i, j, k) with j < k for pairs
/// of equal-parity bosons or mixed parity and j <= k for odd-odd pairs.
inline std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> cobracket_unknowns(
    const SuperAlgebra& alg) {
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> unknowns;
    const std::size_t n = alg.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = j; k < n; ++k) {
                if ((alg.parity(j).value + alg.parity(k).value) % 2 != alg.parity(i).value)
                    continue;
                if (j == k && !alg.parity(j).odd()) continue;  // forced zero
                unknowns.emplace_back(i, j, k);
            }
    return unknowns;
}

inline Cobracket cobracket_from_coordinates(
    const SuperAlgebra& alg,
    const std::vector<std::tuple<std::size_t, std::size_t, std::size_t>>& unknowns,
    const std::vector<Rational>& coords) {
    Cobracket f(alg.dim());
    for (std::size_t t = 0; t < unknowns.size(); ++t) {
        auto [i, j, k] = unknowns[t];
        f.at(i, j, k) += coords[t];
        if (j != k) f.at(i, k, j) += -alg.z_sign(j, k) * coords[t];
    }
    return f;
}

inline std::vector<Rational> cobracket_coordinates(
    const SuperAlgebra& alg,
    const std::vector<std::tuple<std::size_t, std::size_t, std::size_t>>& unknowns,
    const Cobracket& f) {
    std::vector<Rational> coords;
    coords.reserve(unknowns.size());
    for (auto [i, j, k] : unknowns) coords.push_back(f.at(i, j, k));
    return coords;
}

/// Space of cobrackets compatible with the bracket: solutions of the cocycle
/// condition within the tensors admitted by parity closure and antisymmetry.
struct CocycleSpace {
    std::size_t dimension = 0;
    std::vector<Cobracket> basis;
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> unknowns;
};

namespace detail {

/// Assembles the cocycle condition as linear rows over the independent
/// cobracket entries. Rows are deduplicated up to sign.
inline std::vector<std::vector<Rational>> cocycle_rows(
    const SuperAlgebra& alg,
    const std::vector<std::tuple<std::size_t, std::size_t, std::size_t>>& unknowns) {
    const std::size_t n = alg.dim();
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> index;
    for (std::size_t t = 0; t < unknowns.size(); ++t) index[unknowns[t]] = t;

    auto add_coeff = [&](std::vector<Rational>& row, std::size_t i, std::size_t j,
                         std::size_t k, const Rational& val) {
        if (val == 0) return;
        if ((alg.parity(j).value + alg.parity(k).value) % 2 != alg.parity(i).value) return;
        if (j <= k) {
            if (j == k && !alg.parity(j).odd()) return;
            row[index.at({i, j, k})] += val;
        } else {
            row[index.at({i, k, j})] += -alg.z_sign(j, k) * val;
        }
    };

    std::set<std::vector<Rational>> seen;
    std::vector<std::vector<Rational>> rows;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l)
                for (std::size_t m = 0; m < n; ++m) {
                    std::vector<Rational> row(unknowns.size(), Rational(0));
                    for (std::size_t k = 0; k < n; ++k) {
                        add_coeff(row, k, l, m, -alg.c(i, j, k));
                        add_coeff(row, i, l, k, alg.c(k, j, m));
                        add_coeff(row, i, k, m, alg.c(k, j, l) * alg.z_sign(m, j));
                        add_coeff(row, j, k, m, alg.c(i, k, l));
                        add_coeff(row, j, l, k, alg.c(i, k, m) * alg.z_sign(i, l));
                    }
                    bool nonzero = false;
                    for (const auto& q : row)
                        if (q != 0) { nonzero = true; break; }
                    if (!nonzero) continue;
                    std::vector<Rational> neg(row.size());
                    for (std::size_t t = 0; t < row.size(); ++t) neg[t] = -row[t];
                    if (seen.count(row) || seen.count(neg)) continue;
                    seen.insert(row);
                    rows.push_back(std::move(row));
                }
    return rows;
}

}  // namespace detail

/// Solves the cocycle condition exactly; every basis member satisfies the
/// cobracket axioms and the compatibility identity by construction (and is
/// re-verified before being returned).
inline CocycleSpace cocycle_space(const SuperAlgebra& alg) {
    CocycleSpace space;
    space.unknowns = cobracket_unknowns(alg);
    auto rows = detail::cocycle_rows(alg, space.unknowns);
    RationalMatrix m(rows.size(), space.unknowns.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    for (const auto& vec : nullspace(m)) {
        Cobracket f = cobracket_from_coordinates(alg, space.unknowns, vec);
        if (!verify_cocycle(alg, f, 1).pass)
            throw std::logic_error("cocycle basis member fails the compatibility identity");
        space.basis.push_back(std::move(f));
    }
    space.dimension = space.basis.size();
    return space;
}

/// Independent entries (i, j) of an even graded-antisymmetric r-matrix:
/// equal-parity pairs with i < j, plus odd diagonal entries.
inline std::vector<std::pair<std::size_t, std::size_t>> rmatrix_unknowns(
    const SuperAlgebra& alg) {
    std::vector<std::pair<std::size_t, std::size_t>> unknowns;
    for (std::size_t i = 0; i < alg.dim(); ++i)
        for (std::size_t j = i; j < alg.dim(); ++j) {
            if (alg.parity(i) != alg.parity(j)) continue;
            if (i == j && !alg.parity(i).odd()) continue;
            unknowns.emplace_back(i, j);
        }
    return unknowns;
}

inline RMatrix rmatrix_from_coordinates(
    const SuperAlgebra& alg, const std::vector<std::pair<std::size_t, std::size_t>>& unknowns,
    const std::vector<Rational>& coords) {
    RMatrix r(alg.dim());
    for (std::size_t t = 0; t < unknowns.size(); ++t) {
        auto [i, j] = unknowns[t];
        r.at(i, j) += coords[t];
        if (i != j) r.at(j, i) += -alg.z_sign(i, j) * coords[t];
    }
    return r;
}

struct CoboundaryResult {
    bool coboundary = false;
    RMatrix r;  // valid iff coboundary
};

/// Solves f = coboundary_delta(r) for an even graded-antisymmetric r.
/// Returns "not coboundary" when the linear system is inconsistent; on
/// success the round trip coboundary_delta(result) == f is exact.
inline CoboundaryResult coboundary_solve(const SuperAlgebra& alg, const Cobracket& f) {
    const auto r_unknowns = rmatrix_unknowns(alg);
    const auto f_entries = cobracket_unknowns(alg);
    RationalMatrix m(f_entries.size(), r_unknowns.size());
    for (std::size_t t = 0; t < r_unknowns.size(); ++t) {
        std::vector<Rational> unit(r_unknowns.size(), Rational(0));
        unit[t] = 1;
        Cobracket col = coboundary_delta(alg, rmatrix_from_coordinates(alg, r_unknowns, unit));
        for (std::size_t s = 0; s < f_entries.size(); ++s) {
            auto [i, j, k] = f_entries[s];
            m(s, t) = col.at(i, j, k);
        }
    }
    std::vector<Rational> rhs;
    rhs.reserve(f_entries.size());
    for (auto [i, j, k] : f_entries) rhs.push_back(f.at(i, j, k));
    auto sol = solve_linear(m, rhs);
    CoboundaryResult out;
    if (!sol.consistent) return out;
    out.coboundary = true;
    out.r = rmatrix_from_coordinates(alg, r_unknowns, sol.solution);
    if (!(coboundary_delta(alg, out.r) == f))
        throw std::logic_error("coboundary_solve round trip failed");
    return out;
}

}  // namespace sbk
