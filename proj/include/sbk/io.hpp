#pragma once

#include "sbk/bialgebra.hpp"
#include "sbk/cocycle_space.hpp"
#include "sbk/cybe.hpp"
#include "sbk/superalgebra.hpp"

#include <json.hpp>

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace sbk {

using json = nlohmann::json;

struct LoadError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline Rational parse_rational_or_throw(const std::string& s, const std::string& where) {
    auto q = parse_rational(s);
    if (!q) throw LoadError("bad rational '" + s + "' in " + where);
    return *q;
}

}  // namespace detail

/// Algebra definition format:
/// { "name": ..., "generators": [{"name", "parity"}...],
///   "brackets": [{"left", "right", "result": {gen: "p/q"}}...] }
/// Omitted brackets default to zero. Entries violating parity closure or
/// graded antisymmetry are rejected with the offending triple named.
inline SuperAlgebra algebra_from_json(const json& j) {
    if (!j.contains("name") || !j.contains("generators"))
        throw LoadError("algebra file needs 'name' and 'generators'");
    std::vector<std::string> names;
    std::vector<Parity> parities;
    for (const auto& g : j.at("generators")) {
        names.push_back(g.at("name").get<std::string>());
        int p = g.at("parity").get<int>();
        if (p != 0 && p != 1) throw LoadError("parity must be 0 or 1");
        parities.push_back(Parity(p));
    }
    SuperAlgebra alg(j.at("name").get<std::string>(), names, parities);
    struct Entry { std::size_t i, j, k; Rational v; bool given; };
    std::vector<std::vector<bool>> given(alg.dim(), std::vector<bool>(alg.dim(), false));
    for (const auto& b : j.value("brackets", json::array())) {
        std::size_t li = alg.index_of(b.at("left").get<std::string>());
        std::size_t ri = alg.index_of(b.at("right").get<std::string>());
        std::vector<Rational> result(alg.dim(), Rational(0));
        for (const auto& [gen, val] : b.at("result").items()) {
            std::size_t k = alg.index_of(gen);
            result[k] = detail::parse_rational_or_throw(val.get<std::string>(),
                                                        "bracket result");
        }
        for (std::size_t k = 0; k < alg.dim(); ++k) {
            if (result[k] == 0) continue;
            if ((alg.parity(li).value + alg.parity(ri).value) % 2 != alg.parity(k).value)
                throw LoadError("parity closure violated at (" + names[li] + ", " +
                                names[ri] + ", " + names[k] + ")");
            if (given[ri][li]) {
                Rational expect = -alg.z_sign(li, ri) * alg.c(ri, li, k);
                if (result[k] != expect)
                    throw LoadError("graded antisymmetry violated at (" + names[li] +
                                    ", " + names[ri] + ", " + names[k] + ")");
            }
        }
        if (li == ri && alg.z_sign(li, li) > 0)
            for (std::size_t k = 0; k < alg.dim(); ++k)
                if (result[k] != 0)
                    throw LoadError("graded antisymmetry violated at (" + names[li] +
                                    ", " + names[ri] + ", " + names[k] + ")");
        for (std::size_t k = 0; k < alg.dim(); ++k)
            if (result[k] != 0 || !given[li][ri]) alg.set_bracket_term(li, ri, k, result[k]);
        given[li][ri] = true;
        if (li != ri) given[ri][li] = true;
    }
    return alg;
}

inline SuperAlgebra load_algebra(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw LoadError("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw LoadError("malformed JSON in '" + path + "': " + e.what());
    }
    return algebra_from_json(j);
}

inline json algebra_to_json(const SuperAlgebra& alg) {
    json j;
    j["name"] = alg.name();
    j["generators"] = json::array();
    for (std::size_t i = 0; i < alg.dim(); ++i)
        j["generators"].push_back(
            {{"name", alg.generator_names()[i]}, {"parity", alg.parity(i).value}});
    j["brackets"] = json::array();
    for (std::size_t i = 0; i < alg.dim(); ++i)
        for (std::size_t k2 = i; k2 < alg.dim(); ++k2) {
            json result = json::object();
            for (std::size_t k = 0; k < alg.dim(); ++k)
                if (alg.c(i, k2, k) != 0)
                    result[alg.generator_names()[k]] = to_string(alg.c(i, k2, k));
            if (!result.empty())
                j["brackets"].push_back({{"left", alg.generator_names()[i]},
                                         {"right", alg.generator_names()[k2]},
                                         {"result", result}});
        }
    return j;
}

struct RMatrixLoadResult {
    RMatrix r;
    bool adjusted = false;  // even projection / antisymmetrization changed entries
};

/// R-matrix format: { "algebra": ..., "entries": [{"row","col","value"}...] }
/// with generators referenced by name. The raw entries are even-projected and
/// hat-antisymmetrized; adjusted reports whether that changed anything.
inline RMatrixLoadResult rmatrix_from_json(const SuperAlgebra& alg, const json& j) {
    RationalMatrix raw(alg.dim(), alg.dim());
    for (const auto& e : j.at("entries")) {
        std::size_t i = alg.index_of(e.at("row").get<std::string>());
        std::size_t k = alg.index_of(e.at("col").get<std::string>());
        raw(i, k) = detail::parse_rational_or_throw(e.at("value").get<std::string>(),
                                                    "r-matrix entry");
    }
    RMatrixLoadResult out{hat_antisymmetrize(alg, raw), false};
    out.adjusted = !(out.r.matrix() == raw);
    return out;
}

inline json rmatrix_to_json(const SuperAlgebra& alg, const RMatrix& r) {
    json j;
    j["algebra"] = alg.name();
    j["entries"] = json::array();
    for (std::size_t i = 0; i < alg.dim(); ++i)
        for (std::size_t k = 0; k < alg.dim(); ++k)
            if (r.at(i, k) != 0)
                j["entries"].push_back({{"row", alg.generator_names()[i]},
                                        {"col", alg.generator_names()[k]},
                                        {"value", to_string(r.at(i, k))}});
    return j;
}

inline json cobracket_to_json(const SuperAlgebra& alg, const Cobracket& f) {
    json entries = json::array();
    for (std::size_t i = 0; i < alg.dim(); ++i)
        for (std::size_t a = 0; a < alg.dim(); ++a)
            for (std::size_t b = 0; b < alg.dim(); ++b)
                if (f.at(i, a, b) != 0)
                    entries.push_back({{"i", alg.generator_names()[i]},
                                       {"j", alg.generator_names()[a]},
                                       {"k", alg.generator_names()[b]},
                                       {"value", to_string(f.at(i, a, b))}});
    return entries;
}

inline json cocycle_space_to_json(const SuperAlgebra& alg, const CocycleSpace& space) {
    json j;
    j["algebra"] = alg.name();
    j["dimension"] = space.dimension;
    j["basis"] = json::array();
    for (const auto& f : space.basis) j["basis"].push_back(cobracket_to_json(alg, f));
    return j;
}

inline json tensor3_to_json(const SuperAlgebra& alg, const Tensor3& t) {
    json entries = json::array();
    for (const auto& [i, j2, k, v] : t.entries())
        entries.push_back({{"i", alg.generator_names()[i]},
                           {"j", alg.generator_names()[j2]},
                           {"k", alg.generator_names()[k]},
                           {"value", to_string(v)}});
    return entries;
}

}  // namespace sbk
