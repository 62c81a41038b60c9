#pragma once

#include "sbk/bialgebra.hpp"
#include "sbk/expr.hpp"
#include "sbk/superalgebra.hpp"
#include "sbk/witness.hpp"

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sbk {

enum class ParamKind { continuous, binary };

struct TemplateParam {
    std::string name;
    ParamKind kind = ParamKind::continuous;
};

/// coeff * (left ^ right) with a ^ b = a(x)b - z(a,b) b(x)a.
struct WedgeTerm {
    std::string coeff;
    std::string left, right;
};

/// Expected Yang-Baxter status of a template family over its admissible
/// parameter range.
enum class CybeExpectation { always, iff_x_zero, computed };

/// A parametrized family of r-matrices, entered either as the two printed
/// 4x4 blocks (raw cases) or as a wedge combination (canonical list).
class RMatrixTemplate {
public:
    std::string id;
    std::string algebra;
    std::vector<TemplateParam> params;
    /// True when entries are rational functions of the parameters (raw
    /// cases); false for polynomial wedge combinations of degree <= 1 per
    /// parameter, where a {0,1,2} grid is a complete identity test.
    bool rational_function = false;
    std::vector<std::string> exclusions;  // denominators that must not vanish
    CybeExpectation cybe = CybeExpectation::computed;
    std::string note;

    // exactly one representation is populated
    std::array<std::array<std::string, 4>, 4> block_b{}, block_f{};
    bool has_blocks = false;
    std::vector<WedgeTerm> wedges;

    /// True if every exclusion expression is nonzero at the assignment.
    bool admissible(const ParamMap& values) const {
        for (const auto& e : exclusions)
            if (eval_expr(e, values) == 0) return false;
        return true;
    }

    RMatrix evaluate(const SuperAlgebra& alg, const ParamMap& values) const {
        for (const auto& p : params)
            if (!values.count(p.name))
                throw std::invalid_argument("template '" + id + "': missing parameter '" +
                                            p.name + "'");
        if (!admissible(values))
            throw ExcludedPoint("template '" + id + "': parameters hit an exclusion");
        if (has_blocks) {
            if (alg.dim() != 8)
                throw std::invalid_argument("block template needs the 8-dim layout");
            RMatrix r(8);
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j) {
                    r.at(i, j) = eval_expr(block_b[i][j], values);
                    r.at(i + 4, j + 4) = eval_expr(block_f[i][j], values);
                }
            return r;
        }
        RMatrix r(alg.dim());
        for (const auto& w : wedges) {
            Rational c = eval_expr(w.coeff, values);
            if (c != 0) r.add_wedge(alg, alg.index_of(w.left), alg.index_of(w.right), c);
        }
        return r;
    }

    /// Complete verification grid: {0,1,2} per continuous parameter and
    /// {0,1} per binary one. For rational-function templates callers should
    /// sample instead (grid points may hit exclusions).
    std::vector<ParamMap> grid() const {
        std::vector<ParamMap> points{ParamMap{}};
        for (const auto& p : params) {
            std::vector<ParamMap> next;
            const int hi = p.kind == ParamKind::binary ? 1 : 2;
            for (const auto& base : points)
                for (int v = 0; v <= hi; ++v) {
                    ParamMap m = base;
                    m[p.name] = v;
                    next.push_back(std::move(m));
                }
            points = std::move(next);
        }
        return points;
    }
};

class Catalog {
public:
    static const Catalog& instance();

    const SuperAlgebra& algebra(const std::string& name) const {
        if (name == "osp22") return *osp22_;
        if (name == "osp12_u1" || name == "osp12u1") return *osp12u1_;
        throw std::invalid_argument("unknown algebra '" + name + "'");
    }

    bool has_template(const std::string& id) const {
        return templates_.count(resolve(id)) != 0;
    }
    const RMatrixTemplate& r_template(const std::string& id) const {
        auto it = templates_.find(resolve(id));
        if (it == templates_.end())
            throw std::invalid_argument("unknown r-matrix template '" + id + "'");
        return it->second;
    }
    std::vector<std::string> template_ids() const {
        std::vector<std::string> out;
        for (const auto& [k, v] : templates_) out.push_back(k);
        return out;
    }
    /// The nonequivalent-list entries plus their variant forms, in catalog
    /// order (used by the verification grids).
    const std::vector<std::string>& canonical_ids() const { return canonical_ids_; }
    const std::vector<std::string>& raw_case_ids() const { return raw_ids_; }
    const std::vector<std::string>& osp12u1_ids() const { return o_ids_; }
    const std::map<std::string, std::string>& aliases() const { return aliases_; }

    const std::vector<EquivalenceWitness>& witness_list() const { return witnesses_; }
    const EquivalenceWitness& witness(const std::string& id) const {
        for (const auto& w : witnesses_)
            if (w.id == id) return w;
        throw std::invalid_argument("unknown witness '" + id + "'");
    }

private:
    Catalog();
    std::string resolve(const std::string& id) const {
        auto it = aliases_.find(id);
        return it == aliases_.end() ? id : it->second;
    }
    void add(RMatrixTemplate t) { templates_.emplace(t.id, std::move(t)); }

    std::unique_ptr<SuperAlgebra> osp22_, osp12u1_;
    std::map<std::string, RMatrixTemplate> templates_;
    std::map<std::string, std::string> aliases_;
    std::vector<std::string> canonical_ids_, raw_ids_, o_ids_;
    std::vector<EquivalenceWitness> witnesses_;
};

namespace detail {

inline std::unique_ptr<SuperAlgebra> make_osp22() {
    auto alg = std::make_unique<SuperAlgebra>(
        "osp22",
        std::vector<std::string>{"H", "X+", "X-", "B", "V+", "V-", "W+", "W-"},
        std::vector<Parity>{Parity(0), Parity(0), Parity(0), Parity(0), Parity(1),
                            Parity(1), Parity(1), Parity(1)});
    const std::size_t H = 0, Xp = 1, Xm = 2, B = 3, Vp = 4, Vm = 5, Wp = 6, Wm = 7;
    const Rational half(1, 2);
    auto set = [&](std::size_t i, std::size_t j,
                   std::initializer_list<std::pair<std::size_t, Rational>> terms) {
        for (const auto& [k, v] : terms) alg->set_bracket_term(i, j, k, v);
    };
    set(H, Xp, {{Xp, 1}});
    set(H, Xm, {{Xm, -1}});
    set(Xp, Xm, {{H, -2}});
    set(H, Vp, {{Vp, half}});
    set(H, Vm, {{Vm, -half}});
    set(H, Wp, {{Wp, half}});
    set(H, Wm, {{Wm, -half}});
    set(B, Vp, {{Vp, half}});
    set(B, Vm, {{Vm, half}});
    set(B, Wp, {{Wp, -half}});
    set(B, Wm, {{Wm, -half}});
    set(Xp, Vm, {{Vp, -1}});
    set(Xm, Vp, {{Vm, 1}});
    set(Xp, Wm, {{Wp, -1}});
    set(Xm, Wp, {{Wm, 1}});
    set(Vp, Wm, {{H, 1}, {B, -1}});
    set(Wp, Vm, {{H, 1}, {B, 1}});
    set(Vp, Wp, {{Xp, 1}});
    set(Vm, Wm, {{Xm, 1}});
    return alg;
}

/// osp(1|2) (+) u(1) in the basis (H, X+, X-, Z, Q+, Q-) with
/// Q+- = (V+- + W+-)/2. All brackets among the non-central generators are
/// computed through the osp(2|2) embedding rather than entered by hand.
inline std::unique_ptr<SuperAlgebra> make_osp12u1(const SuperAlgebra& osp22) {
    auto alg = std::make_unique<SuperAlgebra>(
        "osp12_u1", std::vector<std::string>{"H", "X+", "X-", "Z", "Q+", "Q-"},
        std::vector<Parity>{Parity(0), Parity(0), Parity(0), Parity(0), Parity(1),
                            Parity(1)});
    const Rational half(1, 2);
    // images of the non-central generators inside osp22
    std::array<AlgebraElement, 6> image;
    for (auto& e : image) e = AlgebraElement::zero(osp22);
    image[0].coeffs[0] = 1;                                   // H
    image[1].coeffs[1] = 1;                                   // X+
    image[2].coeffs[2] = 1;                                   // X-
    image[4].coeffs[4] = half; image[4].coeffs[6] = half;     // Q+
    image[5].coeffs[5] = half; image[5].coeffs[7] = half;     // Q-
    const std::array<std::size_t, 5> span{0, 1, 2, 4, 5};
    // express a bracket value back in the embedded basis by exact solve
    RationalMatrix basis(8, 5);
    for (std::size_t t = 0; t < span.size(); ++t)
        for (std::size_t r = 0; r < 8; ++r) basis(r, t) = image[span[t]].coeffs[r];
    for (std::size_t i : span)
        for (std::size_t j : span) {
            AlgebraElement br = bracket(osp22, image[i], image[j]);
            auto sol = solve_linear(basis, br.coeffs);
            if (!sol.consistent)
                throw std::logic_error("osp12_u1 bracket leaves the embedded span");
            for (std::size_t t = 0; t < span.size(); ++t)
                if (sol.solution[t] != 0)
                    alg->set_bracket_term(i, j, span[t], sol.solution[t]);
        }
    return alg;  // Z (index 3) is central: all its structure constants stay 0
}

}  // namespace detail

inline Catalog::Catalog() {
    osp22_ = detail::make_osp22();
    osp12u1_ = detail::make_osp12u1(*osp22_);

    using P = TemplateParam;
    auto raw = [&](std::string id, std::vector<P> params,
                   std::array<std::array<std::string, 4>, 4> rB,
                   std::array<std::array<std::string, 4>, 4> rF,
                   std::vector<std::string> excl, std::string note = "") {
        RMatrixTemplate t;
        t.id = std::move(id);
        t.algebra = "osp22";
        t.params = std::move(params);
        t.rational_function = true;
        t.block_b = std::move(rB);
        t.block_f = std::move(rF);
        t.has_blocks = true;
        t.exclusions = std::move(excl);
        t.note = std::move(note);
        raw_ids_.push_back(t.id);
        add(std::move(t));
    };
    auto canon = [&](std::string id, std::string algebra, std::vector<P> params,
                     std::vector<WedgeTerm> wedges, CybeExpectation cybe,
                     std::string note = "") {
        RMatrixTemplate t;
        t.id = std::move(id);
        t.algebra = std::move(algebra);
        t.params = std::move(params);
        t.wedges = std::move(wedges);
        t.cybe = cybe;
        t.note = std::move(note);
        if (t.algebra == "osp22") canonical_ids_.push_back(t.id);
        else o_ids_.push_back(t.id);
        add(std::move(t));
    };

    // ----------------------------------------------------- raw cases 1..22
    raw("case1", {P{"J"}, P{"K"}, P{"L"}, P{"U"}},
        {{{"0", "J/2", "-2*K*L/J", "K+L"},
          {"-J/2", "0", "-(K+L)/2", "J/2"},
          {"2*K*L/J", "(K+L)/2", "0", "2*K*L/J"},
          {"-(K+L)", "-J/2", "-2*K*L/J", "0"}}},
        {{{"U*J/(2*L)", "U", "0", "(K-L)/2"},
          {"U", "2*U*L/J", "(-K+L)/2", "0"},
          {"0", "(-K+L)/2", "0", "0"},
          {"(K-L)/2", "0", "0", "0"}}},
        {"J", "L"});
    raw("case2", {P{"K"}, P{"L"}, P{"N"}},
        {{{"0", "0", "L*N/(2*(2*K+L))", "2*K+L"},
          {"0", "0", "-L/2", "0"},
          {"-L*N/(2*(2*K+L))", "L/2", "0", "-N/2"},
          {"-2*K-L", "0", "N/2", "0"}}},
        {{{"0", "0", "0", "-L/2"},
          {"0", "0", "L/2", "0"},
          {"0", "L/2", "0", "0"},
          {"-L/2", "0", "0", "0"}}},
        {"2*K+L"});
    raw("case3", {P{"Y"}, P{"K"}, P{"L"}},
        {{{"0", "Y", "L*(-2*K-L)/Y", "0"},
          {"-Y", "0", "-(K+L)", "0"},
          {"L*(2*K+L)/Y", "K+L", "0", "0"},
          {"0", "0", "0", "0"}}},
        {{{"0", "0", "0", "K"},
          {"0", "0", "-K", "0"},
          {"0", "-K", "0", "0"},
          {"K", "0", "0", "0"}}},
        {"Y"});
    raw("case4", {P{"J"}, P{"K"}, P{"L"}, P{"M"}},
        {{{"0", "J*L/M", "M*(K^2-L^2)/(J*L)", "M"},
          {"-J*L/M", "0", "-L", "J/2"},
          {"M*(-K^2+L^2)/(J*L)", "L", "0", "M^2*(-K^2+L^2)/(2*J*L^2)"},
          {"-M", "-J/2", "M^2*(K^2-L^2)/(2*J*L^2)", "0"}}},
        {{{"0", "0", "0", "K"},
          {"0", "0", "-K", "0"},
          {"0", "-K", "0", "0"},
          {"K", "0", "0", "0"}}},
        {"J", "L", "M"});
    raw("case5", {P{"N"}, P{"L"}, P{"B"}},
        {{{"0", "0", "N/2", "L"},
          {"0", "0", "-L/2", "0"},
          {"-N/2", "L/2", "0", "-N/2"},
          {"-L", "0", "N/2", "0"}}},
        {{{"0", "0", "0", "-L/2"},
          {"0", "B", "L/2", "0"},
          {"0", "L/2", "0", "0"},
          {"-L/2", "0", "0", "0"}}},
        {});
    raw("case6", {P{"Z"}, P{"M"}, P{"U"}},
        {{{"0", "0", "-2*Z", "0"},
          {"0", "0", "M", "0"},
          {"2*Z", "-M", "0", "0"},
          {"0", "0", "0", "0"}}},
        {{{"-M*U/Z", "U", "0", "0"},
          {"U", "-U*Z/M", "M", "-Z"},
          {"0", "M", "0", "0"},
          {"0", "-Z", "0", "-M*Z/U"}}},
        {"Z", "M", "U"});
    raw("case7", {P{"N"}, P{"M"}, P{"T"}},
        {{{"0", "0", "-N/2", "M"},
          {"0", "0", "M/2", "0"},
          {"N/2", "-M/2", "0", "-N/2"},
          {"-M", "0", "N/2", "0"}}},
        {{{"0", "0", "0", "-M/2"},
          {"0", "0", "M/2", "0"},
          {"0", "M/2", "0", "0"},
          {"-M/2", "0", "0", "T"}}},
        {});
    raw("case8", {P{"X"}, P{"Z"}, P{"S"}, P{"P"}, P{"C"}, P{"T"}},
        {{{"0", "-X", "-Z", "-S"},
          {"X", "0", "S/2", "-X"},
          {"Z", "-S/2", "0", "Z"},
          {"S", "X", "-Z", "0"}}},
        {{{"0", "0", "X", "S/2"},
          {"0", "0", "S/2", "-Z"},
          {"X", "S/2", "P", "C"},
          {"S/2", "-Z", "C", "T"}}},
        {});
    raw("case9", {P{"X"}, P{"M"}, P{"C"}},
        {{{"0", "-2*X", "0", "0"},
          {"2*X", "0", "M", "0"},
          {"0", "-M", "0", "0"},
          {"0", "0", "0", "0"}}},
        {{{"X*M/C", "0", "X", "0"},
          {"0", "0", "M", "0"},
          {"X", "M", "X*C/M", "C"},
          {"0", "0", "C", "M*C/X"}}},
        {"X", "M", "C"});
    raw("case10", {P{"X"}, P{"Z"}, P{"J"}},
        {{{"0", "-X", "-Z", "0"},
          {"X", "0", "0", "J/2"},
          {"Z", "0", "0", "-Z*J/(2*X)"},
          {"0", "-J/2", "Z*J/(2*X)", "0"}}},
        {{{"0", "0", "X", "0"},
          {"0", "0", "0", "-Z"},
          {"X", "0", "0", "0"},
          {"0", "-Z", "0", "0"}}},
        {"X"});
    raw("case10_xz0", {P{"J"}},
        {{{"0", "0", "0", "0"},
          {"0", "0", "0", "J/2"},
          {"0", "0", "0", "0"},
          {"0", "-J/2", "0", "0"}}},
        {{{"0", "0", "0", "0"},
          {"0", "0", "0", "0"},
          {"0", "0", "0", "0"},
          {"0", "0", "0", "0"}}},
        {}, "case 10 at X = Z = 0");
    raw("case12_ck0", {P{"N"}},
        {{{"0", "0", "-N/2", "0"},
          {"0", "0", "0", "0"},
          {"N/2", "0", "0", "-N/2"},
          {"0", "0", "N/2", "0"}}},
        {{{"0", "0", "0", "0"},
          {"0", "0", "0", "0"},
          {"0", "0", "0", "0"},
          {"0", "0", "0", "0"}}},
        {}, "case 12 at C = K = 0");
    raw("case11", {P{"Z"}, P{"K"}, P{"C"}},
        {{{"0", "0", "-2*Z", "0"},
          {"0", "0", "K", "0"},
          {"2*Z", "-K", "0", "0"},
          {"0", "0", "0", "0"}}},
        {{{"0", "0", "0", "K"},
          {"0", "-K*Z/C", "0", "-Z"},
          {"0", "0", "-K*C/Z", "C"},
          {"K", "-Z", "C", "-Z*C/K"}}},
        {"Z", "K", "C"});
    raw("case12", {P{"N"}, P{"K"}, P{"C"}},
        {{{"0", "0", "-N/2", "K"},
          {"0", "0", "K/2", "0"},
          {"N/2", "-K/2", "0", "-N/2"},
          {"-K", "0", "N/2", "0"}}},
        {{{"0", "0", "0", "K/2"},
          {"0", "0", "-K/2", "0"},
          {"0", "-K/2", "-2*K*C/N", "C"},
          {"K/2", "0", "C", "-N*C/(2*K)"}}},
        {"N", "K"});
    raw("case13", {P{"J"}, P{"M"}, P{"K"}, P{"C"}},
        {{{"0", "-J/2", "2*M*K/J", "M+K"},
          {"J/2", "0", "(M+K)/2", "J/2"},
          {"-2*M*K/J", "-(M+K)/2", "0", "2*M*K/J"},
          {"-(M+K)", "-J/2", "-2*M*K/J", "0"}}},
        {{{"0", "0", "0", "(-M+K)/2"},
          {"0", "0", "(M-K)/2", "0"},
          {"0", "(M-K)/2", "J*C/(2*M)", "C"},
          {"(-M+K)/2", "0", "C", "2*M*C/J"}}},
        {"J", "M"});
    // cases 14/15 carry sqrt(J) and sqrt(N); parametrized by p = sqrt(J),
    // q = sqrt(N) so all entries stay rational
    raw("case14", {P{"p"}, P{"q"}, P{"G"}},
        {{{"0", "G*p/q", "G*q/p", "0"},
          {"-G*p/q", "0", "0", "p^2/2"},
          {"-G*q/p", "0", "0", "-q^2/2"},
          {"0", "-p^2/2", "q^2/2", "0"}}},
        {{{"0", "0", "0", "G"},
          {"0", "0", "-G", "0"},
          {"0", "-G", "0", "0"},
          {"G", "0", "0", "0"}}},
        {"p", "q"}, "J = p^2, N = q^2");
    raw("case15", {P{"p"}, P{"q"}, P{"G"}},
        {{{"0", "-G*p/q", "-G*q/p", "0"},
          {"G*p/q", "0", "0", "p^2/2"},
          {"G*q/p", "0", "0", "-q^2/2"},
          {"0", "-p^2/2", "q^2/2", "0"}}},
        {{{"0", "0", "0", "G"},
          {"0", "0", "-G", "0"},
          {"0", "-G", "0", "0"},
          {"G", "0", "0", "0"}}},
        {"p", "q"}, "J = p^2, N = q^2");
    raw("case14_g0", {P{"J"}, P{"N"}},
        {{{"0", "0", "0", "0"},
          {"0", "0", "0", "J/2"},
          {"0", "0", "0", "-N/2"},
          {"0", "-J/2", "N/2", "0"}}},
        {{{"0", "0", "0", "0"},
          {"0", "0", "0", "0"},
          {"0", "0", "0", "0"},
          {"0", "0", "0", "0"}}},
        {}, "case 14 at G = 0");
    raw("case16", {P{"J"}, P{"K"}, P{"P"}},
        {{{"0", "-J/2", "0", "K"},
          {"J/2", "0", "K/2", "J/2"},
          {"0", "-K/2", "0", "0"},
          {"-K", "-J/2", "0", "0"}}},
        {{{"0", "0", "0", "K/2"},
          {"0", "0", "-K/2", "0"},
          {"0", "-K/2", "P", "0"},
          {"K/2", "0", "0", "0"}}},
        {});
    raw("case17", {P{"X"}, P{"U"}, P{"C"}, P{"K"}},
        {{{"0", "-2*X", "2*U*C/X", "0"},
          {"2*X", "0", "(U*C+K^2)/K", "0"},
          {"-2*U*C/X", "-(U*C+K^2)/K", "0", "0"},
          {"0", "0", "0", "0"}}},
        {{{"X*U/K", "U", "X", "K"},
          {"U", "U*K/X", "U*C/K", "U*C/X"},
          {"X", "U*C/K", "X*K/U", "C"},
          {"K", "U*C/X", "C", "U*C^2/(X*K)"}}},
        {"X", "U", "K"});
    raw("case18", {P{"N"}, P{"K"}, P{"U"}},
        {{{"0", "0", "N/2", "K"},
          {"0", "0", "-K/2", "0"},
          {"-N/2", "K/2", "0", "-N/2"},
          {"-K", "0", "N/2", "0"}}},
        {{{"-2*U*K/N", "U", "0", "K/2"},
          {"U", "-U*N/(2*K)", "-K/2", "0"},
          {"0", "-K/2", "0", "0"},
          {"K/2", "0", "0", "0"}}},
        {"N", "K"});
    raw("case19", {P{"J"}, P{"K"}, P{"F"}},
        {{{"0", "J/2", "0", "K"},
          {"-J/2", "0", "-K/2", "J/2"},
          {"0", "K/2", "0", "0"},
          {"-K", "-J/2", "0", "0"}}},
        {{{"F", "0", "0", "K/2"},
          {"0", "0", "-K/2", "0"},
          {"0", "-K/2", "0", "0"},
          {"K/2", "0", "0", "0"}}},
        {});
    raw("case20", {P{"M"}, P{"K"}, P{"N"}},
        {{{"0", "0", "N*(-M+K)/(2*(M+K))", "M+K"},
          {"0", "0", "(M-K)/2", "0"},
          {"N*(M-K)/(2*(M+K))", "(-M+K)/2", "0", "-N/2"},
          {"-(M+K)", "0", "N/2", "0"}}},
        {{{"0", "0", "0", "(-M+K)/2"},
          {"0", "0", "(M-K)/2", "0"},
          {"0", "(M-K)/2", "0", "0"},
          {"(-M+K)/2", "0", "0", "0"}}},
        {"M+K"});
    raw("case21", {P{"X"}, P{"Z"}, P{"K"}, P{"S"}},
        {{{"0", "-X", "-Z", "K-S"},
          {"X", "0", "(K+S)/2", "X*(K-S)/(K+S)"},
          {"Z", "-(K+S)/2", "0", "Z*(-K+S)/(K+S)"},
          {"-K+S", "X*(-K+S)/(K+S)", "Z*(K-S)/(K+S)", "0"}}},
        {{{"0", "0", "X", "(K+S)/2"},
          {"0", "0", "(K+S)/2", "-Z"},
          {"X", "(K+S)/2", "0", "0"},
          {"(K+S)/2", "-Z", "0", "0"}}},
        {"K+S"});
    raw("case22", {P{"X"}, P{"Z"}, P{"K"}, P{"F"}, P{"U"}, P{"B"}},
        {{{"0", "-X", "-Z", "K"},
          {"X", "0", "K/2", "X"},
          {"Z", "-K/2", "0", "-Z"},
          {"-K", "-X", "Z", "0"}}},
        {{{"F", "U", "X", "K/2"},
          {"U", "B", "K/2", "-Z"},
          {"X", "K/2", "0", "0"},
          {"K/2", "-Z", "0", "0"}}},
        {});

    // ------------------------------------------- canonical osp(2|2) list
    const auto always = CybeExpectation::always;
    const auto iffx = CybeExpectation::iff_x_zero;
    canon("b2", "osp22", {}, {{"1", "H", "X+"}}, always);
    canon("c0", "osp22", {P{"x"}}, {{"x", "H", "X+"}, {"1", "B", "X+"}}, always);
    canon("a2", "osp22", {P{"alpha", ParamKind::binary}, P{"beta", ParamKind::binary}},
          {{"alpha", "H", "X+"}, {"-alpha", "B", "X+"}, {"beta", "V+", "V+"}}, always);
    canon("h1", "osp22", {P{"x"}, P{"y"}},
          {{"x", "X+", "X-"}, {"x", "V+", "W-"}, {"-x", "V-", "W+"}, {"y", "H", "B"}},
          iffx);
    canon("f2", "osp22", {P{"x"}, P{"y"}},
          {{"x", "X+", "X-"}, {"x", "V+", "W-"}, {"x", "V-", "W+"}, {"y", "H", "B"}},
          iffx);
    canon("d1", "osp22", {P{"x"}},
          {{"x", "X+", "X-"}, {"x", "V+", "W-"}, {"x/2", "V-", "V-"}, {"x/2", "W+", "W+"}},
          iffx);
    canon("j2", "osp22", {},
          {{"-2", "H", "X+"}, {"1/2", "V+", "V+"}, {"1", "V+", "W+"}, {"1/2", "W+", "W+"}},
          always);
    canon("g", "osp22", {P{"x"}, P{"alpha", ParamKind::binary}},
          {{"2*x", "H", "B"}, {"x", "X+", "X-"}, {"x", "V+", "W-"}, {"-x", "V-", "W+"},
           {"alpha/2", "W+", "W+"}},
          iffx,
          "published form adds alpha/2 V+^V+, which is not a bialgebra for "
          "alpha = 1; the case-12 orbit fixes the extra term to alpha/2 W+^W+");
    canon("a1", "osp22", {P{"x"}, P{"alpha", ParamKind::binary}},
          {{"-2*x", "H", "B"}, {"x", "X+", "X-"}, {"-x", "V+", "W-"}, {"x", "V-", "W+"},
           {"alpha/2", "V+", "V+"}},
          iffx,
          "published form has +x V+^W- -x V-^W+, which is not a bialgebra for "
          "alpha = 1; the case-19 orbit fixes the signs used here");
    canon("e0", "osp22", {P{"x"}},
          {{"2*x", "H", "B"}, {"x", "X+", "X-"}, {"x", "V+", "W-"}, {"x", "V-", "W+"}},
          iffx);
    canon("e1", "osp22", {P{"x"}, P{"y"}},
          {{"2*x", "H", "B"}, {"x", "X+", "X-"}, {"x", "V+", "W-"}, {"x", "V-", "W+"},
           {"y", "V+", "V+"}, {"1", "V+", "V-"}, {"1/2", "V-", "V-"}},
          iffx);
    canon("e2", "osp22", {P{"x"}},
          {{"2*x", "H", "B"}, {"x", "X+", "X-"}, {"x", "V+", "W-"}, {"x", "V-", "W+"},
           {"1/2", "V+", "V+"}, {"1", "V+", "V-"}},
          iffx);
    canon("e3", "osp22", {P{"x"}},
          {{"2*x", "H", "B"}, {"x", "X+", "X-"}, {"x", "V+", "W-"}, {"x", "V-", "W+"},
           {"1/2", "V+", "V+"}, {"1/2", "V-", "V-"}},
          iffx);
    canon("e4", "osp22", {P{"x"}},
          {{"2*x", "H", "B"}, {"x", "X+", "X-"}, {"x", "V+", "W-"}, {"x", "V-", "W+"},
           {"1/2", "V+", "V+"}},
          iffx);
    canon("f1", "osp22", {P{"x"}},
          {{"x", "B", "X+"}, {"-1", "H", "X+"}, {"1", "V+", "W+"}}, always);
    canon("e5", "osp22", {},
          {{"-1", "B", "X+"}, {"-1", "H", "X+"}, {"1", "V+", "W+"}}, always);
    canon("e6", "osp22", {P{"y"}},
          {{"-1", "B", "X+"}, {"-1", "H", "X+"}, {"1", "V+", "W+"}, {"y/2", "V+", "V+"},
           {"1/2", "V-", "V-"}},
          always);
    canon("e7", "osp22", {},
          {{"-1", "B", "X+"}, {"-1", "H", "X+"}, {"1", "V+", "W+"}, {"1", "V+", "V-"}},
          always);
    canon("e8", "osp22", {},
          {{"-1", "B", "X+"}, {"-1", "H", "X+"}, {"1", "V+", "W+"}, {"1/2", "V+", "V+"}},
          always);
    canon("e9", "osp22", {}, {{"1", "V+", "V-"}}, always);
    canon("e10", "osp22", {}, {{"1/2", "V+", "V+"}}, always);
    // variant forms kept under their own ids
    canon("b1", "osp22", {P{"x"}},
          {{"x", "X+", "X-"}, {"-x", "V+", "W-"}, {"x", "V-", "W+"}}, iffx);
    canon("c1", "osp22", {P{"x"}, P{"y"}},
          {{"y", "H", "B"}, {"x", "X+", "X-"}, {"-x", "V+", "W-"}, {"x", "V-", "W+"}},
          iffx);
    canon("g1", "osp22", {P{"x"}},
          {{"2*x", "H", "B"}, {"x", "X+", "X-"}, {"x", "V+", "W-"}, {"-x", "V-", "W+"}},
          iffx);
    canon("g1.5", "osp22", {}, {{"1", "H", "X+"}, {"-1", "B", "X+"}}, always);
    canon("g2", "osp22", {P{"x"}},
          {{"2*x", "H", "B"}, {"x", "X+", "X-"}, {"x", "V+", "W-"}, {"-x", "V-", "W+"},
           {"1/2", "W+", "W+"}},
          iffx, "extra term corrected from 1/2 V+^V+ to 1/2 W+^W+ (see g)");
    canon("f0", "osp22", {}, {{"1", "B", "X+"}}, always);
    aliases_ = {{"i1", "c1"}, {"i2", "f0"}, {"j1", "d1"}, {"k1", "f2"}, {"k2", "f1"}};

    // ------------------------------------------------ osp(1|2) (+) u(1)
    canon("o1", "osp12_u1", {}, {{"1", "H", "X+"}}, always);
    canon("o2", "osp12_u1", {}, {{"1", "Z", "X+"}}, always);
    canon("o3", "osp12_u1", {}, {{"1", "H", "X+"}, {"1", "Z", "X+"}}, always);
    canon("o4", "osp12_u1", {}, {{"1", "H", "X+"}, {"-1", "Q+", "Q+"}}, always);
    canon("o5", "osp12_u1", {},
          {{"1", "H", "X+"}, {"-1", "Q+", "Q+"}, {"1", "Z", "X+"}}, always);
    canon("o6", "osp12_u1", {P{"x"}},
          {{"x", "X+", "X-"}, {"2*x", "Q+", "Q-"}}, iffx);
    canon("o7", "osp12_u1", {P{"x"}},
          {{"x", "X+", "X-"}, {"2*x", "Q+", "Q-"}, {"1", "H", "Z"}}, iffx);

    // ------------------------------------------------------- witnesses
    const WitnessStep S{"1", "0", "0", "1", 1};
    auto wit = [&](EquivalenceWitness w) { witnesses_.push_back(std::move(w)); };

    wit({"13->1", "case13", "case1", {"J", "M", "K", "C"}, {},
         {S}, {{"J", "-J"}, {"K", "-K"}, {"L", "-M"}, {"U", "C"}}, {},
         WitnessStatus::printed, "swap step as published; renaming derived"});
    wit({"8->22", "case8", "case22", {"X", "Z", "S", "P", "C", "T"}, {},
         {S}, {{"X", "X"}, {"Z", "Z"}, {"K", "S"}, {"F", "P"}, {"U", "C"}, {"B", "T"}},
         {}, WitnessStatus::printed, "swap step as published; renaming derived"});
    wit({"18->12", "case18", "case12", {"N", "K", "U"}, {},
         {S}, {{"N", "-N"}, {"K", "-K"}, {"C", "U"}}, {},
         WitnessStatus::printed, "swap step as published; renaming derived"});
    wit({"20->2", "case20", "case2", {"M", "K", "N"}, {},
         {S}, {{"K", "-K"}, {"L", "K-M"}, {"N", "-N"}}, {"M+K"},
         WitnessStatus::derived,
         "published claim 'differ only by the names of parameters' does not "
         "hold entrywise; a swap step plus renaming does"});
    wit({"15->14", "case15", "case14", {"p", "q", "G"}, {},
         {}, {{"p", "-p"}, {"q", "q"}, {"G", "G"}}, {},
         WitnessStatus::printed, "pure renaming: sign of sqrt(J) flips"});
    wit({"11->6", "case11", "case6", {"Z", "K", "C"}, {},
         {S}, {{"Z", "Z"}, {"M", "K"}, {"U", "C"}}, {},
         WitnessStatus::printed, "swap step as published; renaming derived"});
    wit({"5->19", "case5", "case19", {"N", "L", "B"}, {},
         {{"0", "1", "1", "0", 0}}, {{"J", "N"}, {"K", "-L"}, {"F", "B"}}, {},
         WitnessStatus::derived, "no step published for this case"});
    wit({"7->19", "case7", "case19", {"N", "M", "T"}, {},
         {{"0", "1", "1", "0", 1}}, {{"J", "-N"}, {"K", "M"}, {"F", "T"}}, {},
         WitnessStatus::derived, "no step published for this case"});
    wit({"16->19", "case16", "case19", {"J", "K", "P"}, {},
         {S}, {{"J", "-J"}, {"K", "-K"}, {"F", "P"}}, {},
         WitnessStatus::derived, "no step published for this case"});
    wit({"2->h1", "case2", "h1", {"K", "L", "N"}, {},
         {{"1", "N/(2*(2*K+L))", "0", "1", 0}},
         {{"x", "-L/2"}, {"y", "2*K+L"}}, {"2*K+L"}, WitnessStatus::printed, ""});
    wit({"3->b1", "case3", "b1", {"Y", "K", "L"}, {},
         {{"1", "-(2*K+L)/Y", "0", "1", 0}, {"0", "2*K/Y", "1", "1", 0}},
         {{"x", "-K"}}, {"K"},
         WitnessStatus::printed,
         "the published second step presumes the first lands on L = 0; it "
         "lands on L = -2K, which flips one sign in the step (d fixed to 1)"});
    wit({"3->b2", "case3", "b2", {"p", "L"}, {{"Y", "p^2"}, {"K", "0"}, {"L", "L"}},
         {{"1", "-L/p^2", "0", "1", 0}, {"1/p", "0", "0", "p", 0}}, {}, {},
         WitnessStatus::printed, "sqrt(Y) sampled exactly via Y = p^2"});
    wit({"4->c1", "case4", "c1", {"J", "K", "L", "M"}, {},
         {{"1", "-(L+K)*M/(J*L)", "0", "1", 0}, {"1", "0", "J*L/(2*K*M)", "1", 0}, S},
         {{"x", "K"}, {"y", "K*M/L"}}, {"K"},
         WitnessStatus::printed,
         "published steps land on the h1-form signs; a trailing swap reaches "
         "c1 as displayed"});
    wit({"6->d1", "case6", "d1", {"p", "U", "M"},
         {{"Z", "p^2*U"}, {"M", "M"}, {"U", "U"}},
         {{"-p*U/M", "p", "-1/p", "0", 0}}, {{"x", "-M"}}, {},
         WitnessStatus::printed, "sqrt(Z/U) sampled exactly via Z = p^2 U"});
    wit({"10->f0", "case10_xz0", "f0", {"J"}, {},
         {{"1", "0", "0", "-J/2", 0}}, {}, {},
         WitnessStatus::printed, "the published 'simple rescaling', made explicit"});
    wit({"10->f1", "case10", "f1", {"p", "J"}, {{"X", "p^2"}, {"Z", "0"}, {"J", "J"}},
         {{"1/p", "0", "0", "p", 0}}, {{"x", "-J/(2*p^2)"}}, {},
         WitnessStatus::printed,
         "published renaming x = -J/2 does not track the scaling; x = -J/(2X)"});
    wit({"10->f2", "case10", "f2", {"p", "q", "J"},
         {{"X", "p^2"}, {"Z", "q^2"}, {"J", "J"}},
         {{"1/p", "-q/2", "1/q", "p/2", 0}}, {{"x", "-p*q"}, {"y", "-J*q/p"}}, {},
         WitnessStatus::printed, "sqrt(X), sqrt(Z) sampled exactly"});
    wit({"12->g1", "case12", "g1", {"N", "K"}, {{"N", "N"}, {"K", "K"}, {"C", "0"}},
         {{"1", "N/(2*K)", "0", "1", 0}}, {{"x", "K/2"}}, {},
         WitnessStatus::printed, ""});
    wit({"12->g1.5", "case12_ck0", "g1.5", {"N"}, {},
         {{"0", "1", "1", "0", 1}, {"1", "0", "0", "-N/2", 0}}, {}, {},
         WitnessStatus::derived, "the published 'rescaling' made explicit"});
    wit({"12->g2 (published)", "case12", "g2", {}, {}, {}, {}, {},
         WitnessStatus::unverifiable,
         "published step matrix references a symbol Z that does not occur in "
         "this case's r-matrix"});
    wit({"12->g2", "case12", "g2", {"K", "C", "b0"},
         {{"N", "-2*K*b0^2/C"}, {"K", "K"}, {"C", "C"}},
         {{"1", "-b0^2/C", "0", "1", 0}, {"C/b0", "0", "0", "C/b0", 0}},
         {{"x", "K/2"}}, {}, WitnessStatus::derived,
         "replaces the unverifiable published step; sqrt(-NC/2K) sampled via b0"});
    wit({"14->i1", "case14", "i1", {"p", "q", "G"}, {},
         {{"1/2", "q/p", "-p/(2*q)", "1", 0}}, {{"x", "-G"}, {"y", "p*q"}}, {},
         WitnessStatus::printed, "sqrt(N/J) etc. sampled via J = p^2, N = q^2"});
    wit({"14->i2", "case14_g0", "i2", {"J"}, {{"J", "J"}, {"N", "0"}},
         {{"1", "0", "0", "-J/2", 0}}, {}, {},
         WitnessStatus::printed, "the published rescaling made explicit"});
    wit({"17->j1", "case17", "j1", {"p", "X", "K"},
         {{"X", "X"}, {"U", "p^2*X"}, {"C", "0"}, {"K", "K"}},
         {{"p", "0", "-p*X/K", "1/p", 0}}, {{"x", "K"}}, {},
         WitnessStatus::printed, "sqrt(U/X) sampled exactly via U = p^2 X"});
    wit({"17->j2", "case17", "j2", {"w", "t", "C"},
         {{"X", "w^2"}, {"K", "t^2*C"}, {"U", "t^4*C"}, {"C", "C"}},
         {{"-1/w", "t^2*C/w", "0", "-w", 0}, {"1/t", "0", "0", "1/t", 0}}, {}, {},
         WitnessStatus::printed,
         "K^2 = UC subcase; sqrt(X) and the final scaling sampled via w, t"});
    wit({"22->e (rank-1 subcase)", "case22", "e5", {}, {}, {}, {}, {},
         WitnessStatus::unverifiable,
         "published subcase condition references an undefined symbol c9'"});
    wit({"19->a1 (F!=0)", "case19", "a1", {"J", "K", "p"},
         {{"J", "J"}, {"K", "K"}, {"F", "p^2"}},
         {{"1/p", "0", "-J/(2*p*K)", "p", 0}}, {{"x", "-K/2"}, {"alpha", "1"}}, {"K"},
         WitnessStatus::printed, "t = sqrt(F) sampled via F = p^2"});
    wit({"19->a1 (F=0)", "case19", "a1", {"J", "K"}, {{"J", "J"}, {"K", "K"}, {"F", "0"}},
         {{"1", "0", "-J/(2*K)", "1", 0}}, {{"x", "-K/2"}, {"alpha", "0"}}, {"K"},
         WitnessStatus::printed, ""});
    wit({"19->a2 (1,1)", "case19", "a2", {"J", "p"},
         {{"J", "J"}, {"K", "0"}, {"F", "2*p^2"}},
         {{"1/p", "0", "0", "J/(2*p)", 0}}, {{"alpha", "1"}, {"beta", "1"}}, {},
         WitnessStatus::derived, "the published scalings made explicit"});
    wit({"19->a2 (1,0)", "case19", "a2", {"J"}, {{"J", "J"}, {"K", "0"}, {"F", "0"}},
         {{"1", "0", "0", "J/2", 0}}, {{"alpha", "1"}, {"beta", "0"}}, {},
         WitnessStatus::derived, "the published scalings made explicit"});
    wit({"19->a2 (0,1)", "case19", "a2", {"p"},
         {{"J", "0"}, {"K", "0"}, {"F", "2*p^2"}},
         {{"1/p", "0", "0", "1", 0}}, {{"alpha", "0"}, {"beta", "1"}}, {},
         WitnessStatus::derived, "the published scalings made explicit"});
    wit({"21->k1 (Z=0)", "case21", "k1", {"X", "K", "S"},
         {{"X", "X"}, {"Z", "0"}, {"K", "K"}, {"S", "S"}},
         {{"0", "-1", "1", "X/(K+S)", 0}},
         {{"x", "-(K+S)/2"}, {"y", "S-K"}}, {"K+S"},
         WitnessStatus::printed, "published renaming carries the opposite sign"});
    wit({"21->k1 (Z!=0)", "case21", "k1", {"X", "K", "S", "t"},
         {{"X", "X"}, {"Z", "(t^2-((K+S)/2)^2)/X"}, {"K", "K"}, {"S", "S"}},
         {{"((t^2-((K+S)/2)^2)/X)/(2*t)", "1", "(K+S)/(4*t)-1/2",
           "((K+S)/2+t)/((t^2-((K+S)/2)^2)/X)", 0}},
         {{"x", "t"}, {"y", "2*t*(K-S)/(K+S)"}},
         {"K+S", "t^2-((K+S)/2)^2", "t-(K+S)/2", "t+(K+S)/2"},
         WitnessStatus::printed,
         "sqrt(XZ + ((K+S)/2)^2) sampled exactly via the free value t"});
    wit({"21->k2", "case21", "k2", {"w", "K", "S"},
         {{"X", "((K+S)/2)^2/w^2"}, {"Z", "-w^2"}, {"K", "K"}, {"S", "S"}},
         {{"0", "w", "-1/w", "-(K+S)/(2*w)", 0}},
         {{"x", "(S-K)/(K+S)"}}, {"K+S"},
         WitnessStatus::printed,
         "XZ + ((K+S)/2)^2 = 0 subcase; sqrt(-Z) sampled via w; published "
         "renaming carries the opposite sign"});
    wit({"self (case1)", "case1", "case1", {"J", "K", "L", "U"}, {},
         {}, {{"J", "J"}, {"K", "K"}, {"L", "L"}, {"U", "U"}}, {},
         WitnessStatus::derived, "identity witness for harness smoke tests"});
}

inline const Catalog& Catalog::instance() {
    static const Catalog catalog;
    return catalog;
}

inline const Catalog& catalog() { return Catalog::instance(); }

}  // namespace sbk
