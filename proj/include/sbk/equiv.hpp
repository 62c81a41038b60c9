#pragma once

#include "sbk/autos.hpp"
#include "sbk/catalog.hpp"
#include "sbk/expr.hpp"
#include "sbk/rng.hpp"
#include "sbk/witness.hpp"

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace sbk {

enum class EquivVerdict { pass, fail, skipped };

struct EquivReport {
    std::string witness_id;
    EquivVerdict verdict = EquivVerdict::skipped;
    std::size_t samples_checked = 0;
    std::size_t samples_excluded = 0;
    std::string detail;
};

/// Checks an equivalence witness on sample_count exact random samples.
/// Every usable sample must transform the source instance exactly onto the
/// target instance. An empty witness domain is reported, never passed.
inline EquivReport verify_equivalence(const EquivalenceWitness& w, std::size_t sample_count,
                                      std::uint64_t seed) {
    EquivReport rep;
    rep.witness_id = w.id;
    if (w.status == WitnessStatus::unverifiable) {
        rep.verdict = EquivVerdict::skipped;
        rep.detail = "unverifiable as published: " + w.note;
        return rep;
    }
    const Catalog& cat = catalog();
    const RMatrixTemplate& src = cat.r_template(w.from);
    const RMatrixTemplate& tgt = cat.r_template(w.to);
    const SuperAlgebra& alg = cat.algebra(src.algebra);
    if (tgt.algebra != src.algebra) {
        rep.verdict = EquivVerdict::fail;
        rep.detail = "witness connects templates over different algebras";
        return rep;
    }

    RationalSampler sampler(seed);
    const std::size_t max_attempts = 60 * (sample_count + 1);
    std::size_t attempts = 0;
    while (rep.samples_checked < sample_count && attempts < max_attempts) {
        ++attempts;
        ParamMap samples;
        for (const auto& v : w.sample_vars) samples[v] = sampler.next();
        try {
            bool guarded = false;
            for (const auto& g : w.guards)
                if (eval_expr(g, samples) == 0) { guarded = true; break; }
            if (guarded) {
                ++rep.samples_excluded;
                continue;
            }
            ParamMap src_values;
            if (w.source_params.empty()) {
                src_values = samples;
            } else {
                for (const auto& [name, expr] : w.source_params)
                    src_values[name] = eval_expr(expr, samples);
            }
            if (!src.admissible(src_values)) {
                ++rep.samples_excluded;
                continue;
            }
            RMatrix r = src.evaluate(alg, src_values);
            for (const auto& step : w.steps) {
                AutoParams p{eval_expr(step.a, samples), eval_expr(step.b, samples),
                             eval_expr(step.c, samples), eval_expr(step.d, samples),
                             step.m};
                if (p.det() == 0) throw ExcludedPoint("singular witness step");
                // steps act as r -> A^T r A (see EquivalenceWitness docs)
                BasisChange A = build_automorphism(p);
                r = RMatrix(A.matrix.transposed() * r.matrix() * A.matrix);
            }
            ParamMap tgt_values;
            for (const auto& [name, expr] : w.target_params)
                tgt_values[name] = eval_expr(expr, samples);
            RMatrix expected = tgt.evaluate(alg, tgt_values);
            if (!(r == expected)) {
                rep.verdict = EquivVerdict::fail;
                std::ostringstream os;
                os << "mismatch at sample {";
                for (const auto& [k, v] : samples) os << k << "=" << to_string(v) << " ";
                os << "}";
                rep.detail = os.str();
                return rep;
            }
            ++rep.samples_checked;
        } catch (const ExcludedPoint&) {
            ++rep.samples_excluded;
            continue;
        }
    }
    if (rep.samples_checked < sample_count) {
        rep.verdict = EquivVerdict::skipped;
        rep.detail = "witness domain empty or nearly empty: only " +
                     std::to_string(rep.samples_checked) + " usable samples";
        return rep;
    }
    rep.verdict = EquivVerdict::pass;
    rep.detail = std::to_string(rep.samples_checked) + " exact samples matched (" +
                 std::to_string(rep.samples_excluded) + " excluded)";
    return rep;
}

}  // namespace sbk
