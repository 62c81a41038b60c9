#pragma once

#include <map>
#include <string>
#include <vector>

namespace sbk {

/// One change-of-basis step of an equivalence witness, as the (a, b, c, d; m)
/// parameters of the automorphism family, each entry a rational expression in
/// the witness sample variables.
struct WitnessStep {
    std::string a, b, c, d;
    int m = 0;
};

enum class WitnessStatus {
    printed,       // steps appear in the published case analysis
    derived,       // steps reconstructed here (and machine-checked)
    unverifiable,  // published step cannot be interpreted; reported as skipped
};

/// Demonstrates that one cataloged family maps onto another under the
/// automorphism group: sampling the listed variables (never zero), the
/// source template at source_params, transformed by the steps, must equal
/// the target template at target_params -- exactly.
///
/// Steps are recorded the way the published case analysis states them, i.e.
/// as the basis change from the target frame back to the source: a step A
/// acts on coefficients as r -> A^T r A (the inverse of act_on_r's A).
struct EquivalenceWitness {
    std::string id;
    std::string from, to;
    std::vector<std::string> sample_vars;
    /// source template parameter -> expression in sample vars; empty means
    /// the identity assignment (parameters are sampled directly).
    std::map<std::string, std::string> source_params;
    std::vector<WitnessStep> steps;
    std::map<std::string, std::string> target_params;
    /// expressions that must not vanish at a usable sample point
    std::vector<std::string> guards;
    WitnessStatus status = WitnessStatus::printed;
    std::string note;
};

}  // namespace sbk
