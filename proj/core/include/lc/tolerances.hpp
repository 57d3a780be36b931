#pragma once

/**
 * @file tolerances.hpp
 * @brief All numeric thresholds in one record. Relative tolerances are
 *        scaled by a homogeneity-matched power of the shape-operator norm
 *        at the point of use; the scaled value is what gets reported.
 */

namespace lc {

struct Tolerances {
    /// near-zero guard for jet reciprocal / square root constant terms
    double eps_div = 1e-12;
    /// integrability residual bound (relative) for shape-field input
    double eps_int = 1e-9;
    /// |delta| below eps_delta * |S|^2 counts as "on the discriminant"
    double eps_delta = 1e-8;
    /// umbilic ball: |S - lambda I| below eps_umbilic * |S|
    double eps_umbilic = 1e-8;
    /// gradient floor for implicit-curve continuation (relative)
    double eps_grad = 1e-7;
    /// corrector residual target for traced curves (relative)
    double eps_curve = 1e-8;
    /// "nonzero" decision threshold for classification quantities (relative)
    double zero_rel = 1e-6;
    /// delta in (eps_delta, ambiguity_band * eps_delta) is classified both ways
    double ambiguity_band = 10.0;
    /// pure-power coefficient floor for the splitting-lemma reduction
    double eps_ak = 1e-5;
    /// least-squares residual gate for the equiaffine PDE solve (relative)
    double eps_pde = 1e-10;
};

} // namespace lc
