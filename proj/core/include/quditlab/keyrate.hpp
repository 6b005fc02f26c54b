#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "quditlab/channel.hpp"

namespace quditlab {

/* Symmetry-reduced Pauli distribution: A is the no-error weight, B the mean
 * weight of a pure phase error, C of a pure shift error, D of a combined one.
 * The full table carries them with multiplicities 1, N-1, N-1, (N-1)^2 and
 * the normalization A + (N-1)(B+C) + (N-1)^2 D = 1. */
struct SymmetricDistribution {
    double A = 1.0;
    double B = 0.0;
    double C = 0.0;
    double D = 0.0;
};

/// -sum p log2 p with 0 log 0 = 0.
double shannon_bits(std::span<const double> p);

/// p * log2(p), zero at p <= 0.
double plog2p(double p);

/// Binary entropy h2(e) = -e log2 e - (1-e) log2(1-e).
double binary_entropy(double e);

/// Entropy in bits of the full N^2-entry table described by s.
double symmetric_entropy_bits(const SymmetricDistribution& s, unsigned N);

/// Distillable-key budget K = n - H for the symmetric table.
double K_of_symmetric(const SymmetricDistribution& s, unsigned N);

struct AdversarialOptimum {
    double K = 0.0;
    SymmetricDistribution worst;
};

/* Worst-case K over all symmetric tables reproducing the observed phase-bit
 * error rate e_c and dit error rate e_a.  The constraints leave one free
 * variable (D); entropy is concave along the feasible segment, so a bracketed
 * golden-section search to |dD| <= 1e-10 finds the adversarial optimum.
 * Throws std::domain_error naming the violated bound when no nonnegative
 * (A, B, C, D) matches. */
AdversarialOptimum optimize_K_given_ec_ea(double e_c, double e_a, unsigned N);

/* Worst-case K over all symmetric tables reproducing only the raw-key bit
 * error rate.  Two free variables (the split of e_raw between the streams,
 * and D); solved by nested bracketed search to 1e-10. */
AdversarialOptimum optimize_K_given_eraw(double e_raw, unsigned N);

/// Largest e_raw any symmetric table can reach (feasibility edge).
double max_feasible_eraw(unsigned N);

/// Closed form of the N = 4 worst-case K as a function of e_raw:
/// K = 2 { 1 + (1 - 3e/2) log2(1 - 3e/2) + (3e/2) log2(e/2) }.
double closed_form_K_N4(double e_raw);

// Secret key rates in dits per transmitted qudit, clamped at zero.
double rate_scheme_b(double K, unsigned n, unsigned N);
double rate_scheme_c(double K, unsigned n, unsigned N);

// Chau05 comparison scheme: depolarized table with survival weight e00.
double chau05_K(double e00, unsigned N);
double chau05_eraw_from_e00(double e00, unsigned N);
double chau05_rate(double e_raw, unsigned N);

struct Chau05Threshold {
    double e00_root = 0.0;   // survival weight where K crosses zero
    double eraw_max = 0.0;   // same point converted to a raw bit error rate
};
Chau05Threshold chau05_threshold(unsigned N);

/// Round-robin DPS comparison scheme, in dits per qudit.
double rrdps_rate(double e_raw, unsigned N);

// Qubit comparison schemes (one-way postprocessing, non-degenerate codes).
double bb84_rate(double e_raw);
double sixstate_K(double e_raw);
double sixstate_rate(double e_raw);

// Largest e_raw with positive rate, located by bisection to 1e-8.
double scheme_b_threshold(unsigned N);
double bb84_threshold();
double sixstate_threshold();
double rrdps_threshold(unsigned N);

enum class RateScheme {
    scheme_a,
    scheme_b,
    scheme_c,
    bb84,
    six_state,
    chau05,
    rrdps,
};

const char* scheme_name(RateScheme s);
std::optional<RateScheme> parse_scheme(std::string_view name);

/// Error-model inputs for one evaluation; exactly one of e_raw, (e_c, e_a)
/// or e00 applies depending on the scheme.
struct RateInputs {
    std::optional<double> e_raw;
    std::optional<double> e_c;
    std::optional<double> e_a;
    std::optional<double> e00;
};

/// One evaluated point: scheme and dimension, inputs, key budget K in bits,
/// rate in dits and in bits per transmitted qudit.
struct KeyRatePoint {
    RateScheme scheme = RateScheme::scheme_b;
    unsigned n = 2;
    unsigned N = 4;
    RateInputs inputs;
    double K = 0.0;
    double R_dits = 0.0;
    double R_bits = 0.0;
    std::optional<SymmetricDistribution> worst;
};

/// Evaluate a scheme at the given inputs (n is the qudit exponent for the
/// qudit schemes and ignored for BB84/six-state).
KeyRatePoint evaluate_key_rate(RateScheme scheme, unsigned n, const RateInputs& in);

}  // namespace quditlab
