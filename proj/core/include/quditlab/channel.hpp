#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quditlab/galois.hpp"
#include "quditlab/random.hpp"

namespace quditlab {

/* Stochastic Pauli channel between Alice and Bob: e(u, v) is the probability
 * that a transiting qudit picks up the shift/phase pair X_u Z_v.  Entries are
 * nonnegative and sum to 1 (checked at construction, 1e-12 tolerance).
 * Immutable after construction; sampling draws through a caller-supplied
 * RandomSource, so each thread brings its own.
 */
class PauliDistribution {
public:
    PauliDistribution(Field field, std::vector<double> probs);

    static PauliDistribution identity(Field field);

    /// e(0,0) = 1-p, every other entry p/(N^2-1).
    static PauliDistribution depolarizing(Field field, double p);

    const Field& field() const { return field_; }
    unsigned qudit_dim() const { return field_.size(); }

    double prob(FieldElement u, FieldElement v) const {
        return e_[static_cast<std::size_t>(u) * field_.size() + v];
    }
    std::span<const double> probs() const { return e_; }

    /// Draw an error pair (u, v) with probability e(u, v).
    std::pair<FieldElement, FieldElement> sample(RandomSource& rng) const;

    // JSON schema: {"n": int, "entries": [[u, v, prob], ...]} with u, v as
    // bit-pattern integers.  Emits all N^2 entries in row-major order.
    std::string to_json() const;
    static PauliDistribution from_json(std::string_view text);

private:
    Field field_;
    std::vector<double> e_;
};

/// Sum of e(b, v) over the v with trace(v) = c.
double tilde_e(const PauliDistribution& d, FieldElement b, unsigned c);

/* The statistics Schemes A/B estimate during the error-rate test: for each
 * basis scale lambda, the probability of observing coset shift [b] and phase
 * bit c.  For each lambda the table sums to 1. */
class ObservedRates {
public:
    ObservedRates(unsigned qudit_dim, std::vector<double> s);

    double at(FieldElement lambda, CosetLabel b, unsigned c) const;
    unsigned qudit_dim() const { return dim_; }

private:
    unsigned dim_;
    std::vector<double> s_;  // [(lambda-1) * N + rep + c]
};

ObservedRates observed_rates(const PauliDistribution& d);

/* Error rates of the sifted raw key streams, averaged over the basis scale:
 * e_c is the phase-bit flip rate, e_a the coset (dit) error rate, e_raw the
 * bit error rate of the combined raw bit string. */
struct ErrorSummary {
    double e_c = 0.0;
    double e_a = 0.0;
    double e_raw = 0.0;
};

/// Combine stream rates into the raw-key bit error rate: one phase bit and
/// n-1 coset bits per round, the coset term weighted by the per-bit flip
/// probability of a dit error.
double raw_bit_error_rate(double e_c, double e_a, unsigned n);

ErrorSummary summarize(const PauliDistribution& d);

}  // namespace quditlab
