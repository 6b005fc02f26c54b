#pragma once

#include <complex>
#include <vector>

#include "quditlab/galois.hpp"
#include "quditlab/random.hpp"

namespace quditlab {

using Complex = std::complex<double>;

/// Pure state of one N-dimensional qudit; amplitudes indexed by FieldElement.
struct PureState {
    std::vector<Complex> amp;

    unsigned dim() const { return static_cast<unsigned>(amp.size()); }
    double norm2() const;
    void normalize();
};

/// Pure state of two qudits; index (i, j) -> i*N + j, first (Alice) index major.
struct TwoQuditState {
    unsigned qudit_dim = 0;
    std::vector<Complex> amp;

    std::size_t index(FieldElement i, FieldElement j) const {
        return static_cast<std::size_t>(i) * qudit_dim + j;
    }
    double norm2() const;
    void normalize();
};

/// Which qudit of a two-qudit state an operator acts on.
enum class Side { alice, bob };

/// Label ([a], b, c) of an EPR-like basis state: coset, shift and phase bit.
struct BellLabel {
    CosetLabel a;
    FieldElement b = 0;
    unsigned c = 0;

    friend bool operator==(const BellLabel&, const BellLabel&) = default;
};

/// Label (lambda, [a], c) of a state in the single-qudit basis B_lambda.
struct BasisLabel {
    FieldElement lambda = 1;
    CosetLabel a;
    unsigned c = 0;

    friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

/// (|rep, rep+b> + (-1)^c |rep+1, rep+1+b>) / sqrt(2)
TwoQuditState bell_state(const Field& f, const BellLabel& l);

/// (|lambda*rep> + (-1)^c |lambda*(rep+1)>) / sqrt(2); lambda != 0.
PureState b_lambda_state(const Field& f, const BasisLabel& l);

// Single-qudit operators.  X_u shifts |i> -> |i+u>; Z_v multiplies |i> by
// (-1)^trace(v*i); L_lambda permutes |i> -> |lambda*i> (lambda != 0); H is
// the block-diagonal 2x2 Hadamard acting inside each coset pair {rep, rep+1}:
// |rep> -> (|rep>+|rep+1>)/sqrt(2), |rep+1> -> (|rep>-|rep+1>)/sqrt(2).
PureState apply_X(const Field& f, FieldElement u, const PureState& s);
PureState apply_Z(const Field& f, FieldElement v, const PureState& s);
PureState apply_L(const Field& f, FieldElement lambda, const PureState& s);
PureState apply_H(const Field& f, const PureState& s);

// The same operators acting on one side of a two-qudit state.
TwoQuditState apply_X(const Field& f, FieldElement u, const TwoQuditState& s, Side side);
TwoQuditState apply_Z(const Field& f, FieldElement v, const TwoQuditState& s, Side side);
TwoQuditState apply_L(const Field& f, FieldElement lambda, const TwoQuditState& s, Side side);
TwoQuditState apply_H(const Field& f, const TwoQuditState& s, Side side);

/// Computational-basis addition of the first qudit into the second:
/// |i, j> -> |i, i+j>.  Self-inverse in characteristic 2.
TwoQuditState apply_badd(const Field& f, const TwoQuditState& s);

Complex inner(const PureState& x, const PureState& y);
Complex inner(const TwoQuditState& x, const TwoQuditState& y);

/// All N^2 Bell labels in canonical order (rep asc, b asc, c asc).
std::vector<BellLabel> all_bell_labels(const Field& f);

/// The N labels of B_lambda in canonical order (rep asc, c asc).
std::vector<BasisLabel> basis_labels(const Field& f, FieldElement lambda);

struct CompleteOutcome {
    BasisLabel label;
    PureState post;
};

/// Born-rule projective measurement in the B_lambda basis (lambda != 0).
CompleteOutcome measure_complete(const Field& f, const PureState& s,
                                 FieldElement lambda, RandomSource& rng);

enum class SubspaceResult { success_plus, success_minus, fail };

struct IncompleteOutcome {
    SubspaceResult result;
    PureState post;
};

/// Three-outcome measurement with projectors onto (|i>+|j>)/sqrt(2),
/// (|i>-|j>)/sqrt(2) and the complement of span{|i>, |j>} (i != j).
IncompleteOutcome measure_incomplete(const Field& f, const PureState& s,
                                     FieldElement i, FieldElement j,
                                     RandomSource& rng);

struct BellOutcome {
    BellLabel label;
    TwoQuditState post;
};

/// Born-rule measurement in the N^2-element EPR-like basis.
BellOutcome measure_bell(const Field& f, const TwoQuditState& s,
                         RandomSource& rng);

}  // namespace quditlab
