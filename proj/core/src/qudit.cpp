#include "quditlab/qudit.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace quditlab {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

double sign_of(unsigned bit) { return bit ? -1.0 : 1.0; }

}  // namespace

double PureState::norm2() const {
    double s = 0.0;
    for (const Complex& a : amp) s += std::norm(a);
    return s;
}

void PureState::normalize() {
    const double n = std::sqrt(norm2());
    if (n <= 0.0) throw std::domain_error("PureState: cannot normalize zero vector");
    for (Complex& a : amp) a /= n;
}

double TwoQuditState::norm2() const {
    double s = 0.0;
    for (const Complex& a : amp) s += std::norm(a);
    return s;
}

void TwoQuditState::normalize() {
    const double n = std::sqrt(norm2());
    if (n <= 0.0) throw std::domain_error("TwoQuditState: cannot normalize zero vector");
    for (Complex& a : amp) a /= n;
}

TwoQuditState bell_state(const Field& f, const BellLabel& l) {
    TwoQuditState s{f.size(), std::vector<Complex>(f.size() * f.size(), Complex{})};
    const FieldElement r = l.a.rep;
    // i-bar = 0 and 1 terms of the superposition.
    s.amp[s.index(r, Field::add(r, l.b))] += kInvSqrt2;
    const FieldElement r1 = Field::add(r, 1);
    s.amp[s.index(r1, Field::add(r1, l.b))] += sign_of(l.c) * kInvSqrt2;
    return s;
}

PureState b_lambda_state(const Field& f, const BasisLabel& l) {
    if (l.lambda == 0) throw std::domain_error("b_lambda_state: lambda must be nonzero");
    PureState s{std::vector<Complex>(f.size(), Complex{})};
    s.amp[f.mul(l.lambda, l.a.rep)] += kInvSqrt2;
    s.amp[f.mul(l.lambda, Field::add(l.a.rep, 1))] += sign_of(l.c) * kInvSqrt2;
    return s;
}

PureState apply_X(const Field& f, FieldElement u, const PureState& s) {
    assert(s.dim() == f.size());
    PureState out{std::vector<Complex>(s.amp.size())};
    for (unsigned i = 0; i < f.size(); ++i) {
        out.amp[Field::add(static_cast<FieldElement>(i), u)] = s.amp[i];
    }
    return out;
}

PureState apply_Z(const Field& f, FieldElement v, const PureState& s) {
    assert(s.dim() == f.size());
    PureState out = s;
    for (unsigned i = 0; i < f.size(); ++i) {
        if (f.trace(f.mul(v, static_cast<FieldElement>(i)))) out.amp[i] = -out.amp[i];
    }
    return out;
}

PureState apply_L(const Field& f, FieldElement lambda, const PureState& s) {
    assert(s.dim() == f.size());
    if (lambda == 0) throw std::domain_error("apply_L: lambda = 0 is not invertible");
    PureState out{std::vector<Complex>(s.amp.size())};
    for (unsigned i = 0; i < f.size(); ++i) {
        out.amp[f.mul(lambda, static_cast<FieldElement>(i))] = s.amp[i];
    }
    return out;
}

PureState apply_H(const Field& f, const PureState& s) {
    assert(s.dim() == f.size());
    PureState out{std::vector<Complex>(s.amp.size())};
    for (unsigned r = 0; r < f.size(); r += 2) {
        const Complex lo = s.amp[r];
        const Complex hi = s.amp[r + 1];
        out.amp[r] = (lo + hi) * kInvSqrt2;
        out.amp[r + 1] = (lo - hi) * kInvSqrt2;
    }
    return out;
}

namespace {

// Lift a single-qudit permutation-with-phase operator to one side of a
// two-qudit state.  map(i) gives the image index, phase(i) the +-1 factor.
template <typename MapFn, typename PhaseFn>
TwoQuditState lift(const Field& f, const TwoQuditState& s, Side side,
                   MapFn&& map, PhaseFn&& phase) {
    assert(s.qudit_dim == f.size());
    TwoQuditState out{s.qudit_dim, std::vector<Complex>(s.amp.size(), Complex{})};
    for (unsigned i = 0; i < f.size(); ++i) {
        for (unsigned j = 0; j < f.size(); ++j) {
            const FieldElement fi = static_cast<FieldElement>(i);
            const FieldElement fj = static_cast<FieldElement>(j);
            const FieldElement t = (side == Side::alice) ? fi : fj;
            const std::size_t dst = (side == Side::alice)
                                        ? out.index(map(t), fj)
                                        : out.index(fi, map(t));
            out.amp[dst] += phase(t) * s.amp[s.index(fi, fj)];
        }
    }
    return out;
}

}  // namespace

TwoQuditState apply_X(const Field& f, FieldElement u, const TwoQuditState& s, Side side) {
    return lift(f, s, side,
                [u](FieldElement t) { return Field::add(t, u); },
                [](FieldElement) { return 1.0; });
}

TwoQuditState apply_Z(const Field& f, FieldElement v, const TwoQuditState& s, Side side) {
    return lift(f, s, side,
                [](FieldElement t) { return t; },
                [&f, v](FieldElement t) { return sign_of(f.trace(f.mul(v, t))); });
}

TwoQuditState apply_L(const Field& f, FieldElement lambda, const TwoQuditState& s, Side side) {
    if (lambda == 0) throw std::domain_error("apply_L: lambda = 0 is not invertible");
    return lift(f, s, side,
                [&f, lambda](FieldElement t) { return f.mul(lambda, t); },
                [](FieldElement) { return 1.0; });
}

TwoQuditState apply_H(const Field& f, const TwoQuditState& s, Side side) {
    assert(s.qudit_dim == f.size());
    TwoQuditState out{s.qudit_dim, std::vector<Complex>(s.amp.size(), Complex{})};
    for (unsigned i = 0; i < f.size(); ++i) {
        for (unsigned j = 0; j < f.size(); ++j) {
            const FieldElement fi = static_cast<FieldElement>(i);
            const FieldElement fj = static_cast<FieldElement>(j);
            const FieldElement t = (side == Side::alice) ? fi : fj;
            const FieldElement rep = static_cast<FieldElement>(t & ~1u);
            const FieldElement odd = static_cast<FieldElement>(rep | 1u);
            // Column t of the 2x2 block: |rep> -> (|rep>+|odd>)/sqrt(2),
            // |odd> -> (|rep>-|odd>)/sqrt(2).
            const double to_rep = kInvSqrt2;
            const double to_odd = (t == rep) ? kInvSqrt2 : -kInvSqrt2;
            const Complex a = s.amp[s.index(fi, fj)];
            if (side == Side::alice) {
                out.amp[out.index(rep, fj)] += to_rep * a;
                out.amp[out.index(odd, fj)] += to_odd * a;
            } else {
                out.amp[out.index(fi, rep)] += to_rep * a;
                out.amp[out.index(fi, odd)] += to_odd * a;
            }
        }
    }
    return out;
}

TwoQuditState apply_badd(const Field& f, const TwoQuditState& s) {
    assert(s.qudit_dim == f.size());
    TwoQuditState out{s.qudit_dim, std::vector<Complex>(s.amp.size(), Complex{})};
    for (unsigned i = 0; i < f.size(); ++i) {
        for (unsigned j = 0; j < f.size(); ++j) {
            const FieldElement fi = static_cast<FieldElement>(i);
            const FieldElement fj = static_cast<FieldElement>(j);
            out.amp[out.index(fi, Field::add(fi, fj))] = s.amp[s.index(fi, fj)];
        }
    }
    return out;
}

Complex inner(const PureState& x, const PureState& y) {
    assert(x.amp.size() == y.amp.size());
    Complex s{};
    for (std::size_t k = 0; k < x.amp.size(); ++k) s += std::conj(x.amp[k]) * y.amp[k];
    return s;
}

Complex inner(const TwoQuditState& x, const TwoQuditState& y) {
    assert(x.amp.size() == y.amp.size());
    Complex s{};
    for (std::size_t k = 0; k < x.amp.size(); ++k) s += std::conj(x.amp[k]) * y.amp[k];
    return s;
}

std::vector<BellLabel> all_bell_labels(const Field& f) {
    std::vector<BellLabel> out;
    out.reserve(static_cast<std::size_t>(f.size()) * f.size());
    for (unsigned k = 0; k < f.num_cosets(); ++k) {
        for (unsigned b = 0; b < f.size(); ++b) {
            for (unsigned c = 0; c < 2; ++c) {
                out.push_back(BellLabel{f.coset_at(k), static_cast<FieldElement>(b), c});
            }
        }
    }
    return out;
}

std::vector<BasisLabel> basis_labels(const Field& f, FieldElement lambda) {
    if (lambda == 0) throw std::domain_error("basis_labels: lambda must be nonzero");
    std::vector<BasisLabel> out;
    out.reserve(f.size());
    for (unsigned k = 0; k < f.num_cosets(); ++k) {
        for (unsigned c = 0; c < 2; ++c) {
            out.push_back(BasisLabel{lambda, f.coset_at(k), c});
        }
    }
    return out;
}

namespace {

// <basis(lambda, rep, c) | s>; the basis states are real with two nonzero
// amplitudes, so the overlap needs just two terms.
Complex overlap_b_lambda(const Field& f, const PureState& s, FieldElement lambda,
                         FieldElement rep, unsigned c) {
    const Complex lo = s.amp[f.mul(lambda, rep)];
    const Complex hi = s.amp[f.mul(lambda, Field::add(rep, 1))];
    return (lo + sign_of(c) * hi) * kInvSqrt2;
}

Complex overlap_bell(const Field& f, const TwoQuditState& s, const BellLabel& l) {
    const FieldElement r = l.a.rep;
    const FieldElement r1 = Field::add(r, 1);
    const Complex t0 = s.amp[s.index(r, Field::add(r, l.b))];
    const Complex t1 = s.amp[s.index(r1, Field::add(r1, l.b))];
    return (t0 + sign_of(l.c) * t1) * kInvSqrt2;
}

Complex unit_phase(Complex z) {
    const double m = std::abs(z);
    return (m > 0.0) ? z / m : Complex{1.0, 0.0};
}

}  // namespace

CompleteOutcome measure_complete(const Field& f, const PureState& s,
                                 FieldElement lambda, RandomSource& rng) {
    if (lambda == 0) throw std::domain_error("measure_complete: lambda must be nonzero");
    assert(s.dim() == f.size());

    const unsigned m = f.size();  // N outcomes: (rep, c) pairs
    std::vector<double> p(m);
    std::vector<Complex> ov(m);
    for (unsigned k = 0; k < f.num_cosets(); ++k) {
        for (unsigned c = 0; c < 2; ++c) {
            const unsigned idx = 2 * k + c;
            ov[idx] = overlap_b_lambda(f, s, lambda, f.coset_at(k).rep, c);
            p[idx] = std::norm(ov[idx]);
        }
    }
    const std::size_t pick = rng.categorical(p);
    const BasisLabel label{lambda, f.coset_at(static_cast<unsigned>(pick / 2)),
                           static_cast<unsigned>(pick % 2)};
    // Renormalized projection: the basis state carrying the overlap's phase.
    PureState post = b_lambda_state(f, label);
    const Complex phase = unit_phase(ov[pick]);
    for (Complex& a : post.amp) a *= phase;
    return CompleteOutcome{label, std::move(post)};
}

IncompleteOutcome measure_incomplete(const Field& f, const PureState& s,
                                     FieldElement i, FieldElement j,
                                     RandomSource& rng) {
    if (i == j) throw std::domain_error("measure_incomplete: need two distinct levels");
    assert(s.dim() == f.size());

    const Complex plus = (s.amp[i] + s.amp[j]) * kInvSqrt2;
    const Complex minus = (s.amp[i] - s.amp[j]) * kInvSqrt2;
    const double p_plus = std::norm(plus);
    const double p_minus = std::norm(minus);
    const double p_fail = std::max(0.0, 1.0 - p_plus - p_minus);

    const double probs[3] = {p_plus, p_minus, p_fail};
    const std::size_t pick = rng.categorical(probs);

    PureState post{std::vector<Complex>(s.amp.size(), Complex{})};
    if (pick == 0 || pick == 1) {
        const Complex ov = (pick == 0) ? plus : minus;
        const Complex phase = unit_phase(ov);
        const double sgn = (pick == 0) ? 1.0 : -1.0;
        post.amp[i] = phase * kInvSqrt2;
        post.amp[j] = phase * sgn * kInvSqrt2;
        return IncompleteOutcome{pick == 0 ? SubspaceResult::success_plus
                                           : SubspaceResult::success_minus,
                                 std::move(post)};
    }
    post = s;
    post.amp[i] = Complex{};
    post.amp[j] = Complex{};
    post.normalize();
    return IncompleteOutcome{SubspaceResult::fail, std::move(post)};
}

BellOutcome measure_bell(const Field& f, const TwoQuditState& s, RandomSource& rng) {
    assert(s.qudit_dim == f.size());
    const std::vector<BellLabel> labels = all_bell_labels(f);
    std::vector<double> p(labels.size());
    std::vector<Complex> ov(labels.size());
    for (std::size_t k = 0; k < labels.size(); ++k) {
        ov[k] = overlap_bell(f, s, labels[k]);
        p[k] = std::norm(ov[k]);
    }
    const std::size_t pick = rng.categorical(p);
    TwoQuditState post = bell_state(f, labels[pick]);
    const Complex phase = unit_phase(ov[pick]);
    for (Complex& a : post.amp) a *= phase;
    return BellOutcome{labels[pick], std::move(post)};
}

}  // namespace quditlab
