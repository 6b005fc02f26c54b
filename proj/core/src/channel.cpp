#include "quditlab/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace quditlab {

namespace {

constexpr double kSumTol = 1e-12;

}  // namespace

PauliDistribution::PauliDistribution(Field field, std::vector<double> probs)
    : field_(std::move(field)), e_(std::move(probs)) {
    const std::size_t want = static_cast<std::size_t>(field_.size()) * field_.size();
    if (e_.size() != want) {
        throw std::invalid_argument("PauliDistribution: expected " +
                                    std::to_string(want) + " entries, got " +
                                    std::to_string(e_.size()));
    }
    double sum = 0.0;
    for (double& p : e_) {
        if (p < 0.0) {
            if (p < -kSumTol) {
                throw std::invalid_argument("PauliDistribution: negative probability");
            }
            p = 0.0;
        }
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        throw std::invalid_argument("PauliDistribution: entries sum to " +
                                    std::to_string(sum) + ", expected 1");
    }
}

PauliDistribution PauliDistribution::identity(Field field) {
    const std::size_t m = static_cast<std::size_t>(field.size()) * field.size();
    std::vector<double> e(m, 0.0);
    e[0] = 1.0;
    return PauliDistribution(std::move(field), std::move(e));
}

PauliDistribution PauliDistribution::depolarizing(Field field, double p) {
    if (p < 0.0 || p > 1.0) {
        throw std::invalid_argument("depolarizing: p must lie in [0, 1]");
    }
    const std::size_t m = static_cast<std::size_t>(field.size()) * field.size();
    std::vector<double> e(m, p / static_cast<double>(m - 1));
    e[0] = 1.0 - p;
    return PauliDistribution(std::move(field), std::move(e));
}

std::pair<FieldElement, FieldElement> PauliDistribution::sample(RandomSource& rng) const {
    const std::size_t k = rng.categorical(e_);
    return {static_cast<FieldElement>(k / field_.size()),
            static_cast<FieldElement>(k % field_.size())};
}

std::string PauliDistribution::to_json() const {
    nlohmann::ordered_json j;
    j["n"] = field_.n();
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (unsigned u = 0; u < field_.size(); ++u) {
        for (unsigned v = 0; v < field_.size(); ++v) {
            entries.push_back({u, v, prob(static_cast<FieldElement>(u),
                                          static_cast<FieldElement>(v))});
        }
    }
    j["entries"] = std::move(entries);
    return j.dump();
}

PauliDistribution PauliDistribution::from_json(std::string_view text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    if (!j.contains("n") || !j.contains("entries")) {
        throw std::invalid_argument("PauliDistribution: JSON needs \"n\" and \"entries\"");
    }
    Field field(j.at("n").get<unsigned>());
    const unsigned dim = field.size();
    std::vector<double> e(static_cast<std::size_t>(dim) * dim, 0.0);
    for (const auto& entry : j.at("entries")) {
        if (!entry.is_array() || entry.size() != 3) {
            throw std::invalid_argument("PauliDistribution: entry must be [u, v, prob]");
        }
        const unsigned u = entry[0].get<unsigned>();
        const unsigned v = entry[1].get<unsigned>();
        if (u >= dim || v >= dim) {
            throw std::invalid_argument("PauliDistribution: index out of range");
        }
        e[static_cast<std::size_t>(u) * dim + v] = entry[2].get<double>();
    }
    return PauliDistribution(std::move(field), std::move(e));
}

double tilde_e(const PauliDistribution& d, FieldElement b, unsigned c) {
    const Field& f = d.field();
    double sum = 0.0;
    for (unsigned v = 0; v < f.size(); ++v) {
        if (f.trace(static_cast<FieldElement>(v)) == c) {
            sum += d.prob(b, static_cast<FieldElement>(v));
        }
    }
    return sum;
}

ObservedRates::ObservedRates(unsigned qudit_dim, std::vector<double> s)
    : dim_(qudit_dim), s_(std::move(s)) {}

double ObservedRates::at(FieldElement lambda, CosetLabel b, unsigned c) const {
    if (lambda == 0) throw std::domain_error("ObservedRates::at: lambda must be nonzero");
    return s_[static_cast<std::size_t>(lambda - 1) * dim_ + b.rep + c];
}

ObservedRates observed_rates(const PauliDistribution& d) {
    const Field& f = d.field();
    const unsigned dim = f.size();
    std::vector<double> s(static_cast<std::size_t>(dim - 1) * dim, 0.0);
    for (FieldElement lambda = 1; lambda < dim; ++lambda) {
        for (unsigned k = 0; k < f.num_cosets(); ++k) {
            const FieldElement rep = f.coset_at(k).rep;
            for (unsigned c = 0; c < 2; ++c) {
                s[static_cast<std::size_t>(lambda - 1) * dim + rep + c] =
                    tilde_e(d, f.mul(lambda, rep), c) +
                    tilde_e(d, f.mul(lambda, Field::add(rep, 1)), c);
            }
        }
    }
    return ObservedRates(dim, std::move(s));
}

double raw_bit_error_rate(double e_c, double e_a, unsigned n) {
    const double N = static_cast<double>(1u << n);
    return (e_c + (n - 1) * N * e_a / ((N - 1.0) * (N - 2.0))) / n;
}

ErrorSummary summarize(const PauliDistribution& d) {
    const Field& f = d.field();
    const unsigned dim = f.size();

    // Exact enumeration over (lambda, u, v) of whether the sifted-round label
    // changes.  A round with error (u, v) under scale lambda flips the phase
    // bit iff trace(lambda*v) = 1 and lands in a different coset iff
    // lambda^-1 * u is outside {0, 1}.
    double flip_phase = 0.0;
    double flip_coset = 0.0;
    for (FieldElement lambda = 1; lambda < dim; ++lambda) {
        const FieldElement lam_inv = f.inv(lambda);
        for (unsigned u = 0; u < dim; ++u) {
            for (unsigned v = 0; v < dim; ++v) {
                const double p = d.prob(static_cast<FieldElement>(u),
                                        static_cast<FieldElement>(v));
                if (p == 0.0) continue;
                if (f.trace(f.mul(lambda, static_cast<FieldElement>(v)))) {
                    flip_phase += p;
                }
                const FieldElement shifted = f.mul(lam_inv, static_cast<FieldElement>(u));
                if (Field::coset_of(shifted).rep != 0) flip_coset += p;
            }
        }
    }
    const double n_lambdas = static_cast<double>(dim - 1);

    ErrorSummary out;
    out.e_c = flip_phase / n_lambdas;
    // Each nonzero shift u is concealed by exactly one scale (lambda = u maps
    // it into the reference coset), so the observable coset flip rate is
    // (N-2)/(N-1) of the dit error rate; rescale to the dit-rate convention.
    out.e_a = (flip_coset / n_lambdas) * (dim - 1.0) / (dim - 2.0);
    out.e_raw = raw_bit_error_rate(out.e_c, out.e_a, f.n());
    return out;
}

}  // namespace quditlab
