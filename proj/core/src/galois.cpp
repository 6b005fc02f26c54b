#include "quditlab/galois.hpp"

#include <stdexcept>
#include <string>

namespace quditlab {

int poly_degree(unsigned p) {
    int d = -1;
    while (p != 0) {
        ++d;
        p >>= 1;
    }
    return d;
}

unsigned poly_mul_gf2(unsigned a, unsigned b) {
    unsigned r = 0;
    while (b != 0) {
        if (b & 1u) r ^= a;
        a <<= 1;
        b >>= 1;
    }
    return r;
}

unsigned poly_rem_gf2(unsigned a, unsigned m) {
    const int dm = poly_degree(m);
    int da = poly_degree(a);
    while (da >= dm) {
        a ^= m << (da - dm);
        da = poly_degree(a);
    }
    return a;
}

bool is_irreducible_gf2(unsigned m) {
    const int d = poly_degree(m);
    if (d < 1) return false;
    // Exhaustive trial division by every polynomial of degree 1..d-1.
    for (int dg = 1; dg < d; ++dg) {
        for (unsigned g = 1u << dg; g < (2u << dg); ++g) {
            if (poly_rem_gf2(m, g) == 0) return false;
        }
    }
    return true;
}

namespace {

unsigned default_modulus(unsigned n) {
    switch (n) {
        case 2: return 0b111;     // x^2 + x + 1
        case 3: return 0b1011;    // x^3 + x + 1
        case 4: return 0b10011;   // x^4 + x + 1
        default: return 0;
    }
}

}  // namespace

Field::Field(unsigned n) : Field(n, default_modulus(n)) {}

Field::Field(unsigned n, unsigned modulus) : n_(n), modulus_(modulus) {
    if (n < 2 || n > 4) {
        throw std::invalid_argument("Field: n must be 2, 3 or 4, got " +
                                    std::to_string(n));
    }
    if (poly_degree(modulus_) != static_cast<int>(n_) ||
        !is_irreducible_gf2(modulus_)) {
        throw std::invalid_argument(
            "Field: modulus is not an irreducible polynomial of degree " +
            std::to_string(n_));
    }
    size_ = 1u << n_;
    build_tables();
}

void Field::build_tables() {
    mul_table_.assign(static_cast<std::size_t>(size_) * size_, 0);
    inv_table_.assign(size_, 0);
    trace_table_.assign(size_, 0);

    for (unsigned a = 0; a < size_; ++a) {
        for (unsigned b = 0; b < size_; ++b) {
            const unsigned p = poly_rem_gf2(poly_mul_gf2(a, b), modulus_);
            mul_table_[static_cast<std::size_t>(a) * size_ + b] =
                static_cast<FieldElement>(p);
            if (p == 1u) {
                inv_table_[a] = static_cast<FieldElement>(b);
            }
        }
    }

    // trace(a) = a + a^2 + a^4 + ... + a^(2^(n-1)); lands in {0, 1}.
    for (unsigned a = 0; a < size_; ++a) {
        FieldElement acc = 0;
        FieldElement power = static_cast<FieldElement>(a);
        for (unsigned k = 0; k < n_; ++k) {
            acc = add(acc, power);
            power = mul(power, power);
        }
        trace_table_[a] = static_cast<std::uint8_t>(acc);
    }
}

FieldElement Field::inv(FieldElement a) const {
    if (a == 0) {
        throw std::domain_error("Field::inv: zero has no multiplicative inverse");
    }
    return inv_table_[a];
}

CosetLabel Field::coset_at(unsigned k) const {
    return CosetLabel{static_cast<FieldElement>(2 * k)};
}

}  // namespace quditlab
