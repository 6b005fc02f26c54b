#pragma once

#include <cstdint>
#include <vector>

namespace quditlab {

/* An element of GF(2^n), stored as a bit pattern: bit k of the value is the
   coefficient of x^k in the polynomial representative.  Addition is bitwise
   XOR and every element is its own additive inverse (characteristic 2). */
using FieldElement = std::uint8_t;

/* Label for a coset {a, a+1} of GF(2) inside the additive group of GF(2^n).
   The canonical representative is the member with constant term 0, so there
   are exactly N/2 distinct labels and rep always has bit 0 clear. */
struct CosetLabel {
    FieldElement rep = 0;

    friend bool operator==(const CosetLabel&, const CosetLabel&) = default;
};

/* GF(2^n) for n in {2, 3, 4}.
 *
 * Default moduli: x^2+x+1, x^3+x+1, x^4+x+1.  A custom modulus may be
 * supplied; it is checked for irreducibility by exhaustive factor search at
 * construction.  Multiplication, inversion and the absolute trace are
 * table-driven (N <= 16 keeps the tables tiny).  A Field is immutable after
 * construction and freely shareable read-only across threads.
 */
class Field {
public:
    explicit Field(unsigned n);
    Field(unsigned n, unsigned modulus);

    unsigned n() const { return n_; }
    unsigned size() const { return size_; }  // N = 2^n
    unsigned modulus() const { return modulus_; }
    unsigned num_cosets() const { return size_ / 2; }

    static FieldElement add(FieldElement a, FieldElement b) {
        return static_cast<FieldElement>(a ^ b);
    }

    FieldElement mul(FieldElement a, FieldElement b) const {
        return mul_table_[static_cast<std::size_t>(a) * size_ + b];
    }

    /// Multiplicative inverse; throws std::domain_error for 0.
    FieldElement inv(FieldElement a) const;

    /// Absolute trace a + a^2 + a^4 + ... + a^(N/2), always 0 or 1.
    unsigned trace(FieldElement a) const { return trace_table_[a]; }

    /// Constant term of the polynomial representative (bit 0).
    static unsigned constant_term(FieldElement a) { return a & 1u; }

    /// Coset of a modulo GF(2): representative is a with bit 0 cleared,
    /// so a == rep + constant_term(a).
    static CosetLabel coset_of(FieldElement a) {
        return CosetLabel{static_cast<FieldElement>(a & ~1u)};
    }

    /// k-th coset label (rep = 2k), k in [0, N/2).
    CosetLabel coset_at(unsigned k) const;

    friend bool operator==(const Field& x, const Field& y) {
        return x.n_ == y.n_ && x.modulus_ == y.modulus_;
    }

private:
    void build_tables();

    unsigned n_ = 0;
    unsigned size_ = 0;
    unsigned modulus_ = 0;
    std::vector<FieldElement> mul_table_;
    std::vector<FieldElement> inv_table_;
    std::vector<std::uint8_t> trace_table_;
};

// Polynomial arithmetic over GF(2)[x] on bit patterns; used for table
// construction and the irreducibility check.
unsigned poly_mul_gf2(unsigned a, unsigned b);
unsigned poly_rem_gf2(unsigned a, unsigned m);
int poly_degree(unsigned p);
bool is_irreducible_gf2(unsigned m);

}  // namespace quditlab
