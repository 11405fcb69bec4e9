#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "cubekit/errors.hpp"

namespace cubekit {

using Int = mpz_class;

/**
 * EisensteinInt: numbers of the form a + bζ where ζ is a primitive cube
 * root of unity (ζ² = −1−ζ) and a, b are arbitrary-precision integers.
 */
class EisensteinInt {
public:
    EisensteinInt() : a_(0), b_(0) {}
    EisensteinInt(Int a, Int b = 0) : a_(std::move(a)), b_(std::move(b)) {}
    EisensteinInt(long a) : a_(a), b_(0) {}

    static EisensteinInt zeta() { return EisensteinInt(0, 1); }

    // 𝔭 = 1 − ζ, the ramified prime above 3 (3 = −ζ²𝔭²).
    static EisensteinInt p3() { return EisensteinInt(1, -1); }

    const Int& a() const noexcept { return a_; }
    const Int& b() const noexcept { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_one() const { return a_ == 1 && b_ == 0; }

    bool operator==(const EisensteinInt& other) const {
        return a_ == other.a_ && b_ == other.b_;
    }
    bool operator!=(const EisensteinInt& other) const { return !(*this == other); }

    EisensteinInt operator+(const EisensteinInt& other) const {
        return EisensteinInt(a_ + other.a_, b_ + other.b_);
    }

    EisensteinInt operator-(const EisensteinInt& other) const {
        return EisensteinInt(a_ - other.a_, b_ - other.b_);
    }

    EisensteinInt operator-() const { return EisensteinInt(-a_, -b_); }

    EisensteinInt operator*(const EisensteinInt& other) const {
        // (a₁+b₁ζ)(a₂+b₂ζ) = (a₁a₂−b₁b₂) + (a₁b₂+a₂b₁−b₁b₂)ζ
        return EisensteinInt(a_ * other.a_ - b_ * other.b_,
                             a_ * other.b_ + other.a_ * b_ - b_ * other.b_);
    }

    // Complex conjugation, a + bζ ↦ (a−b) − bζ (ζ ↦ ζ²).
    EisensteinInt conj() const { return EisensteinInt(a_ - b_, -b_); }

    // N(a+bζ) = a² − ab + b² ≥ 0; multiplicative.
    Int norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }

    bool is_unit() const { return norm() == 1; }

    EisensteinInt pow(unsigned long e) const;

    std::string str() const;  // "a+bζ"

    friend std::ostream& operator<<(std::ostream& os, const EisensteinInt& x);

private:
    Int a_, b_;
};

Int norm(const EisensteinInt& x);

// The six units ±1, ±ζ, ±ζ².
const std::array<EisensteinInt, 6>& units();

// x ≡ 1 (mod 3𝒪_K), the associate convention the reciprocity laws use.
bool is_primary(const EisensteinInt& x);

// The unique associate u·x ≡ 1 (mod 3𝒪_K); requires 3 ∤ N(x).
EisensteinInt primary_associate(const EisensteinInt& x);

// Quotient x/d when d | x exactly, else nullopt.
std::optional<EisensteinInt> exact_div(const EisensteinInt& x, const EisensteinInt& d);

// Largest v with d^v | x, plus the cofactor x/d^v.  Requires x ≠ 0 and
// d neither zero nor a unit.
std::pair<int, EisensteinInt> remove_factor(EisensteinInt x, const EisensteinInt& d);

enum class ConjugateTag { First, Second, Inert, Ramified };

const char* conjugate_tag_name(ConjugateTag t) noexcept;

/**
 * A prime of K = ℚ(ζ) lying over a rational prime.  Split and inert
 * generators are primary; the ramified prime is 𝔭 = 1−ζ itself.
 */
struct PrimeOfK {
    EisensteinInt generator;
    int residue_degree = 1;  // 1 or 2
    Int rational_prime;
    ConjugateTag tag = ConjugateTag::First;
};

// Primes of K over p: a primary conjugate pair (π, π′) for p ≡ 1 (mod 3),
// the inert prime for p ≡ 2 (mod 3), or 𝔭 for p = 3.  The split pair is
// ordered so that π has b > 0 (runs are deterministic; all exported
// verdicts are invariant under the swap).
std::vector<PrimeOfK> split_rational_prime(const Int& p);

// Convenience for p ≡ 1 (mod 3): the ordered pair (π, π′), optionally
// swapped to exercise conjugate-labeling invariance.
std::pair<PrimeOfK, PrimeOfK> split_pair(const Int& p, bool swap_conjugates = false);

/**
 * An element of the residue field 𝒪_K/q: c0 + c1ζ with coefficients mod
 * the residue characteristic (c1 = 0 except in the inert case).
 */
struct ResidueElement {
    Int p;
    Int c0;
    Int c1;

    bool operator==(const ResidueElement& other) const {
        return p == other.p && c0 == other.c0 && c1 == other.c1;
    }
    bool is_zero() const { return c0 == 0 && c1 == 0; }
};

// Reduction 𝒪_K → 𝒪_K/q.  Split: ℤ/p via ζ ↦ −a·b⁻¹ for the generator
// a+bζ.  Inert: coefficient pairs mod p.  Ramified: 𝔽₃ via ζ ↦ 1.
ResidueElement mod_reduce(const EisensteinInt& x, const PrimeOfK& q);

// Probabilistic-but-reliable primality test (GMP).
bool is_prime(const Int& n);

}  // namespace cubekit
