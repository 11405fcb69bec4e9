#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "cubekit/eisenstein.hpp"

namespace cubekit {

/**
 * MuCubeValue: an element of μ₃ stored as its exponent in 𝔽₃, so the
 * group law is addition of exponents.  Exponent 0 means the symbol is 1.
 */
class MuCubeValue {
public:
    explicit MuCubeValue(long e = 0) : e_(static_cast<uint8_t>(((e % 3) + 3) % 3)) {}

    int exponent() const noexcept { return e_; }
    bool is_trivial() const noexcept { return e_ == 0; }

    MuCubeValue operator*(MuCubeValue other) const { return MuCubeValue(e_ + other.e_); }
    MuCubeValue inverse() const { return MuCubeValue(-e_); }
    MuCubeValue pow(long k) const { return MuCubeValue(e_ * ((k % 3 + 3) % 3)); }

    bool operator==(MuCubeValue other) const noexcept { return e_ == other.e_; }
    bool operator!=(MuCubeValue other) const noexcept { return e_ != other.e_; }

    std::string str() const;  // "1", "ζ", "ζ^2"

    friend std::ostream& operator<<(std::ostream& os, MuCubeValue v);

private:
    uint8_t e_;
};

// Cubic residue symbol (a/q)₃ = ζ^k with a^{(N(q)−1)/3} ≡ ζ^k (mod q).
// Requires q ≁ 𝔭 and a coprime to q.
MuCubeValue cubic_residue(const EisensteinInt& a, const PrimeOfK& q);

// Jacobi-style extension over the prime factorization of d; requires
// N(d) coprime to 3·N(a).
MuCubeValue cubic_residue_composite(const EisensteinInt& a, const EisensteinInt& d);

// Tame cubic Hilbert symbol ((a,b)/q) = (c/q)₃ with
// c = (−1)^{v(a)v(b)} a^{v(b)} b^{−v(a)}, for q ∤ 3.
MuCubeValue hilbert_tame(const EisensteinInt& a, const EisensteinInt& b, const PrimeOfK& q);

// Wild symbol ((a,b)/𝔭) recovered from the Hilbert product formula: the
// inverse of the product of tame symbols over all finite q ∤ 3 dividing
// a or b (the complex place contributes trivially).  Requires smooth
// norms.
MuCubeValue hilbert_wild(const EisensteinInt& a, const EisensteinInt& b);

// Whether (a/b)₃ = (b/a)₃; both arguments must be primary with coprime
// norms coprime to 3.
bool reciprocity_check(const EisensteinInt& a, const EisensteinInt& b);

/**
 * SUnitPair: a pair (x̄₁, x̄₂) of classes in 𝒪*_S/𝒪*_S³ on the generators
 * (ζ, 𝔭, π, π′), subject to the kernel-of-norm condition x̄₁x̄₂ = 1̄, i.e.
 * the exponent vectors sum to zero componentwise.  The unit −1 is a cube
 * and is absorbed.
 */
struct SUnitPair {
    std::array<uint8_t, 4> first{};   // exponents of (ζ, 𝔭, π, π′) mod 3
    std::array<uint8_t, 4> second{};  // ≡ −first componentwise

    static SUnitPair from_first(const std::array<uint8_t, 4>& f);
    static SUnitPair make(const std::array<uint8_t, 4>& f, const std::array<uint8_t, 4>& s);

    SUnitPair mul(const SUnitPair& other) const;
    SUnitPair pow(int t) const;
    bool is_identity() const;

    bool operator==(const SUnitPair& other) const { return first == other.first; }
    bool operator!=(const SUnitPair& other) const { return !(*this == other); }

    std::string str() const;  // "(ζ^2·π^2 | ζ·π)" style
};

}  // namespace cubekit
