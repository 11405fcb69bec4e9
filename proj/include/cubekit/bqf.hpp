#pragma once

#include <cstdint>
#include <optional>

#include <gmpxx.h>

namespace cubekit {

/**
 * BqfForm: the integral binary quadratic form aX² + bXY + cY².  The two
 * built-ins tied to the cubic characters of 2 and 3 are 4X²−2XY+7Y²
 * (discriminant −108) and X²+XY+61Y² (discriminant −243).
 */
struct BqfForm {
    long a;
    long b;
    long c;

    long discriminant() const { return b * b - 4 * a * c; }
    bool positive_definite() const { return a > 0 && discriminant() < 0; }
};

inline constexpr BqfForm kFormCharTwo{4, -2, 7};    // represents ℓ ⟺ (2/ℓ)₃ ≠ 1
inline constexpr BqfForm kFormCharThree{1, 1, 61};  // represents ℓ ⟺ (3/ℓ)₃ = 1
inline constexpr BqfForm kFormX2_243Y2{1, 0, 243};  // 4ℓ = x² + 243y² variant

struct BqfWitness {
    long x;
    long y;
};

// Whether the positive-definite form represents m, by exhaustive search
// over the provably sufficient coefficient box |y| ≤ √(4am/|D|) with x
// solved exactly per y.  Throws IndefiniteForm otherwise.
std::optional<BqfWitness> bqf_represents(const BqfForm& form, const mpz_class& m);

}  // namespace cubekit
