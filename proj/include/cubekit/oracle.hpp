#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace cubekit {

/**
 * CubeSumWitness: x = ax/c, y = ay/c with ax³ + ay³ = n·c³ exactly.
 */
struct CubeSumWitness {
    mpz_class ax;
    mpz_class ay;
    mpz_class c;

    bool verifies(const mpz_class& n) const {
        return ax * ax * ax + ay * ay * ay == n * c * c * c;
    }
    std::string str() const;  // "ax/c, ay/c"
};

// Bounded deterministic search on x³ + y³ = n: c ascending in
// [1, denom_bound], then |a| ascending in [0, num_bound] with positive
// before negative; n·c³ − a³ is tested for being a perfect cube by
// exact integer cube root.  The returned pair is ordered ax ≥ ay.
std::optional<CubeSumWitness> find_witness(const mpz_class& n, long denom_bound, long num_bound);

// Whether a is a cube mod ℓ, i.e. a^{(ℓ−1)/3} ≡ 1 (mod ℓ), evaluated
// with plain 64-bit modular exponentiation.  Independent of the
// Eisenstein symbols path by construction.
bool cubic_character_mod_ell(int64_t a, uint64_t ell);

}  // namespace cubekit
