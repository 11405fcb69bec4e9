#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace cubekit {

// Primes in [2, limit] by segmented sieve.
std::vector<uint32_t> primes_up_to(uint32_t limit);

// Calls fn(p) for every prime p ≤ limit in increasing order.
void for_each_prime(uint32_t limit, const std::function<void(uint32_t)>& fn);

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(uint64_t n);

// Trial division; fine for the ≤ ~10¹³ inputs the toolkit handles.
std::vector<std::pair<uint64_t, int>> factor_u64(uint64_t n);

// Factorization of a norm-sized integer: trial division to 10⁵, then a
// prime or prime-square tail.  Throws Unfactorable otherwise.
std::vector<std::pair<mpz_class, int>> factor_integer(const mpz_class& n);

// Worker count for parallel scans: hardware concurrency capped by the
// CUBEKIT_THREADS environment variable.
unsigned worker_count();

}  // namespace cubekit
