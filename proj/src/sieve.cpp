#include "cubekit/sieve.hpp"

#include <algorithm>
#include <numeric>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "cubekit/eisenstein.hpp"
#include "cubekit/errors.hpp"

namespace cubekit {

std::vector<uint32_t> primes_up_to(uint32_t limit) {
    std::vector<uint32_t> primes;
    if (limit < 2) return primes;
    primes.push_back(2);
    if (limit < 3) return primes;

    // Odd-only segmented sieve; base primes up to √limit first.
    uint32_t root = static_cast<uint32_t>(std::sqrt(static_cast<double>(limit))) + 1;
    std::vector<bool> base(root / 2 + 1, true);  // index i ↦ 2i+1
    for (uint32_t i = 1; (2 * i + 1) * (2 * i + 1) <= root; ++i) {
        if (!base[i]) continue;
        uint32_t p = 2 * i + 1;
        for (uint32_t j = (p * p - 1) / 2; j < base.size(); j += p) base[j] = false;
    }
    std::vector<uint32_t> base_primes;
    for (uint32_t i = 1; i < base.size(); ++i)
        if (base[i] && 2 * i + 1 <= root) base_primes.push_back(2 * i + 1);

    const uint32_t segment = 1 << 18;
    std::vector<bool> seg;
    for (uint64_t lo = 3; lo <= limit; lo += 2 * segment) {
        uint64_t hi = std::min<uint64_t>(lo + 2 * segment - 2, limit);
        seg.assign(segment, true);
        for (uint32_t p : base_primes) {
            uint64_t start = std::max<uint64_t>(static_cast<uint64_t>(p) * p,
                                                ((lo + p - 1) / p) * p);
            if (start % 2 == 0) start += p;
            for (uint64_t m = start; m <= hi; m += 2 * p) seg[(m - lo) / 2] = false;
        }
        for (uint64_t m = lo; m <= hi; m += 2)
            if (seg[(m - lo) / 2]) primes.push_back(static_cast<uint32_t>(m));
    }
    return primes;
}

void for_each_prime(uint32_t limit, const std::function<void(uint32_t)>& fn) {
    for (uint32_t p : primes_up_to(limit)) fn(p);
}

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    a %= m;
    while (e > 0) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while (d % 2 == 0) { d /= 2; ++s; }
    // Sprp bases covering all 64-bit inputs.
    for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

uint64_t pollard_rho(uint64_t n) {
    if (n % 2 == 0) return 2;
    for (uint64_t c = 1;; ++c) {
        uint64_t x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (mulmod_u64(x, x, n) + c) % n;
            y = (mulmod_u64(y, y, n) + c) % n;
            y = (mulmod_u64(y, y, n) + c) % n;
            uint64_t diff = x > y ? x - y : y - x;
            d = std::gcd(diff, n);
        }
        if (d != n) return d;
    }
}

void factor_u64_into(uint64_t n, std::vector<std::pair<uint64_t, int>>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        for (auto& [p, e] : out)
            if (p == n) { ++e; return; }
        out.emplace_back(n, 1);
        return;
    }
    uint64_t d = pollard_rho(n);
    factor_u64_into(d, out);
    factor_u64_into(n / d, out);
}

}  // namespace

std::vector<std::pair<uint64_t, int>> factor_u64(uint64_t n) {
    std::vector<std::pair<uint64_t, int>> out;
    if (n == 0) return out;
    for (uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        out.emplace_back(p, e);
    }
    factor_u64_into(n, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<mpz_class, int>> factor_integer(const mpz_class& n) {
    if (n <= 0) throw Error(errc::unfactorable, "nonpositive input " + n.get_str());
    if (n.fits_ulong_p()) {
        std::vector<std::pair<mpz_class, int>> out;
        for (const auto& [p, e] : factor_u64(n.get_ui())) out.emplace_back(mpz_class(p), e);
        return out;
    }
    std::vector<std::pair<mpz_class, int>> out;
    mpz_class rem = n;
    for (uint64_t p = 2; p <= 100000 && rem > 1; p += (p == 2 ? 1 : 2)) {
        mpz_class pp(p);
        if (pp * pp > rem) break;
        if (!mpz_divisible_ui_p(rem.get_mpz_t(), p)) continue;
        int e = 0;
        while (mpz_divisible_ui_p(rem.get_mpz_t(), p)) {
            mpz_divexact_ui(rem.get_mpz_t(), rem.get_mpz_t(), p);
            ++e;
        }
        out.emplace_back(mpz_class(p), e);
    }
    if (rem > 1) {
        if (rem.fits_ulong_p()) {
            for (const auto& [p, e] : factor_u64(rem.get_ui())) out.emplace_back(mpz_class(p), e);
        } else if (is_prime(rem)) {
            out.emplace_back(rem, 1);
        } else {
            mpz_class root;
            if (mpz_perfect_square_p(rem.get_mpz_t())) {
                mpz_sqrt(root.get_mpz_t(), rem.get_mpz_t());
                if (is_prime(root)) {
                    out.emplace_back(root, 2);
                    std::sort(out.begin(), out.end());
                    return out;
                }
            }
            throw Error(errc::unfactorable, "cofactor " + rem.get_str() + " resists factoring");
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

unsigned worker_count() {
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("CUBEKIT_THREADS")) {
        long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1 && static_cast<unsigned>(cap) < n) n = static_cast<unsigned>(cap);
    }
    return n;
}

}  // namespace cubekit
