#include "cubekit/oracle.hpp"

#include <cmath>

#include "cubekit/errors.hpp"
#include "cubekit/sieve.hpp"

namespace cubekit {

std::string CubeSumWitness::str() const {
    return ax.get_str() + "/" + c.get_str() + ", " + ay.get_str() + "/" + c.get_str();
}

namespace {

using i128 = __int128;

// Truncated-toward-zero integer cube root with exact flag.
bool exact_cbrt_i128(i128 r, i128& root) {
    bool neg = r < 0;
    unsigned __int128 m = neg ? static_cast<unsigned __int128>(-r) : static_cast<unsigned __int128>(r);
    long double est = cbrtl(static_cast<long double>(m));
    i128 t = static_cast<i128>(est);
    while (t > 0 && static_cast<unsigned __int128>(t) * t * t > m) --t;
    while (static_cast<unsigned __int128>(t + 1) * (t + 1) * (t + 1) <= m) ++t;
    if (static_cast<unsigned __int128>(t) * t * t != m) return false;
    root = neg ? -t : t;
    return true;
}

std::optional<CubeSumWitness> normalize(const mpz_class& ax, const mpz_class& ay, const mpz_class& c) {
    CubeSumWitness w;
    if (ax >= ay) {
        w.ax = ax;
        w.ay = ay;
    } else {
        w.ax = ay;
        w.ay = ax;
    }
    w.c = c;
    return w;
}

std::optional<CubeSumWitness> search_i128(i128 n, long denom_bound, long num_bound) {
    for (long c = 1; c <= denom_bound; ++c) {
        i128 target = n * c * c * c;
        for (long a = 0; a <= num_bound; ++a) {
            i128 a3 = static_cast<i128>(a) * a * a;
            i128 root;
            if (exact_cbrt_i128(target - a3, root))
                return normalize(mpz_class(static_cast<long>(a)),
                                 mpz_class(static_cast<long>(root)), mpz_class(c));
            if (a > 0 && exact_cbrt_i128(target + a3, root))
                return normalize(mpz_class(static_cast<long>(-a)),
                                 mpz_class(static_cast<long>(root)), mpz_class(c));
        }
    }
    return std::nullopt;
}

std::optional<CubeSumWitness> search_mpz(const mpz_class& n, long denom_bound, long num_bound) {
    mpz_class a3, r, root;
    for (long c = 1; c <= denom_bound; ++c) {
        mpz_class target = n * c * c * c;
        for (long a = 0; a <= num_bound; ++a) {
            a3 = mpz_class(a) * a * a;
            for (int sign = 0; sign < (a > 0 ? 2 : 1); ++sign) {
                if (sign == 0) r = target - a3; else r = target + a3;
                if (mpz_root(root.get_mpz_t(), r.get_mpz_t(), 3) != 0)
                    return normalize(mpz_class(sign == 0 ? a : -a), root, mpz_class(c));
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<CubeSumWitness> find_witness(const mpz_class& n, long denom_bound, long num_bound) {
    if (n < 1) fail(errc::too_small, "witness search needs n >= 1");
    if (denom_bound < 1 || num_bound < 0) fail(errc::bad_flags, "bounds must be positive");

    std::optional<CubeSumWitness> found;
    // 128-bit fast path; n·c³ and bound³ must both stay well inside range.
    if (n.fits_ulong_p() && num_bound < (1L << 40) && denom_bound < (1L << 20) &&
        mpz_sizeinbase(n.get_mpz_t(), 2) + 3 * 21 < 120) {
        found = search_i128(static_cast<i128>(n.get_ui()), denom_bound, num_bound);
    } else {
        found = search_mpz(n, denom_bound, num_bound);
    }
    if (found && !found->verifies(n))
        fail(errc::internal, "witness failed exact re-verification");
    return found;
}

bool cubic_character_mod_ell(int64_t a, uint64_t ell) {
    if (!is_prime_u64(ell)) fail(errc::not_prime, std::to_string(ell) + " is not prime");
    if (ell % 3 != 1) fail(errc::wrong_residue_class, std::to_string(ell) + " is not 1 mod 3");
    uint64_t r = static_cast<uint64_t>(((a % static_cast<int64_t>(ell)) + static_cast<int64_t>(ell)) %
                                       static_cast<int64_t>(ell));
    if (r == 0) fail(errc::not_coprime, "argument divisible by " + std::to_string(ell));
    uint64_t e = (ell - 1) / 3;
    unsigned __int128 acc = 1, base = r;
    while (e > 0) {
        if (e & 1) acc = (acc * base) % ell;
        base = (base * base) % ell;
        e >>= 1;
    }
    return acc == 1;
}

}  // namespace cubekit
