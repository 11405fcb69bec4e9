#include "cubekit/eisenstein.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

namespace cubekit {

const char* errc_name(errc c) noexcept {
    switch (c) {
        case errc::not_prime: return "NotPrime";
        case errc::not_coprime: return "NotCoprime";
        case errc::ramified_denominator: return "RamifiedDenominator";
        case errc::not_primary: return "NotPrimary";
        case errc::not_primaryizable: return "NotPrimaryizable";
        case errc::unfactorable: return "Unfactorable";
        case errc::not_cube_free: return "NotCubeFree";
        case errc::gerth_form_unsupported: return "GerthFormUnsupported";
        case errc::unsupported_ramification: return "UnsupportedRamification";
        case errc::wrong_residue_class: return "WrongResidueClass";
        case errc::unsupported_family: return "UnsupportedFamily";
        case errc::too_small: return "TooSmall";
        case errc::indefinite_form: return "IndefiniteForm";
        case errc::bad_flags: return "BadFlags";
        case errc::internal: return "Internal";
    }
    return "Unknown";
}

const char* conjugate_tag_name(ConjugateTag t) noexcept {
    switch (t) {
        case ConjugateTag::First: return "First";
        case ConjugateTag::Second: return "Second";
        case ConjugateTag::Inert: return "Inert";
        case ConjugateTag::Ramified: return "Ramified";
    }
    return "Unknown";
}

EisensteinInt EisensteinInt::pow(unsigned long e) const {
    EisensteinInt result(1);
    EisensteinInt base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

std::string EisensteinInt::str() const {
    std::ostringstream oss;
    oss << *this;
    return oss.str();
}

std::ostream& operator<<(std::ostream& os, const EisensteinInt& x) {
    if (x.b() == 0) return os << x.a();
    if (x.a() != 0) {
        os << x.a();
        if (x.b() > 0) os << "+";
    }
    if (x.b() == 1) {
        os << "ζ";
    } else if (x.b() == -1) {
        os << "-ζ";
    } else {
        os << x.b() << "ζ";
    }
    return os;
}

Int norm(const EisensteinInt& x) { return x.norm(); }

const std::array<EisensteinInt, 6>& units() {
    static const std::array<EisensteinInt, 6> u = {
        EisensteinInt(1, 0),  EisensteinInt(0, 1),  EisensteinInt(-1, -1),
        EisensteinInt(-1, 0), EisensteinInt(0, -1), EisensteinInt(1, 1),
    };  // 1, ζ, ζ², −1, −ζ, −ζ²
    return u;
}

bool is_primary(const EisensteinInt& x) {
    Int am1 = x.a() - 1;
    return mpz_divisible_ui_p(am1.get_mpz_t(), 3) &&
           mpz_divisible_ui_p(x.b().get_mpz_t(), 3);
}

EisensteinInt primary_associate(const EisensteinInt& x) {
    for (const EisensteinInt& u : units()) {
        EisensteinInt y = u * x;
        if (is_primary(y)) return y;
    }
    fail(errc::not_primaryizable,
         "no associate of " + x.str() + " is congruent to 1 mod 3 (3 divides its norm)");
}

std::optional<EisensteinInt> exact_div(const EisensteinInt& x, const EisensteinInt& d) {
    Int nd = d.norm();
    if (nd == 0) return std::nullopt;
    EisensteinInt t = x * d.conj();  // x/d = x·d̄ / N(d)
    if (!mpz_divisible_p(t.a().get_mpz_t(), nd.get_mpz_t()) ||
        !mpz_divisible_p(t.b().get_mpz_t(), nd.get_mpz_t()))
        return std::nullopt;
    return EisensteinInt(t.a() / nd, t.b() / nd);
}

std::pair<int, EisensteinInt> remove_factor(EisensteinInt x, const EisensteinInt& d) {
    if (x.is_zero() || d.norm() <= 1)
        fail(errc::internal, "remove_factor requires x != 0 and a non-unit divisor");
    int v = 0;
    while (true) {
        auto q = exact_div(x, d);
        if (!q) break;
        x = *q;
        ++v;
    }
    return {v, x};
}

bool is_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

namespace {

// First (a, b) with a² − ab + b² = p, b ≥ 1, found by bounded enumeration
// of b up to ⌈2√(p/3)⌉.
EisensteinInt find_norm_representation(const Int& p) {
    if (!p.fits_ulong_p() || p.get_ui() > (1UL << 60))
        fail(errc::unfactorable, "splitting search bound exceeded for p = " + p.get_str());
    unsigned long pu = p.get_ui();
    // disc = 4p − 3b² must be a square t² with t ≡ b (mod 2); a = (b+t)/2.
    for (unsigned long b = 1; 3 * b * b <= 4 * pu; ++b) {
        unsigned long disc = 4 * pu - 3 * b * b;
        unsigned long t = static_cast<unsigned long>(std::sqrt(static_cast<double>(disc)));
        while (t * t > disc) --t;
        while ((t + 1) * (t + 1) <= disc) ++t;
        if (t * t != disc) continue;
        if ((b + t) % 2 != 0) continue;
        unsigned long a = (b + t) / 2;
        EisensteinInt x{Int(a), Int(b)};
        if (x.norm() == p) return x;
    }
    fail(errc::internal, "no Eisenstein factorization found for split prime " + p.get_str());
}

}  // namespace

std::vector<PrimeOfK> split_rational_prime(const Int& p) {
    if (p < 2 || !is_prime(p)) fail(errc::not_prime, p.get_str() + " is not prime");
    if (p == 3) {
        return {PrimeOfK{EisensteinInt::p3(), 1, p, ConjugateTag::Ramified}};
    }
    if (p % 3 == 2) {
        // Inert; −p is the primary generator of (p).
        return {PrimeOfK{EisensteinInt(-p), 2, p, ConjugateTag::Inert}};
    }
    EisensteinInt x = primary_associate(find_norm_representation(p));
    EisensteinInt xc = x.conj();  // conjugate of a primary element is primary
    EisensteinInt pi = x.b() > 0 ? x : xc;
    EisensteinInt pi2 = x.b() > 0 ? xc : x;
    if ((pi * pi2) != EisensteinInt(p))
        fail(errc::internal, "conjugate product mismatch for p = " + p.get_str());
    return {PrimeOfK{pi, 1, p, ConjugateTag::First},
            PrimeOfK{pi2, 1, p, ConjugateTag::Second}};
}

std::pair<PrimeOfK, PrimeOfK> split_pair(const Int& p, bool swap_conjugates) {
    if (p % 3 != 1) fail(errc::wrong_residue_class, p.get_str() + " is not 1 mod 3");
    auto primes = split_rational_prime(p);
    if (swap_conjugates) {
        std::swap(primes[0], primes[1]);
        primes[0].tag = ConjugateTag::First;
        primes[1].tag = ConjugateTag::Second;
    }
    return {primes[0], primes[1]};
}

ResidueElement mod_reduce(const EisensteinInt& x, const PrimeOfK& q) {
    const Int& p = q.rational_prime;
    Int a = x.a() % p, b = x.b() % p;
    if (a < 0) a += p;
    if (b < 0) b += p;
    switch (q.tag) {
        case ConjugateTag::Inert:
            return ResidueElement{p, a, b};
        case ConjugateTag::Ramified: {
            // ζ ≡ 1 (mod 𝔭), residue field 𝔽₃.
            Int r = (a + b) % 3;
            return ResidueElement{Int(3), r, Int(0)};
        }
        default: {
            // ζ ↦ −a_q·b_q⁻¹ (mod p) for the generator a_q + b_qζ.
            Int bq = q.generator.b() % p;
            if (bq < 0) bq += p;
            Int inv;
            if (mpz_invert(inv.get_mpz_t(), bq.get_mpz_t(), p.get_mpz_t()) == 0)
                fail(errc::internal, "split generator with b not invertible mod p");
            Int z = (p - (q.generator.a() % p + p) % p) * inv % p;
            Int r = (a + b * z) % p;
            return ResidueElement{p, r, Int(0)};
        }
    }
}

}  // namespace cubekit
