#include "cubekit/symbols.hpp"

#include <ostream>
#include <sstream>

#include "cubekit/sieve.hpp"

namespace cubekit {

std::string MuCubeValue::str() const {
    switch (e_) {
        case 1: return "ζ";
        case 2: return "ζ^2";
        default: return "1";
    }
}

std::ostream& operator<<(std::ostream& os, MuCubeValue v) { return os << v.str(); }

namespace {

// x^e mod p in the residue field 𝔽_{p²} = ℤ[ζ]/p, coefficients (c0, c1).
ResidueElement powmod_fp2(ResidueElement x, const Int& e, const Int& p) {
    ResidueElement r{p, Int(1), Int(0)};
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        // r = r²
        Int a = r.c0, b = r.c1;
        r.c0 = (a * a - b * b) % p;
        r.c1 = (2 * a * b - b * b) % p;
        if (mpz_tstbit(e.get_mpz_t(), i)) {
            Int c0 = (r.c0 * x.c0 - r.c1 * x.c1) % p;
            Int c1 = (r.c0 * x.c1 + x.c0 * r.c1 - r.c1 * x.c1) % p;
            r.c0 = c0;
            r.c1 = c1;
        }
    }
    if (r.c0 < 0) r.c0 += p;
    if (r.c1 < 0) r.c1 += p;
    return r;
}

MuCubeValue identify_mu3_split(const Int& t, const Int& z, const Int& p) {
    if (t == 1) return MuCubeValue(0);
    if (t == z) return MuCubeValue(1);
    if (t == z * z % p) return MuCubeValue(2);
    fail(errc::internal, "residue power is not a cube root of unity (non-coprime input slipped validation)");
}

}  // namespace

MuCubeValue cubic_residue(const EisensteinInt& a, const PrimeOfK& q) {
    if (q.tag == ConjugateTag::Ramified)
        fail(errc::ramified_denominator, "cubic residue symbol is undefined at 𝔭");
    const Int& p = q.rational_prime;
    if (q.tag == ConjugateTag::Inert) {
        ResidueElement r = mod_reduce(a, q);
        if (r.is_zero())
            fail(errc::not_coprime, a.str() + " is divisible by the inert prime " + p.get_str());
        Int e = (p * p - 1) / 3;
        ResidueElement t = powmod_fp2(r, e, p);
        if (t.c1 == 0 && t.c0 == 1) return MuCubeValue(0);
        if (t.c0 == 0 && t.c1 == 1) return MuCubeValue(1);
        if (t.c0 == p - 1 && t.c1 == p - 1) return MuCubeValue(2);  // ζ² = −1−ζ
        fail(errc::internal, "residue power is not a cube root of unity (non-coprime input slipped validation)");
    }
    ResidueElement r = mod_reduce(a, q);
    if (r.is_zero())
        fail(errc::not_coprime, a.str() + " is divisible by the prime over " + p.get_str());
    Int z = mod_reduce(EisensteinInt::zeta(), q).c0;
    Int t;
    Int e = (p - 1) / 3;
    mpz_powm(t.get_mpz_t(), r.c0.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    return identify_mu3_split(t, z, p);
}

MuCubeValue cubic_residue_composite(const EisensteinInt& a, const EisensteinInt& d) {
    Int nd = d.norm();
    if (nd == 0) fail(errc::not_coprime, "zero denominator");
    if (nd == 1) return MuCubeValue(0);  // unit denominator, empty product
    if (mpz_divisible_ui_p(nd.get_mpz_t(), 3))
        fail(errc::ramified_denominator, "denominator norm divisible by 3");
    Int na = a.norm();
    Int g;
    mpz_gcd(g.get_mpz_t(), na.get_mpz_t(), nd.get_mpz_t());
    if (g != 1) fail(errc::not_coprime, "arguments share a prime factor");

    std::vector<std::pair<Int, int>> factors;
    try {
        factors = factor_integer(nd);
    } catch (const Error&) {
        fail(errc::unfactorable, "denominator norm " + nd.get_str() + " resists factoring");
    }
    MuCubeValue acc(0);
    for (const auto& [p, e] : factors) {
        if (p % 3 == 2) {
            PrimeOfK q = split_rational_prime(p)[0];
            auto [v, rest] = remove_factor(d, EisensteinInt(p));
            (void)rest;
            if (v > 0) acc = acc * cubic_residue(a, q).pow(v);
        } else {
            auto [pi, pi2] = split_pair(p);
            auto [v1, r1] = remove_factor(d, pi.generator);
            if (v1 > 0) acc = acc * cubic_residue(a, pi).pow(v1);
            auto [v2, r2] = remove_factor(d, pi2.generator);
            if (v2 > 0) acc = acc * cubic_residue(a, pi2).pow(v2);
            (void)r1;
            (void)r2;
        }
    }
    return acc;
}

namespace {

// q-adic valuation of x together with the q-free cofactor.
std::pair<int, EisensteinInt> valuation_at(const EisensteinInt& x, const PrimeOfK& q) {
    EisensteinInt g = q.tag == ConjugateTag::Inert ? EisensteinInt(q.rational_prime)
                                                   : q.generator;
    return remove_factor(x, g);
}

}  // namespace

MuCubeValue hilbert_tame(const EisensteinInt& a, const EisensteinInt& b, const PrimeOfK& q) {
    if (q.tag == ConjugateTag::Ramified)
        fail(errc::ramified_denominator, "tame symbol is undefined at 𝔭");
    if (a.is_zero() || b.is_zero()) fail(errc::internal, "Hilbert symbol of zero");
    auto [va, ua] = valuation_at(a, q);
    auto [vb, ub] = valuation_at(b, q);
    // c = (−1)^{v(a)v(b)} a^{v(b)} b^{−v(a)}; the sign is a cube, so the
    // symbol reduces to the unit parts.
    MuCubeValue acc(0);
    if (vb % 3 != 0) acc = acc * cubic_residue(ua, q).pow(vb);
    if (va % 3 != 0) acc = acc * cubic_residue(ub, q).pow(-va);
    return acc;
}

MuCubeValue hilbert_wild(const EisensteinInt& a, const EisensteinInt& b) {
    if (a.is_zero() || b.is_zero()) fail(errc::internal, "Hilbert symbol of zero");
    Int support = a.norm() * b.norm();
    std::vector<std::pair<Int, int>> factors;
    try {
        factors = factor_integer(support);
    } catch (const Error&) {
        fail(errc::unfactorable, "argument norms resist factoring: " + support.get_str());
    }
    MuCubeValue acc(0);
    for (const auto& [p, e] : factors) {
        (void)e;
        if (p == 3) continue;  // the 𝔭 component is the one being solved for
        for (const PrimeOfK& q : split_rational_prime(p)) acc = acc * hilbert_tame(a, b, q);
    }
    return acc.inverse();
}

bool reciprocity_check(const EisensteinInt& a, const EisensteinInt& b) {
    if (!is_primary(a)) fail(errc::not_primary, a.str() + " is not primary");
    if (!is_primary(b)) fail(errc::not_primary, b.str() + " is not primary");
    return cubic_residue_composite(a, b) == cubic_residue_composite(b, a);
}

SUnitPair SUnitPair::from_first(const std::array<uint8_t, 4>& f) {
    SUnitPair p;
    for (int i = 0; i < 4; ++i) {
        p.first[i] = f[i] % 3;
        p.second[i] = (3 - p.first[i]) % 3;
    }
    return p;
}

SUnitPair SUnitPair::make(const std::array<uint8_t, 4>& f, const std::array<uint8_t, 4>& s) {
    SUnitPair p = from_first(f);
    for (int i = 0; i < 4; ++i)
        if (s[i] % 3 != p.second[i])
            fail(errc::internal, "S-unit pair violates the norm-kernel condition");
    return p;
}

SUnitPair SUnitPair::mul(const SUnitPair& other) const {
    std::array<uint8_t, 4> f;
    for (int i = 0; i < 4; ++i) f[i] = (first[i] + other.first[i]) % 3;
    return from_first(f);
}

SUnitPair SUnitPair::pow(int t) const {
    std::array<uint8_t, 4> f;
    int tt = ((t % 3) + 3) % 3;
    for (int i = 0; i < 4; ++i) f[i] = static_cast<uint8_t>((first[i] * tt) % 3);
    return from_first(f);
}

bool SUnitPair::is_identity() const {
    return first[0] == 0 && first[1] == 0 && first[2] == 0 && first[3] == 0;
}

namespace {

void render_side(std::ostream& os, const std::array<uint8_t, 4>& v) {
    static const char* names[4] = {"ζ", "𝔭", "π", "π'"};
    bool any = false;
    for (int i = 0; i < 4; ++i) {
        if (v[i] == 0) continue;
        if (any) os << "·";
        os << names[i];
        if (v[i] > 1) os << "^" << int(v[i]);
        any = true;
    }
    if (!any) os << "1";
}

}  // namespace

std::string SUnitPair::str() const {
    std::ostringstream oss;
    oss << "(";
    render_side(oss, first);
    oss << " | ";
    render_side(oss, second);
    oss << ")";
    return oss.str();
}

}  // namespace cubekit
