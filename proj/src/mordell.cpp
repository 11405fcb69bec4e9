#include "cubekit/mordell.hpp"

#include <algorithm>

#include "cubekit/sieve.hpp"

namespace cubekit {

Int cube_free_part(const Int& n) {
    if (n < 1) fail(errc::too_small, "cube-free part needs n >= 1");
    Int out = 1;
    for (const auto& [p, e] : factor_integer(n)) {
        for (int k = 0; k < e % 3; ++k) out *= p;
    }
    return out;
}

RootNumberReport root_number(const Int& n) {
    if (n <= 2) fail(errc::too_small, "root number formula needs n > 2");
    if (cube_free_part(n) != n) fail(errc::not_cube_free, n.get_str() + " is not cube-free");

    RootNumberReport report;
    report.n = n;
    Int r9 = n % 9;
    report.w3 = (r9 == 1 || r9 == 8 || r9 == 3 || r9 == 6) ? -1 : 1;
    report.local_factors.emplace_back(Int(3), report.w3);
    int prod = report.w3;
    for (const auto& [p, e] : factor_integer(n)) {
        (void)e;
        if (p == 3) continue;
        int wp = (p % 3 == 2) ? -1 : 1;
        report.local_factors.emplace_back(p, wp);
        prod *= wp;
    }
    report.w = -prod;
    return report;
}

const char* model_case_name(ModelCase c) noexcept {
    switch (c) {
        case ModelCase::I: return "I";
        case ModelCase::II: return "II";
        case ModelCase::III: return "III";
        case ModelCase::IV: return "IV";
    }
    return "?";
}

CurveReductionReport minimal_model(const Int& n) {
    if (n < 1) fail(errc::too_small, "minimal model needs n >= 1");
    CurveReductionReport report;
    report.n = n;
    report.c4 = 0;

    bool even = mpz_divisible_ui_p(n.get_mpz_t(), 2) != 0;
    bool nine = mpz_divisible_ui_p(n.get_mpz_t(), 9) != 0;
    Int n2 = n * n;
    if (even && !nine) {
        report.model_case = ModelCase::I;  // y² = x³ − (27/4)n²
        report.a3 = 0;
        report.a6 = mpq_class(Int(-27 * n2), Int(4));
    } else if (!even && !nine) {
        report.model_case = ModelCase::II;  // y² + y = x³ − (27n²+1)/4
        report.a3 = 1;
        report.a6 = mpq_class(Int(-(27 * n2 + 1)), Int(4));
    } else if (even && nine) {
        report.model_case = ModelCase::III;  // y² = x³ − n²/108
        report.a3 = 0;
        report.a6 = mpq_class(Int(-n2), Int(108));
    } else {
        report.model_case = ModelCase::IV;  // y² + y = x³ − (3n′²+1)/4, n′ = n/9
        report.a3 = 1;
        Int np = n / 9;
        report.a6 = mpq_class(Int(-(3 * np * np + 1)), Int(4));
    }
    report.a6.canonicalize();

    Int n4 = n2 * n2;
    if (nine) {
        report.discriminant = mpq_class(Int(-n4), Int(27));
    } else {
        Int d = n4;
        for (int i = 0; i < 9; ++i) d *= 3;
        report.discriminant = mpq_class(Int(-d));
    }
    report.discriminant.canonicalize();

    report.bad_primes.emplace_back(Int(3), ReductionType::Additive);
    for (const auto& [p, e] : factor_integer(n)) {
        (void)e;
        if (p == 3) continue;
        report.bad_primes.emplace_back(p, ReductionType::Additive);
    }
    std::sort(report.bad_primes.begin(), report.bad_primes.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return report;
}

TwoSelmerBound two_selmer_bound(const Int& n, int h2) {
    if (n <= 2) fail(errc::too_small, "two_selmer_bound needs cube-free n > 2");
    if (cube_free_part(n) != n) fail(errc::not_cube_free, n.get_str() + " is not cube-free");
    if (h2 < 0) fail(errc::bad_flags, "h2 must be nonnegative");

    TwoSelmerBound out;
    out.n = n;
    out.cf4n = cube_free_part(4 * n);
    out.h2_input = h2;
    out.u_term = 1;  // Δ(E^min) < 0 in every case
    out.e_term = 0;  // no multiplicative reduction
    out.additive_correction = 0;
    // Additive primes of E are exactly p | 3n; n_p counted in ℚ(∛cf(4n)).
    std::vector<Int> additive{Int(3)};
    for (const auto& [p, e] : factor_integer(n)) {
        (void)e;
        if (p != 3) additive.push_back(p);
    }
    for (const Int& p : additive)
        out.additive_correction += ramification(out.cf4n, p).n_p - 1;
    out.bound = out.h2_input + out.u_term + out.e_term + out.additive_correction;
    return out;
}

Parity parity_expectation(const Int& n, int p) {
    if (p != 2 && p != 3) fail(errc::bad_flags, "parity expectation is stated for p in {2,3}");
    return root_number(n).w == 1 ? Parity::Even : Parity::Odd;
}

}  // namespace cubekit
