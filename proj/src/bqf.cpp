#include "cubekit/bqf.hpp"

#include <cmath>
#include <cstdlib>

#include "cubekit/errors.hpp"

namespace cubekit {

namespace {

bool exact_sqrt_u64(uint64_t m, uint64_t& root) {
    uint64_t t = static_cast<uint64_t>(std::sqrt(static_cast<double>(m)));
    while (t > 0 && t * t > m) --t;
    while ((t + 1) * (t + 1) <= m) ++t;
    if (t * t != m) return false;
    root = t;
    return true;
}

}  // namespace

std::optional<BqfWitness> bqf_represents(const BqfForm& form, const mpz_class& m) {
    if (std::labs(form.a) > 1000000 || std::labs(form.b) > 1000000 || std::labs(form.c) > 1000000)
        fail(errc::bad_flags, "form coefficients beyond the supported range");
    if (!form.positive_definite())
        fail(errc::indefinite_form, "form is not positive definite");
    if (m < 0) return std::nullopt;
    if (!m.fits_slong_p() || m > 1000000000000L)
        fail(errc::bad_flags, "representation target too large: " + m.get_str());
    long target = m.get_si();
    long absd = -form.discriminant();

    // a·x² + b·xy + c·y² = t ⟹ (2ax + by)² + |D|y² = 4at, so
    // |y| ≤ √(4at/|D|); per y, x solves a quadratic with discriminant
    // Dy² + 4at ≥ 0, checked for an exact square root.
    long ymax = static_cast<long>(std::sqrt(4.0 * form.a * target / absd)) + 1;
    for (long y = 0; y <= ymax; ++y) {
        for (int sign = 0; sign < (y == 0 ? 1 : 2); ++sign) {
            long yy = sign == 0 ? y : -y;
            long long disc = static_cast<long long>(form.discriminant()) * yy * yy +
                             4LL * form.a * target;
            if (disc < 0) continue;
            uint64_t root;
            if (!exact_sqrt_u64(static_cast<uint64_t>(disc), root)) continue;
            for (int rs = 0; rs < 2; ++rs) {
                long long num = -static_cast<long long>(form.b) * yy +
                                (rs == 0 ? static_cast<long long>(root) : -static_cast<long long>(root));
                if (num % (2LL * form.a) != 0) continue;
                long x = static_cast<long>(num / (2LL * form.a));
                if (static_cast<long long>(form.a) * x * x +
                        static_cast<long long>(form.b) * x * yy +
                        static_cast<long long>(form.c) * yy * yy ==
                    target)
                    return BqfWitness{x, yy};
                if (root == 0) break;
            }
        }
    }
    return std::nullopt;
}

}  // namespace cubekit
