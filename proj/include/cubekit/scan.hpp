#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cubekit/descent.hpp"

namespace cubekit {

/**
 * ScanRecord: one prime of a family scan.  h3 is the 3-rank of the
 * family's criterion field (absent for the l and l2 families, where the
 * criterion runs through h₂ instead); symbol_trivial is the cubic
 * character of 2 or 3 mod ℓ evaluated on the independent fast path.
 */
struct ScanRecord {
    uint64_t ell = 0;
    Family family = Family::Ell;
    std::optional<int> h3;
    bool symbol_trivial = false;
    int root_number = 1;
    Outcome verdict = Outcome::Undetermined;
    std::optional<bool> bqf_represented;

    bool operator==(const ScanRecord& other) const = default;
};

struct ScanSummary {
    Family family = Family::Ell;
    int class_mod9 = 1;
    uint64_t limit = 0;
    uint64_t count = 0;
    uint64_t symbol_trivial_count = 0;
    uint64_t root_plus_count = 0;
    uint64_t proven_non_cube_sum = 0;
    uint64_t undetermined = 0;
    uint64_t bqf_mismatches = 0;  // records violating the BQF/symbol set equality

    double symbol_trivial_fraction() const {
        return count ? static_cast<double>(symbol_trivial_count) / static_cast<double>(count) : 0.0;
    }
};

struct ScanOptions {
    int class_mod9 = 0;   // 0 = family default
    bool with_bqf = false;
    unsigned threads = 0;  // 0 = worker_count()
};

// Scans primes ℓ ≤ limit in the family's residue class; records are
// produced in ascending ℓ regardless of worker count.
std::pair<std::vector<ScanRecord>, ScanSummary> scan_family(Family f, uint64_t limit,
                                                            const ScanOptions& opts = {});

// Fast density counter: among primes ℓ ≤ limit with ℓ ≡ klass (mod
// modulus), how many have trivial cubic character of `base` mod ℓ.
struct DensityCount {
    uint64_t considered = 0;
    uint64_t trivial = 0;

    double trivial_fraction() const {
        return considered ? static_cast<double>(trivial) / static_cast<double>(considered) : 0.0;
    }
};

DensityCount count_cubic_character(int base, int klass, int modulus, uint64_t limit,
                                   unsigned threads = 0);

}  // namespace cubekit
