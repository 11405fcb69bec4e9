#include "cubekit/scan.hpp"

#include <thread>

#include "cubekit/bqf.hpp"
#include "cubekit/sieve.hpp"

namespace cubekit {

namespace {

int symbol_base(Family f) {
    switch (f) {
        case Family::TwoEll:
        case Family::TwoEllSquared:
        case Family::EllSquared: return 2;
        default: return 3;
    }
}

// BQF fact paired with the family's character: the −108 form represents
// ℓ exactly when (2/ℓ)₃ ≠ 1; the −243 form exactly when (3/ℓ)₃ = 1.
bool bqf_matches_symbol(Family f, uint64_t ell, bool symbol_trivial, bool& represented) {
    if (symbol_base(f) == 2) {
        represented = bqf_represents(kFormCharTwo, mpz_class(static_cast<unsigned long>(ell)))
                          .has_value();
        return represented == !symbol_trivial;
    }
    represented = bqf_represents(kFormCharThree, mpz_class(static_cast<unsigned long>(ell)))
                      .has_value();
    return represented == symbol_trivial;
}

ScanRecord make_record(Family f, uint64_t ell, bool with_bqf) {
    ScanRecord rec;
    rec.ell = ell;
    rec.family = f;
    Int ell_z(static_cast<unsigned long>(ell));
    Int n = family_n(f, ell_z);
    rec.symbol_trivial = cubic_character_mod_ell(symbol_base(f), ell);
    rec.root_number = root_number(n).w;
    if (auto field = family_h3_field(f, ell_z)) rec.h3 = h3(*field);

    ClassifyOptions opts;
    opts.witness_search = false;  // batch mode: proof routes only
    rec.verdict = classify(n, opts).outcome;

    if (with_bqf) {
        bool represented = false;
        bqf_matches_symbol(f, ell, rec.symbol_trivial, represented);
        rec.bqf_represented = represented;
    }
    return rec;
}

}  // namespace

std::pair<std::vector<ScanRecord>, ScanSummary> scan_family(Family f, uint64_t limit,
                                                            const ScanOptions& opts) {
    int cls = opts.class_mod9 ? opts.class_mod9 : family_class_mod9(f);
    if (cls != family_class_mod9(f)) {
        // Only the l and l2 families admit an override, and only within
        // the classes where the record fields stay defined (ℓ ≡ 1 mod 3).
        bool overridable = (f == Family::Ell || f == Family::EllSquared) &&
                           (cls == 1 || cls == 4 || cls == 7);
        if (!overridable)
            fail(errc::bad_flags, std::string("class ") + std::to_string(cls) +
                                      " mod 9 is not valid for family " + family_name(f));
    }
    if (limit > (1u << 31))
        fail(errc::bad_flags, "scan limit exceeds the sieve range");

    std::vector<uint32_t> primes = primes_up_to(static_cast<uint32_t>(limit));
    std::vector<uint64_t> targets;
    for (uint32_t p : primes)
        if (p % 9 == static_cast<uint32_t>(cls) && p > 3) targets.push_back(p);

    unsigned threads = opts.threads ? opts.threads : worker_count();
    if (threads > targets.size()) threads = std::max<size_t>(1, targets.size());

    std::vector<std::vector<ScanRecord>> chunks(threads);
    std::vector<std::thread> workers;
    size_t per = (targets.size() + threads - 1) / std::max<unsigned>(threads, 1);
    for (unsigned t = 0; t < threads; ++t) {
        size_t lo = t * per, hi = std::min(targets.size(), lo + per);
        if (lo >= hi) continue;
        workers.emplace_back([&, t, lo, hi]() {
            auto& out = chunks[t];
            out.reserve(hi - lo);
            for (size_t i = lo; i < hi; ++i)
                out.push_back(make_record(f, targets[i], opts.with_bqf));
        });
    }
    for (auto& w : workers) w.join();

    std::vector<ScanRecord> records;
    records.reserve(targets.size());
    for (auto& c : chunks) records.insert(records.end(), c.begin(), c.end());

    ScanSummary summary;
    summary.family = f;
    summary.class_mod9 = cls;
    summary.limit = limit;
    for (const ScanRecord& r : records) {
        ++summary.count;
        if (r.symbol_trivial) ++summary.symbol_trivial_count;
        if (r.root_number == 1) ++summary.root_plus_count;
        if (r.verdict == Outcome::ProvablyNonCubeSum) ++summary.proven_non_cube_sum;
        if (r.verdict == Outcome::Undetermined) ++summary.undetermined;
        if (r.bqf_represented) {
            bool expected = symbol_base(f) == 2 ? !r.symbol_trivial : r.symbol_trivial;
            if (*r.bqf_represented != expected) ++summary.bqf_mismatches;
        }
    }
    return {std::move(records), summary};
}

DensityCount count_cubic_character(int base, int klass, int modulus, uint64_t limit,
                                   unsigned threads) {
    if (modulus != 3 && modulus != 9) fail(errc::bad_flags, "modulus must be 3 or 9");
    if (limit > (1u << 31)) fail(errc::bad_flags, "limit exceeds the sieve range");
    std::vector<uint32_t> primes = primes_up_to(static_cast<uint32_t>(limit));
    std::vector<uint64_t> targets;
    for (uint32_t p : primes)
        if (p > 3 && p % static_cast<uint32_t>(modulus) == static_cast<uint32_t>(klass) &&
            p % 3 == 1)
            targets.push_back(p);

    if (threads == 0) threads = worker_count();
    if (threads > targets.size()) threads = std::max<size_t>(1, targets.size());
    std::vector<uint64_t> trivial_counts(threads, 0);
    std::vector<std::thread> workers;
    size_t per = (targets.size() + threads - 1) / std::max<unsigned>(threads, 1);
    for (unsigned t = 0; t < threads; ++t) {
        size_t lo = t * per, hi = std::min(targets.size(), lo + per);
        if (lo >= hi) continue;
        workers.emplace_back([&, t, lo, hi]() {
            uint64_t acc = 0;
            for (size_t i = lo; i < hi; ++i)
                if (cubic_character_mod_ell(base, targets[i])) ++acc;
            trivial_counts[t] = acc;
        });
    }
    for (auto& w : workers) w.join();

    DensityCount out;
    out.considered = targets.size();
    for (uint64_t c : trivial_counts) out.trivial += c;
    return out;
}

}  // namespace cubekit
