#include "cubekit/classrank.hpp"

#include <algorithm>

#include "cubekit/sieve.hpp"

namespace cubekit {

std::vector<std::pair<Int, int>> FactoredForm::split_primes() const {
    std::vector<std::pair<Int, int>> out = ones;
    out.insert(out.end(), fourseven.begin(), fourseven.end());
    return out;
}

FactoredForm parse_form(const Int& n) {
    if (n <= 1) fail(errc::gerth_form_unsupported, "n must exceed 1");
    FactoredForm form;
    form.n = n;
    for (const auto& [p, e] : factor_integer(n)) {
        if (e >= 3) fail(errc::not_cube_free, n.get_str() + " is divisible by " + p.get_str() + "^3");
        if (p == 2) {
            form.f = e;
        } else if (p == 3) {
            form.mu = e;
        } else if (p % 3 == 1) {
            if (p % 9 == 1)
                form.ones.emplace_back(p, e);
            else
                form.fourseven.emplace_back(p, e);
        } else {
            fail(errc::gerth_form_unsupported,
                 "prime factor " + p.get_str() + " is 2 mod 3");
        }
    }
    std::sort(form.ones.begin(), form.ones.end());
    std::sort(form.fourseven.begin(), form.fourseven.end());
    return form;
}

namespace {

int pick_h(const Int& p_lead, const Int& p_i) {
    for (int h = 1; h <= 2; ++h) {
        Int prod = p_lead;
        for (int k = 0; k < h; ++k) prod *= p_i;
        if (prod % 9 == 1) return h;
    }
    fail(errc::internal, "no h makes p_{v+1} p_i^h = 1 mod 9");
}

int pick_alpha(const Int& p_lead) {
    for (int alpha = 1; alpha <= 2; ++alpha) {
        Int prod = p_lead << alpha;
        Int r = prod % 9;
        if (r == 1 || r == 8) return alpha;
    }
    fail(errc::internal, "no alpha makes 2^alpha p_{v+1} = ±1 mod 9");
}

}  // namespace

GerthTuple build_tuple(const FactoredForm& form) {
    GerthTuple tuple;
    const int v = form.v(), w = form.w();
    auto primes = form.split_primes();

    // First half: π_i π_i'^2 for each split prime.
    for (const auto& [p, e] : primes) {
        (void)e;
        auto [pi, pi2] = split_pair(p);
        tuple.entries.push_back(pi.generator * pi2.generator * pi2.generator);
    }
    if (w == v) {
        for (const auto& [p, e] : primes) {
            (void)e;
            tuple.entries.push_back(EisensteinInt(p));
        }
        return tuple;
    }
    for (int i = 0; i < v; ++i) tuple.entries.push_back(EisensteinInt(primes[i].first));
    const Int& lead = primes[v].first;  // p_{v+1}
    for (int i = v + 1; i < w; ++i) {
        int h = pick_h(lead, primes[i].first);
        tuple.h_choices.push_back(h);
        Int x = lead;
        for (int k = 0; k < h; ++k) x *= primes[i].first;
        tuple.entries.push_back(EisensteinInt(x));
    }
    int alpha = pick_alpha(lead);
    tuple.alpha = alpha;
    tuple.entries.push_back(EisensteinInt(lead << alpha));
    return tuple;
}

int rank_f3(int rows, int cols, std::vector<uint8_t> m) {
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r) {
            if (m[static_cast<size_t>(r) * cols + col] != 0) { pivot = r; break; }
        }
        if (pivot < 0) continue;
        for (int j = 0; j < cols; ++j)
            std::swap(m[static_cast<size_t>(pivot) * cols + j],
                      m[static_cast<size_t>(rank) * cols + j]);
        uint8_t inv = m[static_cast<size_t>(rank) * cols + col] == 1 ? 1 : 2;
        for (int j = 0; j < cols; ++j) {
            uint8_t& e = m[static_cast<size_t>(rank) * cols + j];
            e = static_cast<uint8_t>((e * inv) % 3);
        }
        for (int r = 0; r < rows; ++r) {
            if (r == rank) continue;
            uint8_t factor = m[static_cast<size_t>(r) * cols + col];
            if (factor == 0) continue;
            for (int j = 0; j < cols; ++j) {
                uint8_t& e = m[static_cast<size_t>(r) * cols + j];
                e = static_cast<uint8_t>((e + (3 - factor) * m[static_cast<size_t>(rank) * cols + j]) % 3);
            }
        }
        ++rank;
    }
    return rank;
}

GerthMatrix build_matrix(const FactoredForm& form, const GerthTuple& tuple,
                         bool swap_conjugates) {
    Int n2 = form.n * form.n;
    if (n2 % 9 == 1)
        fail(errc::unsupported_ramification,
             "n^2 = 1 mod 9: the wild matrix column is undefined for " + form.n.get_str());

    const int w = form.w();
    GerthMatrix B;
    B.rows = w;
    B.cols = 2 * w + 2;
    B.entries.assign(static_cast<size_t>(B.rows) * B.cols, 0);

    std::vector<std::pair<PrimeOfK, PrimeOfK>> pairs;
    for (const auto& [p, e] : form.split_primes()) {
        (void)e;
        pairs.push_back(split_pair(p, swap_conjugates));
    }
    PrimeOfK two = split_rational_prime(Int(2))[0];
    EisensteinInt nk(form.n);
    EisensteinInt p3 = EisensteinInt::p3();

    for (int i = 0; i < w; ++i) {
        const EisensteinInt& x = tuple.entries[static_cast<size_t>(w + i)];
        for (int m = 0; m < w; ++m) {
            B.entries[static_cast<size_t>(i) * B.cols + 2 * m] =
                static_cast<uint8_t>(hilbert_tame(x, nk, pairs[m].first).exponent());
            B.entries[static_cast<size_t>(i) * B.cols + 2 * m + 1] =
                static_cast<uint8_t>(hilbert_tame(x, nk, pairs[m].second).exponent());
        }
        B.entries[static_cast<size_t>(i) * B.cols + 2 * w] =
            static_cast<uint8_t>(hilbert_tame(x, nk, two).exponent());
        B.entries[static_cast<size_t>(i) * B.cols + 2 * w + 1] =
            static_cast<uint8_t>(hilbert_wild(x, p3).exponent());
    }
    B.rank = rank_f3(B.rows, B.cols, B.entries);
    return B;
}

int h3(const Int& n, bool swap_conjugates) {
    FactoredForm form = parse_form(n);
    GerthTuple tuple = build_tuple(form);
    GerthMatrix B = build_matrix(form, tuple, swap_conjugates);
    return 2 * form.w() - B.rank;
}

const char* splitting_shape_name(SplittingShape s) noexcept {
    switch (s) {
        case SplittingShape::TotallyRamified: return "TotallyRamified";
        case SplittingShape::PQ2: return "PQ2";
        case SplittingShape::Unramified: return "Unramified";
    }
    return "Unknown";
}

RamificationEntry ramification(const Int& n, const Int& p) {
    if (n <= 1) fail(errc::not_cube_free, "ramification needs a cube-free n > 1");
    if (!is_prime(p)) fail(errc::not_prime, p.get_str() + " is not prime");
    if (p != 3 && mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t()))
        return {p, SplittingShape::TotallyRamified, 1};
    if (p == 3) {
        if (n * n % 9 == 1) return {p, SplittingShape::PQ2, 2};
        return {p, SplittingShape::TotallyRamified, 1};
    }
    // p unramified (p ∤ 3n): count the irreducible factors of x³ − n
    // over 𝔽_p, i.e. the cube roots of n.
    if (p == 2) {
        // x³ − n = x³ + 1 = (x+1)(x²+x+1) over 𝔽₂ for odd n.
        return {p, SplittingShape::Unramified, 2};
    }
    if (p % 3 == 2) return {p, SplittingShape::Unramified, 2};  // unique cube root
    Int t, e = (p - 1) / 3, nn = n % p;
    mpz_powm(t.get_mpz_t(), nn.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    return {p, SplittingShape::Unramified, t == 1 ? 3 : 1};
}

}  // namespace cubekit
