#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cubekit/symbols.hpp"

namespace cubekit {

/**
 * FactoredForm: n = 2^f·3^μ·∏ pᵢ^{eᵢ} with every pᵢ ≡ 1 (mod 3), the
 * primes ≡ 1 (mod 9) listed first (indices 1..v), then those ≡ 4, 7
 * (mod 9) (indices v+1..w).
 */
struct FactoredForm {
    int f = 0;
    int mu = 0;
    std::vector<std::pair<Int, int>> ones;       // pᵢ ≡ 1 (mod 9)
    std::vector<std::pair<Int, int>> fourseven;  // pᵢ ≡ 4, 7 (mod 9)
    Int n;

    int v() const { return static_cast<int>(ones.size()); }
    int w() const { return static_cast<int>(ones.size() + fourseven.size()); }

    // All pᵢ in tuple order.
    std::vector<std::pair<Int, int>> split_primes() const;
};

// Decomposes cube-free n > 1 into the shape above.  Rejects n with a
// prime factor ≡ 2 (mod 3) other than 2 itself.
FactoredForm parse_form(const Int& n);

/**
 * GerthTuple: the 2w-tuple x(n).  With w > v the tail entries are
 * p_{v+1}p_i^{h_i} (v+2 ≤ i ≤ w) and p_{v+1}2^α, where h_i makes
 * p_{v+1}p_i^{h_i} ≡ 1 (mod 9) and α makes 2^α p_{v+1} ≡ ±1 (mod 9);
 * both choices are unique in {1,2}.
 */
struct GerthTuple {
    std::vector<EisensteinInt> entries;  // 2w entries
    std::vector<int> h_choices;          // indices v+2..w
    std::optional<int> alpha;
};

GerthTuple build_tuple(const FactoredForm& form);

// Row rank over 𝔽₃ by Gaussian elimination; m is row-major with entries
// in {0,1,2}.
int rank_f3(int rows, int cols, std::vector<uint8_t> m);

/**
 * GerthMatrix: the w × (2w+2) matrix B of Hilbert-symbol exponents.
 * Columns 2m−1, 2m sit at π_m, π_m′; column 2w+1 at the inert prime 2;
 * column 2w+2 is the wild symbol at 𝔭 (present since supported n have
 * n² ≢ 1 mod 9).
 */
struct GerthMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<uint8_t> entries;  // row-major, values in {0,1,2}
    int rank = 0;

    uint8_t at(int i, int j) const { return entries[static_cast<size_t>(i) * cols + j]; }
};

GerthMatrix build_matrix(const FactoredForm& form, const GerthTuple& tuple,
                         bool swap_conjugates = false);

// h₃(n) = 2w − rank B, the 3-rank of the class group of ℚ(∛n).
int h3(const Int& n, bool swap_conjugates = false);

enum class SplittingShape { TotallyRamified, PQ2, Unramified };

const char* splitting_shape_name(SplittingShape s) noexcept;

/**
 * Splitting data of a rational prime in 𝒪_F, F = ℚ(∛n): the shape per
 * the standard ramification case analysis, and n_p, the number of
 * primes of 𝒪_F over p.
 */
struct RamificationEntry {
    Int p;
    SplittingShape shape = SplittingShape::Unramified;
    int n_p = 1;
};

RamificationEntry ramification(const Int& n, const Int& p);

}  // namespace cubekit
