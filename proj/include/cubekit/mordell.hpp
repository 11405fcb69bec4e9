#pragma once

#include <utility>
#include <vector>

#include "cubekit/classrank.hpp"

namespace cubekit {

// n/m³ for the largest m with m³ | n.
Int cube_free_part(const Int& n);

/**
 * Birch–Stephens root number of E_{−432n²}: w(n) = −∏ w_p(n), with
 * w₃ = −1 iff n ≡ ±1, ±3 (mod 9), and for p ≠ 3, w_p = −1 iff p | n
 * and p ≡ 2 (mod 3).
 */
struct RootNumberReport {
    Int n;
    int w3 = 1;
    std::vector<std::pair<Int, int>> local_factors;  // (p, w_p) over p | 3n
    int w = 1;
};

// Requires cube-free n > 2; callers pass cf(n) explicitly.
RootNumberReport root_number(const Int& n);

enum class ModelCase { I, II, III, IV };

const char* model_case_name(ModelCase c) noexcept;

enum class ReductionType { Additive };

/**
 * Global minimal Weierstrass model of E_{−432n²}: y² + a3·y = x³ + a6,
 * selected by (2|n, 9|n), with Δ = −3⁹n⁴ when 9 ∤ n and −n⁴/27 when
 * 9 | n, c₄ = 0, and additive reduction exactly at the primes dividing
 * 3n.
 */
struct CurveReductionReport {
    Int n;
    ModelCase model_case = ModelCase::I;
    int a3 = 0;
    mpq_class a6;
    mpq_class discriminant;
    Int c4;
    std::vector<std::pair<Int, ReductionType>> bad_primes;
};

CurveReductionReport minimal_model(const Int& n);

/**
 * Evaluation of the 2-Selmer bound
 *   dim S₂ ≤ h₂(F) + u + e + Σ_{p additive}(n_p − 1),  F = ℚ(∛cf(4n)),
 * with u = 1 (Δ < 0 always here), e = 0 (no multiplicative primes), and
 * the correction evaluated through ramification().  h₂ is an external
 * input: class-group computation is out of scope.
 */
struct TwoSelmerBound {
    Int n;
    Int cf4n;
    int h2_input = 0;
    int u_term = 1;
    int e_term = 0;
    int additive_correction = 0;
    int bound = 0;
};

TwoSelmerBound two_selmer_bound(const Int& n, int h2);

enum class Parity { Even, Odd };

// Predicted parity of dim_{𝔽_p} S_p(E_{−432n²}/ℚ) for p ∈ {2,3}: Even
// iff w(n) = +1 (p-parity plus the Selmer comparison lemma; verdict
// logic only).
Parity parity_expectation(const Int& n, int p);

}  // namespace cubekit
