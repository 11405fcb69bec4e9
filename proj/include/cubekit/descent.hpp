#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubekit/mordell.hpp"
#include "cubekit/oracle.hpp"

namespace cubekit {

enum class Family { ThreeEll, ThreeEllSquared, TwoEll, TwoEllSquared, Ell, EllSquared };

const char* family_name(Family f) noexcept;  // "3l", "3l2", "2l", "2l2", "l", "l2"
std::optional<Family> family_from_name(const std::string& name);

// The residue class of ℓ mod 9 the family's theorems require.
int family_class_mod9(Family f) noexcept;

// The integer the family classifies: 3ℓ, 3ℓ², 2ℓ, 2ℓ², ℓ, ℓ².
Int family_n(Family f, const Int& ell);

// The cubic field whose h₃ carries the family's necessary condition:
// 12ℓ, 18ℓ, 2ℓ, 2ℓ²..., or nullopt where no such criterion exists.
std::optional<Int> family_h3_field(Family f, const Int& ell);

/**
 * One elimination event: candidate index, the place (generator index,
 * 2 = π, 3 = π′), the translate exponent of the known element, and the
 * nontrivial symbol value that rules the coset out.
 */
struct Elimination {
    int candidate;
    int place;
    int translate;
    MuCubeValue value;
};

/**
 * SelmerEliminationReport: outcome of the coset elimination bounding
 * dim_𝔽₃ S_φ(E_t/K) for the 3ℓ and 3ℓ² families.  The known element is
 * the Kummer image of the obvious rational point (0, 12ℓ) resp.
 * (0, 12ℓ²) and is never eliminated, so the bound is at least 1.
 */
struct SelmerEliminationReport {
    Family family = Family::ThreeEll;
    Int ell;
    std::vector<PrimeOfK> s_set;  // {𝔭, π, π′}
    SUnitPair known_element;
    std::vector<SUnitPair> candidates;  // the 13 coset generators
    std::vector<Elimination> eliminations;
    std::vector<SUnitPair> survivors;
    int dim_upper_bound = 1;
    MuCubeValue symbol;      // (3/π)₃
    bool conclusive = false;  // symbol nontrivial, so the bound is ≤ 2
};

// Generators (ζ, 𝔭, π, π′) of 𝒪*_{S_t}; requires ℓ prime in the
// family's residue class.
std::vector<EisensteinInt> s_unit_group(Family f, const Int& ell, bool swap_conjugates = false);

// The 13 canonical generators of the order-9 subgroups containing the
// known element, as norm-kernel pairs.
std::vector<SUnitPair> candidate_cosets(Family f, const Int& ell);

// Runs the local-triviality elimination: a candidate dies if some
// translate by the known element is a unit pair at π or π′ whose
// coordinate has a nontrivial cubic residue there.
SelmerEliminationReport eliminate(Family f, const Int& ell, bool swap_conjugates = false);

enum class Outcome { ProvablyNonCubeSum, CubeSum, Undetermined };

const char* outcome_name(Outcome o) noexcept;

/**
 * The h₃ (or symbol) test that is necessary for n to be a cube sum in
 * its family; `passes` means the condition holds, so nothing is ruled
 * out.
 */
struct NecessaryConditionReport {
    Int field_n;
    int h3_value = 0;
    bool passes = false;

    std::string str() const;  // "h3(732)=2: pass"
};

struct Verdict {
    Int n;
    Outcome outcome = Outcome::Undetermined;
    std::optional<Family> family;
    std::optional<Int> ell;
    std::optional<int> root_number_w;
    std::optional<NecessaryConditionReport> necessary_condition;
    std::optional<CubeSumWitness> witness;
    std::optional<SelmerEliminationReport> elimination;
    std::vector<std::string> trace;
};

struct ClassifyOptions {
    long denom_bound = 50;
    long num_bound = 10000;
    bool witness_search = true;
    bool swap_conjugates = false;
};

// Classifies n as provably-non-cube-sum (full logical chain), cube sum
// (with a verified witness), or undetermined.  Throws UnsupportedFamily
// for n where not even a partial report is possible (n < 1 or n not
// cube-free).
Verdict classify(const Int& n, const ClassifyOptions& opts = {});

}  // namespace cubekit
