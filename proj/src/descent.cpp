#include "cubekit/descent.hpp"

#include <sstream>

#include "cubekit/sieve.hpp"

namespace cubekit {

const char* family_name(Family f) noexcept {
    switch (f) {
        case Family::ThreeEll: return "3l";
        case Family::ThreeEllSquared: return "3l2";
        case Family::TwoEll: return "2l";
        case Family::TwoEllSquared: return "2l2";
        case Family::Ell: return "l";
        case Family::EllSquared: return "l2";
    }
    return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
    if (name == "3l") return Family::ThreeEll;
    if (name == "3l2") return Family::ThreeEllSquared;
    if (name == "2l") return Family::TwoEll;
    if (name == "2l2") return Family::TwoEllSquared;
    if (name == "l") return Family::Ell;
    if (name == "l2") return Family::EllSquared;
    return std::nullopt;
}

int family_class_mod9(Family f) noexcept {
    switch (f) {
        case Family::ThreeEll: return 7;
        case Family::ThreeEllSquared: return 4;
        default: return 1;
    }
}

Int family_n(Family f, const Int& ell) {
    switch (f) {
        case Family::ThreeEll: return 3 * ell;
        case Family::ThreeEllSquared: return 3 * ell * ell;
        case Family::TwoEll: return 2 * ell;
        case Family::TwoEllSquared: return 2 * ell * ell;
        case Family::Ell: return ell;
        case Family::EllSquared: return ell * ell;
    }
    fail(errc::internal, "unknown family");
}

std::optional<Int> family_h3_field(Family f, const Int& ell) {
    switch (f) {
        case Family::ThreeEll: return 12 * ell;
        case Family::ThreeEllSquared: return 18 * ell;
        case Family::TwoEll:
        case Family::TwoEllSquared: return 2 * ell;
        default: return std::nullopt;
    }
}

const char* outcome_name(Outcome o) noexcept {
    switch (o) {
        case Outcome::ProvablyNonCubeSum: return "ProvablyNonCubeSum";
        case Outcome::CubeSum: return "CubeSum";
        case Outcome::Undetermined: return "Undetermined";
    }
    return "?";
}

std::string NecessaryConditionReport::str() const {
    std::ostringstream oss;
    oss << "h3(" << field_n.get_str() << ")=" << h3_value << ": " << (passes ? "pass" : "fail");
    return oss.str();
}

namespace {

void require_elimination_family(Family f) {
    if (f != Family::ThreeEll && f != Family::ThreeEllSquared)
        fail(errc::unsupported_family,
             std::string("coset elimination applies to the 3l and 3l2 families, not ") +
                 family_name(f));
}

void require_family_prime(Family f, const Int& ell) {
    if (!is_prime(ell)) fail(errc::not_prime, ell.get_str() + " is not prime");
    int cls = family_class_mod9(f);
    if (ell % 9 != cls)
        fail(errc::wrong_residue_class,
             ell.get_str() + " is not " + std::to_string(cls) + " mod 9 as the " +
                 family_name(f) + " family requires");
}

}  // namespace

std::vector<EisensteinInt> s_unit_group(Family f, const Int& ell, bool swap_conjugates) {
    require_elimination_family(f);
    require_family_prime(f, ell);
    auto [pi, pi2] = split_pair(ell, swap_conjugates);
    return {EisensteinInt::zeta(), EisensteinInt::p3(), pi.generator, pi2.generator};
}

std::vector<SUnitPair> candidate_cosets(Family f, const Int& ell) {
    require_elimination_family(f);
    require_family_prime(f, ell);
    // First coordinates on (ζ, 𝔭, π, π′); mod cubes, 3 = ζ²𝔭² and 9 = ζ𝔭.
    // Order follows the coset list: ζ², 9, π², 9ζ², 3ζ², 9π², 9π, ζ²π²,
    // ζπ², 9ζ²π², 3ζ²π², 9ζπ², 3ζπ².
    static const std::array<std::array<uint8_t, 4>, 13> firsts = {{
        {2, 0, 0, 0},
        {1, 1, 0, 0},
        {0, 0, 2, 0},
        {0, 1, 0, 0},
        {1, 2, 0, 0},
        {1, 1, 2, 0},
        {1, 1, 1, 0},
        {2, 0, 2, 0},
        {1, 0, 2, 0},
        {0, 1, 2, 0},
        {1, 2, 2, 0},
        {2, 1, 2, 0},
        {0, 2, 2, 0},
    }};
    std::vector<SUnitPair> out;
    out.reserve(firsts.size());
    for (const auto& fst : firsts) out.push_back(SUnitPair::from_first(fst));
    return out;
}

SelmerEliminationReport eliminate(Family f, const Int& ell, bool swap_conjugates) {
    require_elimination_family(f);
    require_family_prime(f, ell);

    SelmerEliminationReport report;
    report.family = f;
    report.ell = ell;

    auto [pi, pi2] = split_pair(ell, swap_conjugates);
    PrimeOfK ramified{EisensteinInt::p3(), 1, Int(3), ConjugateTag::Ramified};
    report.s_set = {ramified, pi, pi2};

    // Kummer image of the known rational point: (9ℓ²‾, 3ℓ‾) for 3ℓ from
    // (0, 12ℓ), and (9ℓ‾, 3ℓ²‾) for 3ℓ² from (0, 12ℓ²).
    report.known_element = f == Family::ThreeEll
                               ? SUnitPair::from_first({1, 1, 2, 2})
                               : SUnitPair::from_first({1, 1, 1, 1});
    report.candidates = candidate_cosets(f, ell);
    report.symbol = cubic_residue(EisensteinInt(3), pi);
    report.conclusive = !report.symbol.is_trivial();

    // Residue exponents of the other generators at π and at π′; the
    // place's own generator never contributes (unit pairs only).
    const std::array<EisensteinInt, 4> gens = {EisensteinInt::zeta(), EisensteinInt::p3(),
                                               pi.generator, pi2.generator};
    std::array<std::array<int, 4>, 2> sym{};  // [0] at π, [1] at π′
    for (int g = 0; g < 4; ++g) {
        if (g != 2) sym[0][g] = cubic_residue(gens[g], pi).exponent();
        if (g != 3) sym[1][g] = cubic_residue(gens[g], pi2).exponent();
    }

    for (int idx = 0; idx < static_cast<int>(report.candidates.size()); ++idx) {
        const SUnitPair& cand = report.candidates[idx];
        bool eliminated = false;
        for (int t = 0; t < 3 && !eliminated; ++t) {
            SUnitPair e = cand.mul(report.known_element.pow(t));
            for (int place = 2; place <= 3 && !eliminated; ++place) {
                if (e.first[place] != 0) continue;  // not a unit pair at this place
                int val = 0;
                for (int g = 0; g < 4; ++g) {
                    if (g == place) continue;
                    val += e.first[g] * sym[place - 2][g];
                }
                val %= 3;
                if (val != 0) {
                    report.eliminations.push_back({idx, place, t, MuCubeValue(val)});
                    eliminated = true;
                }
            }
        }
        if (!eliminated) report.survivors.push_back(cand);
    }

    // dim bound = rank of ⟨known element, survivors⟩ over 𝔽₃.
    std::vector<uint8_t> rows;
    auto push_row = [&rows](const SUnitPair& p) {
        for (int i = 0; i < 4; ++i) rows.push_back(p.first[i]);
    };
    push_row(report.known_element);
    for (const SUnitPair& s : report.survivors) push_row(s);
    report.dim_upper_bound =
        rank_f3(static_cast<int>(rows.size() / 4), 4, rows);
    return report;
}

namespace {

struct FamilyMatch {
    Family family;
    Int ell;
};

std::optional<FamilyMatch> match_family(const std::vector<std::pair<Int, int>>& factors) {
    auto exponent_of = [&factors](long p) -> int {
        for (const auto& [q, e] : factors)
            if (q == p) return e;
        return 0;
    };
    std::vector<std::pair<Int, int>> rest;
    for (const auto& [q, e] : factors)
        if (q != 2 && q != 3) rest.emplace_back(q, e);

    if (rest.size() == 1) {
        const Int& ell = rest[0].first;
        int e = rest[0].second;
        int f2 = exponent_of(2), f3 = exponent_of(3);
        if (f2 == 0 && f3 == 0 && e == 1) return FamilyMatch{Family::Ell, ell};
        if (f2 == 0 && f3 == 0 && e == 2) return FamilyMatch{Family::EllSquared, ell};
        if (f2 == 1 && f3 == 0 && e == 1 && ell % 9 == 1) return FamilyMatch{Family::TwoEll, ell};
        if (f2 == 1 && f3 == 0 && e == 2 && ell % 9 == 1)
            return FamilyMatch{Family::TwoEllSquared, ell};
        if (f2 == 0 && f3 == 1 && e == 1 && ell % 9 == 7) return FamilyMatch{Family::ThreeEll, ell};
        if (f2 == 0 && f3 == 1 && e == 2 && ell % 9 == 4)
            return FamilyMatch{Family::ThreeEllSquared, ell};
    }
    return std::nullopt;
}

std::string mu_str(MuCubeValue v) {
    switch (v.exponent()) {
        case 1: return "zeta";
        case 2: return "zeta^2";
        default: return "1";
    }
}

void finish_with_witness_search(Verdict& verdict, const Int& n, const ClassifyOptions& opts) {
    if (!opts.witness_search) {
        verdict.outcome = Outcome::Undetermined;
        return;
    }
    auto witness = find_witness(n, opts.denom_bound, opts.num_bound);
    if (witness) {
        verdict.outcome = Outcome::CubeSum;
        verdict.witness = witness;
        verdict.trace.push_back("witness " + witness->str() + " verifies x^3 + y^3 = " +
                                n.get_str() + " exactly");
    } else {
        verdict.outcome = Outcome::Undetermined;
        verdict.trace.push_back("bounded search (denominators to " +
                                std::to_string(opts.denom_bound) + ", numerators to " +
                                std::to_string(opts.num_bound) + ") found no witness");
    }
}

}  // namespace

Verdict classify(const Int& n, const ClassifyOptions& opts) {
    if (n < 1) fail(errc::unsupported_family, "classify needs a positive integer");

    Verdict verdict;
    verdict.n = n;

    if (n <= 2) {
        // 1 = 1³+0³ and 2 = 1³+1³; the curve correspondence starts at 3.
        finish_with_witness_search(verdict, n, opts);
        return verdict;
    }

    auto factors = factor_integer(n);
    for (const auto& [p, e] : factors) {
        (void)p;
        if (e >= 3)
            fail(errc::unsupported_family, n.get_str() + " is not cube-free");
    }

    RootNumberReport rn = root_number(n);
    verdict.root_number_w = rn.w;
    verdict.trace.push_back("root number w(" + n.get_str() + ") = " +
                            (rn.w == 1 ? std::string("+1") : std::string("-1")) +
                            " by the Birch-Stephens product");

    auto matched = match_family(factors);
    if (matched) {
        verdict.family = matched->family;
        verdict.ell = matched->ell;
    }

    if (matched && matched->family == Family::Ell) {
        Int r9 = matched->ell % 9;
        if (r9 == 2 || r9 == 5) {
            verdict.outcome = Outcome::ProvablyNonCubeSum;
            verdict.trace.push_back(
                "a prime l = 2, 5 (mod 9) is never a sum of two rational cubes "
                "(Pepin-Lucas-Sylvester)");
            return verdict;
        }
    }

    if (matched &&
        (matched->family == Family::ThreeEll || matched->family == Family::ThreeEllSquared)) {
        const Int& ell = matched->ell;
        Int field_n = *family_h3_field(matched->family, ell);
        int h3v = h3(field_n, opts.swap_conjugates);
        verdict.necessary_condition = NecessaryConditionReport{field_n, h3v, h3v == 2};

        SelmerEliminationReport elim = eliminate(matched->family, ell, opts.swap_conjugates);
        verdict.trace.push_back("(3/" + ell.get_str() + ")_3 = " + mu_str(elim.symbol) +
                                "; necessary condition " + verdict.necessary_condition->str());
        if (elim.conclusive && elim.dim_upper_bound <= 2 && rn.w == 1) {
            verdict.elimination = elim;
            verdict.outcome = Outcome::ProvablyNonCubeSum;
            std::string survivors;
            for (const SUnitPair& s : elim.survivors)
                survivors += (survivors.empty() ? "" : ", ") + s.str();
            verdict.trace.push_back(
                "phi-Selmer coset elimination over Q(zeta_3): dim_F3 S_phi <= " +
                std::to_string(elim.dim_upper_bound) +
                (survivors.empty() ? std::string(", no surviving coset")
                                   : ", surviving coset " + survivors));
            verdict.trace.push_back(
                "3-parity with w = +1 makes dim_F3 S_3(E/Q) even and the Cassels-Tate "
                "comparison term is even, so dim_F3 S_phi is odd, hence = 1");
            verdict.trace.push_back("S_3(E_{-432n^2}/Q) = 0, rank 0: " + n.get_str() +
                                    " is not a sum of two rational cubes");
            return verdict;
        }
        verdict.trace.push_back(
            "the 3-rank necessary condition holds, so the elimination cannot conclude");
        verdict.trace.push_back(
            "were " + n.get_str() + " a cube sum, Cl(Q(cbrt(" + field_n.get_str() +
            "))) would contain Z/6 x Z/3 (2-part from the 2-Selmer bound, 3-part from "
            "the 3-rank criterion); not verified here");
        finish_with_witness_search(verdict, n, opts);
        return verdict;
    }

    if (matched &&
        (matched->family == Family::TwoEll || matched->family == Family::TwoEllSquared)) {
        const Int& ell = matched->ell;
        Int field_n = *family_h3_field(matched->family, ell);
        int h3v = h3(field_n, opts.swap_conjugates);
        verdict.necessary_condition = NecessaryConditionReport{field_n, h3v, h3v == 2};

        auto [pi, pi2] = split_pair(ell, opts.swap_conjugates);
        (void)pi2;
        MuCubeValue sym = cubic_residue(EisensteinInt(2), pi);
        verdict.trace.push_back("(2/" + ell.get_str() + ")_3 = " + mu_str(sym) +
                                "; necessary condition " + verdict.necessary_condition->str());
        if (!sym.is_trivial() && rn.w == 1) {
            verdict.outcome = Outcome::ProvablyNonCubeSum;
            verdict.trace.push_back(
                "(2/l)_3 != 1 forces the phi-Selmer group of E_{-432n^2}/Q(zeta_3) to be "
                "one-dimensional for both 2l and 2l^2, so the rank is 0: " + n.get_str() +
                " is not a sum of two rational cubes");
            return verdict;
        }
        finish_with_witness_search(verdict, n, opts);
        return verdict;
    }

    // No proof route applies: partial report (root number, any h3 data),
    // then the bounded witness search.
    verdict.trace.push_back("no unconditional criterion applies to " + n.get_str());
    finish_with_witness_search(verdict, n, opts);
    return verdict;
}

}  // namespace cubekit
