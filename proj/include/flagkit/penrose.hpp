#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flagkit/hermitian_domain.hpp"
#include "flagkit/report.hpp"

namespace flagkit {

/// Witness data for the injectivity condition: one α_β per β ∈ Δ₊ⁿᶜ¹ with
/// (α_β, μ'−β) < 0. Roots without a witness are absent from `assignments`.
struct InjectivityWitness {
    std::map<CoordinateVector, CoordinateVector> assignments;
    bool holds = false;
};

struct CanonicalWeight {
    CoordinateVector mu_c_prime;  // 2ρ_nc1 − 2ρ_nc2
    long long k0 = 0;             // largest k with mu_c_prime/k still a weight
};

struct PenrosePair {
    CoordinateVector mu_prime;  // (k/k0) μ'_c + μ0
    CoordinateVector mu;        // μ' − 2ρ_nc1
};

struct ThresholdConstraint {
    std::string id;      // "c:<root>", "nc1:<root>", "nc2:<root>", "pw:<root>"
    long long min_k = 1; // smallest k from which this constraint holds for all k' >= k
};

struct ThresholdResult {
    long long N = 1;
    std::vector<ThresholdConstraint> per_constraint;
    long long k0 = 1;
    CoordinateVector mu_c_prime;
    std::vector<std::string> failing_at_n_minus_1;  // empty when N == 1
};

struct CupBookkeeping {
    bool sum_is_minus_rho = false;
    int p = 0;
    int q = 0;
    int d = 0;
    bool dim_check = false;
};

/// Injectivity hypothesis: for each β ∈ Δ₊ⁿᶜ¹ searches Δ₊ᶜ in canonical order
/// for α with (α, μ'−β) < 0. Requires μ' integral.
InjectivityWitness check_injectivity(const HermitianDomainSpec& spec,
                                     const CoordinateVector& mu_prime);

/// Necessary condition for H⁰(D',L_μ') ≠ 0: (μ',α) ≥ 0 for all α ∈ Δ₊ᶜ.
bool check_nontriviality_necessary(const HermitianDomainSpec& spec,
                                   const CoordinateVector& mu_prime);

/// ζ regular and in the chamber cut out by Δ₊ᶜ ∪ Δ₊ⁿᶜ¹ ∪ (−Δ₊ⁿᶜ²).
bool check_chamber(const HermitianDomainSpec& spec, const CoordinateVector& zeta);

/// Property W in its general form: for every noncompact root β (either sign)
/// with (μ+ρ,β)>0, (μ+ρ − ½Σ_{α∈Δ,(μ+ρ,α)>0} α, β) > 0. Returns nullopt when
/// μ+ρ is singular.
std::optional<bool> check_property_w(const HermitianDomainSpec& spec,
                                     const CoordinateVector& mu);

/// The specialized chamber form of Property W: (μ'+2ρ'_nc, −β') > 0 for every
/// β' ∈ Δ'₊ⁿᶜ. Equivalent to check_property_w under the chamber condition.
bool property_w_pw_form(const HermitianDomainSpec& spec, const CoordinateVector& mu_prime);

CanonicalWeight canonical_mu_c(const HermitianDomainSpec& spec);

/// μ'_{k,0} = (k/k0) μ'_c + μ0 and μ_{k,0} = μ'_{k,0} − 2ρ_nc1; verifies the
/// identity μ+ρ = μ'+ρ' before returning. μ0 integral, k ≥ 1.
PenrosePair penrose_pair(const HermitianDomainSpec& spec, long long k,
                         const CoordinateVector& mu0);

/// Minimal N with every regularity/chamber/Property-W constraint of the
/// canonical family satisfied for all k ≥ N. Each constraint is affine in k
/// with known-sign slope, so the minima are exact. μ0 must satisfy
/// (μ0,α) ≥ 0 on Δ₊ᶜ and the per-β condition (μ0−β, α_β) < 0.
ThresholdResult threshold_n(const HermitianDomainSpec& spec, const CoordinateVector& mu0);

/// Direct evaluation of the threshold constraint set at a given k, in the
/// order of ThresholdResult::per_constraint. Used for minimality evidence.
std::vector<std::pair<std::string, bool>> evaluate_threshold_constraints(
    const HermitianDomainSpec& spec, const CoordinateVector& mu0, long long k);

/// For each β ∈ Δ₊ⁿᶜ¹ (strong: all of Δ₊ⁿᶜ) records an α ∈ Δ₊ᶜ with (β,α)>0,
/// or a counterexample. The Sp(4) β=e1+e2 case is flagged, not failed.
/// strong=true is rejected on sp(2).
VerificationReport verify_beta_alpha_lemma(const HermitianDomainSpec& spec, bool strong);

/// All pairs (μ0, λ0 = ρ_nc − ρ_c − μ0) with μ0 an integer vector in the
/// [−bound,bound] box satisfying the cup-product hypothesis set. Lexicographic
/// in μ0.
std::vector<std::pair<CoordinateVector, CoordinateVector>> search_cup_pairs(
    const HermitianDomainSpec& spec, int bound);

/// Verifies μ_{k,0} + λ_{k,0} = −ρ and the dimension count p+q+d = #Δ₊.
CupBookkeeping cup_bookkeeping(const HermitianDomainSpec& spec, const CoordinateVector& mu0,
                               long long k);

}  // namespace flagkit
