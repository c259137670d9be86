#pragma once

#include <cstdint>
#include <vector>

#include "flagkit/hermitian_domain.hpp"
#include "flagkit/report.hpp"

namespace flagkit {

/// Signed permutation of the ambient coordinates: e_i ↦ sign[i] e_{perm[i]}.
/// Covers every Weyl element of the supported families.
struct SignedPerm {
    std::vector<int> perm;
    std::vector<std::int8_t> sign;

    static SignedPerm identity(int dim);
    CoordinateVector apply(const CoordinateVector& v) const;
    SignedPerm then(const SignedPerm& next) const;  // next ∘ this
    friend bool operator<(const SignedPerm& a, const SignedPerm& b) {
        if (a.perm != b.perm) return a.perm < b.perm;
        return a.sign < b.sign;
    }
    friend bool operator==(const SignedPerm& a, const SignedPerm& b) {
        return a.perm == b.perm && a.sign == b.sign;
    }
};

/// The group generated by reflections in the simple roots of Δ₊ᶜ, with
/// lengths = inversion counts over Δ₊ᶜ. Built once per spec, then read-only.
struct CompactWeylGroup {
    std::vector<SignedPerm> elements;
    std::vector<int> lengths;
};

/// Vanishing/concentration outcome of H^k on the base cycle at weight λ.
struct BwbOutcome {
    enum class Status { AllVanish, Concentrated };
    Status status = Status::AllVanish;
    int degree = -1;                // set when Concentrated
    Integer dimension = 0;          // set when Concentrated
    CoordinateVector dominant_rep;  // w(λ+ρ_c) − ρ_c, set when Concentrated
};

/// Indecomposable elements of Δ₊ᶜ.
std::vector<CoordinateVector> compact_simple_roots(const HermitianDomainSpec& spec);

/// Full closure; throws if the group would exceed `cap` elements.
CompactWeylGroup build_compact_weyl(const HermitianDomainSpec& spec, long long cap = 3628800);

/// λ integral. AllVanish when λ+ρ_c lies on a compact wall; otherwise the
/// unique compact-dominant conjugate fixes the degree (inversion count) and
/// the dimension (Weyl dimension formula over Δ₊ᶜ).
BwbOutcome bwb_cohomology(const HermitianDomainSpec& spec, const CoordinateVector& lambda);

/// ∃α∈Δ₊ᶜ with (λ,α)<0; asserts equivalence with ∃α: (λ+ρ_c,α)≤0 and
/// cross-checks the outcome of bwb_cohomology.
bool h0_vanishes_on_cycle(const HermitianDomainSpec& spec, const CoordinateVector& lambda);

/// For each β_j ∈ Δ₊ⁿᶜ¹ confirms H⁰-vanishing of the twist μ'−β_j on the base
/// cycle; μ' must satisfy the injectivity condition.
VerificationReport verify_mu_j_vanishing(const HermitianDomainSpec& spec,
                                         const CoordinateVector& mu_prime);

}  // namespace flagkit
