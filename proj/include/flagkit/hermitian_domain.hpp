#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flagkit/report.hpp"
#include "flagkit/root_system.hpp"

namespace flagkit {

enum class RootPart { Compact, Nc1, Nc2 };

/// A non-classical flag domain of Hermitian type at the root level: the
/// three-way split Δ₊ = Δ₊ᶜ ∪ Δ₊ⁿᶜ¹ ∪ Δ₊ⁿᶜ² of a positive system.
/// Immutable after construction and freely shareable.
struct HermitianDomainSpec {
    RootSystemData rs;
    std::vector<CoordinateVector> delta_c_pos;    // sorted lexicographically
    std::vector<CoordinateVector> delta_nc1_pos;  // sorted
    std::vector<CoordinateVector> delta_nc2_pos;  // sorted
    std::string group_label;                      // "su:r,s" or "sp:n"
    bool validated = false;

    std::vector<CoordinateVector> delta_pos() const;        // Δ₊, sorted
    std::vector<CoordinateVector> delta_nc_pos() const;     // Δ₊ⁿᶜ¹ ∪ Δ₊ⁿᶜ², sorted
    std::vector<CoordinateVector> delta_prime_nc() const;   // (−Δ₊ⁿᶜ¹) ∪ Δ₊ⁿᶜ², sorted
    std::optional<RootPart> part_of(const CoordinateVector& delta) const;
};

/// The seven ρ-components: halves of the positive-root subset sums.
struct RhoSet {
    CoordinateVector rho;           // ρ
    CoordinateVector rho_c;         // ρ_c
    CoordinateVector rho_nc;        // ρ_nc = ρ_nc1 + ρ_nc2
    CoordinateVector rho_nc1;       // ρ_nc1
    CoordinateVector rho_nc2;       // ρ_nc2
    CoordinateVector rho_prime;     // ρ' = ρ_c − ρ_nc1 + ρ_nc2
    CoordinateVector rho_prime_nc;  // ρ'_nc = −ρ_nc1 + ρ_nc2
};

struct ChamberDegrees {
    int q_of = 0;
    int q_prime_of = 0;
    bool regular = false;
};

/// Raw constructor for arbitrary splits: enforces that the listed vectors are
/// genuine, pairwise-distinct roots, then runs validate_domain and records the
/// verdict in `validated`. Downstream operations refuse unvalidated specs.
HermitianDomainSpec make_domain(RootSystemData rs, std::vector<CoordinateVector> c,
                                std::vector<CoordinateVector> nc1,
                                std::vector<CoordinateVector> nc2, std::string label);

/// The canonical SU(r,s) split (type A ambient R^{r+s}); requires r >= s >= 1
/// and r+s >= 3.
HermitianDomainSpec build_su_domain(int r, int s);

/// The canonical Sp(2n) split (type C, n >= 2), with the alternating-sign
/// compact part.
HermitianDomainSpec build_sp_domain(int n);

/// One named check per structural invariant; failures carry the violating
/// root pair as witness. Never throws on mathematical failure.
VerificationReport validate_domain(const HermitianDomainSpec& spec);

RhoSet rho_components(const HermitianDomainSpec& spec);

/// q(λ), q'(λ) from their sign-count definitions; regular ⟺ (λ,δ) ≠ 0 ∀δ∈Δ₊.
ChamberDegrees chamber_degrees(const HermitianDomainSpec& spec, const CoordinateVector& lambda);

/// Parses "su:r,s" or "sp:n" and builds the canonical domain.
HermitianDomainSpec parse_group(const std::string& text);

void require_validated(const HermitianDomainSpec& spec);

/// Half of the coordinate-wise sum of a set of roots.
CoordinateVector half_sum(const std::vector<CoordinateVector>& roots, int ambient_dim);

}  // namespace flagkit
