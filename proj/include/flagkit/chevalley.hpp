#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "flagkit/hermitian_domain.hpp"
#include "flagkit/report.hpp"

namespace flagkit {

/// Structure constants of n₊ in the e_{−δ} indexing, δ ∈ Δ₊:
/// [e_{−δ}, e_{−δ'}] = C_{δδ'} e_{−(δ+δ')}. Signs are normalized so that every
/// extraspecial pair (positive roots ordered by height, then lexicographically)
/// carries C = +(p+1). Jacobi is verified at build time.
struct ChevalleyTable {
    std::vector<CoordinateVector> positive_roots;  // canonical lex order
    std::map<std::pair<CoordinateVector, CoordinateVector>, Rational> by_pair;
    std::map<CoordinateVector, RootPart> grading;

    /// C_{δδ'}; zero when δ+δ' is not in Δ₊.
    Rational c(const CoordinateVector& delta, const CoordinateVector& delta2) const;
    int index_of(const CoordinateVector& delta) const;  // into positive_roots
};

ChevalleyTable build_chevalley(const HermitianDomainSpec& spec);

/// Rescales the basis e_{−δ} → ε_δ e_{−δ}; signs aligned with positive_roots.
/// Any ±1 assignment yields another valid table.
ChevalleyTable resign_table(const ChevalleyTable& table, const std::vector<int>& signs);

/// Text lines "C[δ|δ']=value" in canonical pair order.
std::string dump_table(const ChevalleyTable& table);

/// Graded vanishing of the structure constants: the four equation groups
/// (cc), (cnc), (ncnc), (ncinci), plus the complement assertion that only
/// nc1+nc2→c and c+nci→nci cross-grading constants survive.
VerificationReport verify_lemma_4_2(const ChevalleyTable& table, const HermitianDomainSpec& spec);

/// Constant-coefficient invariant form: monomials are strictly increasing
/// index lists into table.positive_roots; zero coefficients are absent.
struct RelativeForm {
    int degree = 0;
    std::map<std::vector<int>, Rational> terms;

    bool is_zero() const { return terms.empty(); }
    friend bool operator==(const RelativeForm& a, const RelativeForm& b) {
        return a.degree == b.degree && a.terms == b.terms;
    }
};

/// ω^{−δ} as a 1-form.
RelativeForm generator_form(const ChevalleyTable& table, const CoordinateVector& delta);

RelativeForm add(const RelativeForm& a, const RelativeForm& b);
RelativeForm scale(const Rational& s, RelativeForm f);
RelativeForm wedge(const RelativeForm& a, const RelativeForm& b);

/// d_π ω^{−δ} = −½ Σ C_{δ'δ''}^{δ} ω^{−δ'} ∧ ω^{−δ''}, extended as a graded
/// derivation of degree +1; result in canonical monomial form.
RelativeForm d_pi(const RelativeForm& form, const ChevalleyTable& table,
                  const HermitianDomainSpec& spec);

/// Checks d_π(ω^{nc,1}) = 0 exactly, and the mechanism behind it: every term
/// of each d_π ω^{−β_j} is of shape ω^{−α} ∧ ω^{−β_{j'}} with α compact and
/// j' ≠ j, so each surviving expansion term repeats a factor.
VerificationReport verify_omega_nc1_closed(const HermitianDomainSpec& spec);
VerificationReport verify_omega_nc1_closed(const HermitianDomainSpec& spec,
                                           const ChevalleyTable& table);

}  // namespace flagkit
