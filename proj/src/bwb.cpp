#include "flagkit/bwb.hpp"

#include <algorithm>
#include <set>

#include "flagkit/penrose.hpp"

namespace flagkit {

SignedPerm SignedPerm::identity(int dim) {
    SignedPerm p;
    p.perm.resize(dim);
    p.sign.assign(dim, 1);
    for (int i = 0; i < dim; ++i) p.perm[i] = i;
    return p;
}

CoordinateVector SignedPerm::apply(const CoordinateVector& v) const {
    CoordinateVector out = CoordinateVector::zero(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i)
        out[perm[i]] = Rational(sign[i]) * v[i];
    return out;
}

SignedPerm SignedPerm::then(const SignedPerm& next) const {
    SignedPerm out;
    out.perm.resize(perm.size());
    out.sign.resize(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
        out.perm[i] = next.perm[perm[i]];
        out.sign[i] = static_cast<std::int8_t>(sign[i] * next.sign[perm[i]]);
    }
    return out;
}

namespace {

// Reflections in roots of the supported shapes act as signed transpositions.
SignedPerm reflection_from_root(const CoordinateVector& root) {
    const int dim = static_cast<int>(root.dim());
    std::vector<int> support;
    for (int i = 0; i < dim; ++i)
        if (root[i] != 0) support.push_back(i);
    SignedPerm p = SignedPerm::identity(dim);
    if (support.size() == 1 && boost::multiprecision::abs(numerator(root[support[0]])) == 2) {
        p.sign[support[0]] = -1;  // ±2e_i
        return p;
    }
    if (support.size() == 2) {
        int i = support[0], j = support[1];
        if (root[i] * root[j] == -1) {  // ±(e_i − e_j)
            std::swap(p.perm[i], p.perm[j]);
            return p;
        }
        if (root[i] * root[j] == 1) {  // ±(e_i + e_j)
            std::swap(p.perm[i], p.perm[j]);
            p.sign[i] = p.sign[j] = -1;
            return p;
        }
    }
    throw std::invalid_argument("unsupported root shape for reflection: " + to_text(root));
}

int inversion_length(const SignedPerm& w, const std::vector<CoordinateVector>& delta_c_pos,
                     const RootSet& compact_set) {
    int count = 0;
    for (const auto& alpha : delta_c_pos) {
        CoordinateVector image = w.apply(alpha);
        if (compact_set.contains(-image)) ++count;
    }
    return count;
}

}  // namespace

std::vector<CoordinateVector> compact_simple_roots(const HermitianDomainSpec& spec) {
    std::vector<CoordinateVector> simples;
    const auto& pos = spec.delta_c_pos;
    RootSet pos_set(pos);
    for (const auto& alpha : pos) {
        bool decomposable = false;
        for (const auto& a : pos)
            if (a != alpha && pos_set.contains(alpha - a)) {
                decomposable = true;
                break;
            }
        if (!decomposable) simples.push_back(alpha);
    }
    return simples;
}

CompactWeylGroup build_compact_weyl(const HermitianDomainSpec& spec, long long cap) {
    require_validated(spec);
    std::vector<SignedPerm> generators;
    for (const auto& alpha : compact_simple_roots(spec))
        generators.push_back(reflection_from_root(alpha));

    std::set<SignedPerm> seen;
    std::vector<SignedPerm> frontier{SignedPerm::identity(spec.rs.ambient_dim)};
    seen.insert(frontier.front());
    while (!frontier.empty()) {
        std::vector<SignedPerm> next;
        for (const auto& w : frontier)
            for (const auto& g : generators) {
                SignedPerm candidate = w.then(g);
                if (seen.insert(candidate).second) {
                    next.push_back(candidate);
                    if (static_cast<long long>(seen.size()) > cap)
                        throw std::invalid_argument(
                            "compact Weyl group exceeds the configured cap");
                }
            }
        frontier = std::move(next);
    }

    CompactWeylGroup group;
    group.elements.assign(seen.begin(), seen.end());
    group.lengths.reserve(group.elements.size());
    RootSet compact_set(spec.delta_c_pos);
    for (const auto& w : group.elements)
        group.lengths.push_back(inversion_length(w, spec.delta_c_pos, compact_set));
    return group;
}

BwbOutcome bwb_cohomology(const HermitianDomainSpec& spec, const CoordinateVector& lambda) {
    require_validated(spec);
    if (!is_integral_weight(lambda, spec.rs))
        throw std::invalid_argument("bwb_cohomology: weight " + to_text(lambda) +
                                    " is not integral");
    auto rhos = rho_components(spec);
    CoordinateVector v = lambda + rhos.rho_c;
    BwbOutcome out;
    int degree = 0;
    for (const auto& alpha : spec.delta_c_pos) {
        int s = sign_of(inner(v, alpha));
        if (s == 0) return out;  // AllVanish
        if (s < 0) ++degree;
    }

    // Straighten to the compact-dominant chamber: each step fixes exactly one
    // inversion, so the step count must reproduce the inversion count.
    auto simples = compact_simple_roots(spec);
    int steps = 0;
    bool moved = true;
    while (moved) {
        moved = false;
        for (const auto& s : simples)
            if (inner(v, s) < 0) {
                v = reflect(spec.rs, v, s);
                ++steps;
                moved = true;
            }
    }
    if (steps != degree) throw std::logic_error("bwb: inversion count mismatch");
    Rational dim = 1;
    for (const auto& alpha : spec.delta_c_pos) {
        if (!(inner(v, alpha) > 0)) throw std::logic_error("bwb: straightening failed");
        dim *= inner(v, alpha) / inner(rhos.rho_c, alpha);
    }
    if (!is_integer(dim) || dim < 1) throw std::logic_error("bwb: non-integral dimension");

    out.status = BwbOutcome::Status::Concentrated;
    out.degree = degree;
    out.dimension = numerator(dim);
    out.dominant_rep = v - rhos.rho_c;
    return out;
}

bool h0_vanishes_on_cycle(const HermitianDomainSpec& spec, const CoordinateVector& lambda) {
    require_validated(spec);
    if (!is_integral_weight(lambda, spec.rs))
        throw std::invalid_argument("h0_vanishes_on_cycle: weight not integral");
    auto rhos = rho_components(spec);
    bool strict_form = false, shifted_form = false;
    for (const auto& alpha : spec.delta_c_pos) {
        if (inner(lambda, alpha) < 0) strict_form = true;
        if (!(inner(lambda + rhos.rho_c, alpha) > 0)) shifted_form = true;
    }
    if (strict_form != shifted_form)
        throw std::logic_error(
            "the (λ,α)<0 and (λ+ρ_c,α)<=0 formulations disagree: convention bug");
    // cross-check: H⁰ survives exactly on degree-0 concentration
    BwbOutcome outcome = bwb_cohomology(spec, lambda);
    bool h0_nonzero =
        outcome.status == BwbOutcome::Status::Concentrated && outcome.degree == 0;
    if (h0_nonzero == strict_form)
        throw std::logic_error("h0_vanishes_on_cycle disagrees with bwb_cohomology");
    return strict_form;
}

VerificationReport verify_mu_j_vanishing(const HermitianDomainSpec& spec,
                                         const CoordinateVector& mu_prime) {
    require_validated(spec);
    auto witness = check_injectivity(spec, mu_prime);
    if (!witness.holds)
        throw std::invalid_argument(
            "verify_mu_j_vanishing: mu' does not satisfy the injectivity condition");
    VerificationReport report;
    report.group = spec.group_label;
    report.parameters["mu_prime"] = to_text(mu_prime);
    for (const auto& beta : spec.delta_nc1_pos) {
        auto& c = report.add("mu-j-vanishing:beta=" + to_text(beta), "Thm 4.6");
        CoordinateVector mu_j = mu_prime - beta;
        const CoordinateVector* alpha_witness = nullptr;
        for (const auto& alpha : spec.delta_c_pos)
            if (inner(mu_j, alpha) < 0) {
                alpha_witness = &alpha;
                break;
            }
        if (alpha_witness && h0_vanishes_on_cycle(spec, mu_j)) {
            c.witnesses.push_back("alpha=" + to_text(*alpha_witness));
            c.detail = "Gamma(Z_o, L_{mu_j}) = 0 for mu_j = " + to_text(mu_j);
        } else {
            c.status = CheckStatus::Fail;
            c.detail = "H0 survives on the cycle for mu_j = " + to_text(mu_j);
        }
    }
    return report;
}

}  // namespace flagkit
