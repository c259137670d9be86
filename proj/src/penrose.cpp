#include "flagkit/penrose.hpp"

#include <algorithm>

namespace flagkit {

namespace {

void require_integral(const HermitianDomainSpec& spec, const CoordinateVector& w,
                      const char* who) {
    if (!is_integral_weight(w, spec.rs))
        throw std::invalid_argument(std::string(who) + ": weight " + to_text(w) +
                                    " is not integral");
}

bool is_canonical_sp2(const HermitianDomainSpec& spec) {
    if (spec.rs.family != Family::TypeC || spec.rs.rank != 2) return false;
    auto e1 = CoordinateVector::basis(2, 1), e2 = CoordinateVector::basis(2, 2);
    return spec.delta_c_pos == std::vector<CoordinateVector>{e1 - e2};
}

}  // namespace

InjectivityWitness check_injectivity(const HermitianDomainSpec& spec,
                                     const CoordinateVector& mu_prime) {
    require_validated(spec);
    require_integral(spec, mu_prime, "check_injectivity");
    InjectivityWitness w;
    w.holds = true;
    for (const auto& beta : spec.delta_nc1_pos) {
        CoordinateVector target = mu_prime - beta;
        bool found = false;
        for (const auto& alpha : spec.delta_c_pos)
            if (inner(alpha, target) < 0) {
                w.assignments.emplace(beta, alpha);
                found = true;
                break;
            }
        if (!found) w.holds = false;
    }
    return w;
}

bool check_nontriviality_necessary(const HermitianDomainSpec& spec,
                                   const CoordinateVector& mu_prime) {
    require_validated(spec);
    for (const auto& alpha : spec.delta_c_pos)
        if (inner(mu_prime, alpha) < 0) return false;
    return true;
}

bool check_chamber(const HermitianDomainSpec& spec, const CoordinateVector& zeta) {
    require_validated(spec);
    for (const auto& alpha : spec.delta_c_pos)
        if (!(inner(zeta, alpha) > 0)) return false;
    for (const auto& beta : spec.delta_nc1_pos)
        if (!(inner(zeta, beta) > 0)) return false;
    for (const auto& gamma : spec.delta_nc2_pos)
        if (!(inner(zeta, gamma) < 0)) return false;
    return true;
}

std::optional<bool> check_property_w(const HermitianDomainSpec& spec,
                                     const CoordinateVector& mu) {
    require_validated(spec);
    auto rhos = rho_components(spec);
    CoordinateVector v = mu + rhos.rho;
    for (const auto& delta : spec.delta_pos())
        if (inner(v, delta) == 0) return std::nullopt;  // singular

    // ½ Σ over all roots with (μ+ρ, α) > 0
    CoordinateVector half_positive = CoordinateVector::zero(spec.rs.ambient_dim);
    for (const auto& alpha : spec.rs.roots)
        if (inner(v, alpha) > 0) half_positive += alpha;
    half_positive = Rational(1, 2) * half_positive;
    CoordinateVector shifted = v - half_positive;

    for (const auto& beta : spec.delta_nc_pos())
        for (const auto& signed_beta : {beta, -beta})
            if (inner(v, signed_beta) > 0 && !(inner(shifted, signed_beta) > 0)) return false;
    return true;
}

bool property_w_pw_form(const HermitianDomainSpec& spec, const CoordinateVector& mu_prime) {
    require_validated(spec);
    auto rhos = rho_components(spec);
    CoordinateVector shifted = mu_prime + Rational(2) * rhos.rho_prime_nc;
    for (const auto& beta_prime : spec.delta_prime_nc())
        if (!(inner(shifted, -beta_prime) > 0)) return false;
    return true;
}

CanonicalWeight canonical_mu_c(const HermitianDomainSpec& spec) {
    require_validated(spec);
    auto rhos = rho_components(spec);
    CanonicalWeight out;
    out.mu_c_prime = Rational(2) * (rhos.rho_nc1 - rhos.rho_nc2);
    // μ'_c/k is a weight iff k divides every simple coroot pairing; scan down
    // from the gcd and take the first divisor that tests integral.
    Integer g = 0;
    for (const auto& alpha : spec.rs.simple_roots) {
        Rational pairing = coroot_pairing(spec.rs, out.mu_c_prime, alpha);
        if (!is_integer(pairing))
            throw std::logic_error("mu'_c is not an integral weight");
        g = boost::multiprecision::gcd(g, boost::multiprecision::abs(numerator(pairing)));
    }
    if (g == 0) throw std::logic_error("mu'_c pairs to zero with every simple coroot");
    for (Integer k = g; k >= 1; --k) {
        CoordinateVector candidate = Rational(1, k) * out.mu_c_prime;
        if (is_integral_weight(candidate, spec.rs)) {
            out.k0 = static_cast<long long>(k);
            return out;
        }
    }
    throw std::logic_error("k0 scan failed");
}

PenrosePair penrose_pair(const HermitianDomainSpec& spec, long long k,
                         const CoordinateVector& mu0) {
    require_validated(spec);
    require_integral(spec, mu0, "penrose_pair");
    if (k < 1) throw std::invalid_argument("penrose_pair: k must be >= 1");
    auto canonical = canonical_mu_c(spec);
    auto rhos = rho_components(spec);
    PenrosePair out;
    out.mu_prime = Rational(k, canonical.k0) * canonical.mu_c_prime + mu0;
    out.mu = out.mu_prime - Rational(2) * rhos.rho_nc1;
    if (!is_integral_weight(out.mu_prime, spec.rs))
        throw std::logic_error("penrose_pair: mu' came out non-integral");
    if (out.mu + rhos.rho != out.mu_prime + rhos.rho_prime)
        throw std::logic_error("penrose_pair: mu+rho != mu'+rho'");
    return out;
}

namespace {

struct ThresholdConstraintData {
    std::string id;
    // holds at k  ⟺  slope*(k/k0 - shift) + offset  ~  0 with ~ the recorded sense
    Rational slope;   // (μ'_c, root)
    Rational shift;   // 1/2 for chamber constraints, 1 for PW constraints
    Rational offset;  // (μ0 + ρ_c, root) or (μ0, root)
    bool want_positive;
};

std::vector<ThresholdConstraintData> threshold_constraints(const HermitianDomainSpec& spec,
                                                           const CoordinateVector& mu0) {
    require_validated(spec);
    if (!is_integral_weight(mu0, spec.rs))
        throw std::invalid_argument("threshold_n: mu0 is not integral");
    for (const auto& alpha : spec.delta_c_pos)
        if (inner(mu0, alpha) < 0)
            throw std::invalid_argument("threshold_n: (mu0, " + to_text(alpha) + ") < 0");
    auto witness = check_injectivity(spec, mu0);
    if (!witness.holds)
        throw std::invalid_argument(
            "threshold_n: no alpha_beta with (mu0 - beta, alpha_beta) < 0 for every beta");

    auto canonical = canonical_mu_c(spec);
    auto rhos = rho_components(spec);
    const CoordinateVector& mc = canonical.mu_c_prime;
    std::vector<ThresholdConstraintData> cs;
    for (const auto& alpha : spec.delta_c_pos)
        cs.push_back({"c:" + to_text(alpha), 0, 0, inner(mu0 + rhos.rho_c, alpha), true});
    for (const auto& beta : spec.delta_nc1_pos)
        cs.push_back({"nc1:" + to_text(beta), inner(mc, beta), Rational(1, 2),
                      inner(mu0 + rhos.rho_c, beta), true});
    for (const auto& gamma : spec.delta_nc2_pos)
        cs.push_back({"nc2:" + to_text(gamma), inner(mc, gamma), Rational(1, 2),
                      inner(mu0 + rhos.rho_c, gamma), false});
    for (const auto& beta : spec.delta_nc1_pos)
        cs.push_back({"pw:" + to_text(beta), inner(mc, beta), 1, inner(mu0, beta), true});
    for (const auto& gamma : spec.delta_nc2_pos) {
        CoordinateVector delta = -gamma;
        cs.push_back({"pw:" + to_text(delta), inner(mc, delta), 1, inner(mu0, delta), true});
    }
    return cs;
}

bool constraint_holds(const ThresholdConstraintData& c, long long k0, long long k) {
    Rational value = c.slope * (Rational(k, k0) - c.shift) + c.offset;
    return c.want_positive ? value > 0 : value < 0;
}

}  // namespace

ThresholdResult threshold_n(const HermitianDomainSpec& spec, const CoordinateVector& mu0) {
    auto canonical = canonical_mu_c(spec);
    auto cs = threshold_constraints(spec, mu0);
    ThresholdResult out;
    out.k0 = canonical.k0;
    out.mu_c_prime = canonical.mu_c_prime;
    for (const auto& c : cs) {
        long long min_k = 1;
        if (c.slope == 0) {
            // k-independent: must hold outright (guaranteed by the preconditions)
            if (!(c.want_positive ? c.offset > 0 : c.offset < 0))
                throw std::logic_error("threshold_n: k-independent constraint " + c.id +
                                       " fails for all k");
        } else {
            // mu'_c pairs positively with nc1 and negatively with nc2 roots
            if (c.want_positive != (c.slope > 0))
                throw std::logic_error("threshold_n: unexpected slope sign for " + c.id);
            // holds ⟺ k > k0 (shift − offset/slope)
            Rational t = Rational(canonical.k0) * (c.shift - c.offset / c.slope);
            Integer above = strict_ceil(t);
            if (above > 1) min_k = static_cast<long long>(above);
        }
        out.per_constraint.push_back({c.id, min_k});
        out.N = std::max(out.N, min_k);
    }
    for (const auto& c : cs)  // minimality evidence: re-evaluate at N and N−1
        if (!constraint_holds(c, out.k0, out.N))
            throw std::logic_error("threshold_n: constraint " + c.id + " fails at N");
    if (out.N > 1) {
        for (const auto& c : cs)
            if (!constraint_holds(c, out.k0, out.N - 1)) out.failing_at_n_minus_1.push_back(c.id);
        if (out.failing_at_n_minus_1.empty())
            throw std::logic_error("threshold_n: N is not minimal");
    }
    return out;
}

std::vector<std::pair<std::string, bool>> evaluate_threshold_constraints(
    const HermitianDomainSpec& spec, const CoordinateVector& mu0, long long k) {
    auto canonical = canonical_mu_c(spec);
    auto cs = threshold_constraints(spec, mu0);
    std::vector<std::pair<std::string, bool>> out;
    out.reserve(cs.size());
    for (const auto& c : cs) out.emplace_back(c.id, constraint_holds(c, canonical.k0, k));
    return out;
}

VerificationReport verify_beta_alpha_lemma(const HermitianDomainSpec& spec, bool strong) {
    require_validated(spec);
    if (strong && is_canonical_sp2(spec))
        throw std::invalid_argument("the strong lemma excludes sp:2");
    VerificationReport report;
    report.group = spec.group_label;
    report.parameters["strong"] = strong ? "true" : "false";
    const char* ref = strong ? "Lemma 4.10" : "Lemma 4.9";
    const char* prefix = strong ? "lemma410:beta=" : "lemma49:beta=";
    auto roots = strong ? spec.delta_nc_pos() : spec.delta_nc1_pos;
    auto e1pe2 = [&] {
        return CoordinateVector::basis(2, 1) + CoordinateVector::basis(2, 2);
    };
    for (const auto& beta : roots) {
        auto& c = report.add(prefix + to_text(beta), ref);
        bool found = false;
        for (const auto& alpha : spec.delta_c_pos)
            if (inner(beta, alpha) > 0) {
                c.witnesses.push_back("alpha=" + to_text(alpha));
                found = true;
                break;
            }
        if (!found) {
            if (!strong && is_canonical_sp2(spec) && beta == e1pe2()) {
                c.status = CheckStatus::Flagged;
                c.detail =
                    "known Sp(4) exception: (e1+e2, e1-e2)=0; the lemma's proof swaps "
                    "the nc parts for this group";
            } else {
                c.status = CheckStatus::Fail;
                c.detail = "no alpha in Delta_c+ pairs positively with beta";
            }
        }
    }
    return report;
}

std::vector<std::pair<CoordinateVector, CoordinateVector>> search_cup_pairs(
    const HermitianDomainSpec& spec, int bound) {
    require_validated(spec);
    if (bound < 1) throw std::invalid_argument("search_cup_pairs: bound must be >= 1");
    auto rhos = rho_components(spec);
    CoordinateVector base = rhos.rho_nc - rhos.rho_c;
    const int dim = spec.rs.ambient_dim;

    std::vector<std::pair<CoordinateVector, CoordinateVector>> found;
    std::vector<long long> odo(dim, -bound);
    CoordinateVector mu0 = CoordinateVector::zero(dim);
    for (;;) {
        for (int i = 0; i < dim; ++i) mu0[i] = odo[i];
        bool ok = true;
        for (const auto& alpha : spec.delta_c_pos)
            if (inner(mu0, alpha) < 0) {
                ok = false;
                break;
            }
        CoordinateVector lambda0 = base - mu0;
        if (ok)
            for (const auto& alpha : spec.delta_c_pos)
                if (inner(lambda0, alpha) < 0) {
                    ok = false;
                    break;
                }
        if (ok)
            for (const auto& beta : spec.delta_nc1_pos) {
                bool witness = false;
                for (const auto& alpha : spec.delta_c_pos)
                    if (inner(mu0 - beta, alpha) < 0) {
                        witness = true;
                        break;
                    }
                if (!witness) {
                    ok = false;
                    break;
                }
            }
        if (ok)
            for (const auto& gamma : spec.delta_nc2_pos) {
                bool witness = false;
                for (const auto& alpha : spec.delta_c_pos)
                    if (inner(lambda0 - gamma, alpha) < 0) {
                        witness = true;
                        break;
                    }
                if (!witness) {
                    ok = false;
                    break;
                }
            }
        if (ok) found.emplace_back(mu0, lambda0);

        int pos = dim - 1;
        while (pos >= 0 && odo[pos] == bound) odo[pos--] = -bound;
        if (pos < 0) break;
        ++odo[pos];
    }
    return found;
}

CupBookkeeping cup_bookkeeping(const HermitianDomainSpec& spec, const CoordinateVector& mu0,
                               long long k) {
    require_validated(spec);
    require_integral(spec, mu0, "cup_bookkeeping");
    if (k < 1) throw std::invalid_argument("cup_bookkeeping: k must be >= 1");
    auto canonical = canonical_mu_c(spec);
    auto rhos = rho_components(spec);
    CoordinateVector lambda0 = rhos.rho_nc - rhos.rho_c - mu0;
    Rational ratio(k, canonical.k0);

    CoordinateVector mu_k0 = ratio * canonical.mu_c_prime + mu0 - Rational(2) * rhos.rho_nc1;
    CoordinateVector lambda_k0 =
        Rational(-1) * ratio * canonical.mu_c_prime + lambda0 - Rational(2) * rhos.rho_nc2;

    CupBookkeeping out;
    out.sum_is_minus_rho = (mu_k0 + lambda_k0 == -rhos.rho);
    out.q = static_cast<int>(spec.delta_nc1_pos.size());
    out.p = static_cast<int>(spec.delta_nc2_pos.size());
    out.d = static_cast<int>(spec.delta_c_pos.size());
    out.dim_check = (out.p + out.q + out.d == static_cast<int>(spec.rs.roots.size() / 2));
    return out;
}

}  // namespace flagkit
