// Test-only oracles, independent of the library's computation paths.
#pragma once

#include <map>
#include <random>
#include <vector>

#include "flagkit/hermitian_domain.hpp"
#include "flagkit/root_system.hpp"

namespace flagkit::oracles {

// Brute-force string enumeration straight from the definition.
inline std::pair<int, int> string_by_enumeration(const RootSystemData& rs,
                                                 const CoordinateVector& beta,
                                                 const CoordinateVector& alpha) {
    int p = 0, q = 0;
    for (int k = 1;; ++k) {
        CoordinateVector v = beta;
        for (int t = 0; t < k; ++t) v -= alpha;
        if (!rs.is_root(v)) break;
        p = k;
    }
    for (int k = 1;; ++k) {
        CoordinateVector v = beta;
        for (int t = 0; t < k; ++t) v += alpha;
        if (!rs.is_root(v)) break;
        q = k;
    }
    return {p, q};
}

// Indecomposables of Δ₊ᶜ, recomputed here so the oracle does not lean on the
// library's helper.
inline std::vector<CoordinateVector> compact_simple_roots_oracle(
    const HermitianDomainSpec& spec) {
    std::vector<CoordinateVector> simples;
    for (const auto& alpha : spec.delta_c_pos) {
        bool decomposable = false;
        for (const auto& a : spec.delta_c_pos) {
            if (a == alpha) continue;
            CoordinateVector rest = alpha - a;
            for (const auto& b : spec.delta_c_pos)
                if (b == rest) decomposable = true;
        }
        if (!decomposable) simples.push_back(alpha);
    }
    return simples;
}

// Freudenthal multiplicity summation for the compact subsystem: the dimension
// of the irreducible with highest weight lambda (compact-dominant integral).
inline Integer freudenthal_dimension(const HermitianDomainSpec& spec,
                                     const CoordinateVector& lambda) {
    auto rhos = rho_components(spec);
    const auto& pos = spec.delta_c_pos;
    std::vector<CoordinateVector> simples = compact_simple_roots_oracle(spec);

    CoordinateVector top = lambda + rhos.rho_c;
    Rational top_norm = inner(top, top);

    std::map<CoordinateVector, Integer> mult;
    mult[lambda] = 1;
    std::vector<CoordinateVector> frontier{lambda};
    Integer total = 1;
    while (!frontier.empty()) {
        std::vector<CoordinateVector> next;
        std::map<CoordinateVector, bool> tried;
        for (const auto& w : frontier)
            for (const auto& s : simples) {
                CoordinateVector mu = w - s;
                if (mult.count(mu) || tried.count(mu)) continue;
                tried[mu] = true;
                CoordinateVector shifted = mu + rhos.rho_c;
                Rational denom = top_norm - inner(shifted, shifted);
                if (denom <= 0) continue;
                Rational acc = 0;
                for (const auto& alpha : pos)
                    for (int k = 1;; ++k) {
                        CoordinateVector up = mu;
                        for (int t = 0; t < k; ++t) up += alpha;
                        auto it = mult.find(up);
                        if (it == mult.end()) {
                            // every genuine weight above mu is already tabulated;
                            // past the shifted-norm ball nothing survives
                            CoordinateVector up_shifted = up + rhos.rho_c;
                            if (inner(up_shifted, up_shifted) > top_norm) break;
                            continue;
                        }
                        acc += Rational(2) * Rational(it->second) * inner(up, alpha);
                    }
                Rational m = acc / denom;
                if (denominator(m) != 1)
                    throw std::logic_error("Freudenthal produced a non-integer multiplicity");
                Integer mi = numerator(m);
                if (mi > 0) {
                    mult[mu] = mi;
                    total += mi;
                    next.push_back(mu);
                }
            }
        frontier = std::move(next);
    }
    return total;
}

// Random integral weight in the chamber of Δ₊ᶜ ∪ Δ₊ⁿᶜ¹ ∪ (−Δ₊ⁿᶜ²): a random
// integer vector pushed into the cone along 2(ρ_c + ρ_nc1 − ρ_nc2), the
// positive system's own regular dominant direction.
inline CoordinateVector random_chamber_weight(const HermitianDomainSpec& spec,
                                              std::mt19937& rng) {
    const int dim = spec.rs.ambient_dim;
    std::uniform_int_distribution<int> coord(-3, 3);
    CoordinateVector v = CoordinateVector::zero(dim);
    for (int i = 0; i < dim; ++i) v[i] = coord(rng);

    auto rhos = rho_components(spec);
    CoordinateVector tilt = Rational(2) * (rhos.rho_c + rhos.rho_nc1 - rhos.rho_nc2);
    std::vector<CoordinateVector> cone = spec.delta_c_pos;
    cone.insert(cone.end(), spec.delta_nc1_pos.begin(), spec.delta_nc1_pos.end());
    for (const auto& g : spec.delta_nc2_pos) cone.push_back(-g);

    Integer shift = 1;
    for (const auto& delta : cone) {
        Rational num = -inner(v, delta), den = inner(tilt, delta);
        if (den <= 0) throw std::logic_error("tilt direction is not chamber-regular");
        Integer needed = strict_ceil(num / den);
        if (needed > shift) shift = needed;
    }
    return v + Rational(shift) * tilt;
}

}  // namespace flagkit::oracles
