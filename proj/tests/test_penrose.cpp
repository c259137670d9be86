#include <doctest.h>

#include <random>

#include "flagkit/penrose.hpp"
#include "oracles.hpp"

using namespace flagkit;

namespace {

CoordinateVector vec(const std::string& s) { return parse_vector(s); }

std::vector<std::string> family_labels_rank6() {
    std::vector<std::string> out;
    for (int r = 1; r <= 6; ++r)
        for (int s = 1; s <= r; ++s)
            if (r + s >= 3 && r + s <= 7)
                out.push_back("su:" + std::to_string(r) + "," + std::to_string(s));
    for (int n = 2; n <= 6; ++n) out.push_back("sp:" + std::to_string(n));
    return out;
}

}  // namespace

TEST_CASE("check_injectivity: worked examples") {
    auto su21 = build_su_domain(2, 1);
    auto w0 = check_injectivity(su21, CoordinateVector::zero(3));
    CHECK(w0.holds);
    CHECK(w0.assignments.at(vec("1,0,-1")) == vec("1,-1,0"));

    auto w1 = check_injectivity(su21, vec("1,-1,0"));
    CHECK(!w1.holds);
    CHECK(w1.assignments.empty());

    CHECK_THROWS_AS(check_injectivity(su21, vec("1/2,0,0")), std::invalid_argument);
}

TEST_CASE("check_injectivity with (mu', Delta_c+) = 0 reduces to the witness lemma") {
    for (const auto& label : family_labels_rank6()) {
        CAPTURE(label);
        auto spec = parse_group(label);
        auto canonical = canonical_mu_c(spec);
        auto lemma = verify_beta_alpha_lemma(spec, false);
        bool lemma_ok = lemma.fail_count() == 0 && lemma.flagged_count() == 0;
        CHECK(check_injectivity(spec, CoordinateVector::zero(spec.rs.ambient_dim)).holds ==
              lemma_ok);
        CHECK(check_injectivity(spec, canonical.mu_c_prime).holds == lemma_ok);
    }
}

TEST_CASE("check_nontriviality_necessary") {
    auto su21 = build_su_domain(2, 1);
    CHECK(check_nontriviality_necessary(su21, CoordinateVector::zero(3)));
    CHECK(!check_nontriviality_necessary(su21, vec("-1,1,0")));
    auto sp3 = build_sp_domain(3);
    CHECK(check_nontriviality_necessary(sp3, vec("1,0,1")));
}

TEST_CASE("check_chamber") {
    auto su21 = build_su_domain(2, 1);
    CHECK(check_chamber(su21, vec("2,0,-1")));
    CHECK(!check_chamber(su21, vec("1,-1,0")));  // rho hits the nc2 sign

    for (const auto& label : family_labels_rank6()) {
        auto spec = parse_group(label);
        auto rhos = rho_components(spec);
        CHECK(check_chamber(spec, rhos.rho_c + rhos.rho_nc1 - rhos.rho_nc2));
    }
}

TEST_CASE("property W: canonical family on su(2,1)") {
    auto su21 = build_su_domain(2, 1);
    auto rhos = rho_components(su21);
    auto at_k = [&](long long k) { return penrose_pair(su21, k, CoordinateVector::zero(3)); };
    auto pw4 = check_property_w(su21, at_k(4).mu);
    REQUIRE(pw4.has_value());
    CHECK(*pw4);
    auto pw3 = check_property_w(su21, at_k(3).mu);
    REQUIRE(pw3.has_value());
    CHECK(!*pw3);  // the (k/k0 - 1) factor vanishes at k = k0
    CHECK(!property_w_pw_form(su21, at_k(3).mu_prime));
    CHECK(property_w_pw_form(su21, at_k(4).mu_prime));

    CoordinateVector singular = Rational(-1) * rhos.rho;
    CHECK(!check_property_w(su21, singular).has_value());
}

TEST_CASE("property W: the two forms agree on chamber weights") {
    std::mt19937 rng(314159);
    for (const auto& label : family_labels_rank6()) {
        CAPTURE(label);
        auto spec = parse_group(label);
        auto rhos = rho_components(spec);
        for (int trial = 0; trial < 20; ++trial) {
            CoordinateVector zeta = oracles::random_chamber_weight(spec, rng);
            CoordinateVector mu = zeta - rhos.rho;
            CoordinateVector mu_prime = zeta - rhos.rho_prime;
            REQUIRE(check_chamber(spec, zeta));
            auto general = check_property_w(spec, mu);
            REQUIRE(general.has_value());
            CHECK(*general == property_w_pw_form(spec, mu_prime));
        }
    }
}

TEST_CASE("canonical_mu_c: worked values") {
    auto su21 = canonical_mu_c(build_su_domain(2, 1));
    CHECK(su21.mu_c_prime == vec("1,1,-2"));
    CHECK(su21.k0 == 3);

    auto sp2 = canonical_mu_c(build_sp_domain(2));
    CHECK(sp2.mu_c_prime == vec("3,3"));
    CHECK(sp2.k0 == 3);

    auto sp3 = canonical_mu_c(build_sp_domain(3));
    CHECK(sp3.mu_c_prime == vec("4,4,4"));
    CHECK(sp3.k0 == 4);

    // k0 really is maximal: mu'_c/k0 integral, nothing larger divides
    for (const auto& label : family_labels_rank6()) {
        auto spec = parse_group(label);
        auto c = canonical_mu_c(spec);
        CHECK(is_integral_weight(Rational(1, c.k0) * c.mu_c_prime, spec.rs));
        for (long long k = c.k0 + 1; k <= c.k0 + 5; ++k)
            CHECK(!is_integral_weight(Rational(1, k) * c.mu_c_prime, spec.rs));
    }
}

TEST_CASE("penrose_pair") {
    auto su21 = build_su_domain(2, 1);
    auto pp = penrose_pair(su21, 3, CoordinateVector::zero(3));
    CHECK(pp.mu_prime == vec("1,1,-2"));
    CHECK(pp.mu == vec("0,1,-1"));

    auto rhos = rho_components(su21);
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> kdist(1, 20), cdist(-3, 3);
    for (int trial = 0; trial < 25; ++trial) {
        CoordinateVector mu0 = CoordinateVector::zero(3);
        for (int i = 0; i < 3; ++i) mu0[i] = cdist(rng);
        auto pair = penrose_pair(su21, kdist(rng), mu0);
        CHECK(pair.mu + rhos.rho == pair.mu_prime + rhos.rho_prime);
    }
    CHECK_THROWS_AS(penrose_pair(su21, 0, CoordinateVector::zero(3)), std::invalid_argument);
}

TEST_CASE("threshold_n on su(2,1): N = 4 with the documented minima") {
    auto su21 = build_su_domain(2, 1);
    CoordinateVector mu0 = CoordinateVector::zero(3);
    auto result = threshold_n(su21, mu0);
    CHECK(result.N == 4);
    CHECK(result.k0 == 3);
    CHECK(result.mu_c_prime == vec("1,1,-2"));

    long long nc1 = 0, nc2 = 0, pw = 0;
    for (const auto& pc : result.per_constraint) {
        if (pc.id.rfind("nc1:", 0) == 0) nc1 = std::max(nc1, pc.min_k);
        if (pc.id.rfind("nc2:", 0) == 0) nc2 = std::max(nc2, pc.min_k);
        if (pc.id.rfind("pw:", 0) == 0) pw = std::max(pw, pc.min_k);
    }
    CHECK(nc1 == 2);
    CHECK(nc2 == 3);
    CHECK(pw == 4);
    CHECK(!result.failing_at_n_minus_1.empty());

    // independent oracle: the raw inequalities via penrose_pair and the rho set
    auto rhos = rho_components(su21);
    auto all_hold = [&](long long k) {
        auto pair = penrose_pair(su21, k, mu0);
        CoordinateVector zeta = pair.mu + rhos.rho;
        return check_chamber(su21, zeta) && property_w_pw_form(su21, pair.mu_prime);
    };
    for (long long k = 1; k <= 3; ++k) CHECK(!all_hold(k));
    for (long long k = 4; k <= 14; ++k) CHECK(all_hold(k));
}

TEST_CASE("threshold_n: monotone beyond N; preconditions enforced") {
    for (const auto& label : {"su:3,2", "sp:3", "sp:4"}) {
        CAPTURE(label);
        auto spec = parse_group(label);
        CoordinateVector mu0 = CoordinateVector::zero(spec.rs.ambient_dim);
        auto result = threshold_n(spec, mu0);
        for (long long k = result.N; k <= result.N + 10; ++k)
            for (const auto& [id, holds] : evaluate_threshold_constraints(spec, mu0, k)) {
                CAPTURE(id);
                CHECK(holds);
            }
        if (result.N > 1) {
            bool some_fail = false;
            for (const auto& [id, holds] : evaluate_threshold_constraints(spec, mu0, result.N - 1))
                if (!holds) some_fail = true;
            CHECK(some_fail);
        }
    }
    // sp(2) fails the per-beta hypothesis at mu0 = 0
    CHECK_THROWS_AS(threshold_n(build_sp_domain(2), CoordinateVector::zero(2)),
                    std::invalid_argument);
    // mu0 with a negative compact pairing is rejected
    CHECK_THROWS_AS(threshold_n(build_su_domain(2, 1), vec("-1,1,0")), std::invalid_argument);
}

TEST_CASE("threshold_n with a twist") {
    auto sp3 = build_sp_domain(3);
    CoordinateVector mu0 = vec("2,2,2");  // orthogonal to the compact part
    REQUIRE(check_injectivity(sp3, mu0).holds);
    auto result = threshold_n(sp3, mu0);
    for (long long k = result.N; k <= result.N + 10; ++k)
        for (const auto& [id, holds] : evaluate_threshold_constraints(sp3, mu0, k)) CHECK(holds);
    if (result.N > 1) {
        bool some_fail = false;
        for (const auto& [id, holds] : evaluate_threshold_constraints(sp3, mu0, result.N - 1))
            if (!holds) some_fail = true;
        CHECK(some_fail);
    }
}

TEST_CASE("verify_beta_alpha_lemma") {
    CHECK(verify_beta_alpha_lemma(build_su_domain(3, 2), false).all_passed());
    CHECK(verify_beta_alpha_lemma(build_su_domain(3, 2), true).all_passed());

    auto sp2 = verify_beta_alpha_lemma(build_sp_domain(2), false);
    CHECK(sp2.fail_count() == 0);
    CHECK(sp2.flagged_count() == 1);
    bool found = false;
    for (const auto& c : sp2.checks)
        if (c.status == CheckStatus::Flagged) {
            CHECK(c.name == "lemma49:beta=1,1");
            found = true;
        }
    CHECK(found);

    CHECK_THROWS_AS(verify_beta_alpha_lemma(build_sp_domain(2), true), std::invalid_argument);

    for (int n = 3; n <= 6; ++n) {
        auto r = verify_beta_alpha_lemma(build_sp_domain(n), true);
        CHECK(r.fail_count() == 0);
        CHECK(r.flagged_count() == 0);
    }
}

TEST_CASE("search_cup_pairs: discovery, emptiness, re-verification") {
    auto sp3 = build_sp_domain(3);
    auto pairs = search_cup_pairs(sp3, 3);
    CoordinateVector mu0 = CoordinateVector::zero(3), lambda0 = vec("1,0,1");
    bool found = false;
    for (const auto& [m, l] : pairs)
        if (m == mu0 && l == lambda0) found = true;
    CHECK(found);

    CHECK(search_cup_pairs(build_sp_domain(2), 10).empty());

    // second pass: every returned pair re-verified against the raw conditions
    auto rhos = rho_components(sp3);
    for (const auto& [m, l] : pairs) {
        CHECK(check_nontriviality_necessary(sp3, m));
        CHECK(check_nontriviality_necessary(sp3, l));
        for (const auto& beta : sp3.delta_nc1_pos) {
            bool witness = false;
            for (const auto& alpha : sp3.delta_c_pos)
                if (inner(m - beta, alpha) < 0) witness = true;
            CHECK(witness);
        }
        for (const auto& gamma : sp3.delta_nc2_pos) {
            bool witness = false;
            for (const auto& alpha : sp3.delta_c_pos)
                if (inner(l - gamma, alpha) < 0) witness = true;
            CHECK(witness);
        }
        CHECK(m + l == rhos.rho_nc - rhos.rho_c);
    }
}

TEST_CASE("search_cup_pairs: (0,0) works whenever rho_nc = rho_c") {
    // su(s+1,s) has rho_nc - rho_c = 0, and mu0 = lambda0 = 0 satisfies the
    // full condition set through the witness lemma on both nc parts
    for (int s = 1; s <= 3; ++s) {
        auto spec = build_su_domain(s + 1, s);
        CAPTURE(s);
        auto rhos = rho_components(spec);
        REQUIRE(rhos.rho_nc == rhos.rho_c);
        auto pairs = search_cup_pairs(spec, 1);
        CoordinateVector zero = CoordinateVector::zero(spec.rs.ambient_dim);
        bool found = false;
        for (const auto& [m, l] : pairs) found |= (m == zero && l == zero);
        CHECK(found);
    }
}

TEST_CASE("threshold_n can be 1 when the twist already dominates") {
    auto su21 = build_su_domain(2, 1);
    CoordinateVector mu0 = vec("2,2,-4");  // 2 mu'_c / k0, well inside every cone
    auto result = threshold_n(su21, mu0);
    CHECK(result.N == 1);
    CHECK(result.failing_at_n_minus_1.empty());
    for (const auto& [id, holds] : evaluate_threshold_constraints(su21, mu0, 1)) {
        CAPTURE(id);
        CHECK(holds);
    }
}

TEST_CASE("swapping the nc parts repairs the Sp(4) witness failure") {
    // the documented exception: beta = e1+e2 has no compact witness in the
    // canonical sp(2) split, but the conjugate split (nc parts exchanged)
    // satisfies the lemma outright
    auto canonical = build_sp_domain(2);
    auto swapped = make_domain(canonical.rs, canonical.delta_c_pos, canonical.delta_nc2_pos,
                               canonical.delta_nc1_pos, "sp:2-swapped");
    REQUIRE(swapped.validated);
    auto report = verify_beta_alpha_lemma(swapped, false);
    CHECK(report.fail_count() == 0);
    CHECK(report.flagged_count() == 0);
    CHECK(check_injectivity(swapped, CoordinateVector::zero(2)).holds);
}

TEST_CASE("search_cup_pairs: larger box gives a superset; output sorted") {
    auto sp3 = build_sp_domain(3);
    auto small = search_cup_pairs(sp3, 1);
    auto large = search_cup_pairs(sp3, 2);
    for (const auto& p : small)
        CHECK(std::find(large.begin(), large.end(), p) != large.end());
    CHECK(std::is_sorted(small.begin(), small.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; }));
}

TEST_CASE("cup_bookkeeping") {
    auto sp3 = build_sp_domain(3);
    for (long long k : {1, 4, 9}) {
        auto b = cup_bookkeeping(sp3, CoordinateVector::zero(3), k);
        CHECK(b.sum_is_minus_rho);
        CHECK(b.q == 4);
        CHECK(b.p == 2);
        CHECK(b.d == 3);
        CHECK(b.dim_check);
    }
    auto su21 = cup_bookkeeping(build_su_domain(2, 1), CoordinateVector::zero(3), 5);
    CHECK(su21.sum_is_minus_rho);
    CHECK(su21.q == 1);
    CHECK(su21.p == 1);
    CHECK(su21.d == 1);
    CHECK(su21.dim_check);

    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> kdist(1, 30), cdist(-2, 2);
    for (int trial = 0; trial < 15; ++trial) {
        CoordinateVector twist = CoordinateVector::zero(3);
        for (int i = 0; i < 3; ++i) twist[i] = cdist(rng);
        CHECK(cup_bookkeeping(sp3, twist, kdist(rng)).sum_is_minus_rho);
    }
}
