#include "flagkit/hermitian_domain.hpp"

#include <algorithm>
#include <set>

namespace flagkit {

namespace {

std::vector<CoordinateVector> sorted_union(std::initializer_list<const std::vector<CoordinateVector>*> sets) {
    std::vector<CoordinateVector> out;
    for (const auto* s : sets) out.insert(out.end(), s->begin(), s->end());
    std::sort(out.begin(), out.end());
    return out;
}

std::string pair_witness(const CoordinateVector& a, const CoordinateVector& b) {
    return to_text(a) + " & " + to_text(b);
}

}  // namespace

std::vector<CoordinateVector> HermitianDomainSpec::delta_pos() const {
    return sorted_union({&delta_c_pos, &delta_nc1_pos, &delta_nc2_pos});
}

std::vector<CoordinateVector> HermitianDomainSpec::delta_nc_pos() const {
    return sorted_union({&delta_nc1_pos, &delta_nc2_pos});
}

std::vector<CoordinateVector> HermitianDomainSpec::delta_prime_nc() const {
    std::vector<CoordinateVector> out;
    for (const auto& b : delta_nc1_pos) out.push_back(-b);
    out.insert(out.end(), delta_nc2_pos.begin(), delta_nc2_pos.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<RootPart> HermitianDomainSpec::part_of(const CoordinateVector& delta) const {
    if (std::binary_search(delta_c_pos.begin(), delta_c_pos.end(), delta)) return RootPart::Compact;
    if (std::binary_search(delta_nc1_pos.begin(), delta_nc1_pos.end(), delta)) return RootPart::Nc1;
    if (std::binary_search(delta_nc2_pos.begin(), delta_nc2_pos.end(), delta)) return RootPart::Nc2;
    return std::nullopt;
}

void require_validated(const HermitianDomainSpec& spec) {
    if (!spec.validated)
        throw std::invalid_argument("domain spec '" + spec.group_label +
                                    "' has not passed validate_domain");
}

CoordinateVector half_sum(const std::vector<CoordinateVector>& roots, int ambient_dim) {
    CoordinateVector acc = CoordinateVector::zero(ambient_dim);
    for (const auto& r : roots) acc += r;
    return Rational(1, 2) * acc;
}

HermitianDomainSpec make_domain(RootSystemData rs, std::vector<CoordinateVector> c,
                                std::vector<CoordinateVector> nc1,
                                std::vector<CoordinateVector> nc2, std::string label) {
    HermitianDomainSpec spec;
    spec.rs = std::move(rs);
    spec.delta_c_pos = std::move(c);
    spec.delta_nc1_pos = std::move(nc1);
    spec.delta_nc2_pos = std::move(nc2);
    spec.group_label = std::move(label);
    std::set<CoordinateVector> seen;
    for (const auto* part : {&spec.delta_c_pos, &spec.delta_nc1_pos, &spec.delta_nc2_pos})
        for (const auto& root : *part) {
            if (!spec.rs.is_root(root))
                throw std::invalid_argument("split contains a non-root: " + to_text(root));
            if (!seen.insert(root).second)
                throw std::invalid_argument("split parts overlap at " + to_text(root));
        }
    std::sort(spec.delta_c_pos.begin(), spec.delta_c_pos.end());
    std::sort(spec.delta_nc1_pos.begin(), spec.delta_nc1_pos.end());
    std::sort(spec.delta_nc2_pos.begin(), spec.delta_nc2_pos.end());
    spec.validated = validate_domain(spec).all_passed();
    return spec;
}

HermitianDomainSpec build_su_domain(int r, int s) {
    if (s < 1 || r < s) throw std::invalid_argument("build_su_domain requires r >= s >= 1");
    if (r + s < 3) throw std::invalid_argument("su(" + std::to_string(r) + "," + std::to_string(s) +
                                               ") is not non-classical (need r+s >= 3)");
    const int m = r + s;
    auto e = [&](int i) { return CoordinateVector::basis(m, i); };
    std::vector<CoordinateVector> c, nc1, nc2;
    for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j) c.push_back(e(i) - e(j));
    for (int l = 1; l <= s; ++l)
        for (int mm = l + 1; mm <= s; ++mm) c.push_back(e(r + l) - e(r + mm));
    for (int l = 1; l <= s; ++l)
        for (int mm = l; mm <= s; ++mm) nc1.push_back(e(l) - e(r + mm));
    for (int l = 1; l <= s; ++l)
        for (int i = l + 1; i <= r; ++i) nc2.push_back(e(r + l) - e(i));
    auto spec = make_domain(build_root_system(Family::TypeA, m - 1), std::move(c), std::move(nc1),
                            std::move(nc2), "su:" + std::to_string(r) + "," + std::to_string(s));
    if (!spec.validated) throw std::logic_error("canonical su split failed validation");
    return spec;
}

HermitianDomainSpec build_sp_domain(int n) {
    if (n < 2) throw std::invalid_argument("build_sp_domain requires n >= 2");
    auto e = [&](int i) { return CoordinateVector::basis(n, i); };
    std::vector<CoordinateVector> c, nc1, nc2;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            c.push_back(i % 2 == 1 ? e(i) - e(j) : e(j) - e(i));
    for (int i = 1; i <= n; i += 2)
        for (int j = i; j <= n; ++j) nc1.push_back(e(i) + e(j));
    for (int i = 2; i <= n; i += 2)
        for (int j = i; j <= n; ++j) nc2.push_back(-(e(i) + e(j)));
    auto spec = make_domain(build_root_system(Family::TypeC, n), std::move(c), std::move(nc1),
                            std::move(nc2), "sp:" + std::to_string(n));
    if (!spec.validated) throw std::logic_error("canonical sp split failed validation");
    return spec;
}

VerificationReport validate_domain(const HermitianDomainSpec& spec) {
    VerificationReport report;
    report.group = spec.group_label;
    const auto& rs = spec.rs;
    auto delta_pos = spec.delta_pos();

    {   // the three parts are disjoint and pick one of ±δ for every root
        auto& c = report.add("positive-system-partition", "Sec 1");
        c.detail = "three disjoint parts; exactly one of ±δ per root";
        RootSet pos_set(delta_pos);
        for (const auto& root : rs.roots) {
            bool pos = pos_set.contains(root), neg = pos_set.contains(-root);
            if (pos == neg) {
                c.status = CheckStatus::Fail;
                c.witnesses.push_back(to_text(root));
            }
        }
        if (delta_pos.size() != rs.roots.size() / 2) c.status = CheckStatus::Fail;
    }

    auto closure_check = [&](const char* name, const char* ref,
                             const std::vector<CoordinateVector>& pos) {
        auto& c = report.add(name, ref);
        RootSet pos_set(pos);
        for (const auto& a : pos)
            for (const auto& b : pos) {
                CoordinateVector s = a + b;
                if (rs.is_root(s) && !pos_set.contains(s)) {
                    c.status = CheckStatus::Fail;
                    c.witnesses.push_back(pair_witness(a, b));
                }
            }
    };
    closure_check("delta-plus-closed", "Sec 1", delta_pos);

    std::vector<CoordinateVector> delta_prime = spec.delta_c_pos;
    for (const auto& b : spec.delta_nc1_pos) delta_prime.push_back(-b);
    delta_prime.insert(delta_prime.end(), spec.delta_nc2_pos.begin(), spec.delta_nc2_pos.end());
    std::sort(delta_prime.begin(), delta_prime.end());
    closure_check("delta-prime-closed", "Sec 2", delta_prime);

    std::vector<CoordinateVector> delta_dprime = spec.delta_c_pos;
    delta_dprime.insert(delta_dprime.end(), spec.delta_nc1_pos.begin(), spec.delta_nc1_pos.end());
    for (const auto& g : spec.delta_nc2_pos) delta_dprime.push_back(-g);
    std::sort(delta_dprime.begin(), delta_dprime.end());
    closure_check("delta-dprime-closed", "Rmk 4.7", delta_dprime);

    {   // p'_- is abelian: no sum of two Δ'₊ⁿᶜ elements is a root
        auto& c = report.add("p-prime-minus-abelian", "Lemma 2.3");
        auto prime_nc = spec.delta_prime_nc();
        for (std::size_t i = 0; i < prime_nc.size(); ++i)
            for (std::size_t j = i; j < prime_nc.size(); ++j)
                if (rs.is_root(prime_nc[i] + prime_nc[j])) {
                    c.status = CheckStatus::Fail;
                    c.witnesses.push_back(pair_witness(prime_nc[i], prime_nc[j]));
                }
    }

    {   // (β,β') >= 0 on Δ'₊ⁿᶜ
        auto& c = report.add("lemma23-pairings", "Lemma 2.3");
        auto prime_nc = spec.delta_prime_nc();
        for (const auto& a : prime_nc)
            for (const auto& b : prime_nc)
                if (inner(a, b) < 0) {
                    c.status = CheckStatus::Fail;
                    c.witnesses.push_back(pair_witness(a, b));
                }
    }

    {   // Z2-grading of the split: [k,k]⊂k, [k,p]⊂p, [p,p]⊂k at the root level
        auto& c = report.add("cartan-grading", "Lemma 2.4");
        std::vector<CoordinateVector> compact = spec.delta_c_pos, noncompact = spec.delta_nc_pos();
        for (const auto& a : spec.delta_c_pos) compact.push_back(-a);
        for (const auto& a : spec.delta_nc_pos()) noncompact.push_back(-a);
        RootSet compact_set(compact), noncompact_set(noncompact);
        auto expect = [&](const std::vector<CoordinateVector>& xs,
                          const std::vector<CoordinateVector>& ys, const RootSet& target) {
            for (const auto& x : xs)
                for (const auto& y : ys) {
                    CoordinateVector s = x + y;
                    if (rs.is_root(s) && !target.contains(s)) {
                        c.status = CheckStatus::Fail;
                        c.witnesses.push_back(pair_witness(x, y));
                    }
                }
        };
        expect(compact, compact, compact_set);
        expect(compact, noncompact, noncompact_set);
        expect(noncompact, noncompact, compact_set);
    }

    {   // β + γ lands in Δ₊ᶜ when it is a root
        auto& c = report.add("nc1-plus-nc2-compact", "Lemma 2.4");
        RootSet compact_set(spec.delta_c_pos);
        for (const auto& b : spec.delta_nc1_pos)
            for (const auto& g : spec.delta_nc2_pos) {
                CoordinateVector s = b + g;
                if (rs.is_root(s) && !compact_set.contains(s)) {
                    c.status = CheckStatus::Fail;
                    c.witnesses.push_back(pair_witness(b, g));
                }
            }
    }

    {   // [p¹₋, p²₊] = 0: γ − β is never a root
        auto& c = report.add("p1-p2bar-commute", "Lemma 2.4");
        for (const auto& b : spec.delta_nc1_pos)
            for (const auto& g : spec.delta_nc2_pos)
                if (rs.is_root(g - b)) {
                    c.status = CheckStatus::Fail;
                    c.witnesses.push_back(pair_witness(b, g));
                }
    }

    {   // within one nc part no sum is a root
        auto& c = report.add("nc-part-sums-not-roots", "Rmk 2.5");
        for (const auto* part : {&spec.delta_nc1_pos, &spec.delta_nc2_pos})
            for (const auto& a : *part)
                for (const auto& b : *part)
                    if (rs.is_root(a + b)) {
                        c.status = CheckStatus::Fail;
                        c.witnesses.push_back(pair_witness(a, b));
                    }
    }

    {
        auto& c = report.add("non-classical", "Sec 1");
        if (spec.delta_nc1_pos.empty() || spec.delta_nc2_pos.empty()) {
            c.status = CheckStatus::Fail;
            c.detail = "a classical structure: one of the nc parts is empty";
        }
    }

    return report;
}

RhoSet rho_components(const HermitianDomainSpec& spec) {
    require_validated(spec);
    RhoSet out;
    const int d = spec.rs.ambient_dim;
    out.rho_c = half_sum(spec.delta_c_pos, d);
    out.rho_nc1 = half_sum(spec.delta_nc1_pos, d);
    out.rho_nc2 = half_sum(spec.delta_nc2_pos, d);
    out.rho_nc = out.rho_nc1 + out.rho_nc2;
    out.rho = out.rho_c + out.rho_nc;
    out.rho_prime_nc = out.rho_nc2 - out.rho_nc1;
    out.rho_prime = out.rho_c + out.rho_prime_nc;
    return out;
}

ChamberDegrees chamber_degrees(const HermitianDomainSpec& spec, const CoordinateVector& lambda) {
    ChamberDegrees out;
    out.regular = true;
    for (const auto& a : spec.delta_c_pos) {
        int s = sign_of(inner(lambda, a));
        if (s < 0) ++out.q_of, ++out.q_prime_of;
        if (s == 0) out.regular = false;
    }
    for (const auto& b : spec.delta_nc1_pos) {
        int s = sign_of(inner(lambda, b));
        if (s > 0) ++out.q_of;
        if (s < 0) ++out.q_prime_of;  // −β ∈ Δ'₊ⁿᶜ has positive pairing
        if (s == 0) out.regular = false;
    }
    for (const auto& g : spec.delta_nc2_pos) {
        int s = sign_of(inner(lambda, g));
        if (s > 0) ++out.q_of, ++out.q_prime_of;
        if (s == 0) out.regular = false;
    }
    return out;
}

HermitianDomainSpec parse_group(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("group spec must be su:r,s or sp:n, got '" + text + "'");
    std::string kind = text.substr(0, colon), args = text.substr(colon + 1);
    auto parse_int = [&](const std::string& s) {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad integer '" + s + "' in group spec '" + text + "'");
        return std::stoi(s);
    };
    if (kind == "su") {
        auto comma = args.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("su group spec needs r,s: '" + text + "'");
        return build_su_domain(parse_int(args.substr(0, comma)), parse_int(args.substr(comma + 1)));
    }
    if (kind == "sp") return build_sp_domain(parse_int(args));
    throw std::invalid_argument("unknown group kind '" + kind + "'");
}

}  // namespace flagkit
