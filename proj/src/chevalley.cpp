#include "flagkit/chevalley.hpp"

#include <algorithm>

namespace flagkit {

namespace {

// Dense integer matrices are enough for the sl/sp realizations below; entries
// stay tiny (|entry| <= 2 in brackets of basis vectors).
struct Matrix {
    int n = 0;
    std::vector<long long> a;
    explicit Matrix(int size) : n(size), a(static_cast<std::size_t>(size) * size, 0) {}
    long long& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    long long at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
    bool is_zero() const {
        return std::all_of(a.begin(), a.end(), [](long long x) { return x == 0; });
    }
};

Matrix bracket(const Matrix& x, const Matrix& y) {
    Matrix out(x.n);
    for (int i = 0; i < x.n; ++i)
        for (int k = 0; k < x.n; ++k) {
            long long xik = x.at(i, k), yik = y.at(i, k);
            if (xik == 0 && yik == 0) continue;
            for (int j = 0; j < x.n; ++j)
                out.at(i, j) += xik * y.at(k, j) - yik * x.at(k, j);
        }
    return out;
}

// Root vector e_v in the defining representation. Type A: e_{e_i−e_j} = E_ij.
// Type C (sp(2n), J-block convention): e_{e_i−e_j} = E_ij − E_{n+j,n+i},
// e_{e_i+e_j} = E_{i,n+j} + E_{j,n+i}, e_{2e_i} = E_{i,n+i}, and transposes for
// the negatives. Both are Chevalley bases up to sign.
Matrix root_vector(const RootSystemData& rs, const CoordinateVector& v) {
    if (rs.family == Family::TypeA) {
        Matrix m(rs.ambient_dim);
        int plus = -1, minus = -1;
        for (int i = 0; i < rs.ambient_dim; ++i) {
            if (v[i] == 1) plus = i;
            if (v[i] == -1) minus = i;
        }
        if (plus < 0 || minus < 0) throw std::logic_error("bad type A root");
        m.at(plus, minus) = 1;
        return m;
    }
    const int n = rs.ambient_dim;
    Matrix m(2 * n);
    std::vector<int> support;
    for (int i = 0; i < n; ++i)
        if (v[i] != 0) support.push_back(i);
    if (support.size() == 1) {
        int i = support[0];
        if (v[i] == 2)
            m.at(i, n + i) = 1;
        else if (v[i] == -2)
            m.at(n + i, i) = 1;
        else
            throw std::logic_error("bad type C root");
        return m;
    }
    if (support.size() != 2) throw std::logic_error("bad type C root");
    int i = support[0], j = support[1];
    if (v[i] == 1 && v[j] == 1) {
        m.at(i, n + j) = 1;
        m.at(j, n + i) = 1;
    } else if (v[i] == -1 && v[j] == -1) {
        m.at(n + i, j) = 1;
        m.at(n + j, i) = 1;
    } else if (v[i] == 1 && v[j] == -1) {
        m.at(i, j) = 1;
        m.at(n + j, n + i) = -1;
    } else {
        m.at(j, i) = 1;
        m.at(n + i, n + j) = -1;
    }
    return m;
}

// Scalar c with m == c * basis; throws if m is not proportional.
long long proportionality(const Matrix& m, const Matrix& basis) {
    long long c = 0;
    for (std::size_t k = 0; k < basis.a.size(); ++k)
        if (basis.a[k] != 0) {
            c = m.a[k] / basis.a[k];
            break;
        }
    for (std::size_t k = 0; k < basis.a.size(); ++k)
        if (m.a[k] != c * basis.a[k]) throw std::logic_error("bracket not proportional to root vector");
    return c;
}

// Heights with respect to the indecomposable elements of the positive set.
std::map<CoordinateVector, int> heights(const std::vector<CoordinateVector>& pos,
                                        const RootSystemData& rs) {
    auto in_pos = [&](const CoordinateVector& v) {
        return std::binary_search(pos.begin(), pos.end(), v);
    };
    std::map<CoordinateVector, int> ht;
    for (const auto& delta : pos) {
        bool decomposable = false;
        for (const auto& a : pos) {
            CoordinateVector b = delta - a;
            if (a != delta && rs.is_root(b) && in_pos(b)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) ht[delta] = 1;
    }
    bool progress = true;
    while (ht.size() < pos.size() && progress) {
        progress = false;
        for (const auto& delta : pos) {
            if (ht.count(delta)) continue;
            for (const auto& [simple, h] : ht) {
                if (h != 1) continue;
                CoordinateVector rest = delta - simple;
                if (in_pos(rest) && ht.count(rest)) {
                    ht[delta] = 1 + ht[rest];
                    progress = true;
                    break;
                }
            }
        }
    }
    if (ht.size() != pos.size()) throw std::logic_error("height assignment incomplete");
    return ht;
}

void verify_jacobi(const ChevalleyTable& t) {
    const auto& pos = t.positive_roots;
    for (const auto& a : pos)
        for (const auto& b : pos)
            for (const auto& c : pos) {
                Rational acc = t.c(a, b) * t.c(a + b, c) + t.c(b, c) * t.c(b + c, a) +
                               t.c(c, a) * t.c(c + a, b);
                if (acc != 0)
                    throw std::logic_error("Jacobi identity fails at " + to_text(a) + ", " +
                                           to_text(b) + ", " + to_text(c));
            }
}

}  // namespace

Rational ChevalleyTable::c(const CoordinateVector& delta, const CoordinateVector& delta2) const {
    auto it = by_pair.find({delta, delta2});
    return it == by_pair.end() ? Rational(0) : it->second;
}

int ChevalleyTable::index_of(const CoordinateVector& delta) const {
    auto it = std::lower_bound(positive_roots.begin(), positive_roots.end(), delta);
    if (it == positive_roots.end() || *it != delta)
        throw std::invalid_argument("not a positive root of this table: " + to_text(delta));
    return static_cast<int>(it - positive_roots.begin());
}

ChevalleyTable build_chevalley(const HermitianDomainSpec& spec) {
    require_validated(spec);
    ChevalleyTable table;
    table.positive_roots = spec.delta_pos();
    const auto& pos = table.positive_roots;
    for (const auto& delta : pos) table.grading[delta] = *spec.part_of(delta);

    std::map<CoordinateVector, Matrix> vectors;
    for (const auto& delta : pos) vectors.emplace(-delta, root_vector(spec.rs, -delta));

    // Raw constants from matrix brackets.
    std::map<std::pair<CoordinateVector, CoordinateVector>, long long> raw;
    auto in_pos = [&](const CoordinateVector& v) {
        return std::binary_search(pos.begin(), pos.end(), v);
    };
    for (const auto& a : pos)
        for (const auto& b : pos) {
            if (a == b) continue;
            Matrix br = bracket(vectors.at(-a), vectors.at(-b));
            CoordinateVector sum = a + b;
            if (in_pos(sum)) {
                raw[{a, b}] = proportionality(br, vectors.at(-sum));
            } else if (spec.rs.is_root(sum)) {
                throw std::logic_error("positive set not closed at " + to_text(sum));
            } else if (!br.is_zero()) {
                throw std::logic_error("unexpected nonzero bracket");
            }
        }

    // Re-sign so every extraspecial pair gets +(p+1), processing targets in
    // height-then-lex order; roots of height 1 keep sign +1.
    auto ht = heights(pos, spec.rs);
    std::vector<CoordinateVector> by_height = pos;
    std::sort(by_height.begin(), by_height.end(), [&](const auto& x, const auto& y) {
        if (ht[x] != ht[y]) return ht[x] < ht[y];
        return x < y;
    });
    auto order_key = [&](const CoordinateVector& v) {
        return std::pair<int, CoordinateVector>(ht[v], v);
    };
    std::map<CoordinateVector, long long> esign;
    for (const auto& target : by_height) {
        if (ht[target] == 1) {
            esign[target] = 1;
            continue;
        }
        const CoordinateVector* best = nullptr;
        for (const auto& a : pos) {
            CoordinateVector b = target - a;
            if (!in_pos(b) || !(order_key(a) < order_key(b))) continue;
            if (!best || order_key(a) < order_key(*best)) best = &a;
        }
        if (!best) throw std::logic_error("no extraspecial pair for " + to_text(target));
        CoordinateVector a = *best, b = target - a;
        long long c0 = esign.at(a) * esign.at(b) * raw.at({a, b});
        auto [p, q] = root_string(spec.rs, b, a);
        (void)q;
        if (std::llabs(c0) != p + 1)
            throw std::logic_error("extraspecial constant breaks the p+1 rule");
        esign[target] = c0 > 0 ? 1 : -1;
    }

    for (const auto& [key, value] : raw) {
        Rational c = Rational(esign.at(key.first) * esign.at(key.second) *
                              esign.at(key.first + key.second) * value);
        if (c != 0) table.by_pair[key] = c;
    }

    // Chevalley property and antisymmetry on the final table.
    for (const auto& [key, value] : table.by_pair) {
        auto [p, q] = root_string(spec.rs, key.second, key.first);
        (void)q;
        if (boost::multiprecision::abs(numerator(value)) != p + 1 || !is_integer(value))
            throw std::logic_error("|C| != p+1 at " + to_text(key.first) + ", " +
                                   to_text(key.second));
        if (table.c(key.second, key.first) != -value)
            throw std::logic_error("antisymmetry fails");
    }
    verify_jacobi(table);
    return table;
}

ChevalleyTable resign_table(const ChevalleyTable& table, const std::vector<int>& signs) {
    if (signs.size() != table.positive_roots.size())
        throw std::invalid_argument("resign_table: one sign per positive root");
    for (int s : signs)
        if (s != 1 && s != -1) throw std::invalid_argument("resign_table: signs must be ±1");
    ChevalleyTable out = table;
    for (auto& [key, value] : out.by_pair) {
        int i = table.index_of(key.first), j = table.index_of(key.second);
        int k = table.index_of(key.first + key.second);
        value *= signs[i] * signs[j] * signs[k];
    }
    return out;
}

std::string dump_table(const ChevalleyTable& table) {
    std::string out;
    for (const auto& [key, value] : table.by_pair)
        out += "C[" + to_text(key.first) + "|" + to_text(key.second) +
               "]=" + rational_to_string(value) + "\n";
    return out;
}

VerificationReport verify_lemma_4_2(const ChevalleyTable& table, const HermitianDomainSpec& spec) {
    VerificationReport report;
    report.group = spec.group_label;
    auto part = [&](const CoordinateVector& v) { return table.grading.at(v); };

    struct Group {
        const char* name;
        const char* ref;
    };
    auto check_zero = [&](const Group& g, auto&& forbidden) {
        auto& c = report.add(g.name, g.ref);
        for (const auto& [key, value] : table.by_pair) {
            (void)value;
            CoordinateVector sum = key.first + key.second;
            if (forbidden(part(key.first), part(key.second), part(sum))) {
                c.status = CheckStatus::Fail;
                c.witnesses.push_back(to_text(key.first) + " & " + to_text(key.second));
            }
        }
    };
    using P = RootPart;
    check_zero({"lemma42-cc", "Lemma 4.2 (cc)"}, [](P a, P b, P s) {
        return a == P::Compact && b == P::Compact && s != P::Compact;
    });
    check_zero({"lemma42-cnc", "Lemma 4.2 (cnc)"}, [](P a, P b, P s) {
        if (a == P::Compact && b != P::Compact) return s != b;
        if (b == P::Compact && a != P::Compact) return s != a;
        return false;
    });
    check_zero({"lemma42-ncnc", "Lemma 4.2 (ncnc)"}, [](P a, P b, P s) {
        return ((a == P::Nc1 && b == P::Nc2) || (a == P::Nc2 && b == P::Nc1)) && s != P::Compact;
    });
    check_zero({"lemma42-ncinci", "Lemma 4.2 (ncinci)"},
               [](P a, P b, P s) { (void)s; return a != P::Compact && a == b; });

    {   // complement: the grading triples that may carry nonzero constants
        auto& c = report.add("lemma42-allowed-complement", "Lemma 4.3");
        for (const auto& [key, value] : table.by_pair) {
            (void)value;
            P a = part(key.first), b = part(key.second), s = part(key.first + key.second);
            bool allowed = (a == P::Compact && b == P::Compact && s == P::Compact) ||
                           (a == P::Nc1 && b == P::Nc2 && s == P::Compact) ||
                           (a == P::Nc2 && b == P::Nc1 && s == P::Compact) ||
                           (a == P::Compact && b != P::Compact && s == b) ||
                           (b == P::Compact && a != P::Compact && s == a);
            if (!allowed) {
                c.status = CheckStatus::Fail;
                c.witnesses.push_back(to_text(key.first) + " & " + to_text(key.second));
            }
        }
    }
    return report;
}

RelativeForm generator_form(const ChevalleyTable& table, const CoordinateVector& delta) {
    RelativeForm f;
    f.degree = 1;
    f.terms[{table.index_of(delta)}] = 1;
    return f;
}

RelativeForm add(const RelativeForm& a, const RelativeForm& b) {
    if (!a.terms.empty() && !b.terms.empty() && a.degree != b.degree)
        throw std::invalid_argument("adding forms of different degrees");
    RelativeForm out = a.terms.empty() ? b : a;
    if (a.terms.empty() || b.terms.empty()) return out;
    for (const auto& [mono, coeff] : b.terms) {
        auto [it, inserted] = out.terms.emplace(mono, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) out.terms.erase(it);
        }
    }
    return out;
}

RelativeForm scale(const Rational& s, RelativeForm f) {
    if (s == 0) return RelativeForm{f.degree, {}};
    for (auto& [mono, coeff] : f.terms) coeff *= s;
    return f;
}

namespace {

// Merges two strictly increasing index lists with the wedge sign; empty result
// means a repeated factor.
std::pair<std::vector<int>, int> merge_monomials(const std::vector<int>& a,
                                                 const std::vector<int>& b) {
    std::vector<int> out;
    out.reserve(a.size() + b.size());
    int sign = 1;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return {{}, 0};
        if (a[i] < b[j]) {
            out.push_back(a[i++]);
        } else {
            // b[j] jumps over the remaining a-entries
            if ((a.size() - i) % 2 == 1) sign = -sign;
            out.push_back(b[j++]);
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    return {out, sign};
}

}  // namespace

RelativeForm wedge(const RelativeForm& a, const RelativeForm& b) {
    RelativeForm out;
    out.degree = a.degree + b.degree;
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms) {
            auto [mono, sign] = merge_monomials(ma, mb);
            if (sign == 0) continue;
            Rational coeff = Rational(sign) * ca * cb;
            auto [it, inserted] = out.terms.emplace(std::move(mono), coeff);
            if (!inserted) {
                it->second += coeff;
                if (it->second == 0) out.terms.erase(it);
            }
        }
    return out;
}

RelativeForm d_pi(const RelativeForm& form, const ChevalleyTable& table,
                  const HermitianDomainSpec& spec) {
    require_validated(spec);
    const auto& pos = table.positive_roots;
    // d_π on generators, as canonical monomials: for δ′ < δ″ with δ′+δ″ = δ the
    // two ordered terms of −½ Σ C ω∧ω combine to −C_{δ′δ″}^δ ω^{−δ′}∧ω^{−δ″}.
    std::vector<RelativeForm> dgen(pos.size());
    for (std::size_t g = 0; g < pos.size(); ++g) {
        RelativeForm df;
        df.degree = 2;
        for (std::size_t i = 0; i < pos.size(); ++i)
            for (std::size_t j = i + 1; j < pos.size(); ++j) {
                if (pos[i] + pos[j] != pos[g]) continue;
                Rational c = table.c(pos[i], pos[j]);
                if (c != 0) df.terms[{static_cast<int>(i), static_cast<int>(j)}] = -c;
            }
        dgen[g] = std::move(df);
    }

    RelativeForm out;
    out.degree = form.degree + 1;
    for (const auto& [mono, coeff] : form.terms)
        for (std::size_t pos_in_mono = 0; pos_in_mono < mono.size(); ++pos_in_mono) {
            RelativeForm rest;
            rest.degree = static_cast<int>(mono.size()) - 1;
            std::vector<int> others = mono;
            others.erase(others.begin() + static_cast<long>(pos_in_mono));
            rest.terms[others] = 1;
            int sign = pos_in_mono % 2 == 0 ? 1 : -1;
            RelativeForm piece =
                scale(Rational(sign) * coeff, wedge(dgen[mono[pos_in_mono]], rest));
            out = add(out, piece);
        }
    if (form.terms.empty()) out.degree = form.degree + 1;
    return out;
}

VerificationReport verify_omega_nc1_closed(const HermitianDomainSpec& spec) {
    return verify_omega_nc1_closed(spec, build_chevalley(spec));
}

VerificationReport verify_omega_nc1_closed(const HermitianDomainSpec& spec,
                                           const ChevalleyTable& table) {
    VerificationReport report;
    report.group = spec.group_label;
    const auto& pos = table.positive_roots;

    {   // the mechanism: d_π ω^{−β_j} has only (compact, nc1≠β_j) monomials
        auto& c = report.add("omega-nc1-term-shape", "Lemma 4.4");
        for (const auto& beta : spec.delta_nc1_pos) {
            RelativeForm df = d_pi(generator_form(table, beta), table, spec);
            for (const auto& [mono, coeff] : df.terms) {
                (void)coeff;
                const CoordinateVector &x = pos[mono[0]], &y = pos[mono[1]];
                RootPart px = table.grading.at(x), py = table.grading.at(y);
                const CoordinateVector* nc1_factor = nullptr;
                if (px == RootPart::Compact && py == RootPart::Nc1) nc1_factor = &y;
                if (py == RootPart::Compact && px == RootPart::Nc1) nc1_factor = &x;
                if (!nc1_factor || *nc1_factor == beta) {
                    c.status = CheckStatus::Fail;
                    c.witnesses.push_back("d(" + to_text(beta) + ") has " + to_text(x) + "^" +
                                          to_text(y));
                }
            }
        }
        if (c.status == CheckStatus::Pass)
            c.detail = "every expansion term wedges in a repeated nc1 factor";
    }

    {
        auto& c = report.add("omega-nc1-closed", "Lemma 4.4");
        RelativeForm omega;
        omega.degree = 0;
        omega.terms[{}] = 1;
        for (const auto& beta : spec.delta_nc1_pos)
            omega = wedge(omega, generator_form(table, beta));
        RelativeForm d_omega = d_pi(omega, table, spec);
        if (!d_omega.is_zero()) {
            c.status = CheckStatus::Fail;
            c.detail = "d_pi(omega^{nc,1}) has " + std::to_string(d_omega.terms.size()) +
                       " surviving monomials";
        }
    }
    return report;
}

}  // namespace flagkit
