#include "flagkit/root_system.hpp"

#include <algorithm>

namespace flagkit {

std::optional<std::uint64_t> root_key(const CoordinateVector& v) {
    if (v.dim() > 21) return std::nullopt;  // 3 bits per coordinate
    std::uint64_t key = 1;                  // leading 1 separates dimensions
    for (std::size_t i = 0; i < v.dim(); ++i) {
        const Rational& c = v[i];
        if (!is_integer(c)) return std::nullopt;
        Integer n = numerator(c);
        if (n < -2 || n > 2) return std::nullopt;
        key = (key << 3) | static_cast<std::uint64_t>(static_cast<long long>(n) + 2);
    }
    return key;
}

RootSet::RootSet(std::vector<CoordinateVector> roots) {
    keys_.reserve(roots.size());
    for (const auto& r : roots) {
        auto key = root_key(r);
        if (!key) {
            keys_.clear();
            fallback_ = std::move(roots);
            std::sort(fallback_.begin(), fallback_.end());
            return;
        }
        keys_.push_back(*key);
    }
    std::sort(keys_.begin(), keys_.end());
}

bool RootSet::contains(const CoordinateVector& v) const {
    if (!fallback_.empty())
        return std::binary_search(fallback_.begin(), fallback_.end(), v);
    auto key = root_key(v);
    if (!key) return false;
    return std::binary_search(keys_.begin(), keys_.end(), *key);
}

RootSystemData build_root_system(Family family, int rank) {
    RootSystemData rs;
    rs.family = family;
    rs.rank = rank;
    if (family == Family::TypeA) {
        if (rank < 1) throw std::invalid_argument("type A requires rank >= 1");
        int m = rank + 1;
        rs.ambient_dim = m;
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= m; ++j)
                if (i != j)
                    rs.roots.push_back(CoordinateVector::basis(m, i) -
                                       CoordinateVector::basis(m, j));
        for (int i = 1; i < m; ++i)
            rs.simple_roots.push_back(CoordinateVector::basis(m, i) -
                                      CoordinateVector::basis(m, i + 1));
    } else if (family == Family::TypeC) {
        if (rank < 2) throw std::invalid_argument("type C requires rank >= 2");
        int n = rank;
        rs.ambient_dim = n;
        for (int i = 1; i <= n; ++i)
            for (int j = i; j <= n; ++j)
                for (int si : {1, -1})
                    for (int sj : {1, -1}) {
                        if (i == j && si != sj) continue;  // e_i - e_i is not a root
                        CoordinateVector v = CoordinateVector::zero(n);
                        v[i - 1] += si;
                        v[j - 1] += sj;
                        rs.roots.push_back(v);
                    }
        for (int i = 1; i < n; ++i)
            rs.simple_roots.push_back(CoordinateVector::basis(n, i) -
                                      CoordinateVector::basis(n, i + 1));
        rs.simple_roots.push_back(Rational(2) * CoordinateVector::basis(n, n));
    } else {
        throw std::invalid_argument("unsupported family");
    }
    std::sort(rs.roots.begin(), rs.roots.end());
    rs.root_index = RootSet(rs.roots);
    return rs;
}

Rational coroot_pairing(const RootSystemData& rs, const CoordinateVector& lambda,
                        const CoordinateVector& alpha) {
    if (!rs.is_root(alpha))
        throw std::invalid_argument("coroot_pairing: not a root: " + to_text(alpha));
    return Rational(2) * inner(lambda, alpha) / inner(alpha, alpha);
}

bool is_integral_weight(const CoordinateVector& lambda, const RootSystemData& rs) {
    if (lambda.dim() != static_cast<std::size_t>(rs.ambient_dim))
        throw std::invalid_argument("is_integral_weight: dimension mismatch");
    for (const auto& alpha : rs.simple_roots)
        if (!is_integer(coroot_pairing(rs, lambda, alpha))) return false;
    return true;
}

CoordinateVector reflect(const RootSystemData& rs, const CoordinateVector& lambda,
                         const CoordinateVector& alpha) {
    return lambda - coroot_pairing(rs, lambda, alpha) * alpha;
}

std::pair<int, int> root_string(const RootSystemData& rs, const CoordinateVector& beta,
                                const CoordinateVector& alpha) {
    if (!rs.is_root(beta) || !rs.is_root(alpha))
        throw std::invalid_argument("root_string: arguments must be roots");
    if (alpha == beta || alpha == -beta)
        throw std::invalid_argument("root_string: alpha = ±beta");
    int p = 0, q = 0;
    CoordinateVector v = beta - alpha;
    while (rs.is_root(v)) {
        ++p;
        v -= alpha;
    }
    v = beta + alpha;
    while (rs.is_root(v)) {
        ++q;
        v += alpha;
    }
    return {p, q};
}

std::string family_name(Family f) { return f == Family::TypeA ? "A" : "C"; }

}  // namespace flagkit
