#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "flagkit/coordinate_vector.hpp"

namespace flagkit {

enum class Family { TypeA, TypeC };

/// Packed exact key for vectors with integer coordinates in [-2,2] (all roots
/// of the supported families). nullopt for anything else.
std::optional<std::uint64_t> root_key(const CoordinateVector& v);

/// Sorted key set for fast exact membership tests on root subsets. Falls back
/// to plain sorted vectors when a root does not pack into a key.
class RootSet {
  public:
    RootSet() = default;
    explicit RootSet(std::vector<CoordinateVector> roots);
    bool contains(const CoordinateVector& v) const;

  private:
    std::vector<std::uint64_t> keys_;
    std::vector<CoordinateVector> fallback_;
};

/// Full root set of a classical simple Lie algebra, with exact arithmetic.
/// Type A(m) is realized in R^{m+1} as {e_i - e_j}; type C(n) in R^n as
/// {±e_i±e_j} ∪ {±2e_i}. Immutable after construction.
struct RootSystemData {
    Family family;
    int rank;
    int ambient_dim;
    std::vector<CoordinateVector> roots;         // sorted lexicographically
    std::vector<CoordinateVector> simple_roots;  // standard order
    RootSet root_index;

    bool is_root(const CoordinateVector& v) const { return root_index.contains(v); }
};

/// Builds the full system. Type A needs rank >= 1, type C rank >= 2.
RootSystemData build_root_system(Family family, int rank);

/// 2 (λ, α) / (α, α); α must be a root of rs.
Rational coroot_pairing(const RootSystemData& rs, const CoordinateVector& lambda,
                        const CoordinateVector& alpha);

/// True iff coroot_pairing(λ, α) is an integer for every simple root α.
bool is_integral_weight(const CoordinateVector& lambda, const RootSystemData& rs);

/// λ - ⟨λ, α∨⟩ α; α must be a root.
CoordinateVector reflect(const RootSystemData& rs, const CoordinateVector& lambda,
                         const CoordinateVector& alpha);

/// The α-string through β: β-pα, ..., β+qα, all roots. Requires α ≠ ±β.
/// Satisfies p - q = ⟨β, α∨⟩.
std::pair<int, int> root_string(const RootSystemData& rs, const CoordinateVector& beta,
                                const CoordinateVector& alpha);

std::string family_name(Family f);

}  // namespace flagkit
