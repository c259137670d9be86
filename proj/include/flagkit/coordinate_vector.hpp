#pragma once

#include <string>
#include <vector>

#include "flagkit/rational.hpp"

namespace flagkit {

/// Exact rational coordinates in the orthonormal e*-basis. Doubles as root and
/// weight; immutable by convention once built.
struct CoordinateVector {
    std::vector<Rational> coords;

    CoordinateVector() = default;
    explicit CoordinateVector(std::vector<Rational> c) : coords(std::move(c)) {}

    static CoordinateVector zero(std::size_t dim) {
        return CoordinateVector(std::vector<Rational>(dim, Rational(0)));
    }
    /// e_i (1-based), ambient dimension dim.
    static CoordinateVector basis(std::size_t dim, std::size_t i);

    std::size_t dim() const { return coords.size(); }
    const Rational& operator[](std::size_t i) const { return coords[i]; }
    Rational& operator[](std::size_t i) { return coords[i]; }

    bool is_zero() const;

    friend bool operator==(const CoordinateVector& a, const CoordinateVector& b) {
        return a.coords == b.coords;
    }
    friend bool operator!=(const CoordinateVector& a, const CoordinateVector& b) {
        return !(a == b);
    }
    /// Lexicographic on coordinates; the canonical order used everywhere for
    /// deterministic iteration and witness selection.
    friend bool operator<(const CoordinateVector& a, const CoordinateVector& b);

    CoordinateVector& operator+=(const CoordinateVector& o);
    CoordinateVector& operator-=(const CoordinateVector& o);
    friend CoordinateVector operator+(CoordinateVector a, const CoordinateVector& b) {
        a += b;
        return a;
    }
    friend CoordinateVector operator-(CoordinateVector a, const CoordinateVector& b) {
        a -= b;
        return a;
    }
    friend CoordinateVector operator-(const CoordinateVector& a);
    friend CoordinateVector operator*(const Rational& s, CoordinateVector v);
};

/// Σ uᵢvᵢ as an exact rational; throws on dimension mismatch.
Rational inner(const CoordinateVector& u, const CoordinateVector& v);

/// Comma-separated "p" or "p/q" entries, e.g. "1/2,-1/2,0". Exact round-trip.
std::string to_text(const CoordinateVector& v);
CoordinateVector parse_vector(const std::string& text);

}  // namespace flagkit
