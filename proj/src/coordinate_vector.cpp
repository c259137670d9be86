#include "flagkit/coordinate_vector.hpp"

#include <sstream>

namespace flagkit {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = text.find('/');
    auto check_int = [](const std::string& s) {
        if (s.empty()) throw std::invalid_argument("empty integer literal");
        std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (start == s.size()) throw std::invalid_argument("bare sign in rational: " + s);
        for (std::size_t i = start; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("invalid rational literal: " + s);
    };
    if (slash == std::string::npos) {
        check_int(text);
        return Rational(Integer(text));
    }
    std::string num = text.substr(0, slash), den = text.substr(slash + 1);
    check_int(num);
    check_int(den);
    Integer d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: " + text);
    return Rational(Integer(num), d);
}

CoordinateVector CoordinateVector::basis(std::size_t dim, std::size_t i) {
    if (i < 1 || i > dim) throw std::invalid_argument("basis index out of range");
    auto v = zero(dim);
    v.coords[i - 1] = 1;
    return v;
}

bool CoordinateVector::is_zero() const {
    for (const auto& c : coords)
        if (c != 0) return false;
    return true;
}

bool operator<(const CoordinateVector& a, const CoordinateVector& b) {
    if (a.coords.size() != b.coords.size()) return a.coords.size() < b.coords.size();
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
        if (a.coords[i] < b.coords[i]) return true;
        if (b.coords[i] < a.coords[i]) return false;
    }
    return false;
}

CoordinateVector& CoordinateVector::operator+=(const CoordinateVector& o) {
    if (dim() != o.dim()) throw std::invalid_argument("dimension mismatch in vector sum");
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
    return *this;
}

CoordinateVector& CoordinateVector::operator-=(const CoordinateVector& o) {
    if (dim() != o.dim()) throw std::invalid_argument("dimension mismatch in vector difference");
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
    return *this;
}

CoordinateVector operator-(const CoordinateVector& a) {
    CoordinateVector r = a;
    for (auto& c : r.coords) c = -c;
    return r;
}

CoordinateVector operator*(const Rational& s, CoordinateVector v) {
    for (auto& c : v.coords) c *= s;
    return v;
}

Rational inner(const CoordinateVector& u, const CoordinateVector& v) {
    if (u.dim() != v.dim()) throw std::invalid_argument("dimension mismatch in inner product");
    Rational acc = 0;
    for (std::size_t i = 0; i < u.dim(); ++i) acc += u.coords[i] * v.coords[i];
    return acc;
}

std::string to_text(const CoordinateVector& v) {
    std::string out;
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (i) out += ",";
        out += rational_to_string(v.coords[i]);
    }
    return out;
}

CoordinateVector parse_vector(const std::string& text) {
    std::vector<Rational> coords;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) coords.push_back(parse_rational(item));
    if (coords.empty()) throw std::invalid_argument("empty vector literal");
    return CoordinateVector(std::move(coords));
}

}  // namespace flagkit
