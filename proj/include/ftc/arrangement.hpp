#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ftc/complex.hpp"

// Fusion complexes from periodic plane arrangements on the 3-torus, with
// exact rational geometry. Every edge of a generic arrangement lies on
// exactly two planes and therefore has four incident faces.

namespace ftc::gen {

struct NonGeneric : std::runtime_error {
    explicit NonGeneric(const std::string& m) : std::runtime_error(m) {}
};
struct Unbounded : std::runtime_error {
    explicit Unbounded(const std::string& m) : std::runtime_error(m) {}
};

struct Rational {
    long long num = 0, den = 1;
    Rational() = default;
    Rational(long long n) : num(n), den(1) {}
    Rational(long long n, long long d);
    friend Rational operator+(Rational a, Rational b);
    friend Rational operator-(Rational a, Rational b);
    friend Rational operator*(Rational a, Rational b);
    friend Rational operator/(Rational a, Rational b);
    friend bool operator==(Rational a, Rational b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(Rational a, Rational b) { return !(a == b); }
    friend bool operator<(Rational a, Rational b);
    friend bool operator<=(Rational a, Rational b) { return a < b || a == b; }
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    /// value mod m, into [0, m)
    Rational mod(Rational m) const;
    bool is_zero() const { return num == 0; }
};

struct PlaneFamily {
    std::array<int, 3> normal;       // primitive integer vector
    std::vector<Rational> offsets;   // in [0,1), fractions of the family period
};

/// Plane arrangement on the torus with the given periods. The output
/// carries an embedding and passes validate_fusion_complex.
CellComplex plane_arrangement(const std::vector<PlaneFamily>& families,
                              std::array<int, 3> periods);

struct LineFamily2d {
    std::array<int, 2> normal;
    std::vector<Rational> offsets;
};

/// 2d variant: a line arrangement on the 2-torus gives a closed surface
/// complex with 4-valent vertices and 2-colorable faces.
CellComplex line_arrangement_2d(const std::vector<LineFamily2d>& families,
                                std::array<int, 2> periods);

}  // namespace ftc::gen
