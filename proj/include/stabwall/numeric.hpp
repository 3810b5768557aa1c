#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "stabwall/errors.hpp"

namespace stabwall {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

int sign(const Int& v);
int sign(const Rat& v);

Int floor_rat(const Rat& q);
Int ceil_rat(const Rat& q);

// floor(sqrt(n)) for n >= 0.
Int isqrt_floor(const Int& n);
bool is_perfect_square(const Int& n, Int& root);

// floor(c + sqrt(q)) and ceil(c - sqrt(q)) for rational c and rational q >= 0.
// Used to turn ellipsoid slabs into exact integer coordinate ranges.
Int floor_add_sqrt(const Rat& c, const Rat& q);
Int ceil_sub_sqrt(const Rat& c, const Rat& q);

// floor(sqrt(q)) for a rational q >= 0.
Int floor_sqrt_rat(const Rat& q);

// Largest square-free-ish core: writes n = square * core with core free of
// square factors up to the trial-division limit. n > 0.
Int square_free_core(const Int& n, Int& square_root_part);

// gcd of two rationals (the generator of the group Z p1/q1 + Z p2/q2).
Rat rat_gcd(const Rat& a, const Rat& b);

// min/max that accept boost expression templates by materializing them.
inline Rat rat_min(const Rat& a, const Rat& b) { return a <= b ? a : b; }
inline Rat rat_max(const Rat& a, const Rat& b) { return a >= b ? a : b; }
inline Rat rat_abs(const Rat& a) { return a < 0 ? Rat(-a) : a; }

std::string rat_str(const Rat& q);
Rat parse_rat(const std::string& s);

// Exact element of Q(sqrt(c)): x + y*sqrt(c) with c a positive non-square
// integer (c == 1 encodes a plain rational; then y == 0 by normalization).
// Arithmetic between values over distinct radicands is rejected rather than
// approximated; comparisons are exact sign analysis.
class QuadExt {
public:
    QuadExt() : x_(0), y_(0), c_(1) {}
    QuadExt(const Rat& x) : x_(x), y_(0), c_(1) {}  // NOLINT(google-explicit-constructor)
    QuadExt(int x) : x_(x), y_(0), c_(1) {}         // NOLINT(google-explicit-constructor)
    QuadExt(const Rat& x, const Rat& y, const Int& c);

    // sqrt(q) for rational q >= 0, as an exact QuadExt.
    static QuadExt sqrt_of(const Rat& q);

    const Rat& rational_part() const { return x_; }
    const Rat& surd_coeff() const { return y_; }
    const Int& radicand() const { return c_; }
    bool is_rational() const { return y_ == 0; }
    // Throws unless the value is rational.
    const Rat& as_rational() const;

    QuadExt operator-() const;
    QuadExt operator+(const QuadExt& o) const;
    QuadExt operator-(const QuadExt& o) const;
    QuadExt operator*(const QuadExt& o) const;
    QuadExt operator/(const QuadExt& o) const;

    int sign() const;
    bool operator==(const QuadExt& o) const;
    bool operator!=(const QuadExt& o) const { return !(*this == o); }
    bool operator<(const QuadExt& o) const { return (*this - o).sign() < 0; }
    bool operator<=(const QuadExt& o) const { return (*this - o).sign() <= 0; }
    bool operator>(const QuadExt& o) const { return (*this - o).sign() > 0; }
    bool operator>=(const QuadExt& o) const { return (*this - o).sign() >= 0; }

    // Floating-point image; for rendering only.
    double to_double() const;

    // Canonical "(x,y,c)" triple.
    std::string str() const;

private:
    void normalize();
    static Int common_radicand(const QuadExt& a, const QuadExt& b);

    Rat x_, y_;
    Int c_;
};

QuadExt min(const QuadExt& a, const QuadExt& b);
QuadExt max(const QuadExt& a, const QuadExt& b);

}  // namespace stabwall
