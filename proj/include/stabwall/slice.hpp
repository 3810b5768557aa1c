#pragma once

#include <optional>

#include "stabwall/mukai.hpp"

namespace stabwall {

// The half-plane of stability parameters (beta, omega) = (gamma + sH, tH),
// t > 0, over a fixed surface and rational twist gamma.
struct Slice {
    const SurfaceLattice* surface;
    NSVecQ gamma;

    Slice(const SurfaceLattice& surf, NSVecQ g);
    const SurfaceLattice& lat() const { return *surface; }
    const Rat& h2() const { return surface->h2(); }
};

// v = e^gamma (r + d H + D + a rho) with D in H-perp.
struct SliceForm {
    Rat r, d;
    NSVecQ D;
    Rat a;

    bool operator==(const SliceForm& o) const {
        return r == o.r && d == o.d && D == o.D && a == o.a;
    }
    bool operator<(const SliceForm& o) const;  // (r, d, D lex, a)
    std::string str() const;
};

SliceForm slice_form(const Slice& slice, const MukaiVector& v);
MukaiVector reconstruct(const Slice& slice, const SliceForm& f);

// A point of the slice in coordinates (s, t^2); t^2 > 0.
struct SlicePoint {
    QuadExt s, t2;

    SlicePoint(QuadExt s_, QuadExt t2_);
    static SlicePoint rational(const Rat& s, const Rat& t2) {
        return SlicePoint(QuadExt(s), QuadExt(t2));
    }
};

// Z = re + i t im_over_t with t = sqrt(t2) > 0.
struct ChargeValue {
    QuadExt re, im_over_t;
};

ChargeValue charge(const Slice& slice, const SliceForm& f, const SlicePoint& pt);
ChargeValue charge(const Slice& slice, const MukaiVector& v, const SlicePoint& pt);

// Whether Re e^{beta+i omega} and Im e^{beta+i omega} span a positive definite
// 2-plane for the Mukai pairing (exact 2x2 Gram test).
bool charge_positivity(const SurfaceLattice& surface, const NSVecQ& beta, const NSVecQ& omega);

// Sign of Re Z(v1) Im Z(v2) - Im Z(v1) Re Z(v2) with the positive factor t
// dropped; zero exactly when the two charges are real-proportional.
int phase_cross(const Slice& slice, const MukaiVector& v1, const MukaiVector& v2,
                const SlicePoint& pt);

// Locus in the slice where the charges of two vectors align.
struct Wall {
    enum class Kind { Everywhere, Empty, VerticalLine, Circle };
    Kind kind = Kind::Empty;
    Rat line_s;              // VerticalLine
    Rat center_s, radius2;   // Circle

    bool operator==(const Wall& o) const;
    bool operator<(const Wall& o) const;
    std::string str() const;
};

// The locus {phase_cross(v, u) = 0} simplifies to
//   A (s^2 + t^2) + B s + C = 0
// with A = (r_v d_u - r_u d_v)(H^2)/2, B = r_u a_v - r_v a_u,
// C = d_v a_u - d_u a_v read off the slice forms.
Wall wall_between(const Slice& slice, const MukaiVector& v, const MukaiVector& u);
Wall wall_from_forms(const Rat& h2, const SliceForm& fv, const SliceForm& fu);

bool wall_contains(const Wall& wall, const SlicePoint& pt);

// Canonical integral representative (content one, first nonzero coordinate
// positive) of Im(e^{beta+i omega} / Z(v)), the projective invariant whose
// orthogonal complement cuts out the charges real-proportional to Z(v).
MukaiVector xi_invariant(const SurfaceLattice& surface, const NSVecQ& beta, const NSVecQ& omega,
                         const MukaiVector& v);
// Slice specialization at a rational point: beta = gamma + sH, omega = tH.
// Well-defined for every rational t2 because the positive scalar t factors
// out of the projective class.
MukaiVector xi_invariant_slice(const Slice& slice, const Rat& s, const Rat& t2,
                               const MukaiVector& v);

// Canonicalization helper shared with the xi invariant: scales a nonzero
// rational Mukai vector to integral content one, first nonzero coordinate
// positive.
MukaiVector canonical_ray(const MukaiVector& v);

}  // namespace stabwall
