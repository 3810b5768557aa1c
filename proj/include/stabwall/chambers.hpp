#pragma once

#include <optional>

#include "stabwall/enumerate.hpp"

namespace stabwall {

// Numeric context for the Gieseker-chamber bounds: target multiplicity r0,
// epsilon (2 on K3; on Enriques 1 or 2 by the parity of the target rank),
// (H^2), delta, and the discriminant term (<v^2> - (D^2))/(r^2 (H^2)) of the
// target vector.
struct GiesekerParams {
    Int r0;
    int epsilon;
    Rat h2;
    Rat delta;
    Rat disc_term;

    GiesekerParams(Int r0_, int epsilon_, Rat h2_, Rat delta_, Rat disc_term_ = Rat(0));
    static GiesekerParams for_surface(const SurfaceLattice& surface, Int r0_, int epsilon_,
                                      Rat disc_term_ = Rat(0));
};

// disc term of a slice form: (d^2 (H^2) - 2 r a)/(r^2 (H^2)).
Rat disc_term_of(const Rat& h2, const SliceForm& v);

// f_{v1}(s)^2: (2/(H^2))(a1/d1) s - s^2 on the support
// [2a1/((H^2)d1), d1/r1], zero outside. v1 must have the boundary-family
// shape r1 > 0, d1 < 0, a1 > 0.
Rat f_v1_sq(const Rat& h2, const SliceForm& v1, const Rat& s);

struct FMaxResult {
    Rat value_sq;
    std::optional<SliceForm> argmax;
    bool certified;  // true when no member beyond the cap can exceed value_sq
    Rat tail_bound;  // eps s^2/((H^2) cap^2), an upper bound for capped-out members
};

// max of f_{v1}(s)^2 over the boundary family members whose support contains
// s (< 0), enumerated up to |d1| <= d1_cap. Members beyond the cap satisfy
// f^2 < eps s^2/((H^2) cap^2); when the achieved max reaches that bound the
// result is certified exact over the whole family.
FMaxResult f_max(const Slice& slice, const Int& r0, int epsilon, const Rat& s,
                 const Rat& d1_cap = Rat(16));

// Coarse bound, valid for every boundary-family member:
// f(s)^2 <= max{ eps/(H^2), -4 r0 s/((H^2) delta) - s^2 } (second term
// clamped at zero).
Rat envelope_coarse_sq(const GiesekerParams& p, const Rat& s);

// sqrt(lead_sq) - sqrt(sub_sq) with lead_sq >= sub_sq >= 0: the shape of the
// fine envelope. Its square is a single quadratic surd.
struct SqrtDiff {
    Rat lead_sq, sub_sq;

    QuadExt square() const;
    double to_double() const;
    // exact sign of (sqrt(lead) - sqrt(sub)) - x for rational x
    int cmp_rational(const Rat& x) const;
};

// Fine bound near s = 0: under |s| <= min{ (1/r0) sqrt(1/(2(H^2))),
// delta/(2 r0^2) } every member satisfies
// f(s) <= (1/r0) sqrt(1/(2(H^2))) - sqrt(1/(2 r0^2 (H^2)) - s^2).
// Outside that window the bound is not asserted and the call is rejected.
SqrtDiff envelope_fine(const GiesekerParams& p, const Rat& s);
bool fine_window_contains(const GiesekerParams& p, const Rat& s);

// s0 = min{ (1/r0) sqrt(1/(2(H^2))), delta/(2 r0^2) } and
// p0 = (2/(H^2) + s0^2 + disc)/(2 s0), both exact.
QuadExt s0_constant(const GiesekerParams& p);
QuadExt p0_constant(const GiesekerParams& p);

// 0 < |s| < s0 and t strictly above the fine envelope. Since the envelope
// equals a - sqrt(a^2 - s^2) with a^2 = 1/(2 r0^2 (H^2)) rational, the test
// reduces to t^2 >= a^2 or (s^2 + t^2)^2 < 4 a^2 t^2, exact in rationals.
bool geometric_chamber_test(const GiesekerParams& p, const Rat& s, const Rat& t2);

enum class GiesekerSide { Gieseker, Dual };

// Circle-exterior test of the chamber bound. On the Gieseker side (s < 0):
//   t^2 + (s - p)^2 > p^2 - disc with p = min{(t1^2+s1^2+disc)/(2 s1), -p0},
// plus the non-strict envelope floor t >= a - sqrt(a^2 - s^2). On the dual
// side (s > 0) the mirrored p' = max{..., p0} with floor t >= a. The anchor
// (s1, t1^2) is the caller's certified chamber point.
struct GiesekerRegionTrace {
    QuadExt center;  // the chosen p (side 1) or p' (side 2)
    bool exterior;   // strict circle-exterior inequality
    bool floor;      // non-strict t-floor
    bool inside;     // exterior && floor
};
GiesekerRegionTrace gieseker_region_trace(const GiesekerParams& p, const SliceForm& v,
                                          const Rat& anchor_s, const Rat& anchor_t2,
                                          GiesekerSide side, const Rat& s, const Rat& t2);
bool gieseker_region_test(const GiesekerParams& p, const SliceForm& v, const Rat& anchor_s,
                          const Rat& anchor_t2, GiesekerSide side, const Rat& s, const Rat& t2);

}  // namespace stabwall
