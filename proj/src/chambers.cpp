#include "stabwall/chambers.hpp"

#include <cmath>

namespace stabwall {

GiesekerParams::GiesekerParams(Int r0_, int epsilon_, Rat h2_, Rat delta_, Rat disc_term_)
    : r0(std::move(r0_)), epsilon(epsilon_), h2(std::move(h2_)), delta(std::move(delta_)),
      disc_term(std::move(disc_term_)) {
    if (r0 <= 0) throw PreconditionError("r0 must be positive");
    if (epsilon != 1 && epsilon != 2) throw PreconditionError("epsilon must be 1 or 2");
    if (h2 <= 0) throw PreconditionError("(H^2) must be positive");
    if (delta <= 0) throw PreconditionError("delta must be positive");
}

GiesekerParams GiesekerParams::for_surface(const SurfaceLattice& surface, Int r0_, int epsilon_,
                                           Rat disc_term_) {
    if (surface.kind() == SurfaceKind::K3 && epsilon_ != 2)
        throw PreconditionError("epsilon is 2 on a K3 surface");
    return GiesekerParams(std::move(r0_), epsilon_, surface.h2(), surface.delta_min_degree(),
                          std::move(disc_term_));
}

Rat disc_term_of(const Rat& h2, const SliceForm& v) {
    if (v.r == 0) throw PreconditionError("disc term needs positive rank");
    return (v.d * v.d * h2 - 2 * v.r * v.a) / (v.r * v.r * h2);
}

Rat f_v1_sq(const Rat& h2, const SliceForm& v1, const Rat& s) {
    if (v1.d == 0) throw PreconditionError("boundary family member needs d1 < 0");
    if (!(v1.r > 0 && v1.d < 0 && v1.a > 0))
        throw PreconditionError("not of boundary-family shape (r1 > 0, d1 < 0, a1 > 0)");
    Rat left = 2 * v1.a / (h2 * v1.d);
    Rat right = v1.d / v1.r;
    if (left > right) return Rat(0);  // empty support
    if (s < left || s > right) return Rat(0);
    return Rat(2) / h2 * (v1.a / v1.d) * s - s * s;
}

FMaxResult f_max(const Slice& slice, const Int& r0, int epsilon, const Rat& s, const Rat& d1_cap) {
    if (!(s < 0)) throw PreconditionError("f is evaluated at s < 0");
    std::vector<SliceForm> pool = frak_E(slice, r0, epsilon, s, s, d1_cap);
    FMaxResult res;
    res.value_sq = 0;
    const Rat& h = slice.h2();
    for (const SliceForm& v1 : pool) {
        Rat val = f_v1_sq(h, v1, s);
        if (val > res.value_sq) {
            res.value_sq = val;
            res.argmax = v1;  // pool is sorted, so ties keep the canonical choice
        }
    }
    res.tail_bound = Rat(epsilon) * s * s / (h * d1_cap * d1_cap);
    res.certified = res.value_sq >= res.tail_bound;
    return res;
}

Rat envelope_coarse_sq(const GiesekerParams& p, const Rat& s) {
    Rat first = Rat(p.epsilon) / p.h2;
    Rat second = -Rat(4) * Rat(p.r0) * s / (p.h2 * p.delta) - s * s;
    if (second < 0) second = 0;
    return rat_max(first, second);
}

QuadExt SqrtDiff::square() const {
    // (sqrt A - sqrt B)^2 = A + B - 2 sqrt(AB)
    return QuadExt(lead_sq + sub_sq) - QuadExt(2) * QuadExt::sqrt_of(lead_sq * sub_sq);
}

double SqrtDiff::to_double() const {
    auto d = [](const Rat& q) {
        return numerator(q).convert_to<double>() / denominator(q).convert_to<double>();
    };
    return std::sqrt(d(lead_sq)) - std::sqrt(d(sub_sq));
}

int SqrtDiff::cmp_rational(const Rat& x) const {
    // sign of (sqrt(A) - sqrt(B)) - x, as sqrt(A) vs x + sqrt(B), by case
    // analysis and repeated squaring; never mixes radicands.
    if (x >= 0) {
        // both sides nonnegative: A vs x^2 + B + 2x sqrt(B)
        Rat lhs = lead_sq - x * x - sub_sq;  // vs 2x sqrt(B)
        if (lhs < 0) return -1;
        Rat l2 = lhs * lhs, r2 = 4 * x * x * sub_sq;
        if (l2 == r2) return 0;
        return l2 > r2 ? 1 : -1;
    }
    QuadExt rhs = QuadExt(x) + QuadExt::sqrt_of(sub_sq);
    if (rhs.sign() < 0) return 1;
    QuadExt rhs2 = rhs * rhs;
    return (QuadExt(lead_sq) - rhs2).sign();
}

bool fine_window_contains(const GiesekerParams& p, const Rat& s) {
    Rat r0q(p.r0);
    Rat a2 = Rat(1) / (2 * r0q * r0q * p.h2);
    Rat rational_branch = p.delta / (2 * r0q * r0q);
    Rat abs_s = s < 0 ? Rat(-s) : s;
    return s * s <= a2 && abs_s <= rational_branch;
}

SqrtDiff envelope_fine(const GiesekerParams& p, const Rat& s) {
    if (!fine_window_contains(p, s))
        throw PreconditionError("|s| outside the fine-envelope window");
    Rat r0q(p.r0);
    Rat a2 = Rat(1) / (2 * r0q * r0q * p.h2);
    return SqrtDiff{a2, a2 - s * s};
}

QuadExt s0_constant(const GiesekerParams& p) {
    Rat r0q(p.r0);
    QuadExt surd_branch = QuadExt::sqrt_of(Rat(1) / (2 * r0q * r0q * p.h2));
    QuadExt rational_branch{p.delta / (2 * r0q * r0q)};
    return min(surd_branch, rational_branch);
}

QuadExt p0_constant(const GiesekerParams& p) {
    QuadExt s0 = s0_constant(p);
    QuadExt num = QuadExt(Rat(2) / p.h2) + s0 * s0 + QuadExt(p.disc_term);
    return num / (QuadExt(2) * s0);
}

namespace {

// t > a - sqrt(a^2 - s^2) with a^2 rational: true iff t^2 >= a^2 or
// (s^2 + t^2)^2 < 4 a^2 t^2 (strict), the non-strict variant analogous.
bool above_envelope_floor(const Rat& a2, const Rat& s, const Rat& t2, bool strict) {
    if (t2 >= a2) return true;
    Rat lhs = (s * s + t2) * (s * s + t2);
    Rat rhs = 4 * a2 * t2;
    return strict ? lhs < rhs : lhs <= rhs;
}

}  // namespace

bool geometric_chamber_test(const GiesekerParams& p, const Rat& s, const Rat& t2) {
    if (t2 <= 0) throw PreconditionError("t^2 must be positive");
    if (s == 0) return false;
    QuadExt abs_s{s < 0 ? Rat(-s) : s};
    if (!(abs_s < s0_constant(p))) return false;
    Rat r0q(p.r0);
    Rat a2 = Rat(1) / (2 * r0q * r0q * p.h2);
    return above_envelope_floor(a2, s, t2, /*strict=*/true);
}

GiesekerRegionTrace gieseker_region_trace(const GiesekerParams& p, const SliceForm& v,
                                          const Rat& anchor_s, const Rat& anchor_t2,
                                          GiesekerSide side, const Rat& s, const Rat& t2) {
    if (v.r <= 0) throw PreconditionError("target must have positive rank");
    if (t2 <= 0) throw PreconditionError("t^2 must be positive");
    Rat disc = disc_term_of(p.h2, v);
    if (p.disc_term != disc)
        throw PreconditionError("params disc term disagrees with the target vector");
    QuadExt p0 = p0_constant(p);
    Rat r0q(p.r0);
    Rat a2 = Rat(1) / (2 * r0q * r0q * p.h2);

    GiesekerRegionTrace trace;
    if (side == GiesekerSide::Gieseker) {
        if (!(s < 0)) throw PreconditionError("Gieseker-side query needs s < 0");
        if (!(anchor_s < 0)) throw PreconditionError("Gieseker-side anchor needs s1 < 0");
        trace.center =
            min(QuadExt((anchor_t2 + anchor_s * anchor_s + disc) / (2 * anchor_s)), -p0);
        // t^2 + (s - p)^2 > p^2 - disc <=> t^2 + s^2 + disc > 2 s p
        QuadExt lhs = QuadExt(t2 + s * s + disc);
        trace.exterior = (lhs - QuadExt(2 * s) * trace.center).sign() > 0;
        trace.floor = above_envelope_floor(a2, s, t2, /*strict=*/false);
    } else {
        if (!(s > 0)) throw PreconditionError("dual-side query needs s > 0");
        if (!(anchor_s > 0)) throw PreconditionError("dual-side anchor needs s1' > 0");
        trace.center =
            max(QuadExt((anchor_t2 + anchor_s * anchor_s + disc) / (2 * anchor_s)), p0);
        QuadExt lhs = QuadExt(t2 + s * s + disc);
        trace.exterior = (lhs - QuadExt(2 * s) * trace.center).sign() > 0;
        trace.floor = t2 >= a2;
    }
    trace.inside = trace.exterior && trace.floor;
    return trace;
}

bool gieseker_region_test(const GiesekerParams& p, const SliceForm& v, const Rat& anchor_s,
                          const Rat& anchor_t2, GiesekerSide side, const Rat& s, const Rat& t2) {
    return gieseker_region_trace(p, v, anchor_s, anchor_t2, side, s, t2).inside;
}

}  // namespace stabwall
