#pragma once

#include <optional>

#include "stabwall/slice.hpp"

namespace stabwall {

// Closed box [s_min, s_max] x [t2_min, t2_max] in the slice, t2_min > 0.
struct Region {
    Rat s_min, s_max, t2_min, t2_max;

    Region(Rat s_lo, Rat s_hi, Rat t2_lo, Rat t2_hi);
};

struct DeltaObstruction {
    MukaiVector u;
    SliceForm form;
    Rat witness_s, witness_t2;  // point of the region with Im Z(u) = 0, Re Z(u) <= 0
};

// All integral u = e^gamma(r + dH + D + a rho) with r > 0, u in Delta(X), and
// some point of the region where Z(u) lands in R_{<=0}. Complete and exact;
// canonically sorted by slice form.
//
// Box derivation: Im Z = 0 forces d = r s, so d ranges over the quantized
// interval [r s_min, r s_max]. Re Z <= 0 at (d/r, t^2) reads
// a_slice >= r (H^2)(s^2 + t^2)/2, and <u^2> in {-1,-2} turns that into
// r^2 (H^2) t2_min <= eps + (D^2) <= 2, bounding r and the perp shell of D.
std::vector<DeltaObstruction> delta_obstructions(const Slice& slice, const Region& region);

// Members of the boundary family: integral v1 = e^gamma(r1 + d1 H + D1 + a1 rho)
// in Delta(X) with <v1^2> = -eps, r1 > 0, d1 < 0, a1 > 0, whose support
// interval [2a1/((H^2)d1), d1/r1] meets [s_lo, s_hi], restricted to
// |d1| <= d1_cap. The support-meets-window set is infinite in general (members
// with ever larger |d1| and r1 ~ |d1/s| exist), so the cap is part of the
// contract; the tail beyond the cap contributes at most
// eps .s^2/((H^2) d1^2) <= eps s^2/((H^2) cap^2) to the boundary height at any
// s in the window.
//
// Box derivation, writing e = |d1|, sigma = |s_hi|, Sigma = |s_lo|: the
// support meets the window iff d1/r1 >= s_lo and 2a1/((H^2)d1) <= s_hi, i.e.
// r1 >= e/Sigma and, via 2 r1 a1 = e^2(H^2) + (D1^2) + eps <= e^2(H^2) + eps,
// r1 <= (e^2(H^2) + eps)/((H^2) e sigma). The perp shell is (D1^2) in
// [-eps, 0] (support nonempty iff (D1^2) >= -eps); a1 is then determined.
std::vector<SliceForm> frak_E(const Slice& slice, const Int& r0, int epsilon, const Rat& s_lo,
                              const Rat& s_hi, const Rat& d1_cap = Rat(16));

struct WallCandidate {
    Wall wall;
    std::vector<MukaiVector> defining;
    QuadExt witness_s, witness_t2;  // a point of the wall inside the region
};

struct WallSearchResult {
    std::vector<WallCandidate> walls;
    bool complete;        // false when the rank cap truncated the derived bound
    Int rank_bound_used;  // |rank(u) - lambda rank(v)| searched up to this
    Rat derived_rank_sq;  // exact derived bound on that quantity, squared
};

// Numerical wall candidates for v over the region: integral u, not
// charge-proportional to v, with <u^2> >= -eps and <(v-u)^2> >= -eps, whose
// wall locus passes through a region point p where the aligned charges
// satisfy Z(u)(p) = lambda Z(v)(p) with |lambda| <= 1 (equivalently
// |Im Z(u)| <= Im Z(v) at p; u or -u is then a valid subobject slope there).
// Walls with identical loci are merged, keeping all defining u.
//
// Finiteness: writing u = lambda v + w with Z(w)(p) = 0, the charge kernel at
// p is negative definite and -<w^2> = -(D_w^2) + r_w^2 (H^2) t^2, while
// Cauchy-Schwarz against v's kernel component V(p) plus <u^2> >= -eps give
// -<w^2> <= 4V(p)^2 + 2(eps + max(<v^2>,0)). Hence
// r_w^2 <= (4 V_max^2 + 2(eps+<v^2>_+)) / ((H^2) t2_min), an exact rational
// bound evaluated by interval arithmetic over the region. Walls accumulate as
// t2_min -> 0, so the bound is capped (default 64); a truncated search is
// reported via complete=false.
//
// Requires Im Z(v) > 0 on the closed region (identically-zero Im Z(v) gives
// the empty result; a sign change inside the region is rejected, since
// vertical walls through a zero of Im Z(v) carry infinitely many defining
// vectors). The search is partitioned across `workers` threads with a
// deterministic merge.
WallSearchResult wall_vectors_for(const Slice& slice, const MukaiVector& v, const Region& region,
                                  int epsilon, int workers = 1, const Int& rank_cap = Int(64));

// The s-interval where |Im Z(u)| <= Im Z(v), intersected with the region's
// s-range; nullopt when empty. Shared by the engine filter and the
// definition-level oracles.
std::optional<std::pair<Rat, Rat>> alignment_window(const SliceForm& fv, const SliceForm& fu,
                                                    const Region& region);
// Definition-level acceptance test for one candidate u (exact).
bool wall_entry_valid(const Rat& h2, const SliceForm& fv, const SliceForm& fu,
                      const Region& region, Wall* wall_out = nullptr);

struct DecompositionCandidate {
    std::vector<std::pair<Int, MukaiVector>> parts;  // (multiplicity, u)
    MatQ cartan;                                     // <u_i, u_j> on distinct parts
    std::string type_label;                          // "A~k", "D~k", "E~k" or "unclassified"

    bool operator<(const DecompositionCandidate& o) const;
};

// Decompositions r0 e^gamma = sum_i n_i u_i with u_i in
// L = (e^gamma)-perp cap (H e^gamma)-perp, <u_i^2> = -2, rk u_i > 0,
// sum n_i rk u_i = r0, parts indecomposable within the enumerated pool.
// The pool is height-bounded: every coordinate of u_i (and 2a on Enriques)
// is at most `height_bound` in absolute value.
std::vector<DecompositionCandidate> isotropic_decompositions(const Slice& slice, const Int& r0,
                                                             const Int& height_bound = 16);

// Exact test and witness for "the wall locus meets the closed region".
bool wall_meets_region(const Wall& wall, const Region& region);
std::optional<std::pair<QuadExt, QuadExt>> wall_region_witness(const Wall& wall,
                                                               const Region& region);

}  // namespace stabwall
