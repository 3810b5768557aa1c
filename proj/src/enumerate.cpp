#include "stabwall/enumerate.hpp"

#include <algorithm>
#include <map>
#include <thread>

namespace stabwall {

Region::Region(Rat s_lo, Rat s_hi, Rat t2_lo, Rat t2_hi)
    : s_min(std::move(s_lo)), s_max(std::move(s_hi)), t2_min(std::move(t2_lo)),
      t2_max(std::move(t2_hi)) {
    if (s_min > s_max) throw PreconditionError("region: s_min > s_max");
    if (t2_min <= 0) throw PreconditionError("region: t2_min must be positive");
    if (t2_min > t2_max) throw PreconditionError("region: t2_min > t2_max");
}

namespace {

// interval of x^2 for x in [lo, hi]
std::pair<Rat, Rat> square_interval(const Rat& lo, const Rat& hi) {
    Rat lo2 = lo * lo, hi2 = hi * hi;
    Rat mx = rat_max(lo2, hi2);
    Rat mn = (lo <= 0 && hi >= 0) ? Rat(0) : rat_min(lo2, hi2);
    return {mn, mx};
}

Rat gamma_a_shift(const Slice& slice, const NSVecQ& xi, const Rat& r) {
    // plain a = slice a + (xi.gamma) - r (gamma^2)/2
    const SurfaceLattice& lat = slice.lat();
    return lat.ns_inner(xi, slice.gamma) - r * lat.ns_square(slice.gamma) / 2;
}

}  // namespace

std::vector<DeltaObstruction> delta_obstructions(const Slice& slice, const Region& region) {
    const SurfaceLattice& lat = slice.lat();
    const Rat& h = lat.h2();
    std::vector<DeltaObstruction> out;

    // r^2 (H^2) t2_min <= 2
    Int r_max = floor_sqrt_rat(Rat(2) / (h * region.t2_min));
    Rat gamma_deg = lat.degree(slice.gamma);
    std::vector<Rat> eps_list;
    if (lat.kind() == SurfaceKind::K3)
        eps_list = {Rat(2)};
    else
        eps_list = {Rat(1), Rat(2)};

    for (Int r = 1; r <= r_max; ++r) {
        Rat rq(r);
        Int klo = ceil_rat(h * rq * region.s_min + rq * gamma_deg);
        Int khi = floor_rat(h * rq * region.s_max + rq * gamma_deg);
        Rat cap = Rat(2) - rq * rq * h * region.t2_min;
        NSVecQ center = slice.gamma;
        for (Rat& e : center) e *= rq;
        for (const NSVecZ& xi_z : lat.enumerate_degree_window(center, klo, khi, cap)) {
            NSVecQ xi = to_q(xi_z);
            NSVecQ rel = xi;
            for (int i = 0; i < lat.rank(); ++i) rel[i] -= center[i];
            Rat d = lat.degree(rel) / h;
            Rat s_star = d / rq;
            if (s_star < region.s_min || s_star > region.s_max) continue;
            Rat d2 = -lat.perp_norm(rel);  // (D^2)
            Rat xi2 = lat.ns_square(xi);
            for (const Rat& eps : eps_list) {
                if (d2 < rq * rq * h * region.t2_min - eps) continue;
                // <u^2> = (xi^2) - 2 r a = -eps
                Rat a = (xi2 + eps) / (2 * rq);
                MukaiVector u{rq, xi, a};
                if (!is_integral(lat, u)) continue;
                if (!in_delta(lat, u)) continue;
                SliceForm f = slice_form(slice, u);
                // Re Z <= 0 at the witness (d/r, t2_min)
                if (f.a < rq * h * (s_star * s_star + region.t2_min) / 2) continue;
                out.push_back(DeltaObstruction{u, f, s_star, region.t2_min});
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const DeltaObstruction& x, const DeltaObstruction& y) { return x.form < y.form; });
    return out;
}

std::vector<SliceForm> frak_E(const Slice& slice, const Int& r0, int epsilon, const Rat& s_lo,
                              const Rat& s_hi, const Rat& d1_cap) {
    if (epsilon != 1 && epsilon != 2) throw PreconditionError("epsilon must be 1 or 2");
    if (epsilon == 1 && slice.lat().kind() == SurfaceKind::K3)
        throw PreconditionError("epsilon = 1 only occurs on Enriques surfaces");
    if (r0 <= 0) throw PreconditionError("r0 must be positive");
    if (!(s_hi < 0)) throw PreconditionError("window must satisfy s_hi < 0");
    if (s_lo > s_hi) throw PreconditionError("window: s_lo > s_hi");
    if (d1_cap <= 0) throw PreconditionError("d1 cap must be positive");

    const SurfaceLattice& lat = slice.lat();
    const Rat& h = lat.h2();
    const Rat eps(epsilon);
    const Rat sigma = rat_abs(s_hi);
    const Rat big_sigma = rat_abs(s_lo);
    Rat gamma_deg = lat.degree(slice.gamma);

    // The smallest positive |d1| over all residues of r1 determines how large
    // r1 <= (e^2 h + eps)/(h e sigma) can get; the step of the d-grid is
    // g/(H^2) shifted by r1 (gamma.H)/(H^2), periodic in r1.
    Rat grid_step = Rat(lat.degree_gcd()) / h;
    Int offset_period = denominator(Rat(gamma_deg / Rat(lat.degree_gcd())));
    Rat e_min = grid_step;  // smallest positive grid value over one period
    for (Int rr = 1; rr <= offset_period; ++rr) {
        Rat off = Rat(rr) * gamma_deg / h;  // grid is {k*step - off}
        // distance from 0 up to the next grid point above 0
        Rat q = off / grid_step;
        Rat frac = q - Rat(floor_rat(q));
        Rat cand = (frac == 0) ? grid_step : (Rat(1) - frac) * grid_step;
        e_min = rat_min(e_min, cand);
    }
    auto r1_upper = [&](const Rat& e) { return (e * e * h + eps) / (h * e * sigma); };
    Rat r_cap_rat = rat_max(r1_upper(e_min), r1_upper(d1_cap));
    Int r_cap = floor_rat(r_cap_rat);

    std::vector<SliceForm> out;
    for (Int r1 = 1; r1 <= r_cap; ++r1) {
        Rat rq(r1);
        // d1 in [-min(d1_cap, r1*Sigma), 0), quantized by integral xi
        Rat d_lo = -rat_min(d1_cap, Rat(rq * big_sigma));
        Int klo = ceil_rat(h * d_lo + rq * gamma_deg);
        Int khi = floor_rat(rq * gamma_deg);  // d1 <= 0 boundary; d1 = 0 filtered below
        NSVecQ center = slice.gamma;
        for (Rat& e : center) e *= rq;
        for (const NSVecZ& xi_z : lat.enumerate_degree_window(center, klo, khi, eps)) {
            NSVecQ xi = to_q(xi_z);
            NSVecQ rel = xi;
            for (int i = 0; i < lat.rank(); ++i) rel[i] -= center[i];
            Rat d1 = lat.degree(rel) / h;
            if (d1 >= 0) continue;
            Rat e_abs = -d1;
            if (rq > r1_upper(e_abs)) continue;     // support cannot reach s_hi
            if (d1 < rq * s_lo) continue;           // d1/r1 < s_lo
            Rat d2 = -lat.perp_norm(rel);           // (D1^2) in [-eps, 0]
            if (d2 < -eps) continue;
            Rat a1 = (d1 * d1 * h + d2 + eps) / (2 * rq);
            Rat a_plain = a1 + gamma_a_shift(slice, xi, rq);
            MukaiVector u{rq, xi, a_plain};
            if (!is_integral(lat, u)) continue;
            if (!in_delta(lat, u)) continue;
            // support [2a1/(h d1), d1/r1] must meet [s_lo, s_hi]
            Rat left = 2 * a1 / (h * d1);
            Rat right = d1 / rq;
            if (left > s_hi || right < s_lo) continue;
            SliceForm f = slice_form(slice, u);
            out.push_back(f);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool wall_meets_region(const Wall& wall, const Region& region) {
    switch (wall.kind) {
        case Wall::Kind::Everywhere: return true;
        case Wall::Kind::Empty: return false;
        case Wall::Kind::VerticalLine:
            return wall.line_s >= region.s_min && wall.line_s <= region.s_max;
        case Wall::Kind::Circle: {
            const Rat& c = wall.center_s;
            Rat d_near;
            if (c >= region.s_min && c <= region.s_max)
                d_near = 0;
            else
                d_near = rat_min(rat_abs(Rat(c - region.s_min)), rat_abs(Rat(c - region.s_max)));
            Rat d_far = rat_max(rat_abs(Rat(c - region.s_min)), rat_abs(Rat(c - region.s_max)));
            Rat t2_hi_on = wall.radius2 - d_near * d_near;   // max of t^2 over the s-range
            Rat t2_lo_on = wall.radius2 - d_far * d_far;     // min of t^2 over the s-range
            return t2_hi_on >= region.t2_min && t2_lo_on <= region.t2_max;
        }
    }
    return false;
}

std::optional<std::pair<QuadExt, QuadExt>> wall_region_witness(const Wall& wall,
                                                               const Region& region) {
    if (!wall_meets_region(wall, region)) return std::nullopt;
    switch (wall.kind) {
        case Wall::Kind::Everywhere:
            return std::make_pair(QuadExt(region.s_min), QuadExt(region.t2_min));
        case Wall::Kind::VerticalLine:
            return std::make_pair(QuadExt(wall.line_s), QuadExt(region.t2_min));
        case Wall::Kind::Circle: {
            const Rat& c = wall.center_s;
            Rat s_peak = rat_min(rat_max(c, region.s_min), region.s_max);
            Rat t2_peak = wall.radius2 - (s_peak - c) * (s_peak - c);
            if (t2_peak <= region.t2_max)
                return std::make_pair(QuadExt(s_peak), QuadExt(t2_peak));
            // the crown pokes above the box; walk down to t2 = t2_max
            QuadExt root = QuadExt::sqrt_of(wall.radius2 - region.t2_max);
            for (const QuadExt& s_w : {QuadExt(c) - root, QuadExt(c) + root}) {
                if (s_w >= QuadExt(region.s_min) && s_w <= QuadExt(region.s_max))
                    return std::make_pair(s_w, QuadExt(region.t2_max));
            }
            return std::nullopt;  // unreachable when wall_meets_region holds
        }
        default: return std::nullopt;
    }
}

std::optional<std::pair<Rat, Rat>> alignment_window(const SliceForm& fv, const SliceForm& fu,
                                                    const Region& region) {
    // |d_u - r_u s| <= d_v - r_v s as two linear inequalities in s:
    //   (r_v - r_u) s <= d_v - d_u   and   (r_v + r_u) s <= d_v + d_u
    Rat lo = region.s_min, hi = region.s_max;
    auto cut = [&](const Rat& coef, const Rat& rhs) -> bool {
        if (coef == 0) return rhs >= 0;
        Rat bound = rhs / coef;
        if (coef > 0) {
            if (bound < hi) hi = bound;
        } else {
            if (bound > lo) lo = bound;
        }
        return lo <= hi;
    };
    if (!cut(fv.r - fu.r, fv.d - fu.d)) return std::nullopt;
    if (!cut(fv.r + fu.r, fv.d + fu.d)) return std::nullopt;
    if (lo > hi) return std::nullopt;
    return std::make_pair(lo, hi);
}

bool wall_entry_valid(const Rat& h2, const SliceForm& fv, const SliceForm& fu,
                      const Region& region, Wall* wall_out) {
    bool prop = (fv.r * fu.d == fu.r * fv.d) && (fv.r * fu.a == fu.r * fv.a) &&
                (fv.d * fu.a == fu.d * fv.a);
    if (prop) return false;
    Wall wall = wall_from_forms(h2, fv, fu);
    if (wall.kind != Wall::Kind::Circle && wall.kind != Wall::Kind::VerticalLine) return false;
    auto window = alignment_window(fv, fu, region);
    if (!window) return false;
    Region narrowed(window->first, window->second, region.t2_min, region.t2_max);
    if (!wall_meets_region(wall, narrowed)) return false;
    if (wall_out) *wall_out = wall;
    return true;
}

namespace {

struct WallSearchCell {
    Int r;
    Int k;  // value of (xi . H)
};

void scan_cell(const Slice& slice, const SliceForm& fv, const Region& region, int epsilon,
               const MukaiVector& v, const WallSearchCell& cell,
               const std::pair<Rat, Rat>& re_v_range,
               std::vector<std::pair<Wall, MukaiVector>>& out) {
    const SurfaceLattice& lat = slice.lat();
    const Rat& h = lat.h2();
    const Rat eps(epsilon);
    Rat rq(cell.r);
    Rat gamma_deg = lat.degree(slice.gamma);
    Rat d = (Rat(cell.k) - rq * gamma_deg) / h;

    // the alignment window must meet the region for some s
    SliceForm screen{rq, d, {}, Rat(0)};
    auto window = alignment_window(fv, screen, region);
    if (!window) return;
    const Rat& s_lo = window->first;
    const Rat& s_hi = window->second;

    // a_slice = d h s - r (s^2 - t^2) h/2 - lambda re_v(p) with |lambda| <= 1
    // and p over the narrowed window; interval arithmetic gives a complete box.
    auto [s2_lo, s2_hi] = square_interval(s_lo, s_hi);
    Rat quad_lo = s2_lo - region.t2_max, quad_hi = s2_hi - region.t2_min;
    Rat term1_lo = rat_min(Rat(d * h * s_lo), Rat(d * h * s_hi));
    Rat term1_hi = rat_max(Rat(d * h * s_lo), Rat(d * h * s_hi));
    Rat term2_lo = rat_min(Rat(-rq * h / 2 * quad_lo), Rat(-rq * h / 2 * quad_hi));
    Rat term2_hi = rat_max(Rat(-rq * h / 2 * quad_lo), Rat(-rq * h / 2 * quad_hi));
    Rat re_abs = rat_max(rat_abs(re_v_range.first), rat_abs(re_v_range.second));
    Rat a_lo = term1_lo + term2_lo - re_abs;
    Rat a_hi = term1_hi + term2_hi + re_abs;

    // -(D^2) <= eps - 2 r a_slice + d^2 h over the a-box
    Rat shell_cap = eps + d * d * h - (cell.r >= 0 ? 2 * rq * a_lo : 2 * rq * a_hi);
    if (shell_cap < 0) return;

    NSVecQ center = slice.gamma;
    for (Rat& e : center) e *= rq;
    for (const NSVecZ& xi_z : lat.enumerate_degree_window(center, cell.k, cell.k, shell_cap)) {
        NSVecQ xi = to_q(xi_z);
        Rat shift = gamma_a_shift(slice, xi, rq);
        Rat plain_lo = a_lo + shift, plain_hi = a_hi + shift;
        // integral a: on K3 integers; on Enriques half-integers with 2a == r mod 2
        std::vector<Rat> a_values;
        if (lat.kind() == SurfaceKind::K3) {
            for (Int a = ceil_rat(plain_lo); a <= floor_rat(plain_hi); ++a) a_values.emplace_back(a);
        } else {
            Int m_lo = ceil_rat(2 * plain_lo), m_hi = floor_rat(2 * plain_hi);
            Int parity = ((cell.r % 2) + 2) % 2;
            for (Int m = m_lo; m <= m_hi; ++m)
                if (((m % 2) + 2) % 2 == parity) a_values.emplace_back(Rat(m, 2));
        }
        for (const Rat& a : a_values) {
            MukaiVector u{rq, xi, a};
            if (!is_integral(lat, u)) continue;
            if (mukai_square(lat, u) < -eps) continue;
            if (mukai_square(lat, v - u) < -eps) continue;
            SliceForm fu = slice_form(slice, u);
            Wall wall;
            if (!wall_entry_valid(h, fv, fu, region, &wall)) continue;
            out.emplace_back(wall, u);
        }
    }
}

}  // namespace

WallSearchResult wall_vectors_for(const Slice& slice, const MukaiVector& v, const Region& region,
                                  int epsilon, int workers, const Int& rank_cap) {
    if (epsilon != 1 && epsilon != 2) throw PreconditionError("epsilon must be 1 or 2");
    if (rank_cap <= 0) throw PreconditionError("rank cap must be positive");
    const SurfaceLattice& lat = slice.lat();
    const Rat& h = lat.h2();
    SliceForm fv = slice_form(slice, v);

    WallSearchResult result;
    result.complete = true;
    result.rank_bound_used = 0;
    result.derived_rank_sq = 0;
    if (fv.r == 0 && fv.d == 0) {
        // Im Z(v) vanishes identically: alignment forces Im Z(u) = 0 as well,
        // and such u only produce improper (everywhere) loci.
        return result;
    }
    if ((fv.d - fv.r * region.s_min) <= 0 || (fv.d - fv.r * region.s_max) <= 0)
        throw PreconditionError("wall search needs Im Z(v) > 0 on the region");

    // range of Re Z(v) over the region
    auto [s2_lo, s2_hi] = square_interval(region.s_min, region.s_max);
    Rat quad_lo = s2_lo - region.t2_max, quad_hi = s2_hi - region.t2_min;
    Rat t1_lo = rat_min(Rat(fv.d * h * region.s_min), Rat(fv.d * h * region.s_max));
    Rat t1_hi = rat_max(Rat(fv.d * h * region.s_min), Rat(fv.d * h * region.s_max));
    Rat t2_lo = rat_min(Rat(-fv.r * h / 2 * quad_lo), Rat(-fv.r * h / 2 * quad_hi));
    Rat t2_hi = rat_max(Rat(-fv.r * h / 2 * quad_lo), Rat(-fv.r * h / 2 * quad_hi));
    std::pair<Rat, Rat> re_v_range{t1_lo - fv.a + t2_lo, t1_hi - fv.a + t2_hi};

    // kernel-norm bound on r_w = r_u - lambda r_v (see header):
    // V(p)^2 = |Z_v(p)|^2/(t^2 h) - <v^2> <= R^2/(t2_min h) + h (d_v - r_v s)^2_max - <v^2>
    Rat re_sq_max = rat_max(re_v_range.first * re_v_range.first,
                            re_v_range.second * re_v_range.second);
    Rat imt_part = rat_max(Rat((fv.d - fv.r * region.s_min) * (fv.d - fv.r * region.s_min)),
                           Rat((fv.d - fv.r * region.s_max) * (fv.d - fv.r * region.s_max))) *
                   h;
    Rat v_sq = fv.d * fv.d * h + slice.lat().ns_square(fv.D) - 2 * fv.r * fv.a;
    Rat v_sq_pos = rat_max(v_sq, Rat(0));
    Rat vmax_sq = re_sq_max / (region.t2_min * h) + imt_part - v_sq;
    if (vmax_sq < 0) vmax_sq = 0;
    result.derived_rank_sq = (4 * vmax_sq + 2 * (Rat(epsilon) + v_sq_pos)) / (h * region.t2_min);
    Int fr = floor_sqrt_rat(result.derived_rank_sq);
    if (fr > rank_cap) {
        fr = rank_cap;
        result.complete = false;
    }
    result.rank_bound_used = fr;

    Rat r_v_abs = rat_abs(fv.r);
    Int r_hi = floor_rat(r_v_abs + Rat(fr) + 1);  // sqrt(derived) < fr + 1
    Int r_lo = -r_hi;
    Rat s_abs = rat_max(rat_abs(region.s_min), rat_abs(region.s_max));

    Rat gamma_deg = lat.degree(slice.gamma);
    std::vector<WallSearchCell> cells;
    for (Int r = r_lo; r <= r_hi; ++r) {
        Rat rq(r);
        // d-window: the alignment strip |d - r s| <= d_v - r_v s for some
        // s in the region; both envelope lines are linear in s
        Rat d_min = rat_min(Rat(rq * region.s_min - (fv.d - fv.r * region.s_min)),
                            Rat(rq * region.s_max - (fv.d - fv.r * region.s_max)));
        Rat d_max = rat_max(Rat(rq * region.s_min + (fv.d - fv.r * region.s_min)),
                            Rat(rq * region.s_max + (fv.d - fv.r * region.s_max)));
        // and the kernel bound |d - lambda d_v| <= |r_w| s_abs
        Rat d_min2 = -rat_abs(fv.d) - Rat(fr + 1) * s_abs;
        Rat d_max2 = rat_abs(fv.d) + Rat(fr + 1) * s_abs;
        d_min = rat_max(d_min, d_min2);
        d_max = rat_min(d_max, d_max2);
        if (d_min > d_max) continue;
        Int klo = ceil_rat(h * d_min + rq * gamma_deg);
        Int khi = floor_rat(h * d_max + rq * gamma_deg);
        for (Int k = klo; k <= khi; ++k) cells.push_back(WallSearchCell{r, k});
    }

    if (workers < 1) workers = 1;
    std::vector<std::vector<std::pair<Wall, MukaiVector>>> found(cells.size());
    auto run_chunk = [&](size_t begin, size_t stride) {
        for (size_t i = begin; i < cells.size(); i += stride)
            scan_cell(slice, fv, region, epsilon, v, cells[i], re_v_range, found[i]);
    };
    if (workers == 1 || cells.size() <= 1) {
        run_chunk(0, 1);
    } else {
        std::vector<std::thread> pool;
        size_t n_threads = std::min<size_t>(workers, cells.size());
        pool.reserve(n_threads);
        for (size_t t = 0; t < n_threads; ++t) pool.emplace_back(run_chunk, t, n_threads);
        for (auto& th : pool) th.join();
    }

    std::map<Wall, std::vector<MukaiVector>> grouped;
    for (const auto& cell_hits : found)
        for (const auto& [wall, u] : cell_hits) grouped[wall].push_back(u);
    for (auto& [wall, vecs] : grouped) {
        std::sort(vecs.begin(), vecs.end());
        vecs.erase(std::unique(vecs.begin(), vecs.end()), vecs.end());
        auto witness = wall_region_witness(wall, region);
        if (!witness) throw InvariantError("wall accepted without a region witness");
        result.walls.push_back(WallCandidate{wall, vecs, witness->first, witness->second});
    }
    return result;
}

bool DecompositionCandidate::operator<(const DecompositionCandidate& o) const {
    if (parts.size() != o.parts.size()) return parts.size() < o.parts.size();
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].second != o.parts[i].second) return parts[i].second < o.parts[i].second;
        if (parts[i].first != o.parts[i].first) return parts[i].first < o.parts[i].first;
    }
    return false;
}

namespace {

// search for multisets from pool (from index `start`) of total rank `rank_left`
// summing to `target`; parts get multiplicity >= 1.
bool decompose_rec(const std::vector<MukaiVector>& pool, size_t start, const Int& rank_left,
                   const MukaiVector& target, std::vector<std::pair<Int, MukaiVector>>& current,
                   std::vector<std::vector<std::pair<Int, MukaiVector>>>* all, bool stop_at_first,
                   size_t min_parts_total) {
    if (rank_left == 0) {
        bool zero = target.r == 0 && target.a == 0;
        for (const Rat& e : target.xi) zero = zero && e == 0;
        if (!zero) return false;
        size_t total = 0;
        for (const auto& [n, u] : current) total += static_cast<size_t>(n.convert_to<long>());
        if (total < min_parts_total) return false;
        if (all) all->push_back(current);
        return true;
    }
    bool found = false;
    for (size_t i = start; i < pool.size(); ++i) {
        Int r_i = numerator(pool[i].r);
        if (r_i > rank_left) continue;
        Int max_mult = rank_left / r_i;
        for (Int n = 1; n <= max_mult; ++n) {
            MukaiVector rest = target - Rat(n) * pool[i];
            current.emplace_back(n, pool[i]);
            bool ok = decompose_rec(pool, i + 1, Int(rank_left - n * r_i), rest, current, all,
                                    stop_at_first, min_parts_total);
            current.pop_back();
            if (ok) {
                found = true;
                if (stop_at_first) return true;
            }
        }
    }
    return found;
}

std::string classify_affine_type(const MatQ& cartan) {
    const size_t k = cartan.size();
    if (k == 1) return "unclassified";
    // off-diagonal pairings must be 0, 1 or 2; 2 only for the double bond A~1
    std::vector<std::vector<int>> adj(k);
    bool double_bond = false;
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i + 1; j < k; ++j) {
            const Rat& p = cartan[i][j];
            if (p == 0) continue;
            if (p == 2)
                double_bond = true;
            else if (p != 1)
                return "unclassified";
            adj[i].push_back(static_cast<int>(j));
            adj[j].push_back(static_cast<int>(i));
        }
    if (double_bond) return (k == 2) ? "A~1" : "unclassified";
    // connectivity
    std::vector<bool> seen(k, false);
    std::vector<int> stack{0};
    seen[0] = true;
    size_t reached = 1;
    while (!stack.empty()) {
        int cur = stack.back();
        stack.pop_back();
        for (int nb : adj[cur])
            if (!seen[nb]) {
                seen[nb] = true;
                ++reached;
                stack.push_back(nb);
            }
    }
    if (reached != k) return "unclassified";
    size_t edges = 0;
    std::vector<size_t> degs(k);
    for (size_t i = 0; i < k; ++i) {
        degs[i] = adj[i].size();
        edges += degs[i];
    }
    edges /= 2;
    size_t deg3 = 0, deg4 = 0, deg_other = 0;
    for (size_t d : degs) {
        if (d == 3) ++deg3;
        else if (d == 4) ++deg4;
        else if (d != 1 && d != 2) ++deg_other;
    }
    if (deg_other) return "unclassified";
    if (edges == k && deg3 == 0 && deg4 == 0) return "A~" + std::to_string(k - 1);  // cycle
    if (edges != k - 1) return "unclassified";  // must be a tree from here on
    if (deg4 == 1 && deg3 == 0 && k == 5) return "D~4";
    if (deg4 == 0 && deg3 == 2) return "D~" + std::to_string(k - 1);
    if (deg4 == 0 && deg3 == 1) {
        // arm lengths from the unique branch vertex decide E~6, E~7, E~8
        size_t center = 0;
        while (degs[center] != 3) ++center;
        std::vector<size_t> arms;
        for (int nb : adj[center]) {
            size_t len = 1;
            size_t prev = center, cur = static_cast<size_t>(nb);
            while (degs[cur] == 2) {
                for (int nxt : adj[cur])
                    if (static_cast<size_t>(nxt) != prev) {
                        prev = cur;
                        cur = static_cast<size_t>(nxt);
                        break;
                    }
                ++len;
            }
            arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        if (arms == std::vector<size_t>{2, 2, 2}) return "E~6";
        if (arms == std::vector<size_t>{1, 3, 3}) return "E~7";
        if (arms == std::vector<size_t>{1, 2, 5}) return "E~8";
    }
    return "unclassified";
}

}  // namespace

std::vector<DecompositionCandidate> isotropic_decompositions(const Slice& slice, const Int& r0,
                                                             const Int& height_bound) {
    if (r0 <= 0) throw PreconditionError("r0 must be positive");
    if (height_bound <= 0) throw PreconditionError("height bound must be positive");
    const SurfaceLattice& lat = slice.lat();
    Rat bound_q(height_bound);

    // L = (e^gamma)-perp cap (H e^gamma)-perp = { e^gamma (r + D) : D in H-perp };
    // the -2 vectors of L with rank in [1, r0] within the height bound.
    std::vector<MukaiVector> pool;
    for (Int r = 1; r <= r0; ++r) {
        Rat rq(r);
        Rat k_exact = rq * lat.degree(slice.gamma);
        if (denominator(k_exact) != 1) continue;
        Int k = numerator(k_exact);
        NSVecQ center = slice.gamma;
        for (Rat& e : center) e *= rq;
        for (const NSVecZ& xi_z : lat.enumerate_degree_window(center, k, k, Rat(2))) {
            NSVecQ xi = to_q(xi_z);
            NSVecQ rel = xi;
            for (int i = 0; i < lat.rank(); ++i) rel[i] -= center[i];
            if (lat.perp_norm(rel) != 2) continue;  // (D^2) = -2 exactly
            Rat a = gamma_a_shift(slice, xi, rq);   // slice a-component is 0
            MukaiVector u{rq, xi, a};
            if (!is_integral(lat, u)) continue;
            bool within = rat_abs(u.r) <= bound_q && rat_abs(u.a) <= bound_q;
            for (const Rat& e : u.xi) within = within && rat_abs(e) <= bound_q;
            if (!within) continue;
            pool.push_back(u);
        }
    }
    std::sort(pool.begin(), pool.end());

    NSVecQ gamma = slice.gamma;
    MukaiVector target = Rat(r0) * exp_class(lat, gamma);

    std::vector<std::vector<std::pair<Int, MukaiVector>>> sums;
    std::vector<std::pair<Int, MukaiVector>> current;
    decompose_rec(pool, 0, r0, target, current, &sums, false, 0);

    std::vector<DecompositionCandidate> out;
    for (auto& parts : sums) {
        bool all_indecomposable = true;
        for (const auto& [n, u] : parts) {
            // decomposable within the pool: a sum of >= 2 pool members
            std::vector<std::pair<Int, MukaiVector>> probe;
            if (decompose_rec(pool, 0, numerator(u.r), u, probe, nullptr, true, 2)) {
                all_indecomposable = false;
                break;
            }
        }
        if (!all_indecomposable) continue;
        DecompositionCandidate cand;
        cand.parts = parts;
        size_t k = parts.size();
        cand.cartan.assign(k, std::vector<Rat>(k));
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j)
                cand.cartan[i][j] = mukai_pairing(lat, parts[i].second, parts[j].second);
        cand.type_label = classify_affine_type(cand.cartan);
        out.push_back(std::move(cand));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace stabwall
