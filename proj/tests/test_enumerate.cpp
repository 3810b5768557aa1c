#include <random>
#include <set>

#include "doctest.h"
#include "stabwall/enumerate.hpp"

using namespace stabwall;

namespace {

MukaiVector mk(Rat r, NSVecQ xi, Rat a) { return MukaiVector{std::move(r), std::move(xi), std::move(a)}; }

// definition-level brute force over a coordinate box, no derived bounds
std::vector<MukaiVector> delta_obstructions_oracle(const Slice& slice, const Region& region,
                                                   int box) {
    const SurfaceLattice& lat = slice.lat();
    std::vector<MukaiVector> out;
    const int n = lat.rank();
    std::vector<Int> xi(n, Int(0));
    auto scan_xi = [&](auto&& self, int pos) -> void {
        if (pos == n) {
            for (int r = 1; r <= box; ++r) {
                std::vector<Rat> a_values;
                if (lat.kind() == SurfaceKind::K3) {
                    for (int a = -box; a <= box; ++a) a_values.emplace_back(a);
                } else {
                    for (int m = -2 * box; m <= 2 * box; ++m)
                        if (((m % 2) + 2) % 2 == r % 2) a_values.emplace_back(Rat(m, 2));
                }
                for (const Rat& a : a_values) {
                    MukaiVector u = mk(r, to_q(NSVecZ(xi)), a);
                    if (!in_delta(lat, u)) continue;
                    SliceForm f = slice_form(slice, u);
                    // exists (s,t2) in region with Im = 0, Re <= 0:
                    // s = d/r in range and Re(s, t2_min) <= 0
                    Rat s = f.d / f.r;
                    if (s < region.s_min || s > region.s_max) continue;
                    if (f.a < f.r * lat.h2() * (s * s + region.t2_min) / 2) continue;
                    out.push_back(u);
                }
            }
            return;
        }
        for (Int c = -box; c <= box; ++c) {
            xi[pos] = c;
            self(self, pos + 1);
        }
    };
    scan_xi(scan_xi, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<MukaiVector> sorted_vectors(const std::vector<DeltaObstruction>& obs) {
    std::vector<MukaiVector> out;
    for (const auto& o : obs) out.push_back(o.u);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("region validation") {
    CHECK_THROWS_AS(Region(Rat(1), Rat(0), Rat(1), Rat(2)), PreconditionError);
    CHECK_THROWS_AS(Region(Rat(0), Rat(1), Rat(0), Rat(2)), PreconditionError);
    CHECK_THROWS_AS(Region(Rat(0), Rat(1), Rat(2), Rat(1)), PreconditionError);
}

TEST_CASE("delta obstructions on the principal K3 point cases") {
    SurfaceLattice lat(SurfaceKind::K3, MatZ{{4}}, NSVecZ{1});
    Slice slice(lat, {Rat(0)});
    auto at = [&](Rat t2) {
        return sorted_vectors(delta_obstructions(slice, Region(Rat(0), Rat(0), t2, t2)));
    };
    CHECK(at(Rat(1, 4)) == std::vector<MukaiVector>{mk(1, {0}, 1)});
    CHECK(at(Rat(3, 4)).empty());
    CHECK(at(Rat(1, 2)) == std::vector<MukaiVector>{mk(1, {0}, 1)});  // boundary Re = 0
}

TEST_CASE("delta obstruction witnesses check out") {
    SurfaceLattice lat(SurfaceKind::K3, MatZ{{2, 0}, {0, -2}}, NSVecZ{1, 0});
    Slice slice(lat, {Rat(1, 2), Rat(0)});
    Region region(Rat(-1), Rat(1), Rat(1, 4), Rat(2));
    for (const auto& o : delta_obstructions(slice, region)) {
        REQUIRE(in_delta(lat, o.u));
        REQUIRE(o.witness_s >= region.s_min);
        REQUIRE(o.witness_s <= region.s_max);
        SlicePoint pt = SlicePoint::rational(o.witness_s, o.witness_t2);
        ChargeValue z = charge(slice, o.u, pt);
        REQUIRE(z.im_over_t.sign() == 0);
        REQUIRE(z.re.sign() <= 0);
    }
}

TEST_CASE("delta obstructions agree with the definition-level oracle") {
    std::mt19937 rng(41);
    int instances = 0;
    while (instances < 8) {
        bool rank2 = instances % 2;
        int h2 = 2 * std::uniform_int_distribution<int>(1, 2)(rng);
        MatZ gram = rank2 ? MatZ{{h2, 0}, {0, -2}} : MatZ{{h2}};
        NSVecZ pol = rank2 ? NSVecZ{1, 0} : NSVecZ{1};
        SurfaceLattice lat(SurfaceKind::K3, gram, pol);
        NSVecQ gamma(lat.rank(), Rat(0));
        if (instances % 3 == 0) gamma[0] = Rat(1, 2);
        Slice slice(lat, gamma);
        Rat s0 = Rat(std::uniform_int_distribution<int>(-2, 0)(rng));
        Region region(s0, s0 + 1, Rat(1, 4), Rat(2));
        auto fast = sorted_vectors(delta_obstructions(slice, region));
        auto slow = delta_obstructions_oracle(slice, region, 12);
        REQUIRE(fast == slow);
        ++instances;
    }
}

TEST_CASE("boundary family enumeration on the worked window") {
    SurfaceLattice lat(SurfaceKind::K3, MatZ{{4}}, NSVecZ{1});
    Slice slice(lat, {Rat(0)});
    auto pool = frak_E(slice, Int(1), 2, Rat(-1, 2), Rat(-1, 3));
    SliceForm expected{Rat(3), Rat(-1), {Rat(0)}, Rat(1)};
    CHECK(std::find(pool.begin(), pool.end(), expected) != pool.end());
    // excluded member: support [-3/2, -1] is disjoint from the window
    SliceForm outside{Rat(1), Rat(-1), {Rat(0)}, Rat(3)};
    CHECK(std::find(pool.begin(), pool.end(), outside) == pool.end());
    CHECK(mukai_square(lat, reconstruct(slice, outside)) == -2);
    // a far member with the same window: (27, -11, 9), support ~ [-0.409, -0.407]
    SliceForm far{Rat(27), Rat(-11), {Rat(0)}, Rat(9)};
    CHECK(mukai_square(lat, reconstruct(slice, far)) == -2);
    CHECK(std::find(pool.begin(), pool.end(), far) != pool.end());
    // every member satisfies the sign pattern and square
    for (const SliceForm& f : pool) {
        REQUIRE(f.r > 0);
        REQUIRE(f.d < 0);
        REQUIRE(f.a > 0);
        REQUIRE(mukai_square(lat, reconstruct(slice, f)) == -2);
        Rat left = 2 * f.a / (lat.h2() * f.d);
        Rat right = f.d / f.r;
        REQUIRE(left <= right);
        REQUIRE(left <= Rat(-1, 3));
        REQUIRE(right >= Rat(-1, 2));
    }
    CHECK_THROWS_AS(frak_E(slice, Int(1), 2, Rat(-1, 4), Rat(0)), PreconditionError);
}

TEST_CASE("odd-parity boundary family on an Enriques lattice") {
    SurfaceLattice lat(SurfaceKind::Enriques, MatZ{{2, 0}, {0, -2}}, NSVecZ{1, 0});
    Slice slice(lat, {Rat(0), Rat(0)});
    auto pool = frak_E(slice, Int(1), 1, Rat(-3, 2), Rat(-1));
    // (1, -e1, 3/2) has square 2 - 3 = -1 and support [-3/2, -1]
    SliceForm expected{Rat(1), Rat(-1), {Rat(0), Rat(0)}, Rat(3, 2)};
    CHECK(std::find(pool.begin(), pool.end(), expected) != pool.end());
    for (const SliceForm& f : pool) {
        MukaiVector u = reconstruct(slice, f);
        REQUIRE(mukai_square(lat, u) == -1);
        REQUIRE(is_integral(lat, u));
        REQUIRE(numerator(f.r) % 2 != 0);  // square -1 forces odd rank
    }
    // epsilon = 1 is rejected on K3
    SurfaceLattice k3(SurfaceKind::K3, MatZ{{4}}, NSVecZ{1});
    Slice sk(k3, {Rat(0)});
    CHECK_THROWS_AS(frak_E(sk, Int(1), 1, Rat(-1), Rat(-1, 2)), PreconditionError);
}

TEST_CASE("boundary family agrees with a slow scan on a tiny instance") {
    SurfaceLattice lat(SurfaceKind::K3, MatZ{{2}}, NSVecZ{1});
    Slice slice(lat, {Rat(0)});
    Rat s_lo(-2), s_hi(-1, 4), cap(6);
    auto pool = frak_E(slice, Int(1), 2, s_lo, s_hi, cap);
    std::vector<SliceForm> slow;
    for (int r1 = 1; r1 <= 60; ++r1)
        for (int d1 = -6; d1 <= -1; ++d1)
            for (int a1 = 1; a1 <= 60; ++a1) {
                MukaiVector u = mk(r1, {Rat(d1)}, a1);
                if (mukai_square(lat, u) != -2) continue;
                Rat left = Rat(2 * a1) / (lat.h2() * Rat(d1));
                Rat right = Rat(d1, r1);
                if (left > right) continue;
                if (left > s_hi || right < s_lo) continue;
                slow.push_back(slice_form(slice, u));
            }
    std::sort(slow.begin(), slow.end());
    CHECK(pool == slow);
}

TEST_CASE("wall vectors reproduce the ideal-sheaf wall") {
    SurfaceLattice lat(SurfaceKind::K3, MatZ{{4}}, NSVecZ{1});
    Slice slice(lat, {Rat(0)});
    MukaiVector v = mk(1, {0}, -2);
    Region region(Rat(-3), Rat(-1, 10), Rat(1, 100), Rat(2));
    auto search = wall_vectors_for(slice, v, region, 2);
    // walls accumulate toward small t2; this deep region truncates at the cap
    CHECK_FALSE(search.complete);
    bool found = false;
    MukaiVector expected_u = exp_class(lat, {Rat(-2)});
    for (const auto& cand : search.walls) {
        if (cand.wall.kind == Wall::Kind::Circle && cand.wall.center_s == Rat(-5, 4) &&
            cand.wall.radius2 == Rat(9, 16)) {
            found = true;
            REQUIRE(std::find(cand.defining.begin(), cand.defining.end(), expected_u) !=
                    cand.defining.end());
        }
        // witness point lies on the wall and inside the region
        SlicePoint pt(cand.witness_s, cand.witness_t2);
        REQUIRE(wall_contains(cand.wall, pt));
        REQUIRE(pt.s >= QuadExt(region.s_min));
        REQUIRE(pt.s <= QuadExt(region.s_max));
        REQUIRE(pt.t2 >= QuadExt(region.t2_min));
        REQUIRE(pt.t2 <= QuadExt(region.t2_max));
        for (const MukaiVector& u : cand.defining) {
            REQUIRE(mukai_square(lat, u) >= -2);
            REQUIRE(mukai_square(lat, v - u) >= -2);
        }
    }
    CHECK(found);

    // a region above the circle: radius^2 = 9/16 < 2 excludes it
    Region high(Rat(-3), Rat(-1, 10), Rat(2), Rat(4));
    for (const auto& cand : wall_vectors_for(slice, v, high, 2).walls)
        CHECK_FALSE((cand.wall.kind == Wall::Kind::Circle && cand.wall.center_s == Rat(-5, 4) &&
                     cand.wall.radius2 == Rat(9, 16)));
}

TEST_CASE("no walls for the point class over an ample window") {
    SurfaceLattice lat(SurfaceKind::K3, MatZ{{4}}, NSVecZ{1});
    Slice slice(lat, {Rat(0)});
    Region region(Rat(-1), Rat(1), Rat(1, 4), Rat(2));
    auto search = wall_vectors_for(slice, point_class(lat), region, 2);
    CHECK(search.walls.empty());
    CHECK(search.complete);
}

TEST_CASE("wall vectors match a definition-level oracle") {
    SurfaceLattice lat(SurfaceKind::K3, MatZ{{2, 0}, {0, -2}}, NSVecZ{1, 0});
    Slice slice(lat, {Rat(0), Rat(0)});
    MukaiVector v = mk(1, {0, 0}, -1);
    Region region(Rat(-1), Rat(-1, 4), Rat(1, 4), Rat(1));
    auto search = wall_vectors_for(slice, v, region, 2);
    REQUIRE(search.complete);

    std::set<std::pair<std::string, std::string>> fast;
    for (const auto& cand : search.walls)
        for (const MukaiVector& u : cand.defining) {
            fast.insert({cand.wall.str(), u.str()});
            // everything the engine returns must sit inside the oracle box
            REQUIRE(rat_abs(u.r) <= 16);
            REQUIRE(rat_abs(u.a) <= 16);
            for (const Rat& e : u.xi) REQUIRE(rat_abs(e) <= 16);
        }

    std::set<std::pair<std::string, std::string>> slow;
    SliceForm fv = slice_form(slice, v);
    for (int r = -16; r <= 16; ++r)
        for (int x = -16; x <= 16; ++x)
            for (int y = -16; y <= 16; ++y) {
                // screen on the a-independent alignment window first
                SliceForm f0 = slice_form(slice, mk(r, {Rat(x), Rat(y)}, 0));
                if (!alignment_window(fv, f0, region)) continue;
                for (int a = -16; a <= 16; ++a) {
                    MukaiVector u = mk(r, {Rat(x), Rat(y)}, a);
                    if (mukai_square(lat, u) < -2) continue;
                    if (mukai_square(lat, v - u) < -2) continue;
                    SliceForm fu = slice_form(slice, u);
                    Wall w;
                    if (!wall_entry_valid(lat.h2(), fv, fu, region, &w)) continue;
                    slow.insert({w.str(), u.str()});
                }
            }
    CHECK(fast == slow);
}

TEST_CASE("isotropic decomposition fixtures") {
    SurfaceLattice rank1(SurfaceKind::K3, MatZ{{4}}, NSVecZ{1});
    Slice s1(rank1, {Rat(0)});
    CHECK(isotropic_decompositions(s1, Int(2)).empty());
    CHECK(isotropic_decompositions(s1, Int(1)).empty());

    SurfaceLattice lat(SurfaceKind::K3, MatZ{{2, 0}, {0, -2}}, NSVecZ{1, 0});
    Slice slice(lat, {Rat(0), Rat(0)});
    auto cands = isotropic_decompositions(slice, Int(2), Int(8));
    REQUIRE(cands.size() == 1);
    const auto& c = cands[0];
    REQUIRE(c.parts.size() == 2);
    CHECK(c.parts[0].first == 1);
    CHECK(c.parts[1].first == 1);
    CHECK(c.parts[0].second == mk(1, {0, -1}, 0));
    CHECK(c.parts[1].second == mk(1, {0, 1}, 0));
    CHECK(c.cartan == MatQ{{Rat(-2), Rat(2)}, {Rat(2), Rat(-2)}});
    CHECK(c.type_label == "A~1");
    // reconstruction is exact
    MukaiVector sum = mk(0, {0, 0}, 0);
    for (const auto& [n, u] : c.parts) sum = sum + Rat(n) * u;
    CHECK(sum == Rat(2) * exp_class(lat, {Rat(0), Rat(0)}));
    CHECK(isotropic_decompositions(slice, Int(1), Int(8)).empty());
}
