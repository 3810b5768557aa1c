// Acceptance suite: each criterion prints one pass/fail line and the binary
// exits nonzero if any fails. All comparisons are exact; the stated time
// budgets are asserted with wall-clock measurements.

#include <chrono>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "stabwall/chambers.hpp"
#include "stabwall/commands.hpp"
#include "stabwall/example_suite.hpp"
#include "stabwall/transforms.hpp"

using namespace stabwall;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void report(int idx, const std::string& name, bool pass, double elapsed_ms, double budget_ms,
            const std::string& note = "") {
    bool ok = pass && elapsed_ms <= budget_ms;
    std::cout << "criterion " << idx << " [" << name << "]: " << (ok ? "PASS" : "FAIL") << " ("
              << elapsed_ms << " ms, budget " << budget_ms << " ms)";
    if (!note.empty()) std::cout << " " << note;
    if (pass && elapsed_ms > budget_ms) std::cout << " [over budget]";
    std::cout << "\n";
    if (!ok) ++g_failures;
}

MukaiVector mk(Rat r, NSVecQ xi, Rat a) {
    return MukaiVector{std::move(r), std::move(xi), std::move(a)};
}

// ---- criterion 1: the ideal-sheaf wall fixture --------------------------

void criterion1() {
    auto t0 = Clock::now();
    SurfaceLattice lat(SurfaceKind::K3, MatZ{{4}}, NSVecZ{1});
    Slice slice(lat, {Rat(0)});
    Wall wall = wall_between(slice, mk(1, {0}, -2), exp_class(lat, {Rat(-2)}));
    bool pass = wall.kind == Wall::Kind::Circle && wall.center_s == Rat(-5, 4) &&
                wall.radius2 == Rat(9, 16);
    pass = pass && wall_contains(wall, SlicePoint::rational(Rat(-1), Rat(1, 2)));
    report(1, "ideal-sheaf wall fixture", pass, ms_since(t0), 1.0, wall.str());
}

// ---- criterion 2: Mukai-arithmetic ledger --------------------------------

void criterion2() {
    auto t0 = Clock::now();
    bool pass = true;
    for (Int n : {Int(2), Int(4), Int(6), Int(8)}) {
        ExampleSuiteResult res = run_example_suite(n);
        pass = pass && res.all_pass;
    }
    report(2, "Mukai-arithmetic ledger n in {2,4,6,8}", pass, ms_since(t0), 10.0);
}

// ---- criterion 3: envelope dominance -------------------------------------

void criterion3() {
    auto t0 = Clock::now();
    bool pass = true;
    std::string note;
    for (int h2 : {2, 4, 6}) {
        SurfaceLattice lat(SurfaceKind::K3, MatZ{{Int(h2)}}, NSVecZ{1});
        Slice slice(lat, {Rat(0)});
        for (Int r0 : {Int(1), Int(2)}) {
            GiesekerParams params = GiesekerParams::for_surface(lat, r0, 2);
            auto pool = frak_E(slice, r0, 2, Rat(-1), Rat(-1, 64));
            for (int k = 0; k < 100 && pass; ++k) {
                Rat s = Rat(-1) + Rat(63, 64) * Rat(k) / Rat(99);
                Rat coarse = envelope_coarse_sq(params, s);
                bool in_fine = fine_window_contains(params, s);
                QuadExt fine_sq;
                if (in_fine) fine_sq = envelope_fine(params, s).square();
                for (const SliceForm& v1 : pool) {
                    Rat f2 = f_v1_sq(lat.h2(), v1, s);
                    if (f2 > coarse) {
                        pass = false;
                        note = "coarse bound violated at s=" + rat_str(s) + " by " + v1.str();
                        break;
                    }
                    if (in_fine && (QuadExt(f2) - fine_sq).sign() > 0) {
                        pass = false;
                        note = "fine bound violated at s=" + rat_str(s) + " by " + v1.str();
                        break;
                    }
                }
            }
        }
    }
    report(3, "envelope dominance", pass, ms_since(t0), 5000.0, note);
}

// ---- criterion 4: oracle equivalence --------------------------------------

std::vector<MukaiVector> delta_oracle(const Slice& slice, const Region& region, int box) {
    const SurfaceLattice& lat = slice.lat();
    std::vector<MukaiVector> out;
    const int n = lat.rank();
    std::vector<Int> xi(n, Int(0));
    auto a_candidates = [&](int r) {
        std::vector<Rat> vals;
        if (lat.kind() == SurfaceKind::K3) {
            for (int a = -box; a <= box; ++a) vals.emplace_back(a);
        } else {
            for (int m = -2 * box; m <= 2 * box; ++m)
                if (((m % 2) + 2) % 2 == r % 2) vals.emplace_back(Rat(m, 2));
        }
        return vals;
    };
    auto scan = [&](auto&& self, int pos) -> void {
        if (pos == n) {
            for (int r = 1; r <= box; ++r) {
                // screen on the a-independent window condition first
                MukaiVector probe = mk(r, to_q(NSVecZ(xi)), 0);
                SliceForm pf = slice_form(slice, probe);
                Rat s = pf.d / pf.r;
                if (s < region.s_min || s > region.s_max) continue;
                for (const Rat& a : a_candidates(r)) {
                    MukaiVector u = mk(r, to_q(NSVecZ(xi)), a);
                    if (!in_delta(lat, u)) continue;
                    SliceForm f = slice_form(slice, u);
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
    scan(scan, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::set<std::pair<std::string, std::string>> wall_oracle(const Slice& slice, const MukaiVector& v,
                                                          const Region& region, int eps, int box) {
    const SurfaceLattice& lat = slice.lat();
    SliceForm fv = slice_form(slice, v);
    std::set<std::pair<std::string, std::string>> out;
    const int n = lat.rank();
    std::vector<Int> xi(n, Int(0));
    auto scan = [&](auto&& self, int pos) -> void {
        if (pos == n) {
            for (int r = -box; r <= box; ++r) {
                // screen on the a-independent alignment window
                SliceForm f0 = slice_form(slice, mk(r, to_q(NSVecZ(xi)), 0));
                if (!alignment_window(fv, f0, region)) continue;
                std::vector<Rat> a_values;
                if (lat.kind() == SurfaceKind::K3) {
                    for (int a = -box; a <= box; ++a) a_values.emplace_back(a);
                } else {
                    for (int m = -2 * box; m <= 2 * box; ++m)
                        if (((m % 2) + 2) % 2 == ((r % 2) + 2) % 2) a_values.emplace_back(Rat(m, 2));
                }
                for (const Rat& a : a_values) {
                    MukaiVector u = mk(r, to_q(NSVecZ(xi)), a);
                    if (mukai_square(lat, u) < -eps) continue;
                    if (mukai_square(lat, v - u) < -eps) continue;
                    SliceForm fu = slice_form(slice, u);
                    Wall w;
                    if (!wall_entry_valid(lat.h2(), fv, fu, region, &w)) continue;
                    out.insert({w.str(), u.str()});
                }
            }
            return;
        }
        for (Int c = -box; c <= box; ++c) {
            xi[pos] = c;
            self(self, pos + 1);
        }
    };
    scan(scan, 0);
    return out;
}

struct Instance {
    SurfaceLattice lat;
    NSVecQ gamma;
    Region region;
    MukaiVector v;
};

std::vector<Instance> make_instances() {
    std::vector<Instance> out;
    std::mt19937 rng(20240901);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> s_pick(-7, -5);  // s_min in quarters
    std::uniform_int_distribution<int> t_pick(3, 4);    // t2_min in quarters
    for (int i = 0; i < 20; ++i) {
        int shape = i % 4;
        SurfaceKind kind = (shape == 3) ? SurfaceKind::Enriques : SurfaceKind::K3;
        MatZ gram;
        NSVecZ pol;
        if (shape == 0) {
            gram = MatZ{{coin(rng) ? 4 : 2}};
            pol = NSVecZ{1};
        } else {
            gram = MatZ{{shape == 1 ? 4 : 2, 0}, {0, -2}};
            pol = NSVecZ{1, 0};
        }
        SurfaceLattice lat(kind, gram, pol);
        NSVecQ gamma(lat.rank(), Rat(0));
        if (coin(rng)) gamma[0] = Rat(1, 2);
        Rat s_min(s_pick(rng), 4);
        Rat t2_min(t_pick(rng), 4);
        Region region(s_min, s_min + Rat(1, 2), t2_min, t2_min + Rat(3, 4));
        MukaiVector v = mk(1, NSVecQ(lat.rank(), Rat(0)), coin(rng) ? -1 : -2);
        out.push_back(Instance{lat, gamma, region, v});
    }
    return out;
}

void criterion4() {
    auto t0 = Clock::now();
    bool pass = true;
    std::string note;
    auto instances = make_instances();
    int idx = 0;
    for (const auto& inst : instances) {
        Slice slice(inst.lat, inst.gamma);
        auto fast_obs = delta_obstructions(slice, inst.region);
        std::vector<MukaiVector> fast;
        for (const auto& o : fast_obs) fast.push_back(o.u);
        std::sort(fast.begin(), fast.end());
        auto slow = delta_oracle(slice, inst.region, 12);
        if (fast != slow) {
            pass = false;
            note = "delta mismatch on instance " + std::to_string(idx);
            break;
        }
        auto search = wall_vectors_for(slice, inst.v, inst.region, 2);
        if (!search.complete) {
            pass = false;
            note = "wall search truncated on instance " + std::to_string(idx);
            break;
        }
        std::set<std::pair<std::string, std::string>> fastw;
        Int box(12);  // grown to cover everything the complete engine returned
        for (const auto& cand : search.walls)
            for (const MukaiVector& u : cand.defining) {
                fastw.insert({cand.wall.str(), u.str()});
                Rat m = rat_max(rat_abs(u.r), rat_abs(u.a));
                for (const Rat& e : u.xi) m = rat_max(m, rat_abs(e));
                if (Rat(box) < m) box = ceil_rat(m);
            }
        auto sloww = wall_oracle(slice, inst.v, inst.region, 2,
                                 static_cast<int>(box.convert_to<long>()));
        if (fastw != sloww) {
            pass = false;
            note = "wall mismatch on instance " + std::to_string(idx) + " (fast " +
                   std::to_string(fastw.size()) + ", oracle " + std::to_string(sloww.size()) + ")";
            break;
        }
        ++idx;
    }
    report(4, "oracle equivalence on 20 randomized instances", pass, ms_since(t0), 60000.0, note);
}

// ---- criterion 5: isometry suite ------------------------------------------

void criterion5() {
    auto t0 = Clock::now();
    SurfaceLattice enr(SurfaceKind::Enriques, MatZ{{2, 0}, {0, -2}}, NSVecZ{1, 0});
    SurfaceLattice k3(SurfaceKind::K3, MatZ{{2, 0}, {0, -2}}, NSVecZ{1, 0});
    MukaiVector sph = mk(2, {1, 0}, 1);          // square -2
    MukaiVector exc = mk(1, {0, 0}, Rat(1, 2));  // square -1
    LatticeIsometry tw_k3 = spherical_twist(k3, sph);
    LatticeIsometry tw_enr = spherical_twist(enr, sph);
    LatticeIsometry etw = exceptional_twist(enr, exc);
    bool pass = tw_k3.compose(tw_k3).is_identity() && tw_enr.compose(tw_enr).is_identity() &&
                etw.compose(etw).is_identity();

    std::vector<LatticeIsometry> isos_k3{tw_k3, tensor_isometry(k3, {Rat(1), Rat(0)}),
                                         tensor_isometry(k3, {Rat(-1), Rat(2)}),
                                         shift_isometry(k3), dual_map(k3)};
    isos_k3.push_back(isos_k3[0].compose(isos_k3[1]));
    isos_k3.push_back(isos_k3[3].compose(isos_k3[0]).compose(isos_k3[2]));
    std::vector<LatticeIsometry> isos_enr{etw, tw_enr, tensor_isometry(enr, {Rat(2), Rat(-1)}),
                                          shift_isometry(enr)};
    isos_enr.push_back(isos_enr[0].compose(isos_enr[2]));
    isos_enr.push_back(isos_enr[1].compose(isos_enr[0]));

    std::mt19937 rng(99);
    std::uniform_int_distribution<int> small(-9, 9);
    for (int i = 0; i < 10000 && pass; ++i) {
        bool on_k3 = (i % 2) == 0;
        const SurfaceLattice& lat = on_k3 ? k3 : enr;
        const auto& isos = on_k3 ? isos_k3 : isos_enr;
        MukaiVector v = mk(small(rng), {small(rng), small(rng)}, Rat(small(rng), 2));
        MukaiVector w = mk(small(rng), {small(rng), small(rng)}, Rat(small(rng), 2));
        const LatticeIsometry& m = isos[i % isos.size()];
        pass = mukai_pairing(lat, m.apply(v), m.apply(w)) == mukai_pairing(lat, v, w);
    }
    report(5, "isometry suite, 10000 randomized pairing checks", pass, ms_since(t0), 5000.0);
}

// ---- criterion 6: gcd-2 criterion -----------------------------------------

void criterion6() {
    auto t0 = Clock::now();
    SurfaceLattice r1a(SurfaceKind::Enriques, MatZ{{2}}, NSVecZ{1});
    SurfaceLattice r1b(SurfaceKind::Enriques, MatZ{{4}}, NSVecZ{1});
    SurfaceLattice r2(SurfaceKind::Enriques, MatZ{{2, 0}, {0, -2}}, NSVecZ{1, 0});
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> comp(-5, 5);
    std::uniform_int_distribution<int> podd(0, 4);
    bool pass = true;
    std::string note;
    for (int i = 0; i < 50 && pass; ++i) {
        const SurfaceLattice& lat = (i % 3 == 0) ? r1a : (i % 3 == 1 ? r1b : r2);
        NSVecZ eta(lat.rank());
        for (auto& e : eta) e = comp(rng);
        Int p = 2 * podd(rng) + 1;
        MukaiVector v0 = primitive_isotropic_on_ray(lat, eta, p);
        // postconditions re-checked here
        Int content = numerator(v0.r);
        for (const Rat& e : v0.xi) content = gcd(content, numerator(e));
        content = gcd(content, numerator(Rat(2 * v0.a)));
        if (content < 0) content = -content;
        if (content != 2 || mukai_square(lat, v0) != 0 || !is_integral(lat, v0)) {
            pass = false;
            note = "postcondition failed at instance " + std::to_string(i);
            break;
        }
        // brute-force primitivity: no smaller multiple of e^{eta/p} is integral
        Int m0 = numerator(v0.r);
        Rat eta2 = lat.ns_square(to_q(eta));
        for (Int m = 1; m < m0; ++m) {
            MukaiVector cand;
            cand.r = Rat(m);
            cand.xi.resize(lat.rank());
            for (int j = 0; j < lat.rank(); ++j) cand.xi[j] = Rat(m * eta[j], p);
            cand.a = Rat(m) * eta2 / (2 * Rat(p) * Rat(p));
            if (is_integral(lat, cand)) {
                pass = false;
                note = "smaller integral ray point m=" + m.str() + " at instance " +
                       std::to_string(i);
                break;
            }
        }
    }
    report(6, "gcd-2 criterion on 50 random rays", pass, ms_since(t0), 5000.0, note);
}

// ---- criterion 7: word search ---------------------------------------------

void criterion7() {
    auto t0 = Clock::now();
    SurfaceLattice lat(SurfaceKind::Enriques, MatZ{{4}}, NSVecZ{1});
    MukaiVector v0 = mk(2, {0}, 0);
    auto word = word_search_to_rho(lat, v0, 8, {NSVecZ{1}});
    bool pass = word.has_value() && word->size() <= 2;
    if (pass) {
        LatticeIsometry iso = word_to_isometry(lat, *word);
        pass = iso.apply(v0) == point_class(lat);
    }
    report(7, "word search maps (2,0,0) to rho", pass, ms_since(t0), 1000.0);
}

// ---- criterion 8: decomposition fixture ------------------------------------

void criterion8() {
    auto t0 = Clock::now();
    SurfaceLattice lat(SurfaceKind::K3, MatZ{{2, 0}, {0, -2}}, NSVecZ{1, 0});
    Slice slice(lat, {Rat(0), Rat(0)});
    auto cands = isotropic_decompositions(slice, Int(2), Int(8));
    bool pass = cands.size() == 1;
    if (pass) {
        const auto& c = cands[0];
        pass = c.parts.size() == 2 && c.parts[0].first == 1 && c.parts[1].first == 1 &&
               c.parts[0].second == mk(1, {0, -1}, 0) && c.parts[1].second == mk(1, {0, 1}, 0) &&
               c.cartan == MatQ{{Rat(-2), Rat(2)}, {Rat(2), Rat(-2)}} && c.type_label == "A~1";
    }
    report(8, "isotropic decomposition fixture", pass, ms_since(t0), 5000.0);
}

// ---- criterion 9: worker-count determinism ----------------------------------

void criterion9() {
    auto t0 = Clock::now();
    bool pass = true;
    std::string note;
    auto instances = make_instances();
    int idx = 0;
    for (const auto& inst : instances) {
        if (idx % 4 == 0) {  // a quarter of the fixture-4 instances keeps this quick
            JobConfig cfg;
            cfg.kind = inst.lat.kind();
            cfg.rank = inst.lat.rank();
            cfg.gram = inst.lat.gram();
            cfg.polarization = inst.lat.polarization();
            cfg.gamma = inst.gamma;
            cfg.vectors.emplace("v", inst.v);
            cfg.target = "v";
            cfg.epsilon = 2;
            cfg.region = std::array<Rat, 4>{inst.region.s_min, inst.region.s_max,
                                            inst.region.t2_min, inst.region.t2_max};
            std::string one = cmd_walls(cfg, 1).to_records();
            std::string two = cmd_walls(cfg, 2).to_records();
            std::string eight = cmd_walls(cfg, 8).to_records();
            if (one != two || two != eight) {
                pass = false;
                note = "byte mismatch on instance " + std::to_string(idx);
                break;
            }
        }
        ++idx;
    }
    report(9, "walls reports byte-identical across 1/2/8 workers", pass, ms_since(t0), 60000.0,
           note);
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    if (g_failures) {
        std::cout << g_failures << " criterion(s) FAILED\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}
