#include "stabwall/example_suite.hpp"

namespace stabwall {

ExampleSuiteResult run_example_suite(const Int& n) {
    if (n <= 0 || n % 2 != 0)
        throw PreconditionError("the example family needs a positive even n");
    ExampleSuiteResult res;
    res.all_pass = true;
    auto check = [&](const std::string& name, bool ok, const std::string& detail) {
        res.checks.push_back({name, ok, detail});
        res.all_pass = res.all_pass && ok;
    };

    Int h2 = n + 2;
    SurfaceLattice lat(SurfaceKind::K3, MatZ{{h2}}, NSVecZ{1});
    Slice slice(lat, NSVecQ{Rat(0)});
    const Rat h(h2);
    NSVecQ H{Rat(1)};
    NSVecQ minus_2h{Rat(-2)};

    MukaiVector ideal{Rat(1), NSVecQ{Rat(0)}, Rat(-n)};
    MukaiVector u = exp_class(lat, minus_2h);

    // (a) the wall against e^{-2H} and its marked point (-1, 2/(H^2))
    Wall wall = wall_between(slice, ideal, u);
    res.wall = wall;
    Rat center = -1 - Rat(n) / (2 * h);
    Rat radius2 = center * center - 2 * Rat(n) / h;
    bool wall_ok = wall.kind == Wall::Kind::Circle && wall.center_s == center &&
                   wall.radius2 == radius2;
    check("wall-locus", wall_ok, wall.str());
    SlicePoint marked = SlicePoint::rational(Rat(-1), Rat(2) / h);
    check("wall-marked-point", wall_contains(wall, marked),
          "(-1," + rat_str(Rat(2) / h) + ")");

    // (b) the lambda classification: the marked point lies inside-or-on the
    // phase-alignment circle of e^{lambda H} exactly when
    // (lambda+1)(lambda (H^2)/2 + n) + lambda >= 0.
    bool lambda_ok = true;
    for (Int lam = -8; lam <= -1; ++lam) {
        Rat l(lam);
        Rat at_point = Rat(2) / h + (Rat(-1) - l) * (Rat(-1) - 2 * Rat(n) / (h * l));
        Rat classifier = (l + 1) * (l * h / 2 + Rat(n)) + l;
        lambda_ok = lambda_ok && ((at_point <= 0) == (classifier >= 0));
    }
    check("lambda-classification", lambda_ok, "integer lambda in [-8,-1]");

    // (c) Mukai-vector ledger
    MukaiVector v_o = MukaiVector{Rat(1), NSVecQ{Rat(0)}, Rat(1)};  // v(O_X)
    MukaiVector v_o_mh = tensor_exp(lat, v_o, NSVecQ{Rat(-1)});     // v(O(-H))
    MukaiVector v_idual_m2h =
        tensor_exp(lat, MukaiVector{Rat(1), NSVecQ{Rat(0)}, Rat(0)}, minus_2h);
    MukaiVector lhs = Rat(2) * v_o_mh - v_idual_m2h;
    check("ideal-extension-balance", lhs == ideal,
          lhs.str() + " = 2 v(O(-H)) - v(I_x^dual(-2H))");

    Rat half_n(n, 2);
    MukaiVector v_ex{half_n + 1, H, Rat(1)};
    MukaiVector v_e0{half_n + 2, NSVecQ{Rat(-1)}, Rat(1)};
    // evaluation triangle: -v(I_x^dual(-2H)) = v(E_x(-H)) - (n/2+2) v(O(-H))
    MukaiVector tri_lhs = shift(v_idual_m2h);
    MukaiVector tri_rhs = tensor_exp(lat, v_ex, NSVecQ{Rat(-1)}) - (half_n + 2) * v_o_mh;
    check("evaluation-triangle", tri_lhs == tri_rhs, tri_lhs.str());
    // boundary triangle: v(F_x) = (n/2+2) v(E_0) - rho, of rank (n/2+2)^2
    MukaiVector v_fx = (half_n + 2) * v_e0 - point_class(lat);
    check("boundary-triangle-rank", v_fx.r == (half_n + 2) * (half_n + 2), v_fx.str());
    // transformed extension: 2 v(E_0) - rho has rank n+4 and dual (n+4, 2H, 1)
    MukaiVector v_e = Rat(2) * v_e0 - point_class(lat);
    MukaiVector v_e_dual = dual(v_e);
    bool e_ok = v_e.r == Rat(n + 4) && v_e_dual == MukaiVector{Rat(n + 4), NSVecQ{Rat(2)}, Rat(1)};
    check("transformed-extension", e_ok, v_e_dual.str());

    // (d) sphericality and isotropy
    check("spherical-E0", mukai_square(lat, v_e0) == -2, rat_str(mukai_square(lat, v_e0)));
    check("isotropic-Ex", mukai_square(lat, v_ex) == 0, rat_str(mukai_square(lat, v_ex)));

    return res;
}

}  // namespace stabwall
