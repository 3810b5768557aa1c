#include "stabwall/slice.hpp"

#include <sstream>

namespace stabwall {

Slice::Slice(const SurfaceLattice& surf, NSVecQ g) : surface(&surf), gamma(std::move(g)) {
    if (static_cast<int>(gamma.size()) != surf.rank())
        throw PreconditionError("gamma dimension mismatch");
}

bool SliceForm::operator<(const SliceForm& o) const {
    if (r != o.r) return r < o.r;
    if (d != o.d) return d < o.d;
    if (D != o.D) return D < o.D;
    return a < o.a;
}

std::string SliceForm::str() const {
    std::ostringstream os;
    os << "(" << rat_str(r) << "," << rat_str(d) << ",[";
    for (size_t i = 0; i < D.size(); ++i) {
        if (i) os << ",";
        os << rat_str(D[i]);
    }
    os << "]," << rat_str(a) << ")";
    return os.str();
}

SliceForm slice_form(const Slice& slice, const MukaiVector& v) {
    const SurfaceLattice& lat = slice.lat();
    NSVecQ neg_gamma = slice.gamma;
    for (Rat& e : neg_gamma) e = -e;
    MukaiVector untwisted = tensor_exp(lat, v, neg_gamma);
    SliceForm f;
    f.r = untwisted.r;
    f.d = lat.degree(untwisted.xi) / lat.h2();
    f.D = untwisted.xi;
    for (int i = 0; i < lat.rank(); ++i) f.D[i] -= f.d * Rat(lat.polarization()[i]);
    f.a = untwisted.a;
    return f;
}

MukaiVector reconstruct(const Slice& slice, const SliceForm& f) {
    const SurfaceLattice& lat = slice.lat();
    MukaiVector plain;
    plain.r = f.r;
    plain.xi = f.D;
    for (int i = 0; i < lat.rank(); ++i) plain.xi[i] += f.d * Rat(lat.polarization()[i]);
    plain.a = f.a;
    return tensor_exp(lat, plain, slice.gamma);
}

SlicePoint::SlicePoint(QuadExt s_, QuadExt t2_) : s(std::move(s_)), t2(std::move(t2_)) {
    if (t2.sign() <= 0) throw PreconditionError("slice point needs t^2 > 0");
}

ChargeValue charge(const Slice& slice, const SliceForm& f, const SlicePoint& pt) {
    const Rat& h = slice.h2();
    QuadExt s = pt.s, t2 = pt.t2;
    // Z = <e^{(s+it)H}, r + dH + D + a rho> after cancelling the gamma twist:
    //   Re = d s (H^2) - a - r (s^2 - t^2)(H^2)/2,  Im/t = (H^2)(d - r s).
    QuadExt re = QuadExt(f.d) * s * QuadExt(h) - QuadExt(f.a) -
                 QuadExt(f.r) * (s * s - t2) * QuadExt(h / 2);
    QuadExt imt = QuadExt(h) * (QuadExt(f.d) - QuadExt(f.r) * s);
    return ChargeValue{re, imt};
}

ChargeValue charge(const Slice& slice, const MukaiVector& v, const SlicePoint& pt) {
    return charge(slice, slice_form(slice, v), pt);
}

bool charge_positivity(const SurfaceLattice& surface, const NSVecQ& beta, const NSVecQ& omega) {
    // Re e^{beta+i omega} = (1, beta, (beta^2 - omega^2)/2),
    // Im e^{beta+i omega} = (0, omega, (beta.omega)).
    MukaiVector re{Rat(1), beta, (surface.ns_square(beta) - surface.ns_square(omega)) / 2};
    MukaiVector im{Rat(0), omega, surface.ns_inner(beta, omega)};
    Rat g11 = mukai_square(surface, re);
    Rat g22 = mukai_square(surface, im);
    Rat g12 = mukai_pairing(surface, re, im);
    return g11 > 0 && g11 * g22 - g12 * g12 > 0;
}

int phase_cross(const Slice& slice, const MukaiVector& v1, const MukaiVector& v2,
                const SlicePoint& pt) {
    ChargeValue z1 = charge(slice, v1, pt);
    ChargeValue z2 = charge(slice, v2, pt);
    if (z1.re.sign() == 0 && z1.im_over_t.sign() == 0 && z2.re.sign() == 0 &&
        z2.im_over_t.sign() == 0)
        throw PreconditionError("degenerate comparison: both charges vanish");
    QuadExt cross = z1.re * z2.im_over_t - z1.im_over_t * z2.re;
    return cross.sign();
}

bool Wall::operator==(const Wall& o) const {
    if (kind != o.kind) return false;
    switch (kind) {
        case Kind::VerticalLine: return line_s == o.line_s;
        case Kind::Circle: return center_s == o.center_s && radius2 == o.radius2;
        default: return true;
    }
}

bool Wall::operator<(const Wall& o) const {
    if (kind != o.kind) return static_cast<int>(kind) < static_cast<int>(o.kind);
    switch (kind) {
        case Kind::VerticalLine: return line_s < o.line_s;
        case Kind::Circle:
            if (center_s != o.center_s) return center_s < o.center_s;
            return radius2 < o.radius2;
        default: return false;
    }
}

std::string Wall::str() const {
    switch (kind) {
        case Kind::Everywhere: return "everywhere";
        case Kind::Empty: return "empty";
        case Kind::VerticalLine: return "line s=" + rat_str(line_s);
        case Kind::Circle:
            return "circle center=" + rat_str(center_s) + " radius2=" + rat_str(radius2);
    }
    return "?";
}

Wall wall_from_forms(const Rat& h2, const SliceForm& fv, const SliceForm& fu) {
    Rat a_coef = (fv.r * fu.d - fu.r * fv.d) * h2 / 2;
    Rat b_coef = fu.r * fv.a - fv.r * fu.a;
    Rat c_coef = fv.d * fu.a - fu.d * fv.a;
    Wall w;
    if (a_coef != 0) {
        Rat center = -b_coef / (2 * a_coef);
        Rat radius2 = center * center - c_coef / a_coef;
        if (radius2 > 0) {
            w.kind = Wall::Kind::Circle;
            w.center_s = center;
            w.radius2 = radius2;
        } else {
            w.kind = Wall::Kind::Empty;
        }
    } else if (b_coef != 0) {
        w.kind = Wall::Kind::VerticalLine;
        w.line_s = -c_coef / b_coef;
    } else {
        w.kind = (c_coef == 0) ? Wall::Kind::Everywhere : Wall::Kind::Empty;
    }
    return w;
}

Wall wall_between(const Slice& slice, const MukaiVector& v, const MukaiVector& u) {
    return wall_from_forms(slice.h2(), slice_form(slice, v), slice_form(slice, u));
}

bool wall_contains(const Wall& wall, const SlicePoint& pt) {
    switch (wall.kind) {
        case Wall::Kind::Everywhere: return true;
        case Wall::Kind::Empty: return false;
        case Wall::Kind::VerticalLine: return pt.s == QuadExt(wall.line_s);
        case Wall::Kind::Circle: {
            QuadExt d = pt.s - QuadExt(wall.center_s);
            return d * d + pt.t2 == QuadExt(wall.radius2);
        }
    }
    return false;
}

MukaiVector canonical_ray(const MukaiVector& v) {
    Int den = 1;
    auto lcm_den = [&den](const Rat& q) { den = den / gcd(den, denominator(q)) * denominator(q); };
    lcm_den(v.r);
    for (const Rat& e : v.xi) lcm_den(e);
    lcm_den(v.a);
    MukaiVector w = Rat(den) * v;
    Int content = 0;
    auto acc = [&content](const Rat& q) { content = gcd(content, numerator(q)); };
    acc(w.r);
    for (const Rat& e : w.xi) acc(e);
    acc(w.a);
    if (content == 0) throw PreconditionError("cannot canonicalize the zero vector");
    if (content < 0) content = -content;
    w = Rat(Int(1), content) * w;
    int lead = sign(w.r);
    if (lead == 0)
        for (const Rat& e : w.xi)
            if ((lead = sign(e)) != 0) break;
    if (lead == 0) lead = sign(w.a);
    if (lead < 0) w = Rat(-1) * w;
    return w;
}

MukaiVector xi_invariant(const SurfaceLattice& surface, const NSVecQ& beta, const NSVecQ& omega,
                         const MukaiVector& v) {
    MukaiVector re_e{Rat(1), beta, (surface.ns_square(beta) - surface.ns_square(omega)) / 2};
    MukaiVector im_e{Rat(0), omega, surface.ns_inner(beta, omega)};
    Rat re_z = mukai_pairing(surface, re_e, v);
    Rat im_z = mukai_pairing(surface, im_e, v);
    if (re_z == 0 && im_z == 0) throw PreconditionError("xi invariant undefined: Z(v) = 0");
    // Im(e / Z) = (Im e * Re Z - Re e * Im Z)/|Z|^2; the positive scale drops.
    MukaiVector cls = (re_z * im_e) - (im_z * re_e);
    return canonical_ray(cls);
}

MukaiVector xi_invariant_slice(const Slice& slice, const Rat& s, const Rat& t2,
                               const MukaiVector& v) {
    const SurfaceLattice& lat = slice.lat();
    NSVecQ beta = slice.gamma;
    for (int i = 0; i < lat.rank(); ++i) beta[i] += s * Rat(lat.polarization()[i]);
    // With omega = tH the class Im(e/Z) is t * (Im1 * ReZ - Re e * (ImZ/t)),
    // where Im1 = (0, H, (beta.H)); so the projective class is rational in
    // (s, t^2) and the scalar t > 0 can be dropped.
    SlicePoint pt = SlicePoint::rational(s, t2);
    ChargeValue z = charge(slice, v, pt);
    Rat re_z = z.re.as_rational();
    Rat imt_z = z.im_over_t.as_rational();
    if (re_z == 0 && imt_z == 0) throw PreconditionError("xi invariant undefined: Z(v) = 0");
    MukaiVector im1{Rat(0), to_q(lat.polarization()), lat.degree(beta)};
    MukaiVector re_e{Rat(1), beta, (lat.ns_square(beta) - t2 * lat.h2()) / 2};
    MukaiVector cls = (re_z * im1) - (imt_z * re_e);
    return canonical_ray(cls);
}

}  // namespace stabwall
