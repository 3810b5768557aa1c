#include "stabwall/mukai.hpp"

#include <sstream>

namespace stabwall {

bool MukaiVector::operator<(const MukaiVector& o) const {
    if (r != o.r) return r < o.r;
    if (xi != o.xi) return xi < o.xi;
    return a < o.a;
}

std::string MukaiVector::str() const {
    std::ostringstream os;
    os << "(" << rat_str(r) << ",[";
    for (size_t i = 0; i < xi.size(); ++i) {
        if (i) os << ",";
        os << rat_str(xi[i]);
    }
    os << "]," << rat_str(a) << ")";
    return os.str();
}

namespace {
void check_same_dim(const MukaiVector& a, const MukaiVector& b) {
    if (a.xi.size() != b.xi.size())
        throw PreconditionError("Mukai vectors over lattices of different rank");
}
}  // namespace

MukaiVector operator+(const MukaiVector& a, const MukaiVector& b) {
    check_same_dim(a, b);
    MukaiVector out{a.r + b.r, a.xi, a.a + b.a};
    for (size_t i = 0; i < out.xi.size(); ++i) out.xi[i] += b.xi[i];
    return out;
}

MukaiVector operator-(const MukaiVector& a, const MukaiVector& b) {
    check_same_dim(a, b);
    MukaiVector out{a.r - b.r, a.xi, a.a - b.a};
    for (size_t i = 0; i < out.xi.size(); ++i) out.xi[i] -= b.xi[i];
    return out;
}

MukaiVector operator*(const Rat& c, const MukaiVector& v) {
    MukaiVector out{c * v.r, v.xi, c * v.a};
    for (Rat& e : out.xi) e *= c;
    return out;
}

MukaiVector zero_vector(const SurfaceLattice& surface) {
    return MukaiVector{Rat(0), NSVecQ(surface.rank(), Rat(0)), Rat(0)};
}

MukaiVector point_class(const SurfaceLattice& surface) {
    return MukaiVector{Rat(0), NSVecQ(surface.rank(), Rat(0)), Rat(1)};
}

Rat mukai_pairing(const SurfaceLattice& surface, const MukaiVector& v1, const MukaiVector& v2) {
    if (static_cast<int>(v1.xi.size()) != surface.rank() ||
        static_cast<int>(v2.xi.size()) != surface.rank())
        throw PreconditionError("Mukai vector dimension mismatch");
    return surface.ns_inner(v1.xi, v2.xi) - v1.r * v2.a - v2.r * v1.a;
}

Rat mukai_square(const SurfaceLattice& surface, const MukaiVector& v) {
    return mukai_pairing(surface, v, v);
}

MukaiVector exp_class(const SurfaceLattice& surface, const NSVecQ& beta) {
    return MukaiVector{Rat(1), beta, surface.ns_square(beta) / 2};
}

MukaiVector tensor_exp(const SurfaceLattice& surface, const MukaiVector& v, const NSVecQ& d) {
    if (static_cast<int>(d.size()) != surface.rank())
        throw PreconditionError("twist divisor dimension mismatch");
    MukaiVector out = v;
    for (int i = 0; i < surface.rank(); ++i) out.xi[i] += v.r * d[i];
    out.a = v.a + surface.ns_inner(v.xi, d) + v.r * surface.ns_square(d) / 2;
    return out;
}

MukaiVector dual(const MukaiVector& v) {
    MukaiVector out = v;
    for (Rat& e : out.xi) e = -e;
    return out;
}

MukaiVector shift(const MukaiVector& v) { return Rat(-1) * v; }

bool is_integral(const SurfaceLattice& surface, const MukaiVector& v) {
    auto is_int = [](const Rat& q) { return denominator(q) == 1; };
    for (const Rat& e : v.xi)
        if (!is_int(e)) return false;
    if (!is_int(v.r)) return false;
    if (surface.kind() == SurfaceKind::K3) return is_int(v.a);
    Rat two_a = 2 * v.a;
    if (!is_int(two_a)) return false;
    Int parity = numerator(v.r) - numerator(two_a);
    return parity % 2 == 0;
}

void require_integral(const SurfaceLattice& surface, const MukaiVector& v, const char* who) {
    if (!is_integral(surface, v))
        throw PreconditionError(std::string(who) + ": non-integral Mukai vector " + v.str());
}

bool in_delta(const SurfaceLattice& surface, const MukaiVector& u) {
    require_integral(surface, u, "in_delta");
    Rat sq = mukai_square(surface, u);
    if (surface.kind() == SurfaceKind::K3) return sq == -2;
    if (sq == -1) return true;
    if (sq != -2) return false;
    NSVecZ xi(u.xi.size());
    for (size_t i = 0; i < u.xi.size(); ++i) xi[i] = numerator(u.xi[i]);
    return surface.nodal_obstructs(xi);
}

RigidClass rigid_class(const SurfaceLattice& surface, const MukaiVector& v) {
    if (surface.kind() != SurfaceKind::Enriques)
        throw PreconditionError("rigid_class applies to Enriques surfaces");
    require_integral(surface, v, "rigid_class");
    Rat sq = mukai_square(surface, v);
    if (sq >= 0) return RigidClass::NotRigid;
    bool r_odd = (numerator(v.r) % 2) != 0;
    if (sq == -1 && r_odd) return RigidClass::MinusOne;
    if (sq == -2 && !r_odd) return RigidClass::MinusTwo;
    return RigidClass::NotRealizable;
}

std::string rigid_class_name(RigidClass c) {
    switch (c) {
        case RigidClass::MinusOne: return "minus-one";
        case RigidClass::MinusTwo: return "minus-two";
        case RigidClass::NotRigid: return "not-rigid";
        case RigidClass::NotRealizable: return "not-realizable-by-stable-object";
    }
    return "?";
}

MukaiVector primitive_isotropic_on_ray(const SurfaceLattice& surface, const NSVecZ& eta,
                                       const Int& p) {
    if (surface.kind() != SurfaceKind::Enriques)
        throw PreconditionError("primitive_isotropic_on_ray applies to Enriques surfaces");
    if (p == 0 || p % 2 == 0) throw PreconditionError("p must be an odd integer");
    if (static_cast<int>(eta.size()) != surface.rank())
        throw PreconditionError("eta dimension mismatch");
    Int pp = p < 0 ? Int(-p) : p;

    // m e^{eta/p} = (m, m eta/p, m (eta^2)/(2 p^2)) is integral iff
    //   p | m*gcd(eta),  p^2 | m*(eta^2),  and m == m (eta^2)/p^2 mod 2.
    // The valid m form a subgroup of Z; the generator is the primitive point.
    Int g = 0;
    for (const Int& e : eta) g = gcd(g, e);
    Rat eta2 = surface.ns_square(to_q(eta));
    Int eta2_int = numerator(eta2);  // even lattice, integral eta

    Int m1 = (g == 0) ? Int(1) : pp / gcd(pp, g);
    Int p2 = pp * pp;
    Int m2 = (eta2_int == 0) ? Int(1) : p2 / gcd(p2, abs(eta2_int));
    Int m = m1 / gcd(m1, m2) * m2;  // lcm
    auto parity_ok = [&](const Int& mm) {
        Int s = mm * eta2_int / p2;  // = 2a, integral by construction
        return (mm - s) % 2 == 0;
    };
    if (!parity_ok(m)) m *= 2;

    MukaiVector v;
    v.r = Rat(m);
    v.xi.assign(surface.rank(), Rat(0));
    for (int i = 0; i < surface.rank(); ++i) v.xi[i] = Rat(m * eta[i], pp);
    v.a = Rat(m * eta2_int, 2 * p2);
    if (!is_integral(surface, v)) throw InvariantError("ray point failed integrality");
    if (mukai_square(surface, v) != 0) throw InvariantError("ray point not isotropic");

    // gcd(r, xi, s) with s = 2a must be exactly 2.
    Int content = numerator(v.r);
    for (const Rat& e : v.xi) content = gcd(content, numerator(e));
    content = gcd(content, numerator(Rat(2 * v.a)));
    if (content < 0) content = -content;
    if (content != 2) throw InvariantError("primitive isotropic ray point has content != 2");
    return v;
}

}  // namespace stabwall
