#pragma once

#include <string>

#include "stabwall/lattice.hpp"

namespace stabwall {

// Mukai vector (r, xi, a) = r + xi + a*rho with rational components.
struct MukaiVector {
    Rat r;
    NSVecQ xi;
    Rat a;

    bool operator==(const MukaiVector& o) const { return r == o.r && xi == o.xi && a == o.a; }
    bool operator!=(const MukaiVector& o) const { return !(*this == o); }
    bool operator<(const MukaiVector& o) const;  // lexicographic on (r, xi, a)
    std::string str() const;
};

MukaiVector operator+(const MukaiVector& a, const MukaiVector& b);
MukaiVector operator-(const MukaiVector& a, const MukaiVector& b);
MukaiVector operator*(const Rat& c, const MukaiVector& v);

MukaiVector zero_vector(const SurfaceLattice& surface);
// rho, the class of a point.
MukaiVector point_class(const SurfaceLattice& surface);

// <v1, v2> = (xi1.xi2) - r1 a2 - r2 a1
Rat mukai_pairing(const SurfaceLattice& surface, const MukaiVector& v1, const MukaiVector& v2);
Rat mukai_square(const SurfaceLattice& surface, const MukaiVector& v);

// e^beta = (1, beta, (beta^2)/2)
MukaiVector exp_class(const SurfaceLattice& surface, const NSVecQ& beta);

// v * e^D  (the lattice action of tensoring by a line bundle of class D)
MukaiVector tensor_exp(const SurfaceLattice& surface, const MukaiVector& v, const NSVecQ& d);

MukaiVector dual(const MukaiVector& v);   // (r, -xi, a)
MukaiVector shift(const MukaiVector& v);  // -v

// Integrality in the Mukai lattice of the surface: on K3 all components are
// integers; on an Enriques surface r and xi are integers, 2a is an integer
// and r == 2a mod 2 (equivalently a - r/2 is an integer).
bool is_integral(const SurfaceLattice& surface, const MukaiVector& v);
void require_integral(const SurfaceLattice& surface, const MukaiVector& v, const char* who);

// Membership in the obstruction set: <u^2> = -2 on K3; on an Enriques surface
// <u^2> = -1, or <u^2> = -2 with xi congruent to a nodal cycle mod 2 (subject
// to the nodal policy).
bool in_delta(const SurfaceLattice& surface, const MukaiVector& u);

// Classification of negative-square classes on an Enriques surface: a stable
// object of odd rank has square -1, of even rank square -2; anything else
// negative cannot be the class of a stable object.
enum class RigidClass { MinusOne, MinusTwo, NotRigid, NotRealizable };
RigidClass rigid_class(const SurfaceLattice& surface, const MukaiVector& v);
std::string rigid_class_name(RigidClass c);

// The primitive integral Mukai vector on the ray Q_{>0} e^{eta/p} of the
// Enriques Mukai lattice, for integral eta and odd p. The result (r, xi, s/2)
// always satisfies gcd(r, xi, s) = 2 and <v^2> = 0.
MukaiVector primitive_isotropic_on_ray(const SurfaceLattice& surface, const NSVecZ& eta,
                                       const Int& p);

}  // namespace stabwall
