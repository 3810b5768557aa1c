#pragma once

#include <set>
#include <vector>

#include "stabwall/numeric.hpp"

namespace stabwall {

enum class SurfaceKind { K3, Enriques };
enum class NodalPolicy { ExplicitSet, AcceptAll, RejectAll };

using NSVecZ = std::vector<Int>;
using NSVecQ = std::vector<Rat>;
using MatZ = std::vector<std::vector<Int>>;
using MatQ = std::vector<std::vector<Rat>>;

NSVecQ to_q(const NSVecZ& v);

// Signature of a symmetric rational matrix as (#positive, #negative) inertia
// indices, computed by exact symmetric Gaussian elimination. Throws on a
// degenerate (singular) form.
std::pair<int, int> symmetric_signature(const MatQ& m);

// Numerical Neron-Severi lattice of a K3 or Enriques surface together with a
// distinguished nef-and-big class H. The Gram matrix must be even symmetric of
// signature (1, rank-1).
class SurfaceLattice {
public:
    SurfaceLattice(SurfaceKind kind, MatZ gram, NSVecZ polarization,
                   NodalPolicy nodal_policy = NodalPolicy::AcceptAll,
                   std::vector<std::vector<int>> nodal_residues = {});

    SurfaceKind kind() const { return kind_; }
    int rank() const { return rank_; }
    const MatZ& gram() const { return gram_; }
    const NSVecZ& polarization() const { return h_; }
    NodalPolicy nodal_policy() const { return nodal_policy_; }
    const std::set<std::vector<int>>& nodal_residues() const { return nodal_residues_; }

    Rat ns_inner(const NSVecQ& a, const NSVecQ& b) const;
    Rat ns_square(const NSVecQ& a) const { return ns_inner(a, a); }
    Rat degree(const NSVecQ& a) const;  // (a . H)
    const Rat& h2() const { return h2_; }

    // gcd over the basis of (e_i . H); generates the image of ( . H).
    const Int& degree_gcd() const { return degree_gcd_; }
    // delta = (1/(H^2)) min{ (D,H) > 0 | D in NS }.
    Rat delta_min_degree() const { return Rat(degree_gcd_) / h2_; }

    // Whether an integral class xi satisfies the mod-2 nodal congruence,
    // subject to the configured policy.
    bool nodal_obstructs(const NSVecZ& xi) const;

    // Integral xi with klo <= (xi.H) <= khi and -(perp(xi - center)^2) <= cap,
    // where perp is the H-orthogonal component. Exact; complete.
    std::vector<NSVecZ> enumerate_degree_window(const NSVecQ& center, const Int& klo,
                                                const Int& khi, const Rat& cap) const;

    // -(perp(x)^2) = (x.H)^2/(H^2) - (x^2), the positive semidefinite
    // "distance from the H-axis" form (kernel spanned by H).
    Rat perp_norm(const NSVecQ& x) const;

private:
    SurfaceKind kind_;
    int rank_;
    MatZ gram_;
    NSVecZ h_;
    Rat h2_;
    Int degree_gcd_;
    NodalPolicy nodal_policy_;
    std::set<std::vector<int>> nodal_residues_;
};

// All x in Z^n with (x - center)^T P (x - center) <= bound for a positive
// definite rational form P. Exact Fincke-Pohst style recursion; output in
// lexicographic order.
std::vector<NSVecZ> enumerate_ellipsoid(const MatQ& p, const NSVecQ& center, const Rat& bound);

}  // namespace stabwall
