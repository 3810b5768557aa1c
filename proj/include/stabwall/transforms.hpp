#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stabwall/mukai.hpp"

namespace stabwall {

// One generator of the autoequivalence group, recorded as provenance on an
// isometry word. Words are written in composition order: the last entry acts
// first, like a product of matrices.
struct GenStep {
    enum class Kind { SphericalTwist, ExceptionalTwist, Tensor, Shift, Dual };
    Kind kind;
    MukaiVector cls;  // twist class (SphericalTwist / ExceptionalTwist)
    NSVecQ divisor;   // tensor divisor (Tensor)

    std::string str() const;
};

// A pairing-preserving linear map of the Mukai lattice, acting on coordinates
// (r, xi_1..xi_n, a), with optional generator-word provenance.
class LatticeIsometry {
public:
    static LatticeIsometry identity(const SurfaceLattice& surface);
    // Verifies M^T G M = G for the Mukai Gram G before accepting the matrix.
    static LatticeIsometry from_matrix(const SurfaceLattice& surface, MatQ m,
                                       std::vector<GenStep> word = {});

    const MatQ& matrix() const { return m_; }
    const std::vector<GenStep>& word() const { return word_; }
    int dim() const { return static_cast<int>(m_.size()); }

    MukaiVector apply(const MukaiVector& v) const;
    // (*this) after `inner`: words concatenate as [this.word, inner.word].
    LatticeIsometry compose(const LatticeIsometry& inner) const;
    LatticeIsometry inverse() const;
    bool is_identity() const;
    // Maps integral vectors to integral vectors (entries are integers).
    bool is_integral_matrix() const;

private:
    LatticeIsometry(const SurfaceLattice* surface, MatQ m, std::vector<GenStep> word)
        : surface_(surface), m_(std::move(m)), word_(std::move(word)) {}
    const SurfaceLattice* surface_;
    MatQ m_;
    std::vector<GenStep> word_;
};

// Mukai Gram matrix in coordinates (r, xi, a).
MatQ mukai_gram(const SurfaceLattice& surface);

// Reflection v -> v + <v,a> a in a (-2)-class; an involution fixing a-perp.
LatticeIsometry spherical_twist(const SurfaceLattice& surface, const MukaiVector& a);
// Reflection v -> v + 2 <v,b> b in a (-1)-class (Enriques only); an involution.
LatticeIsometry exceptional_twist(const SurfaceLattice& surface, const MukaiVector& b);
LatticeIsometry tensor_isometry(const SurfaceLattice& surface, const NSVecQ& d);
LatticeIsometry shift_isometry(const SurfaceLattice& surface);
LatticeIsometry dual_map(const SurfaceLattice& surface);

// Renormalization of a transported parameter pair:
// e^{beta'+i omega'} = Phi(e^{beta+i omega}) / (-<e^{beta+i omega}, v0>)
// for isotropic v0 with nonvanishing denominator; the result must be of
// exponential shape, and (omega'^2) > 0 is verified.
std::pair<NSVecQ, NSVecQ> fm_normalize(const SurfaceLattice& surface, const LatticeIsometry& phi,
                                       const MukaiVector& v0, const NSVecQ& beta,
                                       const NSVecQ& omega);

// Bounded bidirectional BFS over the group generated by the exceptional twist
// in (1, 0, 1/2), tensoring by the given divisors (and their negatives), and
// the shift, looking for a word mapping v0 to rho. v0 must be integral,
// isotropic, with gcd(r, xi, 2a) = 2. Returns the shortest word (composition
// order) with deterministic tie-breaking, or nullopt within `depth`.
std::optional<std::vector<GenStep>> word_search_to_rho(const SurfaceLattice& surface,
                                                       const MukaiVector& v0, int depth,
                                                       const std::vector<NSVecZ>& tensor_generators);

// Applies a word (composition order: last element first) to a vector.
MukaiVector apply_word(const SurfaceLattice& surface, const std::vector<GenStep>& word,
                       const MukaiVector& v);
LatticeIsometry word_to_isometry(const SurfaceLattice& surface, const std::vector<GenStep>& word);

}  // namespace stabwall
