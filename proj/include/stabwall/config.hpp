#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "stabwall/enumerate.hpp"

namespace stabwall {

// Parsed job configuration. The on-disk format is line oriented: one
// "key value..." statement per line, '#' starts a comment. Keys:
//
//   kind k3|enriques              surface kind
//   rank N                        NS rank
//   gram a11 .. aNN               N*N integers, row-major
//   H h1 .. hN                    polarization (integers)
//   gamma g1 .. gN                slice twist (rationals, default 0)
//   nodal_policy accept_all|reject_all|explicit
//   nodal_residue b1 .. bN        mod-2 vector, repeatable
//   vector NAME r x1 .. xN a      named Mukai vector, repeatable
//   region s_min s_max t2_min t2_max
//   point s t2                    query point
//   anchor s t2                   chamber anchor point
//   side gieseker|dual
//   r0 K / epsilon 1|2 / n N / depth D / bound B
//   target NAME / other NAME      vector selectors
//   sample s                      envelope sample abscissa, repeatable
//   generator d1 .. dN            tensor generator (integers), repeatable
//   apply step...                 transform word step, repeatable; steps:
//                                 shift | dual | tensor d1..dN |
//                                 twist NAME | etwist NAME
struct JobConfig {
    SurfaceKind kind = SurfaceKind::K3;
    int rank = 0;
    MatZ gram;
    NSVecZ polarization;
    NodalPolicy nodal_policy = NodalPolicy::AcceptAll;
    std::vector<std::vector<int>> nodal_residues;
    NSVecQ gamma;  // empty means zero
    std::map<std::string, MukaiVector> vectors;
    std::optional<std::array<Rat, 4>> region;
    std::optional<std::pair<Rat, Rat>> point;
    std::optional<std::pair<Rat, Rat>> anchor;
    std::string side;  // "gieseker" | "dual" | ""
    Int r0 = 1;
    int epsilon = 2;
    std::optional<Int> n;
    int depth = 8;
    Rat bound = Rat(16);
    std::string target, other;
    std::vector<Rat> samples;
    std::vector<NSVecZ> generators;
    std::vector<std::vector<std::string>> apply_steps;

    bool operator==(const JobConfig& o) const;
};

JobConfig parse_config(const std::string& text);
std::string serialize_config(const JobConfig& cfg);

SurfaceLattice build_lattice(const JobConfig& cfg);
NSVecQ config_gamma(const JobConfig& cfg);
Region config_region(const JobConfig& cfg);
const MukaiVector& config_vector(const JobConfig& cfg, const std::string& name);

// FNV-1a over the canonical serialization; the report's input hash.
std::string config_hash(const JobConfig& cfg);

}  // namespace stabwall
