#pragma once

#include <string>
#include <vector>

#include "u22/rational.hpp"

namespace u22 {

// A reduced curve-singularity germ, presented as a subalgebra of a product
// of truncated power-series rings. The algebra is generated by `gens`
// together with the constant (1,...,1) and the conductor tails
// (0,...,t_i^{c_i+k},...,0).
struct Germ {
    int branches = 1;
    int trunc = 0;  // N: coefficients live at exponents 0..N-1
    // generator -> branch -> coefficient vector (length trunc)
    std::vector<std::vector<std::vector<Rat>>> gens;
    std::vector<int> conductors;
    bool quasihomogeneous = true;
    std::string name;
};

struct GermInvariants {
    long delta = 0;
    long r = 1;
    long t = 1;
    long e = 0;
};

// Catalog constructors. Parametric entries take n; others ignore it.
// Names: line, node, cusp, tacnode, elliptic_nfold (n >= 2),
// coordinate_cross (n >= 2), genus2_cusp_345, genus2_cusp_25,
// planar_cusp_line, cusp_line_Ccusp10, osculating_P1s,
// two_cusps_transversal, cusp_line_transversal.
Germ germ_catalog(const std::string& name, long n = 0);
std::vector<std::string> germ_catalog_names();

// Transversal union: branches concatenate, functions agree at the origin.
Germ transversal_union(const Germ& a, const Germ& b);

// dim(normalization / algebra), stabilized against truncation (error if the
// germ's truncation is too small for the value to have settled).
long delta(const Germ& g);

// dim(omega / m*omega) for the dualizing module presented by residue
// conditions on Laurent-form windows; stabilized like delta.
long t_invariant(const Germ& g);

// 2*delta - r + t; requires the quasihomogeneous flag.
long e_invariant(const Germ& g);

GermInvariants germ_invariants(const Germ& g);

// Value semigroup membership (one-branch germs): attained valuations in
// [0, trunc). Used by the Gorenstein cross-check.
std::vector<long> one_branch_valuations(const Germ& g);

}  // namespace u22
