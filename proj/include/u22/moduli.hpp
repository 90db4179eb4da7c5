#pragma once

#include <array>
#include <optional>
#include <utility>

#include "u22/groebner.hpp"

namespace u22 {

// A point of the 10-dimensional coordinate space carrying the moduli scheme.
// Arbitrary tuples are legal; the rank condition is a queryable predicate.
struct ModuliPoint {
    Rat alpha12, alpha21, beta12, beta21;
    Rat gamma12, gamma21, eps12, eps21;
    Rat pitilde1, pitilde2;

    Rat& coord(int i);
    const Rat& coord(int i) const;

    friend bool operator==(const ModuliPoint& a, const ModuliPoint& b);
};

// Canonical coordinate names, index order used throughout.
const std::array<std::string, 10>& coordinate_names();

// Torus weights (w1, w2) of each coordinate, same index order.
const std::array<std::pair<int, int>, 10>& coordinate_weights();

// pi_i recovered from the tilde coordinate, i in {1,2}.
Rat pi_from_pi_tilde(const ModuliPoint& p, int i);

// All six 2x2 minors of ((a12 a21 b12 b21) / (2e12 2e21 pt1 pt2)) vanish.
bool minors_rank_ok(const ModuliPoint& p);

// The six 2x2 minors as polynomials over the coordinate ring.
RingPtr coordinate_ring();
std::vector<Poly> minor_polynomials();

struct UniversalCurveIdeal {
    RingPtr ring;                  // f1, f2, h1, h2
    std::vector<Poly> generators;  // six equations, LHS - RHS
    Rat a, b12, b21, psi12, psi21, s1, s2, u, pi1, pi2;
};

// The ring k[f1,f2,h1,h2] with the curve order (weights f=2, h=3, ties
// h1 > h2 > f1 > f2).
RingPtr curve_ring();
MonomialOrder curve_order(const RingPtr& r);

UniversalCurveIdeal build_curve_ideal(const ModuliPoint& p);

// Closed formulas for the derived coefficients as polynomials over the
// coordinate ring: keys a, b12, b21, psi12, psi21, s1, s2, u, pi1, pi2.
std::map<std::string, Poly> coefficient_formulas();

// The six equations over `ring` (which must contain f1, f2, h1, h2), with
// each of the ten coordinates replaced by the given image polynomial.
std::vector<Poly> curve_generators_with(
    const RingPtr& ring, const std::map<std::string, Poly>& coord_images);

// True iff the leading-term ideal of the curve ideal's Groebner basis is
// exactly <f1 f2, f1 h2, f2 h1, h1^2, h2^2, h1 h2>.
bool has_standard_basis(const ModuliPoint& p, const GBOptions& opts = {});

struct UniversalCheckKnobs {
    bool flip_a_sign = false;      // negative control
    bool zero_minor_ideal = false; // negative control
};

// Symbolic check: every S-polynomial of the six universal equations reduces
// to a remainder all of whose coefficient polynomials lie in the minor ideal.
bool verify_universal_relations(const GBOptions& opts = {},
                                const UniversalCheckKnobs& knobs = {});

// c -> lambda^{-wt} c; both components must be nonzero.
ModuliPoint apply_action(const std::pair<Rat, Rat>& lambda, const ModuliPoint& p);

// Some lambda with apply_action(lambda, p) == q, when one exists over the
// rationals. Orbits over Q may be finer than over an algebraically closed
// field; absence of a rational witness is reported as nullopt.
std::optional<std::pair<Rat, Rat>> same_orbit(const ModuliPoint& p,
                                              const ModuliPoint& q);

}  // namespace u22
