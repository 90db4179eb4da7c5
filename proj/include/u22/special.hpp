#pragma once

#include <optional>

#include "u22/groebner.hpp"
#include "u22/moduli.hpp"

namespace u22 {

// Image of the contracted-divisor point at parameters (beta1, phi):
// the closed-form coordinate list with the tilde coordinates converted.
ModuliPoint blowdown_image(const Rat& beta1, const Rat& phi);

// The distinguished two-branch point: all blowdown images normalize to it.
ModuliPoint c0_point();

// Symbolic identity in the parameter ring: acting by (b1*phi, b1*phi^2)
// carries blowdown_image(b1, phi) to the constant point. With
// flipped_convention the inverse exponent convention is tried instead (it
// must fail; used as a sign-fixing control).
bool verify_blowdown_orbit(bool flipped_convention = false);

struct C0Report {
    bool branches_found = false;
    bool ideal_matches = false;
    bool colength_is_3 = false;
    bool local_at_one_point = false;
    // Parametrization coefficients: f-quadratic branch through each marked
    // point, as polynomials in the branch parameter.
    std::vector<Poly> branch1, branch2;  // images of f1, f2, h1, h2
    std::string details;
    bool ok() const {
        return branches_found && ideal_matches && colength_is_3 &&
               local_at_one_point;
    }
};

// Finds the two rational branches through the distinguished point by an
// undetermined-coefficient solve, and checks: the curve ideal equals the
// intersection of the branch kernels, and the branches meet in a length-3
// subscheme supported at a single point.
C0Report verify_c0_geometry(const GBOptions& opts = {});

// The coordinate-plane probe for the locus alpha12=beta12=eps12=pitilde1=0:
// after the substitutions f2 = a21 x + g21, h2 = b21 y + e21, f1 = z + g12,
// h1 = x z, the transformed equations match the three displayed relations,
// and the second component lies on the last one exactly modulo the surviving
// minor. drop_minor skips the minor relation (the check must then fail).
bool verify_p2_probe(bool drop_minor = false);

// The relations of the one-pointed fibration: with the stated constants the
// six generators form their own Groebner basis over the parameter ring.
// perturb_beta doubles as the negative control.
bool verify_weierstrass_relations(const GBOptions& opts = {},
                                  bool perturb_beta = false);

// The six fibration generators over {f,h,k,g} + parameters, and the order
// making the intended leading terms leading.
std::pair<std::vector<Poly>, MonomialOrder> weierstrass_fibration(
    bool perturb_beta = false);

// Specialized fibration over plain rationals for a choice of parameters.
std::pair<std::vector<Poly>, MonomialOrder> weierstrass_fibration_at(
    const std::map<std::string, Rat>& qs);

}  // namespace u22
