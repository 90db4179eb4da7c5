#pragma once

#include <optional>
#include <string>
#include <vector>

#include "u22/germ.hpp"

namespace u22 {

enum class BranchType { Smooth, Node, Cusp };
enum class SpecialIso { None, Ccusp11, Ccusp01, Ccusp10, C0 };
enum class Verdict { Stable, Unstable };

std::string to_string(BranchType b);
std::string to_string(SpecialIso s);
std::string to_string(Verdict v);

struct SupportPoint {
    BranchType on_c1 = BranchType::Smooth;
    BranchType on_c2 = BranchType::Smooth;
};

// Structured description of a curve in the moduli space: either irreducible
// (with an optional singularity tag) or two components with intersection
// subscheme data.
struct CurveDescription {
    bool irreducible = true;

    // Irreducible case.
    bool weierstrass_p1 = false;  // h^1(2p1) != 0
    std::string germ_tag;         // "" = smooth; otherwise a catalog germ

    // Two-component case.
    int g1 = 0, g2 = 0;
    int xi_length = 0;
    std::vector<SupportPoint> support;
    bool xi_divisor_equiv_2p1 = false;  // meaningful when g1=1, xi smooth
    bool restriction_constant = false;  // meaningful for the nodal case
    SpecialIso special_iso = SpecialIso::None;
};

struct CohomInvariants {
    int h1_2p1 = 0, h1_3p1 = 0, h1_3p2 = 0, h1_p1p2 = 0;
    long max_e = 0;
};

struct StabilityVerdict {
    Verdict i = Verdict::Stable;
    Verdict ii = Verdict::Stable;
    Verdict iii = Verdict::Stable;
};

bool validate(const CurveDescription& d);

// The explicit decision tree over the description fields.
StabilityVerdict classify_geometric(const CurveDescription& d);

// Cohomological data and the worst singularity e-value, tabulated per case;
// the e-values delegate to the germ catalog. Throws ValidationError("not
// tabulated...") outside the catalog.
CohomInvariants invariants_of(const CurveDescription& d);

// The h^1/e criterion for stabilities (ii) and (iii).
std::pair<Verdict, Verdict> classify_invariant(const CohomInvariants& inv);

// Catalog-level contraction stability.
bool is_Z_stable(const CurveDescription& d);

// Every valid description shape, for exhaustive consistency checks.
std::vector<CurveDescription> full_catalog();

// Germ tags accepted for irreducible curves.
const std::vector<std::string>& irreducible_germ_tags();

}  // namespace u22
