#include "u22/catalog.hpp"

#include <algorithm>
#include <map>

#include "u22/errors.hpp"

namespace u22 {

std::string to_string(BranchType b) {
    switch (b) {
        case BranchType::Smooth: return "smooth";
        case BranchType::Node: return "node";
        case BranchType::Cusp: return "cusp";
    }
    return "?";
}

std::string to_string(SpecialIso s) {
    switch (s) {
        case SpecialIso::None: return "";
        case SpecialIso::Ccusp11: return "Ccusp11";
        case SpecialIso::Ccusp01: return "Ccusp01";
        case SpecialIso::Ccusp10: return "Ccusp10";
        case SpecialIso::C0: return "C0";
    }
    return "?";
}

std::string to_string(Verdict v) {
    return v == Verdict::Stable ? "stable" : "unstable";
}

const std::vector<std::string>& irreducible_germ_tags() {
    static const std::vector<std::string> tags = {
        "",
        "node",
        "cusp",
        "tacnode",
        "cusp_line_transversal",
        "coordinate_cross_3",
        "genus2_cusp_345",
        "genus2_cusp_25"};
    return tags;
}

namespace {

long germ_e(const std::string& tag) {
    // Initialized once; immutable afterwards, so concurrent reads are safe.
    static const std::map<std::string, long> table = [] {
        std::map<std::string, long> t;
        for (auto* tag : {"node", "cusp", "tacnode", "cusp_line_transversal",
                          "genus2_cusp_345", "genus2_cusp_25",
                          "planar_cusp_line", "cusp_line_Ccusp10",
                          "osculating_P1s", "two_cusps_transversal"})
            t.emplace(tag, e_invariant(germ_catalog(tag)));
        t.emplace("coordinate_cross_3",
                  e_invariant(germ_catalog("coordinate_cross", 3)));
        t.emplace("elliptic_nfold_3",
                  e_invariant(germ_catalog("elliptic_nfold", 3)));
        return t;
    }();
    auto it = table.find(tag);
    if (it == table.end())
        throw ValidationError("no tabulated e-value for germ " + tag);
    return it->second;
}

std::string branch_germ(BranchType b) {
    switch (b) {
        case BranchType::Smooth: return "line";
        case BranchType::Node: return "node";
        case BranchType::Cusp: return "cusp";
    }
    return "line";
}

// e of the transversal union of two branch-type germs (length-1 gluing).
long union_e(BranchType b1, BranchType b2) {
    static const std::map<std::pair<int, int>, long> table = [] {
        std::map<std::pair<int, int>, long> t;
        auto types = {BranchType::Smooth, BranchType::Node, BranchType::Cusp};
        for (auto a : types)
            for (auto b : types) {
                Germ g = transversal_union(germ_catalog(branch_germ(a)),
                                           germ_catalog(branch_germ(b)));
                t.emplace(std::pair<int, int>{static_cast<int>(a),
                                              static_cast<int>(b)},
                          e_invariant(g));
            }
        return t;
    }();
    return table.at({static_cast<int>(b1), static_cast<int>(b2)});
}

bool single_point(const CurveDescription& d) { return d.support.size() == 1; }

int singular_count(const CurveDescription& d, bool first_component) {
    int n = 0;
    for (auto& s : d.support) {
        BranchType b = first_component ? s.on_c1 : s.on_c2;
        if (b != BranchType::Smooth) ++n;
    }
    return n;
}

}  // namespace

bool validate(const CurveDescription& d) {
    if (d.irreducible) {
        if (d.g1 || d.g2 || d.xi_length || !d.support.empty()) return false;
        if (d.special_iso != SpecialIso::None) return false;
        auto& tags = irreducible_germ_tags();
        return std::find(tags.begin(), tags.end(), d.germ_tag) != tags.end();
    }
    if (!d.germ_tag.empty() || d.weierstrass_p1) return false;
    if (d.g1 < 0 || d.g1 > 1 || d.g2 < 0 || d.g2 > 1) return false;
    if (d.g1 + d.g2 + d.xi_length - 1 != 2) return false;
    if (d.xi_length == 1 && !(d.g1 == 1 && d.g2 == 1)) return false;
    if (d.support.empty() ||
        static_cast<int>(d.support.size()) > d.xi_length)
        return false;
    // Genus-0 components are smooth; genus-1 components carry at most one
    // singular point.
    for (auto& s : d.support) {
        if (d.g1 == 0 && s.on_c1 != BranchType::Smooth) return false;
        if (d.g2 == 0 && s.on_c2 != BranchType::Smooth) return false;
    }
    if (singular_count(d, true) > 1 || singular_count(d, false) > 1)
        return false;
    // Special isomorphism tags must match the numeric shape.
    switch (d.special_iso) {
        case SpecialIso::None:
            // The three-fold contact and the one-point cusp shapes are
            // exactly the cases where an isomorphism tag is mandatory.
            if (d.g1 == 0 && d.g2 == 0 && d.xi_length == 3 && single_point(d))
                return false;
            if (d.g1 == 1 && d.g2 == 0 && d.xi_length == 2 && single_point(d) &&
                d.support[0].on_c1 == BranchType::Cusp)
                return false;
            break;
        case SpecialIso::Ccusp11:
        case SpecialIso::Ccusp01:
        case SpecialIso::Ccusp10:
            if (!(d.g1 == 1 && d.g2 == 0 && d.xi_length == 2 &&
                  single_point(d) && d.support[0].on_c1 == BranchType::Cusp))
                return false;
            break;
        case SpecialIso::C0:
            if (!(d.g1 == 0 && d.g2 == 0 && d.xi_length == 3 &&
                  single_point(d)))
                return false;
            break;
    }
    return true;
}

StabilityVerdict classify_geometric(const CurveDescription& d) {
    if (!validate(d)) throw ValidationError("invalid curve description");
    StabilityVerdict v;
    if (d.irreducible) {
        v.i = Verdict::Stable;
        v.ii = Verdict::Stable;
        v.iii = d.weierstrass_p1 ? Verdict::Unstable : Verdict::Stable;
        return v;
    }
    const bool one_pt = single_point(d);
    switch (d.xi_length) {
        case 1: {
            bool nodal_at_worst = d.support[0].on_c1 != BranchType::Cusp &&
                                  d.support[0].on_c2 != BranchType::Cusp;
            v.i = nodal_at_worst ? Verdict::Stable : Verdict::Unstable;
            v.ii = Verdict::Unstable;
            v.iii = Verdict::Unstable;
            return v;
        }
        case 2: {
            v.i = one_pt ? Verdict::Unstable : Verdict::Stable;
            bool ii_unstable =
                d.g1 == 0 ||
                (d.g1 == 1 && one_pt && d.support[0].on_c1 == BranchType::Cusp);
            v.ii = ii_unstable ? Verdict::Unstable : Verdict::Stable;
            bool xi_smooth = singular_count(d, true) == 0;
            bool iii_unstable =
                d.g1 == 0 || (xi_smooth && d.xi_divisor_equiv_2p1) ||
                (one_pt && d.support[0].on_c1 == BranchType::Node &&
                 d.restriction_constant) ||
                d.special_iso == SpecialIso::Ccusp01 ||
                d.special_iso == SpecialIso::Ccusp10;
            v.iii = iii_unstable ? Verdict::Unstable : Verdict::Stable;
            return v;
        }
        case 3:
            v.i = Verdict::Stable;
            v.ii = Verdict::Stable;
            v.iii = Verdict::Stable;
            return v;
    }
    throw ValidationError("unreachable intersection length");
}

CohomInvariants invariants_of(const CurveDescription& d) {
    if (!validate(d)) throw ValidationError("invalid curve description");
    CohomInvariants inv;
    inv.h1_p1p2 = 0;
    if (d.irreducible) {
        inv.h1_2p1 = d.weierstrass_p1 ? 1 : 0;
        inv.h1_3p1 = inv.h1_3p2 = 0;
        inv.max_e = d.germ_tag.empty() ? 0 : germ_e(d.germ_tag);
        return inv;
    }
    if (d.xi_length == 1) {
        inv.h1_2p1 = 1;
        inv.h1_3p1 = 1;
        inv.h1_3p2 = 1;
        inv.max_e = union_e(d.support[0].on_c1, d.support[0].on_c2);
        return inv;
    }
    if (d.xi_length == 2) {
        const bool mirrored = d.g1 == 0;  // genus-1 component carries p2
        if (mirrored) {
            inv.h1_2p1 = 1;
            inv.h1_3p1 = 1;
            inv.h1_3p2 = 0;
        } else {
            inv.h1_3p1 = 0;
            inv.h1_3p2 = 1;
            if (single_point(d)) {
                switch (d.support[0].on_c1) {
                    case BranchType::Smooth:
                        inv.h1_2p1 = d.xi_divisor_equiv_2p1 ? 1 : 0;
                        break;
                    case BranchType::Node:
                        inv.h1_2p1 = d.restriction_constant ? 1 : 0;
                        break;
                    case BranchType::Cusp:
                        inv.h1_2p1 =
                            d.special_iso == SpecialIso::Ccusp01 ? 1 : 0;
                        break;
                }
            } else {
                // Two distinct gluing points: a common fiber of the degree-2
                // cover is only possible inside the smooth locus.
                bool xi_smooth = singular_count(d, true) == 0;
                inv.h1_2p1 = (xi_smooth && d.xi_divisor_equiv_2p1) ? 1 : 0;
            }
        }
        auto genus1_type = [&](const SupportPoint& s) {
            return mirrored ? s.on_c2 : s.on_c1;
        };
        if (single_point(d)) {
            switch (genus1_type(d.support[0])) {
                case BranchType::Smooth:
                    inv.max_e = germ_e("tacnode");
                    break;
                case BranchType::Node:
                    inv.max_e = germ_e("elliptic_nfold_3");
                    break;
                case BranchType::Cusp: {
                    if (mirrored)
                        throw ValidationError(
                            "not tabulated: mirrored one-point cusp contact "
                            "carries no isomorphism tag");
                    inv.max_e = d.special_iso == SpecialIso::Ccusp10
                                    ? germ_e("cusp_line_Ccusp10")
                                    : germ_e("planar_cusp_line");
                    break;
                }
            }
        } else {
            long e = 0;
            for (auto& s : d.support)
                e = std::max(e, union_e(genus1_type(s), BranchType::Smooth));
            inv.max_e = e;
        }
        return inv;
    }
    // xi_length == 3, both components rational.
    inv.h1_2p1 = inv.h1_3p1 = inv.h1_3p2 = 0;
    switch (d.support.size()) {
        case 3:
            inv.max_e = union_e(BranchType::Smooth, BranchType::Smooth);
            break;
        case 2:
            inv.max_e = germ_e("tacnode");
            break;
        case 1:
            inv.max_e = germ_e("osculating_P1s");
            break;
    }
    return inv;
}

std::pair<Verdict, Verdict> classify_invariant(const CohomInvariants& inv) {
    Verdict ii = (inv.h1_3p1 == 0 && (inv.h1_3p2 == 0 || inv.max_e <= 4))
                     ? Verdict::Stable
                     : Verdict::Unstable;
    Verdict iii = (inv.h1_2p1 == 0 && inv.max_e <= 5) ? Verdict::Stable
                                                      : Verdict::Unstable;
    return {ii, iii};
}

bool is_Z_stable(const CurveDescription& d) {
    if (!validate(d)) throw ValidationError("invalid curve description");
    if (d.irreducible) return true;
    if (single_point(d) && d.xi_length >= 2) return false;
    if (d.xi_length == 1 && (d.support[0].on_c1 == BranchType::Cusp ||
                             d.support[0].on_c2 == BranchType::Cusp))
        return false;
    return true;
}

std::vector<CurveDescription> full_catalog() {
    std::vector<CurveDescription> out;
    // Irreducible curves.
    for (auto& tag : irreducible_germ_tags())
        for (bool w : {false, true}) {
            CurveDescription d;
            d.irreducible = true;
            d.weierstrass_p1 = w;
            d.germ_tag = tag;
            out.push_back(d);
        }
    auto types = {BranchType::Smooth, BranchType::Node, BranchType::Cusp};
    // Two genus-1 components, transversal point.
    for (auto b1 : types)
        for (auto b2 : types) {
            CurveDescription d;
            d.irreducible = false;
            d.g1 = d.g2 = 1;
            d.xi_length = 1;
            d.support = {{b1, b2}};
            out.push_back(d);
        }
    // Genus 1 with a rational component, length 2, both orientations.
    for (bool mirrored : {false, true}) {
        auto push = [&](CurveDescription d) {
            if (mirrored) {
                std::swap(d.g1, d.g2);
                for (auto& s : d.support) std::swap(s.on_c1, s.on_c2);
                d.xi_divisor_equiv_2p1 = false;
                d.restriction_constant = false;
                d.special_iso = SpecialIso::None;
            }
            if (validate(d)) out.push_back(d);
        };
        // Two distinct points.
        for (auto b : types)
            for (bool equiv : {false, true}) {
                if (mirrored && equiv) continue;
                CurveDescription d;
                d.irreducible = false;
                d.g1 = 1;
                d.g2 = 0;
                d.xi_length = 2;
                d.support = {{b, BranchType::Smooth},
                             {BranchType::Smooth, BranchType::Smooth}};
                d.xi_divisor_equiv_2p1 = equiv;
                if (b != BranchType::Smooth && equiv) continue;
                push(d);
            }
        // One point, length 2.
        for (bool flag : {false, true}) {
            if (mirrored && flag) continue;
            CurveDescription d;
            d.irreducible = false;
            d.g1 = 1;
            d.g2 = 0;
            d.xi_length = 2;
            d.support = {{BranchType::Smooth, BranchType::Smooth}};
            d.xi_divisor_equiv_2p1 = flag;
            push(d);
            d.xi_divisor_equiv_2p1 = false;
            d.support = {{BranchType::Node, BranchType::Smooth}};
            d.restriction_constant = flag;
            push(d);
        }
        for (auto iso :
             {SpecialIso::Ccusp11, SpecialIso::Ccusp01, SpecialIso::Ccusp10}) {
            CurveDescription d;
            d.irreducible = false;
            d.g1 = 1;
            d.g2 = 0;
            d.xi_length = 2;
            d.support = {{BranchType::Cusp, BranchType::Smooth}};
            d.special_iso = iso;
            // The mirrored variant drops the tag, which is invalid; keep the
            // straight orientation only.
            if (!mirrored) push(d);
        }
    }
    // Two rational components, length 3.
    {
        CurveDescription d;
        d.irreducible = false;
        d.g1 = d.g2 = 0;
        d.xi_length = 3;
        d.support = {{BranchType::Smooth, BranchType::Smooth},
                     {BranchType::Smooth, BranchType::Smooth},
                     {BranchType::Smooth, BranchType::Smooth}};
        out.push_back(d);
        d.support.pop_back();
        out.push_back(d);
        d.support.pop_back();
        d.special_iso = SpecialIso::C0;
        out.push_back(d);
    }
    for (auto& d : out)
        if (!validate(d)) throw ValidationError("catalog enumeration bug");
    return out;
}

}  // namespace u22
