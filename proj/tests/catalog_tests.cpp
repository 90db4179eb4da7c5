#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "u22/catalog.hpp"
#include "u22/errors.hpp"

using namespace u22;

namespace {

CurveDescription node_node() {
    CurveDescription d;
    d.irreducible = false;
    d.g1 = d.g2 = 1;
    d.xi_length = 1;
    d.support = {{BranchType::Node, BranchType::Node}};
    return d;
}

CurveDescription c0_description() {
    CurveDescription d;
    d.irreducible = false;
    d.g1 = d.g2 = 0;
    d.xi_length = 3;
    d.support = {{BranchType::Smooth, BranchType::Smooth}};
    d.special_iso = SpecialIso::C0;
    return d;
}

CurveDescription ccusp(SpecialIso iso) {
    CurveDescription d;
    d.irreducible = false;
    d.g1 = 1;
    d.g2 = 0;
    d.xi_length = 2;
    d.support = {{BranchType::Cusp, BranchType::Smooth}};
    d.special_iso = iso;
    return d;
}

}  // namespace

TEST_CASE("validation") {
    CurveDescription irr;
    irr.irreducible = true;
    CHECK(validate(irr));

    CurveDescription bad;
    bad.irreducible = false;
    bad.g1 = bad.g2 = 0;
    bad.xi_length = 2;
    bad.support = {{BranchType::Smooth, BranchType::Smooth}};
    CHECK_FALSE(validate(bad));  // genus sum fails

    CHECK(validate(node_node()));
    CHECK(validate(c0_description()));
    CHECK(validate(ccusp(SpecialIso::Ccusp10)));

    // length-1 gluing forces two genus-1 components
    CurveDescription l1;
    l1.irreducible = false;
    l1.g1 = 1;
    l1.g2 = 0;
    l1.xi_length = 1;
    l1.support = {{BranchType::Smooth, BranchType::Smooth}};
    CHECK_FALSE(validate(l1));

    // one-point cusp contact needs its isomorphism tag
    CHECK_FALSE(validate(ccusp(SpecialIso::None)));
    // rational components are smooth
    CurveDescription r;
    r = c0_description();
    r.support = {{BranchType::Node, BranchType::Smooth}};
    CHECK_FALSE(validate(r));
}

TEST_CASE("geometric classification examples") {
    CurveDescription w;
    w.irreducible = true;
    w.weierstrass_p1 = true;
    auto vw = classify_geometric(w);
    CHECK(vw.i == Verdict::Stable);
    CHECK(vw.ii == Verdict::Stable);
    CHECK(vw.iii == Verdict::Unstable);

    auto vn = classify_geometric(node_node());
    CHECK(vn.i == Verdict::Stable);
    CHECK(vn.ii == Verdict::Unstable);
    CHECK(vn.iii == Verdict::Unstable);

    auto vc = classify_geometric(ccusp(SpecialIso::Ccusp10));
    CHECK(vc.i == Verdict::Unstable);
    CHECK(vc.ii == Verdict::Unstable);
    CHECK(vc.iii == Verdict::Unstable);

    auto v11 = classify_geometric(ccusp(SpecialIso::Ccusp11));
    CHECK(v11.i == Verdict::Unstable);
    CHECK(v11.ii == Verdict::Unstable);
    CHECK(v11.iii == Verdict::Stable);

    auto v0 = classify_geometric(c0_description());
    CHECK(v0.i == Verdict::Stable);
    CHECK(v0.ii == Verdict::Stable);
    CHECK(v0.iii == Verdict::Stable);
}

TEST_CASE("tabulated invariants") {
    auto inv_nn = invariants_of(node_node());
    CHECK(inv_nn.h1_3p1 == 1);
    CHECK(inv_nn.h1_3p2 == 1);
    CHECK(inv_nn.h1_p1p2 == 0);
    CHECK(inv_nn.max_e == 5);  // coordinate cross in 4-space

    auto inv_c0 = invariants_of(c0_description());
    CHECK(inv_c0.h1_3p1 == 0);
    CHECK(inv_c0.h1_3p2 == 0);
    CHECK(inv_c0.max_e == 5);

    auto inv_10 = invariants_of(ccusp(SpecialIso::Ccusp10));
    CHECK(inv_10.h1_2p1 == 0);
    CHECK(inv_10.max_e == 6);

    auto inv_01 = invariants_of(ccusp(SpecialIso::Ccusp01));
    CHECK(inv_01.h1_2p1 == 1);
    CHECK(inv_01.max_e == 5);

    // outside the tabulated catalog: mirrored one-point cusp contact
    CurveDescription m;
    m.irreducible = false;
    m.g1 = 0;
    m.g2 = 1;
    m.xi_length = 2;
    m.support = {{BranchType::Smooth, BranchType::Cusp}};
    REQUIRE(validate(m));
    CHECK_THROWS_AS(invariants_of(m), ValidationError);
}

TEST_CASE("invariant classifier quoted cases") {
    CohomInvariants a;
    a.h1_3p1 = 0;
    a.h1_3p2 = 0;
    CHECK(classify_invariant(a).first == Verdict::Stable);

    CohomInvariants b;
    b.h1_2p1 = 0;
    b.max_e = 6;
    CHECK(classify_invariant(b).second == Verdict::Unstable);

    CohomInvariants c;
    c.h1_3p1 = 1;
    c.max_e = 0;
    CHECK(classify_invariant(c).first == Verdict::Unstable);
}

TEST_CASE("h1 monotonicity inside the tabulated catalog") {
    for (auto& d : full_catalog()) {
        CohomInvariants inv;
        try {
            inv = invariants_of(d);
        } catch (const ValidationError&) {
            continue;
        }
        if (inv.h1_3p1 > 0) CHECK(inv.h1_2p1 > 0);
        CHECK(inv.h1_p1p2 == 0);
    }
}

TEST_CASE("theorem consistency across the full catalog") {
    auto catalog = full_catalog();
    CHECK(catalog.size() > 30);
    int checked = 0;
    for (auto& d : catalog) {
        std::string label = (d.irreducible ? "irr:" + d.germ_tag
                                           : std::to_string(d.g1) +
                                                 std::to_string(d.g2) + "/" +
                                                 std::to_string(d.xi_length)) +
                            "#" + std::to_string(d.support.size()) +
                            to_string(d.special_iso);
        CAPTURE(label);
        auto geo = classify_geometric(d);
        auto [ii, iii] = classify_invariant(invariants_of(d));
        CHECK(geo.ii == ii);
        CHECK(geo.iii == iii);
        ++checked;
    }
    CHECK(checked == static_cast<int>(catalog.size()));
}

TEST_CASE("contraction stability") {
    CHECK(is_Z_stable(node_node()));
    CHECK_FALSE(is_Z_stable(c0_description()));
    CHECK_FALSE(is_Z_stable(ccusp(SpecialIso::Ccusp10)));

    CurveDescription cusp_l1;
    cusp_l1.irreducible = false;
    cusp_l1.g1 = cusp_l1.g2 = 1;
    cusp_l1.xi_length = 1;
    cusp_l1.support = {{BranchType::Cusp, BranchType::Smooth}};
    CHECK_FALSE(is_Z_stable(cusp_l1));
}

TEST_CASE("every (i)-stable catalog curve except the osculating one is "
          "contraction stable") {
    for (auto& d : full_catalog()) {
        if (classify_geometric(d).i != Verdict::Stable) continue;
        if (d.special_iso == SpecialIso::C0) {
            CHECK_FALSE(is_Z_stable(d));
        } else {
            CHECK(is_Z_stable(d));
        }
    }
}
