#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "u22/chambers.hpp"
#include "u22/families.hpp"
#include "u22/io.hpp"
#include "u22/special.hpp"

using namespace u22;

namespace {

CurvePresentation family_a_fixture() {
    // y^2 = x^3 + 1, glued to a line at (0,1) <-> z=-1 and (2,3) <-> z=+1.
    return family(FamilyKind::A, {{"a", Rat(0)},
                                  {"b", Rat(1)},
                                  {"A", Rat(0)},
                                  {"B", Rat(1)},
                                  {"C", Rat(2)},
                                  {"D", Rat(3)}});
}

bool locus_stable(const ModuliPoint& p, ChamberName ch) {
    return unstable_loci(p, ch).empty();
}

void check_pipeline(const CurvePresentation& pres) {
    auto res = extract(pres);
    CHECK(minors_rank_ok(res.point));
    CHECK(has_standard_basis(res.point));
    auto geo = classify_geometric(describe(pres));
    CHECK(locus_stable(res.point, ChamberName::I) == (geo.i == Verdict::Stable));
    CHECK(locus_stable(res.point, ChamberName::II) ==
          (geo.ii == Verdict::Stable));
    CHECK(locus_stable(res.point, ChamberName::III) ==
          (geo.iii == Verdict::Stable));
}

}  // namespace

TEST_CASE("weierstrass chart expansion") {
    Chart cusp;
    cusp.weierstrass = true;
    cusp.a = Rat(0);
    cusp.b = Rat(0);
    auto e = expand_at_infinity(cusp, 10);
    CHECK(e.x.coefficient(-2) == Rat(1));
    CHECK(e.y.coefficient(-3) == Rat(1));
    for (int k = -1; k < 10; ++k) CHECK(e.x.coefficient(k) == Rat(0));

    Chart gen;
    gen.weierstrass = true;
    gen.a = Rat(-3, 7);
    gen.b = Rat(5, 2);
    auto g = expand_at_infinity(gen, 10);
    // Newton oracle: the defining relation vanishes to the working window.
    Series rel = g.y * g.y - g.x.pow(3) - g.x.scaled(gen.a) -
                 Series::monomial("t", gen.b, 0);
    for (int k = rel.known_zero() ? rel.precision() - 1 : rel.valuation();
         k < rel.precision(); ++k)
        CHECK(rel.coefficient(k) == Rat(0));
    // Canonical shape: no t^-1 and no constant term for x.
    CHECK(g.x.coefficient(-1) == Rat(0));
    CHECK(g.x.coefficient(0) == Rat(0));

    Chart line;
    auto l = expand_at_infinity(line, 10);
    CHECK(l.x.coefficient(-1) == Rat(1));
    CHECK(l.x.precision() == 10);
}

TEST_CASE("canonical parameter iteration") {
    Series base = Series::variable("t").truncated(12);
    // No t^-1 term: parameter unchanged.
    Series f0 = Series::monomial("t", Rat(1), -2, 8);
    CHECK(canonical_parameter(f0, base, 2) == base);
    // f = t^-2 + 3 t^-1: t2 = t - (3/2) t^2.
    Series f1 = f0 + Series::monomial("t", Rat(3), -1, 8);
    Series t2 = canonical_parameter(f1, base, 2);
    CHECK(t2.coefficient(2) == Rat(-3, 2));
    // Idempotent once the coefficient vanishes.
    CHECK(canonical_parameter(f1, t2, 2) == t2);
}

TEST_CASE("family validation") {
    CHECK_NOTHROW(family(FamilyKind::C, {{"lambda", Rat(2)}, {"mu", Rat(3)}}));
    CHECK_THROWS_AS(family(FamilyKind::C, {{"lambda", Rat(2)}, {"mu", Rat(2)}}),
                    ValidationError);
    CHECK_THROWS_AS(family(FamilyKind::C, {{"lambda", Rat(0)}, {"mu", Rat(3)}}),
                    ValidationError);
    CHECK_THROWS_AS(
        family(FamilyKind::E,
               {{"A", Rat(0)}, {"B", Rat(1)}, {"C", Rat(0)}, {"lambda", Rat(1)}}),
        ValidationError);
    // Contact scheme fails to embed when 2*A*lambda + B = 0.
    CHECK_THROWS_AS(
        family(FamilyKind::E, {{"A", Rat(1)},
                               {"B", Rat(-2)},
                               {"C", Rat(0)},
                               {"lambda", Rat(1)}}),
        ValidationError);
    CHECK_THROWS_AS(family(FamilyKind::B, {{"a", Rat(0)},
                                           {"b", Rat(1)},
                                           {"A", Rat(1)},
                                           {"B", Rat(0)},
                                           {"C", Rat(0)},
                                           {"D", Rat(2)}}),
                    ValidationError);  // (B,D) off the curve
}

TEST_CASE("normalization on the two-point family") {
    auto pres = family_a_fixture();
    auto rg = raw_generators(pres);
    auto n2 = normalize_generators(pres, rg.f2, rg.h2, 2);
    // Raw pair (z^2, z^3 - z) normalizes to f2 = z^2 - 2/3 on the line chart.
    CHECK(n2.a == Rat(-2, 3));
    CHECK(n2.b == Rat(0));
    REQUIRE(n2.f.c2.p.size() == 3);
    CHECK(n2.f.c2.p[0] == Rat(-2, 3));
    CHECK(n2.f.c2.p[1] == Rat(0));
    CHECK(n2.f.c2.p[2] == Rat(1));
    // Its value at z = 0 is the -2/3 constant.
    CHECK(n2.f.c2.p[0] == Rat(-2, 3));
    CHECK(verify_canonical(pres, n2.f, n2.h, 2));

    auto n1 = normalize_generators(pres, rg.f1, rg.h1, 1);
    CHECK(verify_canonical(pres, n1.f, n1.h, 1));
    // Shifting f without recomputing h's constant breaks the conditions.
    CurveFn shifted = n1.f;
    if (shifted.c1.p.empty()) shifted.c1.p.push_back(Rat(0));
    if (shifted.c2.p.empty()) shifted.c2.p.push_back(Rat(0));
    shifted.c1.p[0] += Rat(1);
    shifted.c2.p[0] += Rat(1);
    CHECK_FALSE(verify_canonical(pres, shifted, n1.h, 1));
}

TEST_CASE("cuspidal pair is canonical as-is") {
    auto pres = family(FamilyKind::F, {{"a1", Rat(0)},
                                       {"b1", Rat(0)},
                                       {"a2", Rat(0)},
                                       {"b2", Rat(0)},
                                       {"x1", Rat(0)},
                                       {"y1", Rat(0)},
                                       {"x2", Rat(0)},
                                       {"y2", Rat(0)}});
    auto rg = raw_generators(pres);
    auto n1 = normalize_generators(pres, rg.f1, rg.h1, 1);
    CHECK(n1.a == Rat(0));
    CHECK(n1.b == Rat(0));
    CHECK(n1.c == Rat(0));
    CHECK(verify_canonical(pres, rg.f1, rg.h1, 1));
}

TEST_CASE("family A extraction") {
    auto res = extract(family_a_fixture());
    CHECK(res.point.alpha12 == Rat(1));
    CHECK(res.point.alpha21 == Rat(0));
    CHECK(res.point.beta21 == Rat(0));
    // Constant of f2 on the genus-1 side: value of z^2 - 2/3 at the gluing.
    CHECK(res.point.gamma21 == Rat(1, 3));
    CHECK(res.pi1 == Rat(0));  // a = 0
    check_pipeline(family_a_fixture());
}

TEST_CASE("family A with a common fiber has vanishing alpha12") {
    // Points (2,3) and (2,-3) on y^2 = x^3 + 1 share their x-value.
    auto pres = family(FamilyKind::A, {{"a", Rat(0)},
                                       {"b", Rat(1)},
                                       {"A", Rat(2)},
                                       {"B", Rat(3)},
                                       {"C", Rat(2)},
                                       {"D", Rat(-3)}});
    auto res = extract(pres);
    CHECK(res.point.alpha12 == Rat(0));
    CHECK(describe(pres).xi_divisor_equiv_2p1);
    check_pipeline(pres);
}

TEST_CASE("family B extraction matches the closed form") {
    // Smooth gluing point (1,1) on y^2 = x^3 - 3x + 3, direction from the
    // tangency condition: 2CD = A(3B^2+a) -> C = 0 needs A... take A = 2,
    // then C = 0/(2D) -> 2*C*1 = 2*(3-3) = 0 -> C = 0.
    Rat a(-3), b(3), B(1), D(1);
    Rat A(2), C(0);
    auto pres = family(FamilyKind::B, {{"a", a},
                                       {"b", b},
                                       {"A", A},
                                       {"B", B},
                                       {"C", C},
                                       {"D", D}});
    auto res = extract(pres);
    CHECK(res.point.alpha12 == A);
    CHECK(res.point.beta12 == C);
    CHECK(res.point.gamma12 == B);
    CHECK(res.point.eps12 == D);
    CHECK(res.point.pitilde1 == a + Rat(3) * B * B);
    CHECK(res.pi1 == a);
    CHECK(res.point.alpha21 == Rat(0));
    CHECK(res.point.beta21 == Rat(0));
    CHECK(res.point.gamma21 == Rat(0));
    CHECK(res.point.eps21 == Rat(0));
    CHECK(res.point.pitilde2 == Rat(0));
    check_pipeline(pres);

    // A second instance with every tuple entry nonzero: (2,3) on
    // y^2 = x^3 + 1, direction (1,2) satisfying 2CD = A(3B^2+a).
    auto pres2 = family(FamilyKind::B, {{"a", Rat(0)},
                                        {"b", Rat(1)},
                                        {"A", Rat(1)},
                                        {"B", Rat(2)},
                                        {"C", Rat(2)},
                                        {"D", Rat(3)}});
    auto res2 = extract(pres2);
    CHECK(res2.point.alpha12 == Rat(1));
    CHECK(res2.point.beta12 == Rat(2));
    CHECK(res2.point.gamma12 == Rat(2));
    CHECK(res2.point.eps12 == Rat(3));
    CHECK(res2.point.pitilde1 == Rat(12));  // a + 3 B^2
    check_pipeline(pres2);
}

TEST_CASE("family B at a node of the genus-1 component") {
    // y^2 = x^3 - 3x + 2 has a node at (1,0); any direction is tangent there.
    auto pres = family(FamilyKind::B, {{"a", Rat(-3)},
                                       {"b", Rat(2)},
                                       {"A", Rat(1)},
                                       {"B", Rat(1)},
                                       {"C", Rat(1)},
                                       {"D", Rat(0)}});
    auto d = describe(pres);
    CHECK(d.support[0].on_c1 == BranchType::Node);
    CHECK_FALSE(d.restriction_constant);
    CHECK(invariants_of(d).max_e == 4);
    check_pipeline(pres);

    // Vertical direction: the degree-2 function restricts constantly.
    auto pres0 = family(FamilyKind::B, {{"a", Rat(-3)},
                                        {"b", Rat(2)},
                                        {"A", Rat(0)},
                                        {"B", Rat(1)},
                                        {"C", Rat(1)},
                                        {"D", Rat(0)}});
    auto d0 = describe(pres0);
    CHECK(d0.restriction_constant);
    CHECK(extract(pres0).point.alpha12 == Rat(0));
    check_pipeline(pres0);
}

TEST_CASE("family B locus fixtures") {
    // a=b=B=D=0, C=0: the S locus (everything except alpha12 vanishes).
    auto s_pres = family(FamilyKind::B, {{"a", Rat(0)},
                                         {"b", Rat(0)},
                                         {"A", Rat(1)},
                                         {"B", Rat(0)},
                                         {"C", Rat(0)},
                                         {"D", Rat(0)}});
    auto s_res = extract(s_pres);
    auto s_loci = unstable_loci(s_res.point, ChamberName::III);
    CHECK(s_loci.count(LocusName::S) == 1);
    CHECK(describe(s_pres).special_iso == SpecialIso::Ccusp10);

    // a=b=B=D=0 with A, C nonzero: the R locus.
    auto r_pres = family(FamilyKind::B, {{"a", Rat(0)},
                                         {"b", Rat(0)},
                                         {"A", Rat(1)},
                                         {"B", Rat(0)},
                                         {"C", Rat(2)},
                                         {"D", Rat(0)}});
    auto r_res = extract(r_pres);
    auto r_loci = unstable_loci(r_res.point, ChamberName::II);
    CHECK(r_loci.count(LocusName::R) == 1);
    CHECK(describe(r_pres).special_iso == SpecialIso::Ccusp11);
    check_pipeline(r_pres);
    check_pipeline(s_pres);
}

TEST_CASE("family C extraction") {
    auto pres = family(FamilyKind::C, {{"lambda", Rat(2)}, {"mu", Rat(3)}});
    auto res = extract(pres);
    CHECK(res.point.alpha12 == Rat(2));   // (l^2-l)/(mu-l)
    CHECK(res.point.alpha21 == Rat(-6));  // (mu^2-mu)/(l-mu)
    check_pipeline(pres);

    auto pres2 = family(FamilyKind::C, {{"lambda", Rat(-1)}, {"mu", Rat(1, 2)}});
    auto res2 = extract(pres2);
    Rat l(-1), m(1, 2);
    CHECK(res2.point.alpha12 == (l * l - l) / (m - l));
    CHECK(res2.point.alpha21 == (m * m - m) / (l - m));
    check_pipeline(pres2);
}

TEST_CASE("families D, E, F pipeline") {
    check_pipeline(family(FamilyKind::D, {{"lambda", Rat(1)}, {"mu", Rat(3)}}));
    check_pipeline(family(FamilyKind::E, {{"A", Rat(1)},
                                          {"B", Rat(1)},
                                          {"C", Rat(0)},
                                          {"lambda", Rat(1)}}));
    // Two smooth elliptic curves glued at smooth points.
    check_pipeline(family(FamilyKind::F, {{"a1", Rat(0)},
                                          {"b1", Rat(1)},
                                          {"a2", Rat(-3)},
                                          {"b2", Rat(3)},
                                          {"x1", Rat(0)},
                                          {"y1", Rat(1)},
                                          {"x2", Rat(1)},
                                          {"y2", Rat(1)}}));
}

TEST_CASE("family F cuspidal subcase lands in the first vanishing locus") {
    auto pres = family(FamilyKind::F, {{"a1", Rat(0)},
                                       {"b1", Rat(0)},
                                       {"a2", Rat(0)},
                                       {"b2", Rat(1)},
                                       {"x1", Rat(0)},
                                       {"y1", Rat(0)},
                                       {"x2", Rat(2)},
                                       {"y2", Rat(3)}});
    auto res = extract(pres);
    auto loci = unstable_loci(res.point, ChamberName::I);
    CHECK(loci.count(LocusName::Z1) == 1);
    CHECK(describe(pres).support[0].on_c1 == BranchType::Cusp);
    check_pipeline(pres);
}

TEST_CASE("json round trips") {
    ModuliPoint p = c0_point();
    CHECK(point_from_json(to_json(p)) == p);

    CurveDescription d;
    d.irreducible = false;
    d.g1 = 1;
    d.g2 = 0;
    d.xi_length = 2;
    d.support = {{BranchType::Cusp, BranchType::Smooth}};
    d.special_iso = SpecialIso::Ccusp10;
    auto back = description_from_json(to_json(d));
    CHECK(back.special_iso == d.special_iso);
    CHECK(back.support[0].on_c1 == d.support[0].on_c1);

    Germ g = germ_catalog("planar_cusp_line");
    Germ gb = germ_from_json(to_json(g));
    CHECK(delta(gb) == delta(g));
    CHECK(t_invariant(gb) == t_invariant(g));

    auto pres = family(FamilyKind::C, {{"lambda", Rat(2)}, {"mu", Rat(3)}});
    auto pres2 = presentation_from_json(to_json(pres));
    CHECK(extract(pres2).point == extract(pres).point);

    CHECK_THROWS_AS(rat_from_json(json("0.5")), ValidationError);
    CHECK_THROWS_AS(point_from_json(json{{"alpha12", "1"}}), ValidationError);
}

TEST_CASE("diagonal normalization identities hold on extractions") {
    for (auto pres :
         {family_a_fixture(),
          family(FamilyKind::C, {{"lambda", Rat(2)}, {"mu", Rat(3)}}),
          family(FamilyKind::D, {{"lambda", Rat(1)}, {"mu", Rat(3)}})}) {
        auto res = extract(pres);
        CHECK(res.raw.at("alpha11[-2,0]") == Rat(0));
        CHECK(res.raw.at("alpha22[-2,0]") == Rat(0));
        CHECK(Rat(2) * res.raw.at("alpha11[-3,0]") ==
              Rat(3) * res.raw.at("alpha11[-2,1]"));
        CHECK(Rat(2) * res.raw.at("alpha22[-3,0]") ==
              Rat(3) * res.raw.at("alpha22[-2,1]"));
    }
}
