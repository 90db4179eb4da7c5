#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "u22/chambers.hpp"
#include "u22/special.hpp"

using namespace u22;

TEST_CASE("blowdown image values") {
    ModuliPoint p = blowdown_image(Rat(1), Rat(1));
    CHECK(p == c0_point());
    CHECK(p.pitilde1 == Rat(15, 4));
    CHECK(p.pitilde2 == Rat(15, 4));

    ModuliPoint q = blowdown_image(Rat(1), Rat(2));
    CHECK(q.alpha21 == Rat(8));
    CHECK(q.beta21 == Rat(48));

    CHECK_THROWS_AS(blowdown_image(Rat(0), Rat(1)), ValidationError);
}

TEST_CASE("blowdown image satisfies the rank condition") {
    std::mt19937 rng(99);
    for (int t = 0; t < 25; ++t) {
        Rat b1(static_cast<long>(rng() % 9) + 1, static_cast<long>(rng() % 3) + 1);
        Rat phi(static_cast<long>(rng() % 9) + 1, static_cast<long>(rng() % 4) + 1);
        if (rng() % 2) b1 = -b1;
        if (rng() % 2) phi = -phi;
        ModuliPoint p = blowdown_image(b1, phi);
        CHECK(minors_rank_ok(p));
        // All coordinates nonzero: semistable in every chamber.
        for (auto ch : {ChamberName::I, ChamberName::II, ChamberName::III})
            CHECK(is_semistable(p, chamber(ch).representative));
    }
}

TEST_CASE("blowdown orbit identity") {
    CHECK(verify_blowdown_orbit());
    CHECK_FALSE(verify_blowdown_orbit(true));  // flipped sign convention

    // Numeric spot checks.
    for (auto [b1, phi] : {std::pair<Rat, Rat>{Rat(3), Rat(-2)},
                           std::pair<Rat, Rat>{Rat(1), Rat(2)},
                           std::pair<Rat, Rat>{Rat(2), Rat(1)}}) {
        ModuliPoint img = blowdown_image(b1, phi);
        std::pair<Rat, Rat> lam{b1 * phi, b1 * phi * phi};
        CHECK(apply_action(lam, img) == c0_point());
    }
}

TEST_CASE("blowdown images lie in one orbit") {
    ModuliPoint p = blowdown_image(Rat(1), Rat(2));
    ModuliPoint q = blowdown_image(Rat(2), Rat(1));
    auto lam = same_orbit(p, q);
    REQUIRE(lam.has_value());
    CHECK(apply_action(*lam, p) == q);
}

TEST_CASE("the distinguished point") {
    ModuliPoint p = c0_point();
    CHECK(minors_rank_ok(p));
    CHECK(pi_from_pi_tilde(p, 1) == Rat(-3, 16));
    CHECK(pi_from_pi_tilde(p, 2) == Rat(-3, 16));
    for (auto ch : {ChamberName::I, ChamberName::II, ChamberName::III})
        CHECK(unstable_loci(p, ch).empty());
    CHECK_FALSE(same_orbit(ModuliPoint{}, p).has_value());
}

TEST_CASE("two-branch geometry of the distinguished point") {
    C0Report rep = verify_c0_geometry();
    CHECK(rep.branches_found);
    CHECK(rep.ideal_matches);
    CHECK(rep.colength_is_3);
    CHECK(rep.local_at_one_point);
    CHECK(rep.ok());
    REQUIRE(rep.branch1.size() == 4);
    REQUIRE(rep.branch2.size() == 4);
    // Degree <= 3 parametrizations that satisfy all six equations.
    ModuliPoint c0 = c0_point();
    auto ideal = build_curve_ideal(c0);
    for (auto& branch : {rep.branch1, rep.branch2}) {
        for (auto& comp : branch) CHECK(comp.total_degree() <= 3);
        for (long sval = -4; sval <= 4; ++sval) {
            std::map<std::string, Rat> at = {{"s", Rat(sval)}};
            std::map<std::string, Rat> pt = {{"f1", branch[0].evaluate(at)},
                                             {"f2", branch[1].evaluate(at)},
                                             {"h1", branch[2].evaluate(at)},
                                             {"h2", branch[3].evaluate(at)}};
            for (auto& g : ideal.generators) CHECK(g.evaluate(pt) == Rat(0));
        }
    }
}

TEST_CASE("coordinate-plane probe") {
    CHECK(verify_p2_probe());
    CHECK_FALSE(verify_p2_probe(true));  // minor relation dropped
}

TEST_CASE("fibration relations") {
    CHECK(verify_weierstrass_relations());
    CHECK_FALSE(verify_weierstrass_relations({}, true));  // beta perturbed

    auto [gens, ord] = weierstrass_fibration();
    // The intended leading terms.
    RingPtr r = ord.ring();
    auto lt = [&](int i) { return leading_term(gens[i], ord).first; };
    auto m2 = [&](const char* a, const char* b) {
        Mono m(r->size());
        m.set_exp(r->index_of(a), m.exp(r->index_of(a)) + 1);
        m.set_exp(r->index_of(b), m.exp(r->index_of(b)) + 1);
        return m;
    };
    CHECK(lt(0) == m2("h", "h"));
    CHECK(lt(1) == m2("h", "k"));
    CHECK(lt(2) == m2("k", "k"));
    CHECK(lt(3) == m2("f", "g"));
    CHECK(lt(4) == m2("h", "g"));
    CHECK(lt(5) == m2("k", "g"));
}

TEST_CASE("fibration specialization oracle") {
    // Random rational parameter values: the quotient's standard monomials up
    // to weighted degree 12 match f^n, f^n h, f^n k, g^(1+n).
    std::mt19937 rng(7);
    for (int trial = 0; trial < 3; ++trial) {
        std::map<std::string, Rat> qs = {
            {"q1", Rat(static_cast<long>(rng() % 9) - 4)},
            {"q20", Rat(static_cast<long>(rng() % 9) - 4)},
            {"q21", Rat(static_cast<long>(rng() % 9) - 4)},
            {"q30", Rat(static_cast<long>(rng() % 9) - 4)},
            {"q31", Rat(static_cast<long>(rng() % 9) - 4)},
        };
        auto [gens, ord] = weierstrass_fibration_at(qs);
        auto gb = buchberger({gens, ord});
        RingPtr r = ord.ring();
        const long wf = 3, wh = 4, wk = 5, wg = 2;
        auto weighted_deg = [&](const Mono& m) {
            return wf * m.exp(r->index_of("f")) + wh * m.exp(r->index_of("h")) +
                   wk * m.exp(r->index_of("k")) + wg * m.exp(r->index_of("g"));
        };
        // Collect standard monomials up to degree 12 by direct enumeration.
        std::set<Mono> expected;
        auto add = [&](int fe, int he, int ke, int ge) {
            Mono m(r->size());
            m.set_exp(r->index_of("f"), fe);
            m.set_exp(r->index_of("h"), he);
            m.set_exp(r->index_of("k"), ke);
            m.set_exp(r->index_of("g"), ge);
            if (weighted_deg(m) <= 12) expected.insert(m);
        };
        for (int n = 0; n <= 6; ++n) {
            add(n, 0, 0, 0);
            add(n, 1, 0, 0);
            add(n, 0, 1, 0);
            if (n >= 1) add(0, 0, 0, n);
        }
        std::set<Mono> got;
        auto lms = gb.lt_ideal_minimal_generators();
        std::function<void(Mono)> walk = [&](Mono m) {
            if (weighted_deg(m) > 12 || got.count(m)) return;
            for (auto& lm : lms)
                if (lm.divides(m)) return;
            got.insert(m);
            for (int vdx = 0; vdx < r->size(); ++vdx)
                walk(m * Mono::var(r, vdx));
        };
        walk(Mono(r->size()));
        got.erase(Mono(r->size()));
        expected.erase(Mono(r->size()));
        CHECK(got == expected);
    }
}
