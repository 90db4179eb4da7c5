#include "u22/moduli.hpp"

#include <algorithm>
#include <numeric>

namespace u22 {

namespace {

constexpr int kA12 = 0, kA21 = 1, kB12 = 2, kB21 = 3, kG12 = 4, kG21 = 5,
              kE12 = 6, kE21 = 7, kP1 = 8, kP2 = 9;

}  // namespace

Rat& ModuliPoint::coord(int i) {
    switch (i) {
        case kA12: return alpha12;
        case kA21: return alpha21;
        case kB12: return beta12;
        case kB21: return beta21;
        case kG12: return gamma12;
        case kG21: return gamma21;
        case kE12: return eps12;
        case kE21: return eps21;
        case kP1: return pitilde1;
        case kP2: return pitilde2;
    }
    throw ValidationError("coordinate index out of range");
}

const Rat& ModuliPoint::coord(int i) const {
    return const_cast<ModuliPoint*>(this)->coord(i);
}

bool operator==(const ModuliPoint& a, const ModuliPoint& b) {
    for (int i = 0; i < 10; ++i)
        if (a.coord(i) != b.coord(i)) return false;
    return true;
}

const std::array<std::string, 10>& coordinate_names() {
    static const std::array<std::string, 10> names = {
        "alpha12", "alpha21", "beta12",    "beta21",   "gamma12",
        "gamma21", "epsilon12", "epsilon21", "pitilde1", "pitilde2"};
    return names;
}

const std::array<std::pair<int, int>, 10>& coordinate_weights() {
    static const std::array<std::pair<int, int>, 10> w = {{
        {2, -1},  // alpha12
        {-1, 2},  // alpha21
        {3, -1},  // beta12
        {-1, 3},  // beta21
        {2, 0},   // gamma12
        {0, 2},   // gamma21
        {3, 0},   // epsilon12
        {0, 3},   // epsilon21
        {4, 0},   // pitilde1
        {0, 4},   // pitilde2
    }};
    return w;
}

Rat pi_from_pi_tilde(const ModuliPoint& p, int i) {
    if (i != 1 && i != 2) throw ValidationError("index must be 1 or 2");
    const Rat& pit = i == 1 ? p.pitilde1 : p.pitilde2;
    const Rat& a_ij = i == 1 ? p.alpha12 : p.alpha21;
    const Rat& a_ji = i == 1 ? p.alpha21 : p.alpha12;
    const Rat& b_ij = i == 1 ? p.beta12 : p.beta21;
    const Rat& g_ij = i == 1 ? p.gamma12 : p.gamma21;
    const Rat& g_ji = i == 1 ? p.gamma21 : p.gamma12;
    return pit - Rat(3) * a_ij * a_ij * g_ji - Rat(3) * a_ij * a_ji * b_ij -
           Rat(3) * g_ij * g_ij;
}

bool minors_rank_ok(const ModuliPoint& p) {
    const Rat row1[4] = {p.alpha12, p.alpha21, p.beta12, p.beta21};
    const Rat row2[4] = {Rat(2) * p.eps12, Rat(2) * p.eps21, p.pitilde1,
                         p.pitilde2};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (!(row1[i] * row2[j] - row1[j] * row2[i]).is_zero()) return false;
    return true;
}

RingPtr coordinate_ring() {
    static const RingPtr r = Ring::make(std::vector<std::string>(
        coordinate_names().begin(), coordinate_names().end()));
    return r;
}

std::vector<Poly> minor_polynomials() {
    RingPtr r = coordinate_ring();
    auto v = [&](const std::string& n) { return Poly::var(r, n); };
    std::vector<Poly> row1 = {v("alpha12"), v("alpha21"), v("beta12"),
                              v("beta21")};
    std::vector<Poly> row2 = {v("epsilon12").scaled(Rat(2)),
                              v("epsilon21").scaled(Rat(2)), v("pitilde1"),
                              v("pitilde2")};
    std::vector<Poly> minors;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            minors.push_back(row1[i] * row2[j] - row1[j] * row2[i]);
    return minors;
}

RingPtr curve_ring() {
    static const RingPtr r = Ring::make({"f1", "f2", "h1", "h2"});
    return r;
}

MonomialOrder curve_order(const RingPtr& r) {
    return MonomialOrder::weighted_deglex(
        r, {{"f1", 2}, {"f2", 2}, {"h1", 3}, {"h2", 3}},
        {"h1", "h2", "f1", "f2"});
}

std::map<std::string, Poly> coefficient_formulas() {
    RingPtr r = coordinate_ring();
    auto v = [&](const std::string& n) { return Poly::var(r, n); };
    auto c = [&](long n) { return Poly::constant(r, Rat(n)); };
    Poly a12 = v("alpha12"), a21 = v("alpha21"), b12 = v("beta12"),
         b21 = v("beta21"), g12 = v("gamma12"), g21 = v("gamma21"),
         e12 = v("epsilon12"), e21 = v("epsilon21"), pt1 = v("pitilde1"),
         pt2 = v("pitilde2");

    std::map<std::string, Poly> m;
    m.emplace("a", -(a12.pow(2) * a21.pow(2)) - g12 * g21 + b12 * b21);

    auto b_formula = [&](const Poly& aij, const Poly& aji, const Poly& bij,
                         const Poly& bji, const Poly& gij, const Poly& gji,
                         const Poly& eij, const Poly& eji) {
        return aij * aji.pow(2) * gij - c(2) * aij.pow(2) * aji * bji -
               c(2) * aij * gji.pow(2) + c(2) * aji * bij * gji + bji * eij -
               gij * eji;
    };
    m.emplace("b12", b_formula(a12, a21, b12, b21, g12, g21, e12, e21));
    m.emplace("b21", b_formula(a21, a12, b21, b12, g21, g12, e21, e12));

    m.emplace("psi12", c(3) * a12 * a21 * g12 + g21 * b12);
    m.emplace("psi21", c(3) * a21 * a12 * g21 + g12 * b21);

    auto s_formula = [&](const Poly& aij, const Poly& aji, const Poly& bij,
                         const Poly& bji, const Poly& gij, const Poly& gji,
                         const Poly& eij, const Poly& eji, const Poly& pit) {
        return eij.pow(2) - c(3) * aij.pow(3) * eji - gij * pit +
               c(2) * gij.pow(3) + c(2) * bij.pow(2) * gji -
               c(3) * aij.pow(2) * gij * gji + c(3) * aij * aji * bij * gij -
               aij.pow(2) * bij * bji + c(3) * aij.pow(4) * aji.pow(2);
    };
    m.emplace("s1", s_formula(a12, a21, b12, b21, g12, g21, e12, e21, pt1));
    m.emplace("s2", s_formula(a21, a12, b21, b12, g21, g12, e21, e12, pt2));

    m.emplace("u", b21 * pt1 - e12 * e21 + c(2) * a12.pow(2) * a21 * e21 -
                       c(2) * a12.pow(3) * a21.pow(3) - c(2) * g21.pow(2) * b12 -
                       c(2) * g12.pow(2) * b21 +
                       a12 * a21 * (c(3) * g12 * g21 - c(2) * b12 * b21));

    auto pi_formula = [&](const Poly& pit, const Poly& aij, const Poly& aji,
                          const Poly& bij, const Poly& gij, const Poly& gji) {
        return pit - c(3) * aij.pow(2) * gji - c(3) * aij * aji * bij -
               c(3) * gij.pow(2);
    };
    m.emplace("pi1", pi_formula(pt1, a12, a21, b12, g12, g21));
    m.emplace("pi2", pi_formula(pt2, a21, a12, b21, g21, g12));
    return m;
}

namespace {

// The six equations, with every coefficient supplied as a polynomial of the
// target ring (constants in the numeric case, parameter variables in the
// symbolic one). Keys: the eight coordinates plus a,b12,b21,psi12,psi21,
// s1,s2,u,pi1,pi2.
std::vector<Poly> curve_generators(const RingPtr& r,
                                   const std::map<std::string, Poly>& k) {
    auto f1 = Poly::var(r, "f1"), f2 = Poly::var(r, "f2"),
         h1 = Poly::var(r, "h1"), h2 = Poly::var(r, "h2");
    auto K = [&](const std::string& name) -> const Poly& {
        auto it = k.find(name);
        if (it == k.end()) throw ValidationError("missing coefficient " + name);
        return it->second;
    };
    const Poly &a12 = K("alpha12"), &a21 = K("alpha21"), &b12 = K("beta12"),
               &b21 = K("beta21"), &g12 = K("gamma12"), &g21 = K("gamma21"),
               &e12 = K("epsilon12"), &e21 = K("epsilon21");

    std::vector<Poly> gens;
    // f1 f2 = a21 h1 + a12 h2 + g21 f1 + g12 f2 + a
    gens.push_back(f1 * f2 - a21 * h1 - a12 * h2 - g21 * f1 - g12 * f2 - K("a"));
    // f_i h_j = a_ij f_j^2 + g_ij h_j + b_ji h_i + (a_ji b_ij + a_ij g_ji) f_j
    //           + (e_ji - a_ij a_ji^2) f_i + b_ij
    auto middle = [&](const Poly& fi, const Poly& fj, const Poly& hi,
                      const Poly& hj, const Poly& aij, const Poly& aji,
                      const Poly& bij, const Poly& bji, const Poly& gij,
                      const Poly& gji, const Poly& eji, const Poly& bcoef) {
        return fi * hj - aij * fj.pow(2) - gij * hj - bji * hi -
               (aji * bij + aij * gji) * fj - (eji - aij * aji.pow(2)) * fi -
               bcoef;
    };
    gens.push_back(middle(f1, f2, h1, h2, a12, a21, b12, b21, g12, g21, e21,
                          K("b12")));
    gens.push_back(middle(f2, f1, h2, h1, a21, a12, b21, b12, g21, g12, e12,
                          K("b21")));
    // h_i^2 = f_i^3 + pi_i f_i - a_ij^3 h_j + (b_ij^2 - 3 a_ij^2 g_ij) f_j + s_i
    auto square = [&](const Poly& fi, const Poly& fj, const Poly& hi,
                      const Poly& hj, const Poly& aij, const Poly& bij,
                      const Poly& gij, const Poly& pii, const Poly& si) {
        Poly three = Poly::constant(r, Rat(3));
        return hi.pow(2) - fi.pow(3) - pii * fi + aij.pow(3) * hj -
               (bij.pow(2) - three * aij.pow(2) * gij) * fj - si;
    };
    gens.push_back(square(f1, f2, h1, h2, a12, b12, g12, K("pi1"), K("s1")));
    gens.push_back(square(f2, f1, h2, h1, a21, b21, g21, K("pi2"), K("s2")));
    // h1 h2 = b12 f2^2 + b21 f1^2 + e12 h2 + e21 h1 + psi12 f2 + psi21 f1 + u
    gens.push_back(h1 * h2 - b12 * f2.pow(2) - b21 * f1.pow(2) - e12 * h2 -
                   e21 * h1 - K("psi12") * f2 - K("psi21") * f1 - K("u"));
    return gens;
}

std::map<std::string, Rat> point_assignment(const ModuliPoint& p) {
    std::map<std::string, Rat> a;
    for (int i = 0; i < 10; ++i) a.emplace(coordinate_names()[i], p.coord(i));
    return a;
}

}  // namespace

std::vector<Poly> curve_generators_with(
    const RingPtr& ring, const std::map<std::string, Poly>& coord_images) {
    std::map<std::string, Poly> k = coord_images;
    for (auto& n : coordinate_names())
        if (!k.count(n))
            throw ValidationError("curve_generators_with: missing image for " +
                                  n);
    for (auto& [name, f] : coefficient_formulas())
        k.emplace(name, f.substitute(ring, coord_images));
    return curve_generators(ring, k);
}

UniversalCurveIdeal build_curve_ideal(const ModuliPoint& p) {
    UniversalCurveIdeal out;
    out.ring = curve_ring();
    auto assign = point_assignment(p);
    std::map<std::string, Poly> k;
    for (int i = 0; i < 10; ++i) {
        const std::string& n = coordinate_names()[i];
        k.emplace(n, Poly::constant(out.ring, p.coord(i)));
    }
    auto formulas = coefficient_formulas();
    std::map<std::string, Rat> values;
    for (auto& [name, f] : formulas) {
        Rat v = f.evaluate(assign);
        values.emplace(name, v);
        k.emplace(name, Poly::constant(out.ring, v));
    }
    out.generators = curve_generators(out.ring, k);
    out.a = values.at("a");
    out.b12 = values.at("b12");
    out.b21 = values.at("b21");
    out.psi12 = values.at("psi12");
    out.psi21 = values.at("psi21");
    out.s1 = values.at("s1");
    out.s2 = values.at("s2");
    out.u = values.at("u");
    out.pi1 = values.at("pi1");
    out.pi2 = values.at("pi2");
    return out;
}

bool has_standard_basis(const ModuliPoint& p, const GBOptions& opts) {
    auto ideal = build_curve_ideal(p);
    auto ord = curve_order(ideal.ring);
    auto gb = buchberger({ideal.generators, ord}, opts);
    auto min = gb.lt_ideal_minimal_generators();
    RingPtr r = ideal.ring;
    auto m = [&](const std::string& u, const std::string& v) {
        Mono mm(r->size());
        mm.set_exp(r->index_of(u), mm.exp(r->index_of(u)) + 1);
        mm.set_exp(r->index_of(v), mm.exp(r->index_of(v)) + 1);
        return mm;
    };
    std::vector<Mono> expected = {m("f1", "f2"), m("f1", "h2"), m("f2", "h1"),
                                  m("h1", "h1"), m("h2", "h2"), m("h1", "h2")};
    std::sort(expected.begin(), expected.end());
    return min == expected;
}

bool verify_universal_relations(const GBOptions& opts,
                                const UniversalCheckKnobs& knobs) {
    // One ring, curve variables dominant, the ten coordinates recessive.
    std::vector<std::string> vars = {"f1", "f2", "h1", "h2"};
    for (auto& n : coordinate_names()) vars.push_back(n);
    RingPtr big = Ring::make(vars);
    MonomialOrder ord = MonomialOrder::block(
        big, {"f1", "f2", "h1", "h2"},
        {{"f1", 2}, {"f2", 2}, {"h1", 3}, {"h2", 3}}, {},
        {"h1", "h2", "f1", "f2"});

    std::map<std::string, Poly> k;
    for (auto& n : coordinate_names()) k.emplace(n, Poly::var(big, n));
    for (auto& [name, f] : coefficient_formulas()) {
        Poly lifted = f.substitute(big, {});
        if (name == "a" && knobs.flip_a_sign) lifted = -lifted;
        k.emplace(name, lifted);
    }
    auto gens = curve_generators(big, k);
    auto obstructions = spair_obstructions(gens, ord, opts);

    // Coefficients of the remainders, as polynomials in the coordinates.
    RingPtr params = coordinate_ring();
    std::vector<Poly> coeffs;
    for (auto& r : obstructions) {
        std::map<Mono, Poly> grouped;
        for (auto& [m, c] : r.terms()) {
            Mono main(4);
            Mono rest(params->size());
            for (int i = 0; i < big->size(); ++i) {
                if (m.exp(i) == 0) continue;
                int main_idx = i;  // f1,f2,h1,h2 occupy the first four slots
                if (i < 4)
                    main.set_exp(main_idx, m.exp(i));
                else
                    rest.set_exp(i - 4, m.exp(i));
            }
            auto [it, fresh] = grouped.emplace(main, Poly(params));
            it->second.add_term(rest, c);
        }
        for (auto& [m, poly] : grouped) coeffs.push_back(poly);
    }

    if (knobs.zero_minor_ideal) {
        for (auto& c : coeffs)
            if (!c.is_zero()) return false;
        return true;
    }
    auto ordp = MonomialOrder::weighted_deglex(params, {});
    auto mgb = buchberger({minor_polynomials(), ordp}, opts);
    for (auto& c : coeffs)
        if (!normal_form(c, mgb, opts).is_zero()) return false;
    return true;
}

ModuliPoint apply_action(const std::pair<Rat, Rat>& lambda,
                         const ModuliPoint& p) {
    if (lambda.first.is_zero() || lambda.second.is_zero())
        throw ValidationError("torus element with zero component");
    ModuliPoint q = p;
    for (int i = 0; i < 10; ++i) {
        auto [w1, w2] = coordinate_weights()[i];
        q.coord(i) =
            lambda.first.pow(-w1) * lambda.second.pow(-w2) * p.coord(i);
    }
    return q;
}

namespace {

std::vector<Rat> kth_roots(const Rat& m, long k) {
    std::vector<Rat> roots;
    Rat r;
    if (!m.nth_root(static_cast<unsigned long>(k), &r)) return roots;
    roots.push_back(r);
    if (k % 2 == 0 && !r.is_zero()) roots.push_back(-r);
    return roots;
}

struct Constraint {
    long w1, w2;
    Rat value;  // lambda1^w1 lambda2^w2 must equal this
};

// Integer "row reduction" carrying the multiplicative values along.
void combine(Constraint& a, Constraint& b) {
    // Make a.w1 = gcd via Euclid; b.w1 becomes 0.
    while (b.w1 != 0) {
        long q = a.w1 / b.w1;
        Constraint na{a.w1 - q * b.w1, a.w2 - q * b.w2,
                      a.value / b.value.pow(q)};
        a = b;
        b = na;
    }
}

}  // namespace

std::optional<std::pair<Rat, Rat>> same_orbit(const ModuliPoint& p,
                                              const ModuliPoint& q) {
    std::vector<Constraint> cons;
    for (int i = 0; i < 10; ++i) {
        bool pz = p.coord(i).is_zero(), qz = q.coord(i).is_zero();
        if (pz != qz) return std::nullopt;
        if (pz) continue;
        auto [w1, w2] = coordinate_weights()[i];
        cons.push_back({w1, w2, p.coord(i) / q.coord(i)});
    }
    auto verify = [&](const std::pair<Rat, Rat>& lam) {
        if (lam.first.is_zero() || lam.second.is_zero()) return false;
        return apply_action(lam, p) == q;
    };
    if (cons.empty()) return std::pair<Rat, Rat>{Rat(1), Rat(1)};

    // Reduce to a Hermite-style basis of at most two constraints.
    std::vector<Constraint> basis;
    for (auto& c : cons) {
        Constraint cur = c;
        for (auto& b : basis) {
            if (cur.w1 != 0 && b.w1 != 0) {
                combine(b, cur);
            } else if (cur.w1 != 0 && b.w1 == 0) {
                std::swap(b, cur);
            }
            if (cur.w1 == 0 && b.w1 == 0 && cur.w2 != 0 && b.w2 != 0) {
                // Euclid on second components.
                while (cur.w2 != 0) {
                    long qd = b.w2 / cur.w2;
                    Constraint nb{0, b.w2 - qd * cur.w2,
                                  b.value / cur.value.pow(qd)};
                    b = cur;
                    cur = nb;
                }
            }
        }
        if (cur.w1 != 0 || cur.w2 != 0) {
            basis.push_back(cur);
        } else if (!cur.value.is_one()) {
            return std::nullopt;  // inconsistent relation
        }
        if (basis.size() > 2) {
            // Should not happen in rank 2; merge defensively.
            basis.pop_back();
        }
    }

    Constraint* first = nullptr;   // w1 != 0
    Constraint* second = nullptr;  // w1 == 0, w2 != 0
    for (auto& b : basis) {
        if (b.w1 != 0)
            first = &b;
        else if (b.w2 != 0)
            second = &b;
    }

    std::vector<Rat> l2_candidates;
    if (second) {
        long k = std::abs(second->w2);
        Rat target = second->w2 > 0 ? second->value : second->value.inverse();
        l2_candidates = kth_roots(target, k);
    } else if (first && first->w2 == 0) {
        l2_candidates = {Rat(1), Rat(-1)};
    } else if (first) {
        // Single constraint lambda1^a lambda2^b = M with a,b nonzero: realize
        // M as a gcd(a,b)-th power via a Bezout pair.
        long a = first->w1, b = first->w2;
        long g = std::abs(std::gcd(a, b));
        for (Rat w : kth_roots(first->value, g)) {
            // Solve s*a + t*b = g.
            long s = 0, t = 0;
            for (s = -8; s <= 8 && t == 0; ++s) {
                long rem = g - s * a;
                if (b != 0 && rem % b == 0) {
                    t = rem / b;
                    break;
                }
            }
            std::pair<Rat, Rat> lam{w.pow(s), w.pow(t)};
            if (verify(lam)) return lam;
        }
        return std::nullopt;
    } else {
        l2_candidates = {Rat(1)};
    }

    for (const Rat& l2 : l2_candidates) {
        if (l2.is_zero()) continue;
        if (!first) {
            std::pair<Rat, Rat> lam{Rat(1), l2};
            if (verify(lam)) return lam;
            continue;
        }
        long k = std::abs(first->w1);
        Rat rhs = first->value / l2.pow(first->w2);
        Rat target = first->w1 > 0 ? rhs : rhs.inverse();
        for (const Rat& l1 : kth_roots(target, k)) {
            if (l1.is_zero()) continue;
            std::pair<Rat, Rat> lam{l1, l2};
            if (verify(lam)) return lam;
        }
    }
    return std::nullopt;
}

}  // namespace u22
