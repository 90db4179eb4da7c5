#include "u22/groebner.hpp"

#include <algorithm>
#include <deque>

namespace u22 {

namespace {

struct Budget {
    long used = 0;
    long cap;
    explicit Budget(long cap) : cap(cap) {}
    void tick(long n = 1) {
        used += n;
        if (used > cap)
            throw BudgetError("reduction budget exhausted (" +
                              std::to_string(cap) + " steps)");
    }
};

Poly make_monic(const Poly& p, const MonomialOrder& ord) {
    if (p.is_zero()) return p;
    auto [lm, lc] = leading_term(p, ord);
    (void)lm;
    return lc.is_one() ? p : p.scaled(lc.inverse());
}

Poly reduce_full(const Poly& p, const std::vector<Poly>& divisors,
                 const std::vector<Mono>& lms, const std::vector<Rat>& lcs,
                 const MonomialOrder& ord, Budget& budget) {
    Poly rem(p.ring());
    Poly work = p;
    while (!work.is_zero()) {
        auto [lm, lc] = leading_term(work, ord);
        bool reduced = false;
        for (size_t i = 0; i < divisors.size(); ++i) {
            if (!lms[i].divides(lm)) continue;
            budget.tick();
            Mono q = lms[i].divided_into(lm);
            work -= divisors[i].times_term(lc / lcs[i], q);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.add_term(lm, lc);
            // Remove the settled leading term and continue with the tail.
            work -= Poly::term(work.ring(), lc, lm);
        }
    }
    return rem;
}

Poly spoly(const Poly& f, const Poly& g, const Mono& lmf, const Rat& lcf,
           const Mono& lmg, const Rat& lcg) {
    Mono l = Mono::lcm(lmf, lmg);
    return f.times_term(lcf.inverse(), lmf.divided_into(l)) -
           g.times_term(lcg.inverse(), lmg.divided_into(l));
}

}  // namespace

GroebnerBasis::GroebnerBasis(std::vector<Poly> elems, MonomialOrder order)
    : elems_(std::move(elems)), order_(std::move(order)) {
    for (auto& e : elems_) lms_.push_back(leading_term(e, order_).first);
}

std::vector<Mono> GroebnerBasis::lt_ideal_minimal_generators() const {
    std::vector<Mono> min;
    for (size_t i = 0; i < lms_.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < lms_.size(); ++j) {
            if (i == j) continue;
            if (lms_[j].divides(lms_[i]) && lms_[j] != lms_[i]) {
                redundant = true;
                break;
            }
            if (lms_[j] == lms_[i] && j < i) {
                redundant = true;
                break;
            }
        }
        if (!redundant) min.push_back(lms_[i]);
    }
    std::sort(min.begin(), min.end());
    min.erase(std::unique(min.begin(), min.end()), min.end());
    return min;
}

Poly normal_form(const Poly& p, const std::vector<Poly>& divisors,
                 const MonomialOrder& order, const GBOptions& opts,
                 long* steps) {
    std::vector<Mono> lms;
    std::vector<Rat> lcs;
    for (auto& d : divisors) {
        if (!same_ring(d.ring(), p.ring()))
            throw RingMismatchError("normal_form: mixed rings");
        auto [lm, lc] = leading_term(d, order);
        lms.push_back(lm);
        lcs.push_back(lc);
    }
    Budget budget(opts.max_steps);
    Poly r = reduce_full(p, divisors, lms, lcs, order, budget);
    if (steps) *steps = budget.used;
    return r;
}

Poly normal_form(const Poly& p, const GroebnerBasis& gb, const GBOptions& opts) {
    return normal_form(p, gb.elements(), gb.order(), opts);
}

GroebnerBasis buchberger(const IdealPresentation& ideal, const GBOptions& opts) {
    if (ideal.generators.empty())
        throw ValidationError("empty generator list");
    const MonomialOrder& ord = ideal.order;
    Budget budget(opts.max_steps);

    std::vector<Poly> basis;
    std::vector<Mono> lms;
    std::vector<Rat> lcs;
    auto push = [&](const Poly& p) {
        Poly m = make_monic(p, ord);
        basis.push_back(m);
        auto [lm, lc] = leading_term(m, ord);
        lms.push_back(lm);
        lcs.push_back(lc);
    };
    for (auto& g : ideal.generators) {
        if (!same_ring(g.ring(), ord.ring()))
            throw RingMismatchError("generator outside the order's ring");
        if (!g.is_zero()) push(g);
    }
    if (basis.empty()) throw ValidationError("ideal generated by zero");

    struct Pair {
        size_t i, j;
        Mono lcm;
    };
    auto pair_less = [&](const Pair& a, const Pair& b) {
        Cmp c = ord.compare(a.lcm, b.lcm);
        if (c != Cmp::EQ) return c == Cmp::LT;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::vector<Pair> pairs;
    auto add_pairs_for = [&](size_t k) {
        for (size_t i = 0; i < k; ++i)
            pairs.push_back({i, k, Mono::lcm(lms[i], lms[k])});
        std::sort(pairs.begin(), pairs.end(), pair_less);
    };
    for (size_t k = 1; k < basis.size(); ++k)
        for (size_t i = 0; i < k; ++i)
            pairs.push_back({i, k, Mono::lcm(lms[i], lms[k])});
    std::sort(pairs.begin(), pairs.end(), pair_less);

    std::set<std::pair<size_t, size_t>> done;
    while (!pairs.empty()) {
        Pair pr = pairs.front();
        pairs.erase(pairs.begin());
        done.insert({pr.i, pr.j});
        // Coprime criterion.
        if (lms[pr.i].coprime(lms[pr.j])) continue;
        // Chain criterion: some k with lm_k | lcm and both pairs settled.
        bool chained = false;
        for (size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!lms[k].divides(pr.lcm)) continue;
            auto key1 = std::minmax(pr.i, k);
            auto key2 = std::minmax(pr.j, k);
            if (done.count({key1.first, key1.second}) &&
                done.count({key2.first, key2.second}))
                chained = true;
        }
        if (chained) continue;

        Poly s = spoly(basis[pr.i], basis[pr.j], lms[pr.i], lcs[pr.i],
                       lms[pr.j], lcs[pr.j]);
        Poly r = reduce_full(s, basis, lms, lcs, ord, budget);
        if (r.is_zero()) continue;
        push(r);
        add_pairs_for(basis.size() - 1);
    }

    // Minimalize: drop elements whose leading monomial is divisible by
    // another one's.
    std::vector<char> keep(basis.size(), 1);
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < basis.size(); ++j) {
            if (i == j || !keep[i] || !keep[j]) continue;
            if (lms[j].divides(lms[i]) && (lms[j] != lms[i] || j < i)) {
                keep[i] = 0;
                break;
            }
        }
    std::vector<Poly> min_basis;
    std::vector<Mono> min_lms;
    for (size_t i = 0; i < basis.size(); ++i)
        if (keep[i]) {
            min_basis.push_back(basis[i]);
            min_lms.push_back(lms[i]);
        }
    // Auto-reduce tails.
    std::vector<Poly> reduced(min_basis.size());
    std::vector<Rat> ones(min_basis.size(), Rat(1));
    for (size_t i = 0; i < min_basis.size(); ++i) {
        std::vector<Poly> others;
        std::vector<Mono> olms;
        std::vector<Rat> olcs;
        for (size_t j = 0; j < min_basis.size(); ++j)
            if (j != i) {
                others.push_back(min_basis[j]);
                olms.push_back(min_lms[j]);
                olcs.push_back(Rat(1));
            }
        reduced[i] = others.empty()
                         ? min_basis[i]
                         : reduce_full(min_basis[i], others, olms, olcs, ord,
                                       budget);
    }
    // Deterministic element ordering: descending leading monomial.
    std::sort(reduced.begin(), reduced.end(), [&](const Poly& a, const Poly& b) {
        return ord.greater(leading_term(a, ord).first,
                           leading_term(b, ord).first);
    });
    return GroebnerBasis(std::move(reduced), ord);
}

std::vector<Poly> spair_obstructions(const std::vector<Poly>& gens,
                                     const MonomialOrder& order,
                                     const GBOptions& opts) {
    std::vector<Mono> lms;
    std::vector<Rat> lcs;
    const auto& dom = order.dominant_block();
    for (auto& g : gens) {
        auto [lm, lc] = leading_term(g, order);
        if (!lc.is_one())
            throw ValidationError(
                "parametric mode requires unit leading coefficients, got " +
                lc.str());
        if (dom) {
            for (int v = 0; v < order.ring()->size(); ++v)
                if (lm.exp(v) > 0 && !dom->count(order.ring()->name(v)))
                    throw ValidationError(
                        "parametric mode: leading monomial touches recessive "
                        "variable " +
                        order.ring()->name(v));
        }
        lms.push_back(lm);
        lcs.push_back(lc);
    }
    Budget budget(opts.max_steps);
    std::vector<Poly> out;
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i + 1; j < gens.size(); ++j) {
            if (lms[i].coprime(lms[j])) continue;
            Poly s = spoly(gens[i], gens[j], lms[i], lcs[i], lms[j], lcs[j]);
            Poly r = reduce_full(s, gens, lms, lcs, order, budget);
            if (!r.is_zero()) out.push_back(r);
        }
    return out;
}

bool ideal_equal(const IdealPresentation& a, const IdealPresentation& b,
                 const GBOptions& opts) {
    if (!same_ring(a.order.ring(), b.order.ring()))
        throw RingMismatchError("ideal_equal: different rings");
    GroebnerBasis ga = buchberger(a, opts);
    GroebnerBasis gb = buchberger(b, opts);
    for (auto& g : b.generators)
        if (!normal_form(g, ga, opts).is_zero()) return false;
    for (auto& g : a.generators)
        if (!normal_form(g, gb, opts).is_zero()) return false;
    return true;
}

std::vector<Poly> eliminate(const IdealPresentation& ideal,
                            const std::set<std::string>& drop,
                            const GBOptions& opts) {
    if (!ideal.order.is_elimination_for(drop))
        throw ValidationError("order is not an elimination order for the "
                              "dropped variables");
    GroebnerBasis gb = buchberger(ideal, opts);
    const RingPtr& ring = ideal.order.ring();
    std::vector<std::string> kept;
    for (auto& v : ring->vars())
        if (!drop.count(v)) kept.push_back(v);
    RingPtr sub = Ring::make(kept);
    std::vector<Poly> out;
    for (auto& e : gb.elements()) {
        bool pure = true;
        for (auto& [m, c] : e.terms()) {
            for (int i = 0; i < ring->size() && pure; ++i)
                if (m.exp(i) > 0 && drop.count(ring->name(i))) pure = false;
            if (!pure) break;
        }
        if (pure) out.push_back(e.substitute(sub, {}));
    }
    return out;
}

std::optional<long> quotient_colength(const IdealPresentation& ideal,
                                      const GBOptions& opts) {
    auto sm = standard_monomials(ideal, opts);
    if (!sm) return std::nullopt;
    return static_cast<long>(sm->size());
}

std::optional<std::vector<Mono>> standard_monomials(
    const IdealPresentation& ideal, const GBOptions& opts) {
    GroebnerBasis gb = buchberger(ideal, opts);
    const RingPtr& ring = ideal.order.ring();
    const auto& lms = gb.leading_monomials();
    // Finite iff every variable has a pure power among the leading terms.
    for (int v = 0; v < ring->size(); ++v) {
        bool found = false;
        for (auto& lm : lms) {
            bool pure = lm.exp(v) > 0;
            for (int w = 0; w < ring->size() && pure; ++w)
                if (w != v && lm.exp(w) > 0) pure = false;
            if (pure) {
                found = true;
                break;
            }
        }
        if (!found) return std::nullopt;
    }
    auto is_standard = [&](const Mono& m) {
        for (auto& lm : lms)
            if (lm.divides(m)) return false;
        return true;
    };
    std::set<Mono> seen;
    std::deque<Mono> queue;
    Mono one(ring->size());
    if (!is_standard(one)) return std::vector<Mono>{};
    seen.insert(one);
    queue.push_back(one);
    while (!queue.empty()) {
        Mono m = queue.front();
        queue.pop_front();
        for (int v = 0; v < ring->size(); ++v) {
            Mono next = m * Mono::var(ring, v);
            if (!is_standard(next) || seen.count(next)) continue;
            seen.insert(next);
            queue.push_back(next);
        }
    }
    return std::vector<Mono>(seen.begin(), seen.end());
}

std::vector<Poly> ideal_intersection(const std::vector<Poly>& j1,
                                     const std::vector<Poly>& j2,
                                     const GBOptions& opts) {
    if (j1.empty() || j2.empty())
        throw ValidationError("ideal_intersection: empty generator list");
    RingPtr base = j1.front().ring();
    for (auto& g : j2)
        if (!same_ring(g.ring(), base))
            throw RingMismatchError("ideal_intersection: mixed rings");
    std::vector<std::string> ext_vars = {"_t"};
    for (auto& v : base->vars()) ext_vars.push_back(v);
    RingPtr ext = Ring::make(ext_vars);
    Poly t = Poly::var(ext, "_t");
    Poly one_minus_t = Poly::constant(ext, Rat(1)) - t;
    std::vector<Poly> gens;
    for (auto& g : j1) gens.push_back(t * g.substitute(ext, {}));
    for (auto& g : j2) gens.push_back(one_minus_t * g.substitute(ext, {}));
    MonomialOrder ord = MonomialOrder::block(ext, {"_t"});
    auto elim = eliminate({gens, ord}, {"_t"}, opts);
    // Map back into the base ring.
    std::vector<Poly> out;
    for (auto& e : elim) out.push_back(e.substitute(base, {}));
    return out;
}

}  // namespace u22
