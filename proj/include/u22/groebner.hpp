#pragma once

#include <optional>
#include <set>
#include <vector>

#include "u22/order.hpp"

namespace u22 {

struct GBOptions {
    // Each single reduction step (leading-term cancellation) counts once.
    // Exceeding the budget raises BudgetError, never silent truncation.
    long max_steps = 20'000'000;
};

struct IdealPresentation {
    std::vector<Poly> generators;
    MonomialOrder order;
};

class GroebnerBasis {
public:
    GroebnerBasis(std::vector<Poly> elems, MonomialOrder order);

    const std::vector<Poly>& elements() const { return elems_; }
    const std::vector<Mono>& leading_monomials() const { return lms_; }
    const MonomialOrder& order() const { return order_; }

    // Minimal generators of the leading-term ideal.
    std::vector<Mono> lt_ideal_minimal_generators() const;

private:
    std::vector<Poly> elems_;
    std::vector<Mono> lms_;
    MonomialOrder order_;
};

// Full division: no term of the remainder is divisible by any leading
// monomial of the divisors.
Poly normal_form(const Poly& p, const std::vector<Poly>& divisors,
                 const MonomialOrder& order, const GBOptions& opts = {},
                 long* steps = nullptr);
Poly normal_form(const Poly& p, const GroebnerBasis& gb,
                 const GBOptions& opts = {});

// Buchberger completion with normal pair selection, coprime-lcm and chain
// pruning, followed by auto-reduction. Deterministic output.
GroebnerBasis buchberger(const IdealPresentation& ideal,
                         const GBOptions& opts = {});

// Parametric check: the generators must have unit leading coefficients on
// pure dominant-block monomials (validated; refusal otherwise). Returns the
// normal forms of all S-polynomials against the fixed generator set, nonzero
// ones only. Empty result means the generators already form a Groebner basis.
std::vector<Poly> spair_obstructions(const std::vector<Poly>& gens,
                                     const MonomialOrder& order,
                                     const GBOptions& opts = {});

bool ideal_equal(const IdealPresentation& a, const IdealPresentation& b,
                 const GBOptions& opts = {});

// Generators of I ∩ k[vars \ drop]; the presentation's order must be an
// elimination order for `drop`. Results live in the ring without `drop`.
std::vector<Poly> eliminate(const IdealPresentation& ideal,
                            const std::set<std::string>& drop,
                            const GBOptions& opts = {});

// Number of standard monomials, or nullopt when infinite.
std::optional<long> quotient_colength(const IdealPresentation& ideal,
                                      const GBOptions& opts = {});

// The standard monomials themselves, or nullopt when infinitely many.
std::optional<std::vector<Mono>> standard_monomials(
    const IdealPresentation& ideal, const GBOptions& opts = {});

// J1 ∩ J2 via an auxiliary variable: t*J1 + (1-t)*J2, eliminate t.
std::vector<Poly> ideal_intersection(const std::vector<Poly>& j1,
                                     const std::vector<Poly>& j2,
                                     const GBOptions& opts = {});

}  // namespace u22
