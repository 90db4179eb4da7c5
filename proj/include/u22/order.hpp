#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "u22/polynomial.hpp"

namespace u22 {

enum class Cmp { LT, EQ, GT };

// Admissible monomial order, represented as a sequence of integer weight
// rows compared in turn. Construction appends enough unit rows to make the
// comparison total, and checks admissibility (1 is strictly minimal).
class MonomialOrder {
public:
    // Weighted degree first, ties broken lexicographically by `priority`
    // (highest variable first; defaults to the ring's declaration order).
    static MonomialOrder weighted_deglex(const RingPtr& ring,
                                         const std::map<std::string, long>& weights,
                                         const std::vector<std::string>& priority = {});

    // Explicit weight rows, then lex on `priority`.
    static MonomialOrder matrix(const RingPtr& ring,
                                const std::vector<std::map<std::string, long>>& rows,
                                const std::vector<std::string>& priority = {});

    // Elimination (block) order: `dominant` variables are compared first with
    // the given inner order restricted to them, then the remaining variables.
    // Both blocks use weighted deglex with the supplied weights (weight 1 by
    // default), lex ties within each block following declaration order.
    static MonomialOrder block(const RingPtr& ring,
                               const std::vector<std::string>& dominant,
                               const std::map<std::string, long>& dominant_weights = {},
                               const std::map<std::string, long>& recessive_weights = {},
                               const std::vector<std::string>& dominant_priority = {},
                               const std::vector<std::string>& recessive_priority = {});

    Cmp compare(const Mono& a, const Mono& b) const;
    bool less(const Mono& a, const Mono& b) const { return compare(a, b) == Cmp::LT; }
    bool greater(const Mono& a, const Mono& b) const { return compare(a, b) == Cmp::GT; }

    const RingPtr& ring() const { return ring_; }

    // True when every monomial involving one of `drop` exceeds every
    // monomial free of them; the structural guarantee behind eliminate().
    bool is_elimination_for(const std::set<std::string>& drop) const;

    // Variables of the dominant block, when the order was built by block().
    const std::optional<std::set<std::string>>& dominant_block() const {
        return dominant_;
    }

private:
    MonomialOrder(RingPtr ring, std::vector<std::vector<long>> rows);
    void append_lex(const std::vector<int>& var_sequence);
    void check_admissible() const;

    RingPtr ring_;
    std::vector<std::vector<long>> rows_;
    std::optional<std::set<std::string>> dominant_;
};

// Leading term with respect to an order. Zero polynomial is an error.
std::pair<Mono, Rat> leading_term(const Poly& p, const MonomialOrder& ord);

}  // namespace u22
