#include "u22/order.hpp"

#include <algorithm>

namespace u22 {

MonomialOrder::MonomialOrder(RingPtr ring, std::vector<std::vector<long>> rows)
    : ring_(std::move(ring)), rows_(std::move(rows)) {}

void MonomialOrder::append_lex(const std::vector<int>& var_sequence) {
    for (int idx : var_sequence) {
        std::vector<long> row(ring_->size(), 0);
        row[idx] = 1;
        rows_.push_back(std::move(row));
    }
}

void MonomialOrder::check_admissible() const {
    for (int v = 0; v < ring_->size(); ++v) {
        bool ok = false;
        for (const auto& row : rows_) {
            if (row[v] == 0) continue;
            ok = row[v] > 0;
            break;
        }
        if (!ok)
            throw ValidationError("order not admissible: variable " +
                                  ring_->name(v) + " not positively graded");
    }
}

static std::vector<int> resolve_priority(const RingPtr& ring,
                                         const std::vector<std::string>& priority) {
    std::vector<int> seq;
    if (priority.empty()) {
        for (int i = 0; i < ring->size(); ++i) seq.push_back(i);
        return seq;
    }
    for (const auto& name : priority) {
        int idx = ring->index_of(name);
        if (idx < 0) throw RingMismatchError("unknown variable in order: " + name);
        seq.push_back(idx);
    }
    return seq;
}

static std::vector<long> resolve_weights(const RingPtr& ring,
                                         const std::map<std::string, long>& weights,
                                         const std::vector<int>& support) {
    std::vector<long> row(ring->size(), 0);
    for (int idx : support) row[idx] = 1;
    for (auto& [name, w] : weights) {
        int idx = ring->index_of(name);
        if (idx < 0) throw RingMismatchError("unknown variable in weights: " + name);
        row[idx] = w;
    }
    return row;
}

MonomialOrder MonomialOrder::weighted_deglex(
    const RingPtr& ring, const std::map<std::string, long>& weights,
    const std::vector<std::string>& priority) {
    std::vector<int> all;
    for (int i = 0; i < ring->size(); ++i) all.push_back(i);
    MonomialOrder ord(ring, {resolve_weights(ring, weights, all)});
    ord.append_lex(resolve_priority(ring, priority));
    ord.check_admissible();
    return ord;
}

MonomialOrder MonomialOrder::matrix(
    const RingPtr& ring, const std::vector<std::map<std::string, long>>& rows,
    const std::vector<std::string>& priority) {
    std::vector<std::vector<long>> rs;
    for (const auto& row : rows) rs.push_back(resolve_weights(ring, row, {}));
    MonomialOrder ord(ring, std::move(rs));
    ord.append_lex(resolve_priority(ring, priority));
    ord.check_admissible();
    return ord;
}

MonomialOrder MonomialOrder::block(const RingPtr& ring,
                                   const std::vector<std::string>& dominant,
                                   const std::map<std::string, long>& dominant_weights,
                                   const std::map<std::string, long>& recessive_weights,
                                   const std::vector<std::string>& dominant_priority,
                                   const std::vector<std::string>& recessive_priority) {
    std::set<std::string> dom(dominant.begin(), dominant.end());
    std::vector<int> dom_idx, rec_idx;
    for (int i = 0; i < ring->size(); ++i) {
        if (dom.count(ring->name(i)))
            dom_idx.push_back(i);
        else
            rec_idx.push_back(i);
    }
    if (static_cast<int>(dom.size()) != static_cast<int>(dom_idx.size()))
        throw RingMismatchError("dominant block contains unknown variables");

    std::vector<std::vector<long>> rows;
    rows.push_back(resolve_weights(ring, dominant_weights, dom_idx));
    MonomialOrder ord(ring, std::move(rows));
    ord.append_lex(dominant_priority.empty()
                       ? dom_idx
                       : resolve_priority(ring, dominant_priority));
    ord.rows_.push_back(resolve_weights(ring, recessive_weights, rec_idx));
    ord.append_lex(recessive_priority.empty()
                       ? rec_idx
                       : resolve_priority(ring, recessive_priority));
    ord.check_admissible();
    ord.dominant_ = std::move(dom);
    return ord;
}

Cmp MonomialOrder::compare(const Mono& a, const Mono& b) const {
    if (a.nvars() != ring_->size() || b.nvars() != ring_->size())
        throw RingMismatchError("monomial from a different ring");
    for (const auto& row : rows_) {
        long da = 0, db = 0;
        for (int i = 0; i < ring_->size(); ++i) {
            da += row[i] * a.exp(i);
            db += row[i] * b.exp(i);
        }
        if (da != db) return da < db ? Cmp::LT : Cmp::GT;
    }
    return Cmp::EQ;
}

bool MonomialOrder::is_elimination_for(const std::set<std::string>& drop) const {
    if (!dominant_) return false;
    for (const auto& v : drop)
        if (!dominant_->count(v)) return false;
    // All dominant variables must be dropped together with `drop` actually
    // dominated: a monomial in non-dominant variables must compare below any
    // monomial containing a dominant variable. That holds by construction of
    // block(); require drop == dominant to keep the guarantee exact.
    return drop == *dominant_;
}

std::pair<Mono, Rat> leading_term(const Poly& p, const MonomialOrder& ord) {
    if (p.is_zero()) throw ValidationError("leading term of zero");
    if (!same_ring(p.ring(), ord.ring()))
        throw RingMismatchError("order over a different ring");
    const std::pair<const Mono, Rat>* best = nullptr;
    for (auto& t : p.terms()) {
        if (!best || ord.greater(t.first, best->first)) best = &t;
    }
    return {best->first, best->second};
}

}  // namespace u22
