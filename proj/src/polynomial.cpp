#include "u22/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace u22 {

Ring::Ring(std::vector<std::string> vars) : vars_(std::move(vars)) {
    for (int i = 0; i < static_cast<int>(vars_.size()); ++i) {
        if (!index_.emplace(vars_[i], i).second)
            throw ValidationError("duplicate variable: " + vars_[i]);
    }
}

RingPtr Ring::make(std::vector<std::string> vars) {
    return RingPtr(new Ring(std::move(vars)));
}

int Ring::index_of(const std::string& v) const {
    auto it = index_.find(v);
    return it == index_.end() ? -1 : it->second;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a && b && a->same_as(*b);
}

Mono Mono::var(const RingPtr& r, int idx, int exp) {
    Mono m(r->size());
    m.e_[idx] = exp;
    return m;
}

long Mono::total_degree() const {
    long d = 0;
    for (int v : e_) d += v;
    return d;
}

bool Mono::is_one() const {
    return std::all_of(e_.begin(), e_.end(), [](int v) { return v == 0; });
}

Mono Mono::operator*(const Mono& o) const {
    Mono r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
}

bool Mono::divides(const Mono& o) const {
    for (size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

Mono Mono::divided_into(const Mono& o) const {
    Mono r = o;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= e_[i];
    return r;
}

Mono Mono::lcm(const Mono& a, const Mono& b) {
    Mono r = a;
    for (size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
    return r;
}

bool Mono::coprime(const Mono& o) const {
    for (size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > 0 && o.e_[i] > 0) return false;
    return true;
}

Poly Poly::constant(const RingPtr& r, const Rat& c) {
    Poly p(r);
    p.add_term(Mono(r->size()), c);
    return p;
}

Poly Poly::var(const RingPtr& r, const std::string& name, int exp) {
    int idx = r->index_of(name);
    if (idx < 0) throw RingMismatchError("unknown variable: " + name);
    Poly p(r);
    p.add_term(Mono::var(r, idx, exp), Rat(1));
    return p;
}

Poly Poly::term(const RingPtr& r, const Rat& c, const Mono& m) {
    Poly p(r);
    p.add_term(m, c);
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rat Poly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    if (!is_constant()) throw ValidationError("polynomial is not constant");
    return terms_.begin()->second;
}

long Poly::total_degree() const {
    long d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

void Poly::add_term(const Mono& m, const Rat& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r(ring_);
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

static void check_rings(const Poly& a, const Poly& b) {
    if (!same_ring(a.ring(), b.ring()))
        throw RingMismatchError("polynomials over different rings");
}

Poly& Poly::operator+=(const Poly& o) {
    check_rings(*this, o);
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check_rings(*this, o);
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    check_rings(a, b);
    Poly r(a.ring_);
    for (auto& [ma, ca] : a.terms_)
        for (auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Poly Poly::scaled(const Rat& c) const {
    Poly r(ring_);
    if (c.is_zero()) return r;
    for (auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

Poly Poly::times_term(const Rat& c, const Mono& m) const {
    Poly r(ring_);
    if (c.is_zero()) return r;
    for (auto& [mm, v] : terms_) r.terms_.emplace(mm * m, v * c);
    return r;
}

Poly Poly::pow(long e) const {
    if (e < 0) throw ValidationError("negative polynomial power");
    Poly acc = Poly::constant(ring_, Rat(1));
    Poly base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool operator==(const Poly& a, const Poly& b) {
    if (!same_ring(a.ring(), b.ring())) return false;
    return a.terms_ == b.terms_;
}

Rat Poly::evaluate(const std::map<std::string, Rat>& point) const {
    std::vector<const Rat*> vals(ring_ ? ring_->size() : 0, nullptr);
    for (auto& [name, v] : point) {
        int idx = ring_->index_of(name);
        if (idx >= 0) vals[idx] = &v;
    }
    Rat total(0);
    for (auto& [m, c] : terms_) {
        Rat t = c;
        for (int i = 0; i < m.nvars(); ++i) {
            if (m.exp(i) == 0) continue;
            if (!vals[i])
                throw ValidationError("evaluate: missing variable " + ring_->name(i));
            t *= vals[i]->pow(m.exp(i));
        }
        total += t;
    }
    return total;
}

Poly Poly::substitute(const RingPtr& target,
                      const std::map<std::string, Poly>& images) const {
    std::vector<Poly> img(ring_ ? ring_->size() : 0);
    for (int i = 0; i < (ring_ ? ring_->size() : 0); ++i) {
        auto it = images.find(ring_->name(i));
        if (it != images.end()) {
            if (!same_ring(it->second.ring(), target))
                throw RingMismatchError("substitution image not in target ring");
            img[i] = it->second;
        } else if (target->index_of(ring_->name(i)) >= 0) {
            img[i] = Poly::var(target, ring_->name(i));
        }
        // Variables with neither an image nor a target counterpart only
        // matter if they actually occur; checked per term below.
    }
    Poly r(target);
    for (auto& [m, c] : terms_) {
        Poly t = Poly::constant(target, c);
        for (int i = 0; i < m.nvars(); ++i) {
            if (m.exp(i) == 0) continue;
            if (img[i].ring() == nullptr)
                throw RingMismatchError("substitute: no image for variable " +
                                        ring_->name(i));
            t = t * img[i].pow(m.exp(i));
        }
        r += t;
    }
    return r;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    // Deterministic display: descending total degree, then exponent order.
    std::vector<const std::pair<const Mono, Rat>*> ts;
    for (auto& t : terms_) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(), [](auto* a, auto* b) {
        long da = a->first.total_degree(), db = b->first.total_degree();
        if (da != db) return da > db;
        return b->first < a->first;
    });
    std::ostringstream os;
    bool first = true;
    for (auto* t : ts) {
        const auto& [m, c] = *t;
        Rat cc = c;
        if (first) {
            if (cc.sign() < 0) { os << "-"; cc = -cc; }
        } else {
            os << (cc.sign() < 0 ? " - " : " + ");
            if (cc.sign() < 0) cc = -cc;
        }
        first = false;
        bool printed = false;
        if (!cc.is_one() || m.is_one()) {
            os << cc.str();
            printed = true;
        }
        for (int i = 0; i < m.nvars(); ++i) {
            if (m.exp(i) == 0) continue;
            if (printed) os << " * ";
            os << ring_->name(i);
            if (m.exp(i) != 1) os << "^" << m.exp(i);
            printed = true;
        }
    }
    return os.str();
}

}  // namespace u22
