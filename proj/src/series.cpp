#include "u22/series.hpp"

#include <algorithm>
#include <sstream>

#include "u22/errors.hpp"

namespace u22 {

Series Series::monomial(const std::string& var, const Rat& c, int exp, int prec) {
    Series s(var, prec);
    if (exp < prec && !c.is_zero()) s.coeff_[exp] = c;
    return s;
}

void Series::normalize() {
    for (auto it = coeff_.begin(); it != coeff_.end();) {
        if (it->second.is_zero() || it->first >= prec_)
            it = coeff_.erase(it);
        else
            ++it;
    }
}

void Series::check_vars(const Series& a, const Series& b) {
    if (a.var_ != b.var_)
        throw RingMismatchError("series in different variables: " + a.var_ +
                                " vs " + b.var_);
}

int Series::valuation() const {
    if (coeff_.empty())
        throw PrecisionError("valuation of a series with no known nonzero term");
    return coeff_.begin()->first;
}

Rat Series::coefficient(int k) const {
    if (k >= prec_)
        throw PrecisionError("coefficient at exponent " + std::to_string(k) +
                             " beyond precision " + std::to_string(prec_));
    auto it = coeff_.find(k);
    return it == coeff_.end() ? Rat(0) : it->second;
}

void Series::set_coefficient(int k, const Rat& c) {
    if (k >= prec_) return;
    if (c.is_zero())
        coeff_.erase(k);
    else
        coeff_[k] = c;
}

Series Series::truncated(int prec) const {
    Series r = *this;
    r.prec_ = std::min(prec_, prec);
    r.normalize();
    return r;
}

Series Series::operator-() const {
    Series r(var_, prec_);
    for (auto& [k, c] : coeff_) r.coeff_.emplace(k, -c);
    return r;
}

Series operator+(const Series& a, const Series& b) {
    Series::check_vars(a, b);
    Series r(a.var_, std::min(a.prec_, b.prec_));
    r.coeff_ = a.coeff_;
    for (auto& [k, c] : b.coeff_) {
        auto [it, fresh] = r.coeff_.emplace(k, c);
        if (!fresh) it->second += c;
    }
    r.normalize();
    return r;
}

Series operator-(const Series& a, const Series& b) { return a + (-b); }

Series operator*(const Series& a, const Series& b) {
    Series::check_vars(a, b);
    // Unknown tails shift by the other factor's valuation.
    long va = a.coeff_.empty() ? a.prec_ : a.coeff_.begin()->first;
    long vb = b.coeff_.empty() ? b.prec_ : b.coeff_.begin()->first;
    long p = std::min<long>(static_cast<long>(a.prec_) + vb,
                            static_cast<long>(b.prec_) + va);
    p = std::min<long>(p, Series::kExact);
    Series r(a.var_, static_cast<int>(p));
    for (auto& [ka, ca] : a.coeff_)
        for (auto& [kb, cb] : b.coeff_) {
            if (ka + kb >= r.prec_) continue;
            auto [it, fresh] = r.coeff_.emplace(ka + kb, ca * cb);
            if (!fresh) it->second += ca * cb;
        }
    r.normalize();
    return r;
}

Series Series::scaled(const Rat& c) const {
    Series r(var_, prec_);
    if (c.is_zero()) return r;
    for (auto& [k, v] : coeff_) r.coeff_.emplace(k, v * c);
    return r;
}

Series Series::shifted(int k) const {
    Series r(var_, prec_ >= kExact ? kExact : prec_ + k);
    for (auto& [e, c] : coeff_) r.coeff_.emplace(e + k, c);
    return r;
}

Series Series::pow(long e) const {
    if (e < 0) return reciprocal().pow(-e);
    Series acc = Series::monomial(var_, Rat(1), 0);
    Series base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Series Series::reciprocal() const {
    int v = valuation();  // throws when nothing known
    // f = c t^v (1 + u), u of valuation >= 1 relative to t^0.
    Rat lead = coeff_.begin()->second;
    Series u = shifted(-v).scaled(lead.inverse());
    u.set_coefficient(0, Rat(0));
    // Known window of u: exponents in [1, prec - v).
    int window = exact() ? kExact : prec_ - v;
    if (window <= 0) throw PrecisionError("reciprocal: no known window");
    Series geo = Series::monomial(var_, Rat(1), 0,
                                  window >= kExact ? kExact : window);
    if (!u.known_zero()) {
        Series acc = Series::monomial(var_, Rat(1), 0, geo.precision());
        Series up = Series::monomial(var_, Rat(1), 0, geo.precision());
        int uval = u.valuation();
        int terms = window >= kExact ? 0 : window / uval + 1;
        if (window >= kExact) {
            // Exact input: cap by requesting a large finite window. Callers
            // needing exact reciprocals of non-monomial series must truncate
            // first.
            throw PrecisionError(
                "reciprocal of exact non-monomial series: truncate first");
        }
        for (int i = 1; i <= terms; ++i) {
            up = (up * u).truncated(window);
            if (i % 2 == 1)
                acc = acc - up;
            else
                acc = acc + up;
            if (up.known_zero()) break;
        }
        geo = acc;
    }
    return geo.shifted(-v).scaled(lead.inverse());
}

Series Series::compose(const Series& inner) const {
    check_vars(*this, inner);
    if (inner.known_zero() || inner.valuation() < 1)
        throw ValidationError("compose requires inner series of valuation >= 1");
    int vg = inner.valuation();
    long vf = coeff_.empty() ? 0 : coeff_.begin()->first;
    // Result precision: unknown tail of f enters at >= prec_ * vg (for
    // positive prec), and the inner uncertainty propagates through f'.
    long p = kExact;
    if (!exact()) p = std::min<long>(p, static_cast<long>(prec_) * vg);
    if (!inner.exact()) {
        long deriv_val = vf < 1 ? (vf - 1) * vg : (vf - 1);
        p = std::min<long>(p, static_cast<long>(inner.prec_) + deriv_val);
    }
    Series inner_t = inner;
    if (p < kExact) inner_t = inner.truncated(static_cast<int>(p) + 8);

    Series result(var_, static_cast<int>(std::min<long>(p, kExact)));
    if (coeff_.empty()) return result;

    // Positive part via Horner on descending exponents; negative part via
    // reciprocal powers.
    Series recip(var_);
    if (vf < 0) {
        Series g = inner_t;
        if (g.exact()) g = g.truncated(static_cast<int>(std::min<long>(
            p < kExact ? p + 8 - vf : 64, kExact)));
        recip = g.reciprocal();
    }
    for (auto& [k, c] : coeff_) {
        Series term = (k >= 0 ? inner_t.pow(k) : recip.pow(-static_cast<long>(k)))
                          .scaled(c);
        result = result + term.truncated(result.precision());
    }
    return result.truncated(static_cast<int>(std::min<long>(p, kExact)));
}

Series Series::functional_inverse() const {
    if (known_zero() || valuation() != 1 || !coefficient(1).is_one())
        throw ValidationError(
            "functional inverse needs valuation 1 and unit leading coefficient");
    int p = exact() ? 64 : prec_;  // exact polynomials: generous default window
    // Solve u(s) with self(u(s)) = s degree by degree.
    Series u = Series::monomial(var_, Rat(1), 1, p);
    for (int d = 2; d < p; ++d) {
        Series err = compose(u).truncated(d + 1);
        Rat bad = err.coefficient(d);
        if (!bad.is_zero()) {
            u.set_coefficient(d, u.known_terms().count(d) ? u.coefficient(d) - bad
                                                          : -bad);
        }
    }
    return u;
}

std::string Series::str() const {
    std::ostringstream os;
    bool first = true;
    for (auto& [k, c] : coeff_) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        if (k != 0) os << "*" << var_ << "^" << k;
    }
    if (first) os << "0";
    if (!exact()) os << " + O(" << var_ << "^" << prec_ << ")";
    return os.str();
}

}  // namespace u22
