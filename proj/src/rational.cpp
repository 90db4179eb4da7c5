#include "u22/rational.hpp"

#include <ostream>

namespace u22 {

Rat::Rat(long num, long den) {
    if (den == 0) throw ValidationError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat Rat::parse(const std::string& s) {
    if (s.empty()) throw ValidationError("empty rational literal");
    if (s.find('.') != std::string::npos)
        throw ValidationError("decimal notation not accepted: " + s);
    mpq_class v;
    if (v.set_str(s, 10) != 0)
        throw ValidationError("bad rational literal: " + s);
    if (v.get_den() == 0) throw ValidationError("zero denominator: " + s);
    v.canonicalize();
    return Rat(v);
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw ValidationError("division by zero");
    v_ /= o.v_;
    return *this;
}

Rat Rat::inverse() const {
    if (is_zero()) throw ValidationError("inverse of zero");
    return Rat(mpq_class(1) / v_);
}

Rat Rat::pow(long e) const {
    if (e == 0) return Rat(1);
    Rat base = e > 0 ? *this : inverse();
    unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
    mpq_class acc(1);
    mpq_class b = base.v_;
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return Rat(acc);
}

bool Rat::nth_root(unsigned long k, Rat* out) const {
    if (k == 0) throw ValidationError("0th root");
    if (k == 1) { *out = *this; return true; }
    if (is_zero()) { *out = Rat(0); return true; }
    if (sign() < 0 && k % 2 == 0) return false;
    mpz_class n = num(), d = den();
    mpz_class rn, rd;
    int exact_n = mpz_root(rn.get_mpz_t(), n.get_mpz_t(), k);
    int exact_d = mpz_root(rd.get_mpz_t(), d.get_mpz_t(), k);
    if (!exact_n || !exact_d) return false;
    mpq_class q(rn, rd);
    q.canonicalize();
    *out = Rat(q);
    if (k % 2 == 0 && out->sign() < 0) *out = -*out;
    return true;
}

std::string Rat::str() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.str();
}

}  // namespace u22
