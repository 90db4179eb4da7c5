#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "u22/rational.hpp"

namespace u22 {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// A declared variable context. Polynomials over different rings never mix.
class Ring {
public:
    static RingPtr make(std::vector<std::string> vars);

    int size() const { return static_cast<int>(vars_.size()); }
    const std::string& name(int i) const { return vars_[i]; }
    const std::vector<std::string>& vars() const { return vars_; }
    // -1 when the variable is not declared.
    int index_of(const std::string& v) const;
    bool same_as(const Ring& o) const { return this == &o || vars_ == o.vars_; }

private:
    explicit Ring(std::vector<std::string> vars);
    std::vector<std::string> vars_;
    std::map<std::string, int> index_;
};

bool same_ring(const RingPtr& a, const RingPtr& b);

// Exponent vector over a fixed ring. The container ordering (operator<) is
// plain lexicographic on exponents and is unrelated to monomial orders.
class Mono {
public:
    Mono() = default;
    explicit Mono(int nvars) : e_(nvars, 0) {}
    static Mono var(const RingPtr& r, int idx, int exp = 1);

    int exp(int i) const { return e_[i]; }
    void set_exp(int i, int v) { e_[i] = v; }
    int nvars() const { return static_cast<int>(e_.size()); }
    long total_degree() const;
    bool is_one() const;

    Mono operator*(const Mono& o) const;
    bool divides(const Mono& o) const;        // this | o
    Mono divided_into(const Mono& o) const;   // o / this
    static Mono lcm(const Mono& a, const Mono& b);
    bool coprime(const Mono& o) const;

    friend bool operator==(const Mono& a, const Mono& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Mono& a, const Mono& b) { return a.e_ != b.e_; }
    friend bool operator<(const Mono& a, const Mono& b) { return a.e_ < b.e_; }

private:
    std::vector<int> e_;
};

// Sparse multivariate polynomial with exact rational coefficients.
// Invariant: no zero coefficients stored.
class Poly {
public:
    Poly() = default;
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

    static Poly zero(const RingPtr& r) { return Poly(r); }
    static Poly constant(const RingPtr& r, const Rat& c);
    static Poly var(const RingPtr& r, const std::string& name, int exp = 1);
    static Poly term(const RingPtr& r, const Rat& c, const Mono& m);

    const RingPtr& ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant_value() const;  // value when is_constant()
    int term_count() const { return static_cast<int>(terms_.size()); }
    const std::map<Mono, Rat>& terms() const { return terms_; }
    long total_degree() const;

    void add_term(const Mono& m, const Rat& c);

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly scaled(const Rat& c) const;
    Poly times_term(const Rat& c, const Mono& m) const;
    Poly pow(long e) const;

    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Exact evaluation; every variable occurring in the polynomial must be
    // assigned.
    Rat evaluate(const std::map<std::string, Rat>& point) const;

    // Composition into target ring. Variables without an image must exist in
    // the target ring and map to themselves.
    Poly substitute(const RingPtr& target,
                    const std::map<std::string, Poly>& images) const;

    // Human-readable sum of terms "c * v1^e1 * v2^e2".
    std::string str() const;

private:
    RingPtr ring_;
    std::map<Mono, Rat> terms_;
};

}  // namespace u22
