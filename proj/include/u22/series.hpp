#pragma once

#include <limits>
#include <map>
#include <string>

#include "u22/rational.hpp"

namespace u22 {

// Truncated Laurent series in one variable. Coefficients at exponents >= the
// precision are unknown, and reading them is an error, never silently zero.
class Series {
public:
    static constexpr int kExact = std::numeric_limits<int>::max() / 4;

    Series() : prec_(kExact) {}
    explicit Series(std::string var, int prec = kExact)
        : var_(std::move(var)), prec_(prec) {}

    static Series zero(const std::string& var, int prec = kExact) {
        return Series(var, prec);
    }
    static Series monomial(const std::string& var, const Rat& c, int exp,
                           int prec = kExact);
    // t itself (exact).
    static Series variable(const std::string& var) {
        return monomial(var, Rat(1), 1);
    }

    const std::string& var() const { return var_; }
    int precision() const { return prec_; }
    bool exact() const { return prec_ >= kExact; }

    // Smallest exponent with a nonzero known coefficient. Error when nothing
    // is known to be nonzero (identically-zero known part).
    int valuation() const;
    bool known_zero() const { return coeff_.empty(); }

    // Error when k >= precision.
    Rat coefficient(int k) const;
    // Unchecked read of a stored coefficient (0 when absent and k < prec).
    void set_coefficient(int k, const Rat& c);

    Series truncated(int prec) const;

    Series operator-() const;
    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    friend Series operator*(const Series& a, const Series& b);
    Series scaled(const Rat& c) const;
    Series shifted(int k) const;  // multiply by t^k
    // Integer power; negative exponents use reciprocal (valuation must be
    // exactly known).
    Series pow(long e) const;

    // Multiplicative inverse; the series must have a nonzero leading
    // coefficient at its valuation.
    Series reciprocal() const;

    // Substitute the inner series for the variable. The inner series must
    // have valuation >= 1; otherwise an error.
    Series compose(const Series& inner) const;

    // Functional inverse of a series u = t + a2 t^2 + ... (valuation 1,
    // leading coefficient 1): returns s with compose(s) = t.
    Series functional_inverse() const;

    std::string str() const;

    friend bool operator==(const Series& a, const Series& b) {
        return a.var_ == b.var_ && a.prec_ == b.prec_ && a.coeff_ == b.coeff_;
    }

    const std::map<int, Rat>& known_terms() const { return coeff_; }

private:
    void normalize();
    static void check_vars(const Series& a, const Series& b);

    std::string var_;
    std::map<int, Rat> coeff_;
    int prec_ = kExact;
};

}  // namespace u22
