#pragma once

#include <set>
#include <vector>

#include "u22/moduli.hpp"

namespace u22 {

struct Character {
    long x1 = 0, x2 = 0;
    friend bool operator==(const Character& a, const Character& b) {
        return a.x1 == b.x1 && a.x2 == b.x2;
    }
};

// 2D rational cone spanned by two independent integer vectors.
class Cone2D {
public:
    Cone2D(Character v1, Character v2, bool open);
    // chi = a v1 + b v2 with a,b > 0 (open) or >= 0 (closed), decided exactly.
    bool contains(const Character& chi) const;
    bool is_open() const { return open_; }
    const Character& v1() const { return v1_; }
    const Character& v2() const { return v2_; }

private:
    Character v1_, v2_;
    bool open_;
};

// The five chambers with nonempty quotients. I, II, III carry the explicit
// unstable-locus descriptions; the other two are their index transposes.
enum class ChamberName { I, II, III, II_T, III_T };

struct Chamber {
    ChamberName name;
    Cone2D cone;
    Character representative;  // strictly interior
};

const std::vector<Chamber>& chambers();
const Chamber& chamber(ChamberName name);
// Accepts "i", "ii", "iii", "ii-t", "iii-t".
ChamberName chamber_from_string(const std::string& s);
std::string to_string(ChamberName name);

enum class LocusName { Z1, Z2, P1, P2, R, W, Wp, S };
std::string to_string(LocusName l);

// Zero conditions of a named locus, as indices into the coordinate order.
const std::vector<int>& locus_equations(LocusName l);

// chi lies in the rational cone spanned by the weights of the coordinates
// that do not vanish at p.
bool is_semistable(const ModuliPoint& p, const Character& chi);

// The named loci (of the chamber's list) whose equations p satisfies.
// Only chambers I, II, III; the transposed chambers report an error telling
// the caller to swap indices 1 <-> 2 first.
std::set<LocusName> unstable_loci(const ModuliPoint& p, ChamberName ch);

// Agreement of the cone criterion at the representative character with the
// explicit locus equations.
bool cross_check(const ModuliPoint& p, ChamberName ch);

// Residual weights of alpha21, beta21, beta12, epsilon12, gamma12, gamma21
// under the one-parameter subgroup stabilizing alpha12 = 1, in that order.
std::vector<long> subgroup_weights();

// Index transposition 1 <-> 2 on coordinates.
ModuliPoint transpose_point(const ModuliPoint& p);

}  // namespace u22
