#include "u22/chambers.hpp"

#include <algorithm>
#include <numeric>

namespace u22 {

namespace {

long det(const Character& a, const Character& b) {
    return a.x1 * b.x2 - a.x2 * b.x1;
}

constexpr int kA12 = 0, kA21 = 1, kB12 = 2, kB21 = 3, kG12 = 4, kG21 = 5,
              kE12 = 6, kE21 = 7, kP1 = 8, kP2 = 9;

}  // namespace

Cone2D::Cone2D(Character v1, Character v2, bool open)
    : v1_(v1), v2_(v2), open_(open) {
    if (det(v1, v2) == 0)
        throw ValidationError("cone generators are linearly dependent");
}

bool Cone2D::contains(const Character& chi) const {
    long d = det(v1_, v2_);
    // Cramer: a = det(chi, v2)/d, b = det(v1, chi)/d. Compare as rationals.
    Rat a = Rat(det(chi, v2_)) / Rat(d);
    Rat b = Rat(det(v1_, chi)) / Rat(d);
    if (open_) return a.sign() > 0 && b.sign() > 0;
    return a.sign() >= 0 && b.sign() >= 0;
}

const std::vector<Chamber>& chambers() {
    static const std::vector<Chamber> cs = [] {
        std::vector<Chamber> v;
        v.push_back({ChamberName::I, Cone2D({0, 1}, {1, 0}, true), {1, 1}});
        v.push_back({ChamberName::II, Cone2D({1, 0}, {3, -1}, true), {4, -1}});
        v.push_back(
            {ChamberName::III, Cone2D({3, -1}, {2, -1}, true), {5, -2}});
        v.push_back(
            {ChamberName::II_T, Cone2D({0, 1}, {-1, 3}, true), {-1, 4}});
        v.push_back(
            {ChamberName::III_T, Cone2D({-1, 3}, {-1, 2}, true), {-2, 5}});
        return v;
    }();
    return cs;
}

const Chamber& chamber(ChamberName name) {
    for (auto& c : chambers())
        if (c.name == name) return c;
    throw ValidationError("unknown chamber");
}

ChamberName chamber_from_string(const std::string& s) {
    if (s == "i") return ChamberName::I;
    if (s == "ii") return ChamberName::II;
    if (s == "iii") return ChamberName::III;
    if (s == "ii-t") return ChamberName::II_T;
    if (s == "iii-t") return ChamberName::III_T;
    throw ValidationError("unknown chamber name: " + s +
                          " (expected i, ii, iii, ii-t, iii-t)");
}

std::string to_string(ChamberName name) {
    switch (name) {
        case ChamberName::I: return "i";
        case ChamberName::II: return "ii";
        case ChamberName::III: return "iii";
        case ChamberName::II_T: return "ii-t";
        case ChamberName::III_T: return "iii-t";
    }
    return "?";
}

std::string to_string(LocusName l) {
    switch (l) {
        case LocusName::Z1: return "Z1";
        case LocusName::Z2: return "Z2";
        case LocusName::P1: return "P1";
        case LocusName::P2: return "P2";
        case LocusName::R: return "R";
        case LocusName::W: return "W";
        case LocusName::Wp: return "W'";
        case LocusName::S: return "S";
    }
    return "?";
}

const std::vector<int>& locus_equations(LocusName l) {
    static const std::map<LocusName, std::vector<int>> table = {
        {LocusName::Z1, {kA12, kB12, kG12, kE12, kP1}},
        {LocusName::Z2, {kA21, kB21, kG21, kE21, kP2}},
        {LocusName::P1, {kA12, kB12, kA21, kB21}},
        {LocusName::P2, {kA12, kB12, kE12, kP1}},
        {LocusName::R, {kG12, kE12, kP1, kA21, kB21, kG21, kE21, kP2}},
        {LocusName::W, {kA12}},
        {LocusName::Wp, {kA12, kE12}},
        {LocusName::S, {kA21, kB12, kB21, kG12, kG21, kE12, kE21, kP1, kP2}},
    };
    return table.at(l);
}

bool is_semistable(const ModuliPoint& p, const Character& chi) {
    std::vector<Character> ws;
    for (int i = 0; i < 10; ++i) {
        if (p.coord(i).is_zero()) continue;
        auto [w1, w2] = coordinate_weights()[i];
        ws.push_back({w1, w2});
    }
    if (chi.x1 == 0 && chi.x2 == 0) return true;
    // chi in the rational cone spanned by ws: by Caratheodory in the plane it
    // suffices to test single generators and independent pairs.
    for (auto& w : ws) {
        // chi = a w, a >= 0.
        if (det(w, chi) != 0) continue;
        long dot = w.x1 * chi.x1 + w.x2 * chi.x2;
        if (dot >= 0) return true;
    }
    for (size_t i = 0; i < ws.size(); ++i)
        for (size_t j = i + 1; j < ws.size(); ++j) {
            long d = det(ws[i], ws[j]);
            if (d == 0) continue;
            Rat a = Rat(det(chi, ws[j])) / Rat(d);
            Rat b = Rat(det(ws[i], chi)) / Rat(d);
            if (a.sign() >= 0 && b.sign() >= 0) return true;
        }
    return false;
}

std::set<LocusName> unstable_loci(const ModuliPoint& p, ChamberName ch) {
    std::vector<LocusName> candidates;
    switch (ch) {
        case ChamberName::I:
            candidates = {LocusName::Z1, LocusName::Z2};
            break;
        case ChamberName::II:
            candidates = {LocusName::P1, LocusName::P2, LocusName::R};
            break;
        case ChamberName::III:
            candidates = {LocusName::W, LocusName::Wp, LocusName::S};
            break;
        default:
            throw ValidationError(
                "use transposition symmetry: swap indices 1 and 2 and "
                "classify in the mirror chamber");
    }
    std::set<LocusName> hit;
    for (auto l : candidates) {
        bool sat = true;
        for (int idx : locus_equations(l))
            if (!p.coord(idx).is_zero()) {
                sat = false;
                break;
            }
        if (sat) hit.insert(l);
    }
    return hit;
}

bool cross_check(const ModuliPoint& p, ChamberName ch) {
    bool cone_semistable = is_semistable(p, chamber(ch).representative);
    bool locus_stable = unstable_loci(p, ch).empty();
    return cone_semistable == locus_stable;
}

std::vector<long> subgroup_weights() {
    // Normalizing alpha12 = 1 picks the subgroup annihilating its weight:
    // the primitive direction d with <wt(alpha12), d> = 0.
    auto [a1, a2] = coordinate_weights()[kA12];
    long d1 = -a2, d2 = a1;  // orthogonal under the evaluation pairing
    long g = std::gcd(std::abs(d1), std::abs(d2));
    d1 /= g;
    d2 /= g;
    if (d1 < 0 || (d1 == 0 && d2 < 0)) {
        d1 = -d1;
        d2 = -d2;
    }
    // Residual coordinates after eliminating epsilon21, pitilde1, pitilde2
    // through the minor relations.
    const int residual[6] = {kA21, kB21, kB12, kE12, kG12, kG21};
    std::vector<long> out;
    for (int idx : residual) {
        auto [w1, w2] = coordinate_weights()[idx];
        out.push_back(w1 * d1 + w2 * d2);
    }
    return out;
}

ModuliPoint transpose_point(const ModuliPoint& p) {
    ModuliPoint q;
    q.alpha12 = p.alpha21;
    q.alpha21 = p.alpha12;
    q.beta12 = p.beta21;
    q.beta21 = p.beta12;
    q.gamma12 = p.gamma21;
    q.gamma21 = p.gamma12;
    q.eps12 = p.eps21;
    q.eps21 = p.eps12;
    q.pitilde1 = p.pitilde2;
    q.pitilde2 = p.pitilde1;
    return q;
}

}  // namespace u22
