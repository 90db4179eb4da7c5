#pragma once

#include <map>
#include <string>

#include "u22/catalog.hpp"
#include "u22/moduli.hpp"
#include "u22/series.hpp"

namespace u22 {

// The worked curve families:
//   A: genus-1 curve and a line glued transversally at two points
//   B: genus-1 curve and a line glued along a length-2 scheme at one point
//   C: two lines glued at three nodes
//   D: two lines glued at a node and a tacnode
//   E: two lines glued along a length-3 scheme at one point
//   F: two genus-1 curves glued transversally at one point
enum class FamilyKind { A, B, C, D, E, F };

FamilyKind family_kind_from_string(const std::string& s);
std::string to_string(FamilyKind k);

struct CurvePresentation {
    FamilyKind kind;
    std::map<std::string, Rat> params;
};

// Validates the family's parameter constraints; descriptive errors.
CurvePresentation family(FamilyKind kind,
                         const std::map<std::string, Rat>& params);

// Chart descriptions: either y^2 = x^3 + a x + b with the marked point at
// infinity, or an affine line with the marked point at infinity.
struct Chart {
    bool weierstrass = false;
    Rat a, b;
};
Chart chart_of(const CurvePresentation& pres, int point);

// p(x) + q(x) y on a Weierstrass chart; q unused on a line chart.
struct ChartFn {
    std::vector<Rat> p, q;
};
struct CurveFn {
    ChartFn c1, c2;
};

// Expansions of the chart generators at the marked point, in the parameter
// t = x/y (Weierstrass) or t = 1/z (line).
struct ChartExpansion {
    Series x;  // the degree-2 generator, or z itself on a line chart
    Series y;  // the degree-3 generator; known_zero on a line chart
};
ChartExpansion expand_at_infinity(const Chart& chart, int prec);

// Expansion of a curve function at marked point 1 or 2.
Series expand_fn(const CurvePresentation& pres, const CurveFn& fn, int point,
                 int prec);

// Whether the pair of chart elements is compatible with the family's gluing.
bool glues(const CurvePresentation& pres, const CurveFn& fn);

// One step of the parameter iteration: given the expansion of a function
// with leading term t^-m (in the base parameter) and the current parameter
// (a series in the base parameter), returns the order-m parameter.
Series canonical_parameter(const Series& f_in_base, const Series& current,
                           int m);

struct NormalizedPair {
    Rat a, b, c;
    CurveFn f, h;
};

// Shifts f~ by a and h~ by b f~ + c so that the two pole-order conditions
// hold at the marked point i; exact linear solves on expansion coefficients.
NormalizedPair normalize_generators(const CurvePresentation& pres,
                                    const CurveFn& f_raw, const CurveFn& h_raw,
                                    int point, int prec = 14);

// Both pole-order conditions at both marked points, on expansion windows.
bool verify_canonical(const CurvePresentation& pres, const CurveFn& f,
                      const CurveFn& h, int point, int prec = 14);

struct ExtractionResult {
    ModuliPoint point;
    Rat pi1, pi2;
    // Expansion coefficients keyed "alpha12[-2,-1]" etc. for m in {2,3},
    // k in {-1,0}.
    std::map<std::string, Rat> raw;
    CurveFn f1, h1, f2, h2;
    Rat a1, b1, c1, a2, b2, c2;  // normalization constants per marked point
};

ExtractionResult extract(const CurvePresentation& pres);

// The catalog description of the presented curve.
CurveDescription describe(const CurvePresentation& pres);

// Raw (pre-normalization) generator pairs used by extraction; exposed for
// tests.
struct RawGenerators {
    CurveFn f1, h1, f2, h2;
};
RawGenerators raw_generators(const CurvePresentation& pres);

}  // namespace u22
