#include "u22/families.hpp"

#include <algorithm>

namespace u22 {

namespace {

using UP = std::vector<Rat>;  // univariate polynomial, coeff of x^k at [k]

UP up_trim(UP v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
    return v;
}

UP up_add(const UP& a, const UP& b) {
    UP r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return up_trim(r);
}

UP up_scale(const UP& a, const Rat& c) {
    UP r = a;
    for (auto& v : r) v *= c;
    return up_trim(r);
}

UP up_mul(const UP& a, const UP& b) {
    if (a.empty() || b.empty()) return {};
    UP r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return up_trim(r);
}

Rat up_eval(const UP& a, const Rat& x) {
    Rat r(0);
    for (size_t i = a.size(); i-- > 0;) r = r * x + a[i];
    return r;
}

UP up_derivative(const UP& a) {
    UP r;
    for (size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * Rat((long)i));
    return up_trim(r);
}

UP up_const(const Rat& c) { return up_trim({c}); }
UP up_x(const Rat& lead = Rat(1), const Rat& c0 = Rat(0)) {
    return up_trim({c0, lead});
}

ChartFn cf(UP p, UP q = {}) { return ChartFn{up_trim(std::move(p)), up_trim(std::move(q))}; }

ChartFn cf_add(const ChartFn& a, const ChartFn& b) {
    return {up_add(a.p, b.p), up_add(a.q, b.q)};
}

ChartFn cf_scale(const ChartFn& a, const Rat& c) {
    return {up_scale(a.p, c), up_scale(a.q, c)};
}

ChartFn cf_add_const(const ChartFn& a, const Rat& c) {
    UP p = a.p;
    if (p.empty()) p.push_back(c);
    else p[0] += c;
    return {up_trim(p), a.q};
}

Rat cf_eval(const ChartFn& f, const Rat& x, const Rat& y) {
    return up_eval(f.p, x) + up_eval(f.q, x) * y;
}

CurveFn fn_add(const CurveFn& a, const CurveFn& b) {
    return {cf_add(a.c1, b.c1), cf_add(a.c2, b.c2)};
}
CurveFn fn_scale(const CurveFn& a, const Rat& c) {
    return {cf_scale(a.c1, c), cf_scale(a.c2, c)};
}
CurveFn fn_add_const(const CurveFn& a, const Rat& c) {
    return {cf_add_const(a.c1, c), cf_add_const(a.c2, c)};
}

const Rat& param(const CurvePresentation& pres, const std::string& name) {
    auto it = pres.params.find(name);
    if (it == pres.params.end())
        throw ValidationError("missing family parameter: " + name);
    return it->second;
}

bool on_curve(const Rat& a, const Rat& b, const Rat& x, const Rat& y) {
    return y * y == x * x * x + a * x + b;
}

BranchType weierstrass_point_type(const Rat& a, const Rat& b, const Rat& x,
                                  const Rat& y) {
    if (!y.is_zero()) return BranchType::Smooth;
    if (!(Rat(3) * x * x + a).is_zero()) return BranchType::Smooth;
    return (a.is_zero() && b.is_zero()) ? BranchType::Cusp : BranchType::Node;
}

}  // namespace

FamilyKind family_kind_from_string(const std::string& s) {
    if (s == "A") return FamilyKind::A;
    if (s == "B") return FamilyKind::B;
    if (s == "C") return FamilyKind::C;
    if (s == "D") return FamilyKind::D;
    if (s == "E") return FamilyKind::E;
    if (s == "F") return FamilyKind::F;
    throw ValidationError("unknown family kind: " + s);
}

std::string to_string(FamilyKind k) {
    switch (k) {
        case FamilyKind::A: return "A";
        case FamilyKind::B: return "B";
        case FamilyKind::C: return "C";
        case FamilyKind::D: return "D";
        case FamilyKind::E: return "E";
        case FamilyKind::F: return "F";
    }
    return "?";
}

CurvePresentation family(FamilyKind kind,
                         const std::map<std::string, Rat>& params) {
    CurvePresentation pres{kind, params};
    auto P = [&](const std::string& n) { return param(pres, n); };
    switch (kind) {
        case FamilyKind::A: {
            Rat a = P("a"), b = P("b"), A = P("A"), B = P("B"), C = P("C"),
                D = P("D");
            if (!on_curve(a, b, A, B))
                throw ValidationError("family A: (A,B) is not on the curve");
            if (!on_curve(a, b, C, D))
                throw ValidationError("family A: (C,D) is not on the curve");
            if (A == C && B == D)
                throw ValidationError("family A: gluing points coincide");
            break;
        }
        case FamilyKind::B: {
            Rat a = P("a"), b = P("b"), A = P("A"), B = P("B"), C = P("C"),
                D = P("D");
            if (!on_curve(a, b, B, D))
                throw ValidationError("family B: (B,D) is not on the curve");
            if (Rat(2) * C * D != A * (Rat(3) * B * B + a))
                throw ValidationError(
                    "family B: direction is not tangent to the curve");
            if (A.is_zero() && C.is_zero())
                throw ValidationError(
                    "family B: zero direction does not embed the subscheme");
            break;
        }
        case FamilyKind::C: {
            Rat l = P("lambda"), m = P("mu");
            if (l.is_zero() || l.is_one() || m.is_zero() || m.is_one())
                throw ValidationError(
                    "family C: lambda, mu must avoid 0 and 1");
            if (l == m)
                throw ValidationError(
                    "family C: lambda = mu gives an extra global function");
            break;
        }
        case FamilyKind::D: {
            Rat l = P("lambda"), m = P("mu");
            if (l.is_zero() || m.is_zero())
                throw ValidationError("family D: lambda, mu must be nonzero");
            if (l == m)
                throw ValidationError("family D: lambda = mu is degenerate");
            break;
        }
        case FamilyKind::E: {
            Rat A = P("A"), B = P("B"), lam = P("lambda");
            (void)P("C");
            if (A.is_zero())
                throw ValidationError(
                    "family E: A = 0 gives an extra global function");
            if ((Rat(2) * A * lam + B).is_zero())
                throw ValidationError(
                    "family E: the contact scheme does not embed in the "
                    "second component (2*A*lambda + B = 0)");
            break;
        }
        case FamilyKind::F: {
            Rat a1 = P("a1"), b1 = P("b1"), a2 = P("a2"), b2 = P("b2");
            if (!on_curve(a1, b1, P("x1"), P("y1")))
                throw ValidationError("family F: (x1,y1) is not on curve 1");
            if (!on_curve(a2, b2, P("x2"), P("y2")))
                throw ValidationError("family F: (x2,y2) is not on curve 2");
            break;
        }
    }
    return pres;
}

Chart chart_of(const CurvePresentation& pres, int point) {
    if (point != 1 && point != 2) throw ValidationError("point must be 1 or 2");
    Chart ch;
    switch (pres.kind) {
        case FamilyKind::A:
        case FamilyKind::B:
            if (point == 1) {
                ch.weierstrass = true;
                ch.a = param(pres, "a");
                ch.b = param(pres, "b");
            }
            break;
        case FamilyKind::C:
        case FamilyKind::D:
        case FamilyKind::E:
            break;  // both lines
        case FamilyKind::F:
            ch.weierstrass = true;
            ch.a = param(pres, point == 1 ? "a1" : "a2");
            ch.b = param(pres, point == 1 ? "b1" : "b2");
            break;
    }
    return ch;
}

ChartExpansion expand_at_infinity(const Chart& chart, int prec) {
    if (prec < 8)
        throw PrecisionError("chart expansion needs precision >= 8");
    if (!chart.weierstrass) {
        ChartExpansion e;
        e.x = Series::monomial("t", Rat(1), -1, prec);
        e.y = Series::zero("t", prec);
        return e;
    }
    // Solve u^3 - u^2 + a t^4 u + b t^6 = 0, u = 1 + O(t^4); then
    // x = u t^-2, y = x / t.
    int wp = prec + 8;
    Series u = Series::monomial("t", Rat(1), 0, wp);
    Series at4 = Series::monomial("t", chart.a, 4, wp);
    Series bt6 = Series::monomial("t", chart.b, 6, wp);
    for (int it = 0; it < 8; ++it) {
        Series val = u.pow(3) - u.pow(2) + at4 * u + bt6;
        if (val.known_zero()) break;
        Series dval = u.pow(2).scaled(Rat(3)) - u.scaled(Rat(2)) + at4;
        u = u - val * dval.reciprocal();
        u = u.truncated(wp);
    }
    ChartExpansion e;
    e.x = u.shifted(-2).truncated(prec);
    e.y = u.shifted(-3).truncated(prec);
    return e;
}

Series expand_fn(const CurvePresentation& pres, const CurveFn& fn, int point,
                 int prec) {
    Chart ch = chart_of(pres, point);
    const ChartFn& elem = point == 1 ? fn.c1 : fn.c2;
    ChartExpansion ex = expand_at_infinity(ch, prec);
    Series acc = Series::zero("t", prec);
    Series xp = Series::monomial("t", Rat(1), 0, Series::kExact);
    for (size_t i = 0; i < elem.p.size(); ++i) {
        if (!elem.p[i].is_zero()) acc = acc + xp.scaled(elem.p[i]);
        xp = (xp * ex.x).truncated(prec + 16);
    }
    if (!elem.q.empty()) {
        if (!ch.weierstrass)
            throw ValidationError("degree-3 generator used on a line chart");
        Series qacc = Series::zero("t", prec);
        Series xq = Series::monomial("t", Rat(1), 0, Series::kExact);
        for (size_t i = 0; i < elem.q.size(); ++i) {
            if (!elem.q[i].is_zero()) qacc = qacc + xq.scaled(elem.q[i]);
            xq = (xq * ex.x).truncated(prec + 16);
        }
        acc = acc + qacc * ex.y;
    }
    return acc.truncated(prec);
}

bool glues(const CurvePresentation& pres, const CurveFn& fn) {
    auto P = [&](const std::string& n) { return param(pres, n); };
    switch (pres.kind) {
        case FamilyKind::A: {
            Rat vA = cf_eval(fn.c1, P("A"), P("B"));
            Rat vC = cf_eval(fn.c1, P("C"), P("D"));
            return vA == up_eval(fn.c2.p, Rat(-1)) &&
                   vC == up_eval(fn.c2.p, Rat(1));
        }
        case FamilyKind::B: {
            Rat B = P("B"), D = P("D"), A = P("A"), C = P("C");
            Rat v0 = cf_eval(fn.c1, B, D);
            UP px = up_derivative(fn.c1.p), qx = up_derivative(fn.c1.q);
            Rat fx = up_eval(px, B) + up_eval(qx, B) * D;
            Rat fy = up_eval(fn.c1.q, B);
            Rat v1 = A * fx + C * fy;
            Rat g0 = fn.c2.p.empty() ? Rat(0) : fn.c2.p[0];
            Rat g1 = fn.c2.p.size() > 1 ? fn.c2.p[1] : Rat(0);
            return v0 == g0 && v1 == g1;
        }
        case FamilyKind::C: {
            Rat l = P("lambda"), m = P("mu");
            return up_eval(fn.c1.p, Rat(0)) == up_eval(fn.c2.p, Rat(0)) &&
                   up_eval(fn.c1.p, Rat(1)) == up_eval(fn.c2.p, Rat(1)) &&
                   up_eval(fn.c1.p, l) == up_eval(fn.c2.p, m);
        }
        case FamilyKind::D: {
            Rat l = P("lambda"), m = P("mu");
            Rat f0 = up_eval(fn.c1.p, Rat(0)), g0 = up_eval(fn.c2.p, Rat(0));
            Rat f1 = up_eval(up_derivative(fn.c1.p), Rat(0));
            Rat g1 = up_eval(up_derivative(fn.c2.p), Rat(0));
            return f0 == g0 && f1 == g1 &&
                   up_eval(fn.c1.p, l) == up_eval(fn.c2.p, m);
        }
        case FamilyKind::E: {
            Rat A = P("A"), B = P("B"), C = P("C"), lam = P("lambda");
            // f(x) - g(Ax^2+Bx+C) divisible by (x - lambda)^3.
            UP Pxy = {C, B, A};
            UP comp = {Rat(0)};
            UP acc = {Rat(1)};
            for (size_t i = 0; i < fn.c2.p.size(); ++i) {
                comp = up_add(comp, up_scale(acc, fn.c2.p[i]));
                acc = up_mul(acc, Pxy);
            }
            UP diff = up_add(fn.c1.p, up_scale(comp, Rat(-1)));
            for (int k = 0; k < 3; ++k) {
                if (!up_eval(diff, lam).is_zero()) return false;
                // synthetic division by (x - lambda)
                UP quo(diff.size() > 0 ? diff.size() - 1 : 0, Rat(0));
                Rat carry(0);
                for (size_t i = diff.size(); i-- > 1;) {
                    carry = diff[i] + carry * lam;
                    quo[i - 1] = carry;
                }
                diff = up_trim(quo);
                if (diff.empty()) break;
            }
            return true;
        }
        case FamilyKind::F: {
            return cf_eval(fn.c1, P("x1"), P("y1")) ==
                   cf_eval(fn.c2, P("x2"), P("y2"));
        }
    }
    return false;
}

RawGenerators raw_generators(const CurvePresentation& pres) {
    auto P = [&](const std::string& n) { return param(pres, n); };
    RawGenerators rg;
    switch (pres.kind) {
        case FamilyKind::A: {
            Rat A = P("A"), B = P("B"), C = P("C"), D = P("D");
            Rat half(1, 2);
            rg.f1 = {cf({}, up_const(Rat(1))), {}};
            rg.f1.c1 = cf(up_x());                       // x
            rg.f1.c2 = cf({(C + A) * half, (C - A) * half});
            rg.h1.c1 = cf({}, up_const(Rat(1)));         // y
            rg.h1.c2 = cf({(D + B) * half, (D - B) * half});
            rg.f2.c1 = cf(up_const(Rat(1)));
            rg.f2.c2 = cf({Rat(0), Rat(0), Rat(1)});     // z^2
            rg.h2.c1 = cf(up_const(Rat(0)));
            rg.h2.c2 = cf({Rat(0), Rat(-1), Rat(0), Rat(1)});  // z^3 - z
            break;
        }
        case FamilyKind::B: {
            Rat A = P("A"), B = P("B"), C = P("C"), D = P("D");
            rg.f1.c1 = cf(up_x());
            rg.f1.c2 = cf({B, A});
            rg.h1.c1 = cf({}, up_const(Rat(1)));
            rg.h1.c2 = cf({D, C});
            rg.f2.c1 = cf({});
            rg.f2.c2 = cf({Rat(0), Rat(0), Rat(1)});           // z^2
            rg.h2.c1 = cf({});
            rg.h2.c2 = cf({Rat(0), Rat(0), Rat(0), Rat(1)});   // z^3
            break;
        }
        case FamilyKind::C: {
            Rat l = P("lambda"), m = P("mu");
            Rat c = (l * l - l) / (m - l);
            rg.f1.c1 = cf({Rat(0), c - Rat(1), Rat(1)});  // x^2 + (c-1)x
            rg.f1.c2 = cf({Rat(0), c});                   // c y
            Rat g = (l - l * l * l) / (l - m);
            rg.h1.c1 = cf({Rat(0), g - Rat(1), Rat(0), Rat(1)});  // x^3+(g-1)x
            rg.h1.c2 = cf({Rat(0), g});
            Rat cp = (m * m - m) / (l - m);
            rg.f2.c1 = cf({Rat(0), cp});
            rg.f2.c2 = cf({Rat(0), cp - Rat(1), Rat(1)});
            Rat gp = (m - m * m * m) / (m - l);
            rg.h2.c1 = cf({Rat(0), gp});
            rg.h2.c2 = cf({Rat(0), gp - Rat(1), Rat(0), Rat(1)});
            break;
        }
        case FamilyKind::D: {
            Rat l = P("lambda"), m = P("mu");
            Rat a = l * l / (m - l);
            rg.f1.c1 = cf({Rat(0), a, Rat(1)});  // x^2 + a x
            rg.f1.c2 = cf({Rat(0), a});
            Rat f = l * l * l / (m - l);
            rg.h1.c1 = cf({Rat(0), f, Rat(0), Rat(1)});  // x^3 + f x
            rg.h1.c2 = cf({Rat(0), f});
            Rat ap = m * m / (l - m);
            rg.f2.c1 = cf({Rat(0), ap});
            rg.f2.c2 = cf({Rat(0), ap, Rat(1)});
            Rat fp = m * m * m / (l - m);
            rg.h2.c1 = cf({Rat(0), fp});
            rg.h2.c2 = cf({Rat(0), fp, Rat(0), Rat(1)});
            break;
        }
        case FamilyKind::E: {
            Rat A = P("A"), B = P("B"), C = P("C"), lam = P("lambda");
            rg.f1.c1 = cf({C / A, B / A, Rat(1)});
            rg.f1.c2 = cf({Rat(0), A.inverse()});
            Rat r = Rat(3) * lam / A;
            Rat q = Rat(3) * lam * lam + Rat(3) * lam * B / A;
            Rat s = lam * lam * lam - Rat(3) * lam * C / A;
            rg.h1.c1 = cf({Rat(0), q, Rat(0), Rat(1)});  // x^3 + q x
            rg.h1.c2 = cf({s, r});
            Rat beta = Rat(2) * A * lam + B;
            Rat y0 = A * lam * lam + B * lam + C;
            Rat w = -(beta * beta + Rat(2) * A * y0) / A;
            // F = beta (2 y0 + w)(x - lambda) + y0^2 + w y0
            Rat u = beta * (Rat(2) * y0 + w);
            rg.f2.c1 = cf({y0 * y0 + w * y0 - u * lam, u});
            rg.f2.c2 = cf({Rat(0), w, Rat(1)});  // y^2 + w y
            Rat w1 = -Rat(3) * y0 * y0 - Rat(3) * beta * beta * y0 / A;
            Rat Qy0 = y0 * y0 * y0 + w1 * y0;
            Rat Qp = Rat(3) * y0 * y0 + w1;
            rg.h2.c1 = cf({Qy0 - Qp * beta * lam, Qp * beta});
            rg.h2.c2 = cf({Rat(0), w1, Rat(0), Rat(1)});  // y^3 + w1 y
            break;
        }
        case FamilyKind::F: {
            rg.f1.c1 = cf(up_x());
            rg.f1.c2 = cf(up_const(P("x1")));
            rg.h1.c1 = cf({}, up_const(Rat(1)));
            rg.h1.c2 = cf(up_const(P("y1")));
            rg.f2.c1 = cf(up_const(P("x2")));
            rg.f2.c2 = cf(up_x());
            rg.h2.c1 = cf(up_const(P("y2")));
            rg.h2.c2 = cf({}, up_const(Rat(1)));
            break;
        }
    }
    for (const CurveFn* fn : {&rg.f1, &rg.h1, &rg.f2, &rg.h2})
        if (!glues(pres, *fn))
            throw ValidationError("internal: raw generators do not glue");
    return rg;
}

Series canonical_parameter(const Series& f_in_base, const Series& current,
                           int m) {
    if (m < 2) throw ValidationError("parameter order must be >= 2");
    // Re-expand f in the current parameter and read the t^-1 coefficient.
    Series f_in_cur = f_in_base.compose(current.functional_inverse());
    Rat c = f_in_cur.coefficient(-1);
    if (c.is_zero()) return current;
    return current - current.pow(m).scaled(c / Rat(m));
}

NormalizedPair normalize_generators(const CurvePresentation& pres,
                                    const CurveFn& f_raw, const CurveFn& h_raw,
                                    int point, int prec) {
    auto exp_at = [&](const CurveFn& fn) {
        return expand_fn(pres, fn, point, prec);
    };
    Series F = exp_at(f_raw), H = exp_at(h_raw);
    if (F.coefficient(-2) != Rat(1) || H.coefficient(-3) != Rat(1))
        throw ValidationError(
            "raw generators must have unit leading expansion coefficients");

    // h~^2 - f~^3 must drop to pole order 3: kill t^-5, t^-4.
    Series FH = F * H, F2 = F * F;
    Series D0 = H * H - F * F2;
    Rat b = -(D0.coefficient(-5)) / Rat(2);
    Series D1 = D0 + FH.scaled(Rat(2) * b) + F2.scaled(b * b);
    Rat a = D1.coefficient(-4) / Rat(3);

    CurveFn f = fn_add_const(f_raw, a);
    CurveFn h = fn_add(h_raw, fn_scale(f_raw, b));
    Series Fc = exp_at(f), Hc = exp_at(h);
    // f h^2 - f^4 must drop to pole order 4: kill t^-5; t^-7 and t^-6 are
    // forced to vanish already by the first condition.
    Series E0 = Fc * Hc * Hc - Fc.pow(4);
    if (!E0.coefficient(-7).is_zero() || !E0.coefficient(-6).is_zero())
        throw ValidationError(
            "internal: first pole condition did not settle the quartic one");
    Rat c = -(E0.coefficient(-5)) / Rat(2);

    NormalizedPair out;
    out.a = a;
    out.b = b;
    out.c = c;
    out.f = f;
    out.h = fn_add_const(h, c);
    return out;
}

bool verify_canonical(const CurvePresentation& pres, const CurveFn& f,
                      const CurveFn& h, int point, int prec) {
    int other = 3 - point;
    Series F = expand_fn(pres, f, point, prec);
    Series H = expand_fn(pres, h, point, prec);
    Series Fo = expand_fn(pres, f, other, prec);
    Series Ho = expand_fn(pres, h, other, prec);
    if (F.precision() < 2 || Fo.precision() < 2)
        throw PrecisionError("verify_canonical needs precision >= 2");
    Series D = H * H - F.pow(3);
    for (int k = -6; k < -3; ++k)
        if (!D.coefficient(k).is_zero()) return false;
    Series E = F * H * H - F.pow(4);
    for (int k = -8; k < -4; ++k)
        if (!E.coefficient(k).is_zero()) return false;
    // At the other marked point both combinations stay within pole order 3
    // resp. 4 automatically for honest sections; check the windows anyway.
    Series Do = Ho * Ho - Fo.pow(3);
    for (int k = std::max(Do.known_zero() ? 0 : Do.valuation(), -12); k < -3;
         ++k)
        if (!Do.coefficient(k).is_zero()) return false;
    Series Eo = Fo * Ho * Ho - Fo.pow(4);
    for (int k = std::max(Eo.known_zero() ? 0 : Eo.valuation(), -12); k < -4;
         ++k)
        if (!Eo.coefficient(k).is_zero()) return false;
    return true;
}

ExtractionResult extract(const CurvePresentation& pres) {
    const int prec = 14;
    RawGenerators rg = raw_generators(pres);
    NormalizedPair n1 = normalize_generators(pres, rg.f1, rg.h1, 1, prec);
    NormalizedPair n2 = normalize_generators(pres, rg.f2, rg.h2, 2, prec);

    ExtractionResult out;
    out.f1 = n1.f;
    out.h1 = n1.h;
    out.f2 = n2.f;
    out.h2 = n2.h;
    out.a1 = n1.a;
    out.b1 = n1.b;
    out.c1 = n1.c;
    out.a2 = n2.a;
    out.b2 = n2.b;
    out.c2 = n2.c;

    if (!verify_canonical(pres, out.f1, out.h1, 1, prec) ||
        !verify_canonical(pres, out.f2, out.h2, 2, prec))
        throw ValidationError("internal: normalization failed canonicity");

    // Order-2 canonical parameters at both points.
    Series base = Series::variable("t").truncated(prec);
    Series F1 = expand_fn(pres, out.f1, 1, prec);
    Series F2 = expand_fn(pres, out.f2, 2, prec);
    Series H1 = expand_fn(pres, out.h1, 1, prec);
    Series H2 = expand_fn(pres, out.h2, 2, prec);
    Series tau1 = canonical_parameter(F1, base, 2);
    Series tau2 = canonical_parameter(F2, base, 2);

    auto read_pair = [&](const CurveFn& fn, int at, const Series& tau) {
        Series e = expand_fn(pres, fn, at, prec)
                       .compose(tau.functional_inverse());
        return std::pair<Rat, Rat>(e.coefficient(-1), e.coefficient(0));
    };
    auto [a12, g12] = read_pair(out.f1, 2, tau2);
    auto [b12, e12] = read_pair(out.h1, 2, tau2);
    auto [a21, g21] = read_pair(out.f2, 1, tau1);
    auto [b21, e21] = read_pair(out.h2, 1, tau1);

    out.raw = {{"alpha12[-2,-1]", a12}, {"alpha12[-2,0]", g12},
               {"alpha12[-3,-1]", b12}, {"alpha12[-3,0]", e12},
               {"alpha21[-2,-1]", a21}, {"alpha21[-2,0]", g21},
               {"alpha21[-3,-1]", b21}, {"alpha21[-3,0]", e21}};

    // pi_i: the t^-2 coefficient of h_i^2 - f_i^3 in the base parameter.
    out.pi1 = (H1 * H1 - F1.pow(3)).coefficient(-2);
    out.pi2 = (H2 * H2 - F2.pow(3)).coefficient(-2);

    ModuliPoint p;
    p.alpha12 = a12;
    p.gamma12 = g12;
    p.beta12 = b12;
    p.eps12 = e12;
    p.alpha21 = a21;
    p.gamma21 = g21;
    p.beta21 = b21;
    p.eps21 = e21;
    p.pitilde1 = out.pi1 + Rat(3) * a12 * a12 * g21 +
                 Rat(3) * a12 * a21 * b12 + Rat(3) * g12 * g12;
    p.pitilde2 = out.pi2 + Rat(3) * a21 * a21 * g12 +
                 Rat(3) * a21 * a12 * b21 + Rat(3) * g21 * g21;
    out.point = p;

    // Diagonal normalization identities, read in the order-4 parameter.
    // After the order-2 and order-3 recenterings neither f nor h retains a
    // t^-1 term, so the order-4 step can read f^2 directly.
    for (int i = 1; i <= 2; ++i) {
        const Series& F = i == 1 ? F1 : F2;
        const Series& H = i == 1 ? H1 : H2;
        Series tau = canonical_parameter(F, base, 2);
        tau = canonical_parameter(H, tau, 3);
        tau = canonical_parameter(F * F, tau, 4);
        Series t4inv = tau.functional_inverse();
        Series Fd = F.compose(t4inv);
        Series Hd = H.compose(t4inv);
        Rat a_m2_0 = Fd.coefficient(0);
        Rat a_m2_1 = Fd.coefficient(1);
        Rat a_m3_0 = Hd.coefficient(0);
        out.raw["alpha" + std::to_string(i) + std::to_string(i) + "[-2,0]"] =
            a_m2_0;
        out.raw["alpha" + std::to_string(i) + std::to_string(i) + "[-2,1]"] =
            a_m2_1;
        out.raw["alpha" + std::to_string(i) + std::to_string(i) + "[-3,0]"] =
            a_m3_0;
        if (!a_m2_0.is_zero() || Rat(2) * a_m3_0 != Rat(3) * a_m2_1)
            throw ValidationError(
                "internal: diagonal normalization identities failed");
    }
    return out;
}

CurveDescription describe(const CurvePresentation& pres) {
    auto P = [&](const std::string& n) { return param(pres, n); };
    CurveDescription d;
    d.irreducible = false;
    switch (pres.kind) {
        case FamilyKind::A: {
            d.g1 = 1;
            d.g2 = 0;
            d.xi_length = 2;
            BranchType t1 = weierstrass_point_type(P("a"), P("b"), P("A"), P("B"));
            BranchType t2 = weierstrass_point_type(P("a"), P("b"), P("C"), P("D"));
            d.support = {{t1, BranchType::Smooth}, {t2, BranchType::Smooth}};
            if (t1 == BranchType::Smooth && t2 == BranchType::Smooth)
                d.xi_divisor_equiv_2p1 = P("A") == P("C");
            break;
        }
        case FamilyKind::B: {
            d.g1 = 1;
            d.g2 = 0;
            d.xi_length = 2;
            BranchType t = weierstrass_point_type(P("a"), P("b"), P("B"), P("D"));
            d.support = {{t, BranchType::Smooth}};
            if (t == BranchType::Smooth)
                d.xi_divisor_equiv_2p1 = P("A").is_zero();
            else if (t == BranchType::Node)
                d.restriction_constant = P("A").is_zero();
            else {
                bool a0 = P("A").is_zero(), c0 = P("C").is_zero();
                d.special_iso = a0 ? SpecialIso::Ccusp01
                                   : (c0 ? SpecialIso::Ccusp10
                                         : SpecialIso::Ccusp11);
            }
            break;
        }
        case FamilyKind::C:
            d.g1 = d.g2 = 0;
            d.xi_length = 3;
            d.support = {{BranchType::Smooth, BranchType::Smooth},
                         {BranchType::Smooth, BranchType::Smooth},
                         {BranchType::Smooth, BranchType::Smooth}};
            break;
        case FamilyKind::D:
            d.g1 = d.g2 = 0;
            d.xi_length = 3;
            d.support = {{BranchType::Smooth, BranchType::Smooth},
                         {BranchType::Smooth, BranchType::Smooth}};
            break;
        case FamilyKind::E:
            d.g1 = d.g2 = 0;
            d.xi_length = 3;
            d.support = {{BranchType::Smooth, BranchType::Smooth}};
            d.special_iso = SpecialIso::C0;
            break;
        case FamilyKind::F: {
            d.g1 = d.g2 = 1;
            d.xi_length = 1;
            BranchType t1 =
                weierstrass_point_type(P("a1"), P("b1"), P("x1"), P("y1"));
            BranchType t2 =
                weierstrass_point_type(P("a2"), P("b2"), P("x2"), P("y2"));
            d.support = {{t1, t2}};
            break;
        }
    }
    if (!validate(d))
        throw ValidationError("presentation produced an invalid description");
    return d;
}

}  // namespace u22
