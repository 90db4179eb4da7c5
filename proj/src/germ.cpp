#include "u22/germ.hpp"

#include <algorithm>

#include "u22/errors.hpp"

namespace u22 {

namespace {

using Vec = std::vector<Rat>;

// Exact row space in echelon form.
class RowSpace {
public:
    // Returns true when v was independent (and got inserted).
    bool insert(Vec v) {
        reduce(v);
        int p = pivot_of(v);
        if (p < 0) return false;
        Rat lead = v[p];
        for (auto& c : v) c /= lead;
        rows_.push_back(std::move(v));
        pivots_.push_back(p);
        return true;
    }

    void reduce(Vec& v) const {
        for (size_t i = 0; i < rows_.size(); ++i) {
            const Rat& c = v[pivots_[i]];
            if (c.is_zero()) continue;
            Rat f = c;  // rows are pivot-normalized
            for (size_t k = 0; k < v.size(); ++k)
                if (!rows_[i][k].is_zero()) v[k] -= f * rows_[i][k];
        }
    }

    bool contains(Vec v) const {
        reduce(v);
        return pivot_of(v) < 0;
    }

    int dim() const { return static_cast<int>(rows_.size()); }
    const std::vector<Vec>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

private:
    static int pivot_of(const Vec& v) {
        for (size_t k = 0; k < v.size(); ++k)
            if (!v[k].is_zero()) return static_cast<int>(k);
        return -1;
    }
    std::vector<Vec> rows_;
    std::vector<int> pivots_;
};

// Basis of the solution space of rows * x = 0 in dimension w.
std::vector<Vec> nullspace(std::vector<Vec> rows, int w) {
    RowSpace rs;
    for (auto& r : rows) rs.insert(std::move(r));
    // Echelon rows with pivots; free columns give basis vectors.
    std::vector<char> is_pivot(w, 0);
    for (int p : rs.pivots()) is_pivot[p] = 1;
    std::vector<Vec> basis;
    for (int free = 0; free < w; ++free) {
        if (is_pivot[free]) continue;
        Vec v(w, Rat(0));
        v[free] = Rat(1);
        // Rows are echelon in insertion order: a row may involve pivots of
        // later rows, so back-substitute from the last row upward.
        for (int i = static_cast<int>(rs.rows().size()) - 1; i >= 0; --i) {
            const Vec& row = rs.rows()[i];
            Rat acc(0);
            for (int k = 0; k < w; ++k)
                if (k != rs.pivots()[i] && !row[k].is_zero()) acc += row[k] * v[k];
            v[rs.pivots()[i]] = -acc;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

struct AlgebraBasis {
    RowSpace space;
    std::vector<std::vector<Vec>> elems;  // element -> branch -> coeffs
};

Vec flatten(const std::vector<Vec>& tuple, int m) {
    Vec flat;
    flat.reserve(tuple.size() * m);
    for (auto& b : tuple)
        for (int e = 0; e < m; ++e) flat.push_back(e < (int)b.size() ? b[e] : Rat(0));
    return flat;
}

std::vector<Vec> truncate_tuple(const std::vector<Vec>& tuple, int m) {
    std::vector<Vec> out;
    for (auto& b : tuple) {
        Vec bb(m, Rat(0));
        for (int e = 0; e < m && e < (int)b.size(); ++e) bb[e] = b[e];
        out.push_back(std::move(bb));
    }
    return out;
}

std::vector<Vec> multiply_tuple(const std::vector<Vec>& a,
                                const std::vector<Vec>& b, int m) {
    std::vector<Vec> out;
    for (size_t br = 0; br < a.size(); ++br) {
        Vec c(m, Rat(0));
        for (int i = 0; i < m; ++i) {
            if (a[br][i].is_zero()) continue;
            for (int j = 0; j + i < m; ++j) {
                if (b[br][j].is_zero()) continue;
                c[i + j] += a[br][i] * b[br][j];
            }
        }
        out.push_back(std::move(c));
    }
    return out;
}

// Closure of the generated subalgebra at truncation m.
AlgebraBasis algebra_at(const Germ& g, int m) {
    AlgebraBasis ab;
    auto try_add = [&](const std::vector<Vec>& tuple) {
        if (ab.space.insert(flatten(tuple, m))) ab.elems.push_back(tuple);
    };
    // Constant.
    {
        std::vector<Vec> one(g.branches, Vec(m, Rat(0)));
        for (auto& b : one) b[0] = Rat(1);
        try_add(one);
    }
    // Conductor tails.
    for (int br = 0; br < g.branches; ++br)
        for (int e = g.conductors[br]; e < m; ++e) {
            std::vector<Vec> tail(g.branches, Vec(m, Rat(0)));
            tail[br][e] = Rat(1);
            try_add(tail);
        }
    // Declared generators.
    for (auto& gen : g.gens) try_add(truncate_tuple(gen, m));

    // Multiplicative closure.
    bool grew = true;
    while (grew) {
        grew = false;
        size_t n = ab.elems.size();
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i; j < n; ++j) {
                auto prod = multiply_tuple(ab.elems[i], ab.elems[j], m);
                if (ab.space.insert(flatten(prod, m))) {
                    ab.elems.push_back(prod);
                    grew = true;
                }
            }
    }
    return ab;
}

int max_conductor(const Germ& g) {
    int c = 0;
    for (int v : g.conductors) c = std::max(c, v);
    return c;
}

long delta_at(const Germ& g, int m) {
    auto ab = algebra_at(g, m);
    return static_cast<long>(g.branches) * m - ab.space.dim();
}

long t_at(const Germ& g, int m) {
    auto ab = algebra_at(g, m);
    // Window per branch: exponents -c_i - 1 .. m - 1.
    std::vector<int> offset(g.branches + 1, 0);
    for (int br = 0; br < g.branches; ++br)
        offset[br + 1] = offset[br] + (m + g.conductors[br] + 1);
    int w = offset[g.branches];

    // Residue-pairing conditions against every algebra basis element.
    std::vector<Vec> rows;
    for (auto& f : ab.elems) {
        Vec row(w, Rat(0));
        for (int br = 0; br < g.branches; ++br) {
            for (int k = 0; k < m; ++k) {
                if (f[br][k].is_zero()) continue;
                int e = -1 - k;  // form exponent pairing with t^k
                if (e < -g.conductors[br] - 1) continue;
                row[offset[br] + (e + g.conductors[br] + 1)] += f[br][k];
            }
        }
        rows.push_back(std::move(row));
    }
    auto omega = nullspace(std::move(rows), w);

    // m * omega: products of maximal-ideal elements with omega elements,
    // truncated to the window.
    RowSpace momega;
    for (auto& f : ab.elems) {
        // Center: subtract the common constant term.
        Rat c0 = f[0][0];
        std::vector<Vec> fm = f;
        for (auto& b : fm) b[0] -= c0;
        bool nonzero = false;
        for (auto& b : fm)
            for (auto& cc : b)
                if (!cc.is_zero()) nonzero = true;
        if (!nonzero) continue;
        for (auto& eta : omega) {
            Vec prod(w, Rat(0));
            for (int br = 0; br < g.branches; ++br) {
                for (int k = 0; k < m; ++k) {
                    if (fm[br][k].is_zero()) continue;
                    for (int e = -g.conductors[br] - 1; e < m; ++e) {
                        const Rat& ec = eta[offset[br] + (e + g.conductors[br] + 1)];
                        if (ec.is_zero()) continue;
                        int ee = e + k;
                        if (ee >= m || ee < -g.conductors[br] - 1) continue;
                        prod[offset[br] + (ee + g.conductors[br] + 1)] +=
                            fm[br][k] * ec;
                    }
                }
            }
            momega.insert(std::move(prod));
        }
    }
    return static_cast<long>(omega.size()) - momega.dim();
}

void check_trunc(const Germ& g) {
    if (g.branches < 1) throw ValidationError("germ needs at least one branch");
    if ((int)g.conductors.size() != g.branches)
        throw ValidationError("conductor list does not match branch count");
    if (g.trunc < max_conductor(g) + 4)
        throw PrecisionError("germ truncation too small for stabilization");
    for (auto& gen : g.gens) {
        if ((int)gen.size() != g.branches)
            throw ValidationError("generator tuple does not match branch count");
        for (auto& b : gen)
            if (!b.empty() && b[0] != gen[0][0])
                throw ValidationError(
                    "generator has branch-dependent constant term; the germ "
                    "would not be local");
    }
}

Germ make_germ(std::string name, int branches,
               std::vector<std::vector<std::vector<std::pair<int, Rat>>>> gens,
               std::vector<int> conductors) {
    Germ g;
    g.name = std::move(name);
    g.branches = branches;
    g.conductors = std::move(conductors);
    int c = max_conductor(g);
    g.trunc = std::max(2 * c + 2, c + 6);
    for (auto& gen : gens) {
        std::vector<Vec> tuple(branches, Vec(g.trunc, Rat(0)));
        for (int br = 0; br < branches; ++br)
            for (auto& [e, coef] : gen[br]) {
                if (e < g.trunc) tuple[br][e] = coef;
            }
        g.gens.push_back(std::move(tuple));
    }
    return g;
}

}  // namespace

Germ germ_catalog(const std::string& name, long n) {
    using Term = std::pair<int, Rat>;
    using BranchGen = std::vector<Term>;
    auto one = Rat(1);
    if (name == "line")
        return make_germ("line", 1, {{BranchGen{{1, one}}}}, {0});
    if (name == "node")
        return make_germ("node", 2,
                         {{BranchGen{{1, one}}, BranchGen{}},
                          {BranchGen{}, BranchGen{{1, one}}}},
                         {1, 1});
    if (name == "cusp")
        return make_germ("cusp", 1, {{BranchGen{{2, one}}}, {BranchGen{{3, one}}}},
                         {2});
    if (name == "tacnode")
        return make_germ("tacnode", 2,
                         {{BranchGen{{1, one}}, BranchGen{{1, one}}},
                          {BranchGen{{2, one}}, BranchGen{{2, Rat(-1)}}}},
                         {2, 2});
    if (name == "elliptic_nfold") {
        if (n < 2) throw ValidationError("elliptic_nfold needs n >= 2");
        int r = static_cast<int>(n);
        // Directions e_1, ..., e_{n-1}, (1,...,1); coordinate j restricts to
        // t on branches j and n.
        std::vector<std::vector<BranchGen>> gens;
        for (int j = 0; j < r - 1; ++j) {
            std::vector<BranchGen> gen(r);
            gen[j] = {{1, one}};
            gen[r - 1] = {{1, one}};
            gens.push_back(gen);
        }
        return make_germ("elliptic_nfold(" + std::to_string(n) + ")", r, gens,
                         std::vector<int>(r, 2));
    }
    if (name == "coordinate_cross") {
        if (n < 2) throw ValidationError("coordinate_cross needs n >= 2");
        int r = static_cast<int>(n);
        std::vector<std::vector<BranchGen>> gens;
        for (int j = 0; j < r; ++j) {
            std::vector<BranchGen> gen(r);
            gen[j] = {{1, one}};
            gens.push_back(gen);
        }
        return make_germ("coordinate_cross(" + std::to_string(n) + ")", r, gens,
                         std::vector<int>(r, 1));
    }
    if (name == "genus2_cusp_345")
        return make_germ("genus2_cusp_345", 1,
                         {{BranchGen{{3, one}}},
                          {BranchGen{{4, one}}},
                          {BranchGen{{5, one}}}},
                         {3});
    if (name == "genus2_cusp_25")
        return make_germ("genus2_cusp_25", 1,
                         {{BranchGen{{2, one}}}, {BranchGen{{5, one}}}}, {4});
    if (name == "planar_cusp_line")
        // x(y^2 - x^3) = 0: cusp branch (t^2, t^3) and the line x = 0.
        return make_germ("planar_cusp_line", 2,
                         {{BranchGen{{2, one}}, BranchGen{}},
                          {BranchGen{{3, one}}, BranchGen{{1, one}}}},
                         {4, 2});
    if (name == "cusp_line_Ccusp10")
        return make_germ("cusp_line_Ccusp10", 2,
                         {{BranchGen{{2, one}}, BranchGen{{1, one}}}}, {3, 2});
    if (name == "osculating_P1s")
        // Two smooth branches with third-order contact.
        return make_germ("osculating_P1s", 2,
                         {{BranchGen{{1, one}}, BranchGen{{1, one}}}}, {3, 3});
    if (name == "two_cusps_transversal")
        return transversal_union(germ_catalog("cusp"), germ_catalog("cusp"));
    if (name == "cusp_line_transversal")
        return transversal_union(germ_catalog("cusp"), germ_catalog("line"));
    throw ValidationError("unknown germ: " + name);
}

std::vector<std::string> germ_catalog_names() {
    return {"line",
            "node",
            "cusp",
            "tacnode",
            "elliptic_nfold",
            "coordinate_cross",
            "genus2_cusp_345",
            "genus2_cusp_25",
            "planar_cusp_line",
            "cusp_line_Ccusp10",
            "osculating_P1s",
            "two_cusps_transversal",
            "cusp_line_transversal"};
}

Germ transversal_union(const Germ& a, const Germ& b) {
    Germ g;
    g.name = "union(" + a.name + "," + b.name + ")";
    g.branches = a.branches + b.branches;
    g.quasihomogeneous = a.quasihomogeneous && b.quasihomogeneous;
    for (int v : a.conductors) g.conductors.push_back(std::max(v, 1));
    for (int v : b.conductors) g.conductors.push_back(std::max(v, 1));
    int c = 0;
    for (int v : g.conductors) c = std::max(c, v);
    g.trunc = std::max(2 * c + 2, c + 6);
    auto centered = [&](const std::vector<Vec>& tuple, int shift,
                        int total) {
        std::vector<Vec> out(total, Vec(g.trunc, Rat(0)));
        Rat c0 = tuple[0].empty() ? Rat(0) : tuple[0][0];
        for (size_t br = 0; br < tuple.size(); ++br)
            for (int e = 0; e < g.trunc && e < (int)tuple[br].size(); ++e) {
                Rat v = tuple[br][e];
                if (e == 0) v -= c0;
                out[shift + br][e] = v;
            }
        return out;
    };
    for (auto& gen : a.gens) g.gens.push_back(centered(gen, 0, g.branches));
    for (auto& gen : b.gens)
        g.gens.push_back(centered(gen, a.branches, g.branches));
    return g;
}

long delta(const Germ& g) {
    check_trunc(g);
    long d1 = delta_at(g, g.trunc);
    long d0 = delta_at(g, g.trunc - 2);
    if (d0 != d1)
        throw PrecisionError("delta did not stabilize; enlarge the truncation");
    return d1;
}

long t_invariant(const Germ& g) {
    check_trunc(g);
    long t1 = t_at(g, g.trunc);
    long t0 = t_at(g, g.trunc - 2);
    if (t0 != t1)
        throw PrecisionError("t did not stabilize; enlarge the truncation");
    return t1;
}

long e_invariant(const Germ& g) {
    if (!g.quasihomogeneous)
        throw ValidationError(
            "e-invariant is only computed for quasihomogeneous germs");
    return 2 * delta(g) - g.branches + t_invariant(g);
}

GermInvariants germ_invariants(const Germ& g) {
    GermInvariants inv;
    inv.delta = delta(g);
    inv.r = g.branches;
    inv.t = t_invariant(g);
    inv.e = g.quasihomogeneous ? 2 * inv.delta - inv.r + inv.t : -1;
    if (!g.quasihomogeneous)
        throw ValidationError(
            "e-invariant is only computed for quasihomogeneous germs");
    return inv;
}

std::vector<long> one_branch_valuations(const Germ& g) {
    if (g.branches != 1)
        throw ValidationError("value semigroup needs a one-branch germ");
    auto ab = algebra_at(g, g.trunc);
    std::vector<long> vals;
    for (int p : ab.space.pivots()) vals.push_back(p);
    std::sort(vals.begin(), vals.end());
    return vals;
}

}  // namespace u22
