#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "u22/chambers.hpp"
#include "u22/io.hpp"
#include "u22/special.hpp"

using namespace u22;

namespace {

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ValidationError("bad JSON in " + path + ": " + e.what());
    }
    return j;
}

std::string loci_to_string(const std::set<LocusName>& loci) {
    std::string out = "{";
    bool first = true;
    for (auto l : loci) {
        if (!first) out += ", ";
        out += to_string(l);
        first = false;
    }
    return out + "}";
}

// The transposed chambers classify the transposed point in the mirror
// chamber.
std::pair<ModuliPoint, ChamberName> normalize_chamber(const ModuliPoint& p,
                                                      ChamberName ch) {
    switch (ch) {
        case ChamberName::II_T:
            return {transpose_point(p), ChamberName::II};
        case ChamberName::III_T:
            return {transpose_point(p), ChamberName::III};
        default:
            return {p, ch};
    }
}

std::string classify_point_line(const ModuliPoint& p, ChamberName ch) {
    auto [q, base] = normalize_chamber(p, ch);
    auto loci = unstable_loci(q, base);
    if (loci.empty()) return "stable";
    return "unstable: " + loci_to_string(loci);
}

Verdict verdict_of(const StabilityVerdict& v, ChamberName ch) {
    switch (ch) {
        case ChamberName::I: return v.i;
        case ChamberName::II: return v.ii;
        case ChamberName::III: return v.iii;
        default:
            throw ValidationError(
                "descriptions classify in chambers i, ii, iii");
    }
}

std::string description_path(const CurveDescription& d) {
    if (d.irreducible) {
        std::string s = "irreducible";
        if (!d.germ_tag.empty()) s += ", singularity " + d.germ_tag;
        s += d.weierstrass_p1 ? ", h1(2p1) != 0" : ", h1(2p1) = 0";
        return s;
    }
    std::string s = "two components, g = (" + std::to_string(d.g1) + "," +
                    std::to_string(d.g2) + "), l(xi) = " +
                    std::to_string(d.xi_length) + ", support points: " +
                    std::to_string(d.support.size());
    for (auto& sp : d.support)
        s += " [" + to_string(sp.on_c1) + "/" + to_string(sp.on_c2) + "]";
    if (d.xi_divisor_equiv_2p1) s += ", xi ~ 2p1";
    if (d.restriction_constant) s += ", constant restriction";
    if (d.special_iso != SpecialIso::None)
        s += ", iso " + to_string(d.special_iso);
    return s;
}

int run_verify(const std::string& suite, bool emit_json) {
    std::vector<std::pair<std::string, std::function<std::pair<bool, std::string>()>>>
        checks;
    auto want = [&](const std::string& name) {
        return suite == "all" || suite == name;
    };
    if (want("universal"))
        checks.push_back({"universal", [] {
                              bool ok = verify_universal_relations();
                              return std::make_pair(
                                  ok,
                                  std::string("S-polynomial remainders lie in "
                                              "the minor ideal"));
                          }});
    if (want("blowdown"))
        checks.push_back({"blowdown", [] {
                              bool ok = verify_blowdown_orbit() &&
                                        blowdown_image(Rat(1), Rat(1)) ==
                                            c0_point();
                              return std::make_pair(
                                  ok, std::string("orbit normalization and "
                                                  "parameter (1,1) image"));
                          }});
    if (want("c0"))
        checks.push_back({"c0", [] {
                              C0Report rep = verify_c0_geometry();
                              return std::make_pair(
                                  rep.ok(), rep.details.empty()
                                                ? "two branches, ideal match, "
                                                  "length-3 contact"
                                                : rep.details);
                          }});
    if (want("p2"))
        checks.push_back({"p2", [] {
                              bool ok = verify_p2_probe() &&
                                        !verify_p2_probe(true);
                              return std::make_pair(
                                  ok, std::string("plane decomposition needs "
                                                  "exactly the minor"));
                          }});
    if (want("weierstrass"))
        checks.push_back({"weierstrass", [] {
                              bool ok = verify_weierstrass_relations() &&
                                        !verify_weierstrass_relations({}, true);
                              return std::make_pair(
                                  ok, std::string("fibration relations with "
                                                  "negative control"));
                          }});
    if (checks.empty())
        throw ValidationError("unknown suite: " + suite +
                              " (expected universal, blowdown, c0, p2, "
                              "weierstrass, all)");
    json report;
    bool all_ok = true;
    for (auto& [name, fn] : checks) {
        auto [ok, details] = fn();
        report[name] = {{"pass", ok}, {"details", details}};
        all_ok = all_ok && ok;
        if (!emit_json)
            std::cout << (ok ? "PASS" : "FAIL") << "  " << name << ": "
                      << details << "\n";
    }
    if (emit_json)
        std::cout << report.dump(2) << "\n";
    else
        std::cout << (all_ok ? "all checks passed" : "some checks FAILED")
                  << "\n";
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact models of two-pointed genus-2 curves with nonspecial "
        "divisors: classification, extraction, invariants, verification"};
    app.require_subcommand(1);

    // classify
    std::string point_path, desc_path, cfam_path, chamber_arg = "all";
    auto* classify =
        app.add_subcommand("classify", "GIT verdict for a point or a curve "
                                       "description");
    auto* popt = classify->add_option("--point", point_path,
                                      "ModuliPoint JSON file");
    auto* dopt =
        classify->add_option("--desc", desc_path, "CurveDescription JSON file");
    auto* fopt = classify->add_option(
        "--family", cfam_path,
        "family JSON file; classifies the extracted point and cross-checks "
        "the geometric verdict");
    popt->excludes(dopt);
    popt->excludes(fopt);
    dopt->excludes(fopt);
    classify->add_option("--chamber", chamber_arg,
                         "i, ii, iii, ii-t, iii-t, or all");

    // curve-eq
    std::string eq_point_path;
    bool eq_json = false;
    auto* curve_eq = app.add_subcommand(
        "curve-eq", "print the universal curve equations at a point");
    curve_eq->add_option("--point", eq_point_path, "ModuliPoint JSON file")
        ->required();
    curve_eq->add_flag("--json", eq_json, "emit JSON");

    // extract
    std::string family_path;
    auto* extract_cmd = app.add_subcommand(
        "extract", "canonical coordinates of a family instance");
    extract_cmd->add_option("--family", family_path, "family JSON file")
        ->required();

    // sing
    std::string germ_name, germ_json_path;
    long germ_n = 0;
    auto* sing = app.add_subcommand("sing", "singularity invariants");
    sing->add_option("name", germ_name, "catalog germ name");
    sing->add_option("--n", germ_n, "parameter for parametric germs");
    sing->add_option("--germ-json", germ_json_path, "explicit germ JSON file");

    // chambers
    long chi1 = 0, chi2 = 0;
    bool have_char = false;
    std::string ch_point_path;
    auto* chambers_cmd =
        app.add_subcommand("chambers", "chamber data and cone membership");
    auto* x1opt = chambers_cmd->add_option("--x1", chi1, "character component");
    auto* x2opt = chambers_cmd->add_option("--x2", chi2, "character component");
    x1opt->needs(x2opt);
    x2opt->needs(x1opt);
    chambers_cmd->add_option("--point", ch_point_path,
                             "test semistability of this point");

    // verify
    std::string suite = "all";
    bool verify_json = false;
    auto* verify_cmd =
        app.add_subcommand("verify", "run the verification suites");
    verify_cmd->add_option("suite", suite,
                           "universal, blowdown, c0, p2, weierstrass, all");
    verify_cmd->add_flag("--json", verify_json, "emit a JSON report");

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify->parsed()) {
            if (point_path.empty() && desc_path.empty() && cfam_path.empty())
                throw ValidationError(
                    "classify needs --point, --desc, or --family");
            std::vector<ChamberName> chs;
            if (chamber_arg == "all")
                chs = {ChamberName::I, ChamberName::II, ChamberName::III};
            else
                chs = {chamber_from_string(chamber_arg)};
            if (!point_path.empty()) {
                ModuliPoint p = point_from_json(load_json(point_path));
                for (auto ch : chs) {
                    if (chs.size() > 1) std::cout << to_string(ch) << ": ";
                    std::cout << classify_point_line(p, ch) << "\n";
                }
            } else if (!desc_path.empty()) {
                CurveDescription d =
                    description_from_json(load_json(desc_path));
                std::cout << "# " << description_path(d) << "\n";
                auto v = classify_geometric(d);
                for (auto ch : chs) {
                    if (chs.size() > 1) std::cout << to_string(ch) << ": ";
                    std::cout << to_string(verdict_of(v, ch)) << "\n";
                }
            } else {
                CurvePresentation pres =
                    presentation_from_json(load_json(cfam_path));
                ExtractionResult res = extract(pres);
                auto v = classify_geometric(describe(pres));
                bool agree = true;
                for (auto ch : chs) {
                    std::string line = classify_point_line(res.point, ch);
                    if (chs.size() > 1) std::cout << to_string(ch) << ": ";
                    std::cout << line << "\n";
                    auto [q, base] = normalize_chamber(res.point, ch);
                    bool point_stable = unstable_loci(q, base).empty();
                    if (base != ChamberName::I && base != ChamberName::II &&
                        base != ChamberName::III)
                        continue;
                    if (ch == ChamberName::II_T || ch == ChamberName::III_T)
                        continue;  // geometric verdicts are for i, ii, iii
                    bool geo_stable =
                        verdict_of(v, ch) == Verdict::Stable;
                    if (point_stable != geo_stable) agree = false;
                }
                std::cout << (agree ? "geometric verdict agrees"
                                    : "MISMATCH with geometric verdict")
                          << "\n";
                if (!agree) return 1;
            }
            return 0;
        }
        if (curve_eq->parsed()) {
            ModuliPoint p = point_from_json(load_json(eq_point_path));
            auto ideal = build_curve_ideal(p);
            if (eq_json) {
                json j = json::array();
                for (auto& g : ideal.generators) j.push_back(g.str());
                std::cout << j.dump(2) << "\n";
            } else {
                for (auto& g : ideal.generators)
                    std::cout << g.str() << " = 0\n";
            }
            return 0;
        }
        if (extract_cmd->parsed()) {
            CurvePresentation pres =
                presentation_from_json(load_json(family_path));
            ExtractionResult res = extract(pres);
            json j = to_json(res);
            j["description"] = to_json(describe(pres));
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (sing->parsed()) {
            Germ g = !germ_json_path.empty()
                         ? germ_from_json(load_json(germ_json_path))
                         : germ_catalog(germ_name, germ_n);
            std::cout << to_json(germ_invariants(g)).dump(2) << "\n";
            return 0;
        }
        if (chambers_cmd->parsed()) {
            have_char = x1opt->count() > 0;
            Character chi{chi1, chi2};
            for (auto& c : chambers()) {
                std::cout << to_string(c.name) << ": cone <(" << c.cone.v1().x1
                          << "," << c.cone.v1().x2 << "), (" << c.cone.v2().x1
                          << "," << c.cone.v2().x2 << ")>, representative ("
                          << c.representative.x1 << ","
                          << c.representative.x2 << ")";
                if (have_char)
                    std::cout << (c.cone.contains(chi) ? "  contains chi"
                                                       : "");
                std::cout << "\n";
            }
            if (!ch_point_path.empty()) {
                ModuliPoint p = point_from_json(load_json(ch_point_path));
                if (have_char) {
                    std::cout << "semistable(chi=(" << chi.x1 << "," << chi.x2
                              << ")): "
                              << (is_semistable(p, chi) ? "yes" : "no")
                              << "\n";
                } else {
                    for (auto& c : chambers())
                        std::cout << to_string(c.name) << ": "
                                  << (is_semistable(p, c.representative)
                                          ? "semistable"
                                          : "unstable")
                                  << "\n";
                }
            }
            return 0;
        }
        if (verify_cmd->parsed()) return run_verify(suite, verify_json);
    } catch (const BudgetError& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
