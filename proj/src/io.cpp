#include "u22/io.hpp"

namespace u22 {

json rat_to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (!j.is_string())
        throw ValidationError("rational values must be strings like \"3/4\"");
    return Rat::parse(j.get<std::string>());
}

json to_json(const ModuliPoint& p) {
    json j;
    for (int i = 0; i < 10; ++i)
        j[coordinate_names()[i]] = rat_to_json(p.coord(i));
    return j;
}

ModuliPoint point_from_json(const json& j) {
    if (!j.is_object()) throw ValidationError("point: expected an object");
    ModuliPoint p;
    for (int i = 0; i < 10; ++i) {
        const std::string& name = coordinate_names()[i];
        if (!j.contains(name))
            throw ValidationError("point: missing coordinate " + name);
        p.coord(i) = rat_from_json(j.at(name));
    }
    return p;
}

namespace {

BranchType branch_from_string(const std::string& s) {
    if (s == "smooth") return BranchType::Smooth;
    if (s == "node") return BranchType::Node;
    if (s == "cusp") return BranchType::Cusp;
    throw ValidationError("unknown branch type: " + s);
}

SpecialIso iso_from_string(const std::string& s) {
    if (s.empty()) return SpecialIso::None;
    if (s == "Ccusp11") return SpecialIso::Ccusp11;
    if (s == "Ccusp01") return SpecialIso::Ccusp01;
    if (s == "Ccusp10") return SpecialIso::Ccusp10;
    if (s == "C0") return SpecialIso::C0;
    throw ValidationError("unknown special isomorphism tag: " + s);
}

}  // namespace

json to_json(const CurveDescription& d) {
    json j;
    if (d.irreducible) {
        j["kind"] = "irreducible";
        j["weierstrass_p1"] = d.weierstrass_p1;
        if (!d.germ_tag.empty()) j["germ"] = d.germ_tag;
        return j;
    }
    j["kind"] = "two_components";
    j["g1"] = d.g1;
    j["g2"] = d.g2;
    j["xi_length"] = d.xi_length;
    json sup = json::array();
    for (auto& s : d.support)
        sup.push_back(
            {{"on_c1", to_string(s.on_c1)}, {"on_c2", to_string(s.on_c2)}});
    j["support"] = sup;
    if (d.xi_divisor_equiv_2p1) j["xi_divisor_equiv_2p1"] = true;
    if (d.restriction_constant) j["restriction_constant"] = true;
    if (d.special_iso != SpecialIso::None)
        j["special_iso"] = to_string(d.special_iso);
    return j;
}

CurveDescription description_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw ValidationError("description: expected an object with kind");
    CurveDescription d;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "irreducible") {
        d.irreducible = true;
        d.weierstrass_p1 = j.value("weierstrass_p1", false);
        d.germ_tag = j.value("germ", std::string());
    } else if (kind == "two_components") {
        d.irreducible = false;
        d.g1 = j.at("g1").get<int>();
        d.g2 = j.at("g2").get<int>();
        d.xi_length = j.at("xi_length").get<int>();
        for (auto& s : j.at("support")) {
            SupportPoint sp;
            sp.on_c1 = branch_from_string(s.at("on_c1").get<std::string>());
            sp.on_c2 = branch_from_string(s.at("on_c2").get<std::string>());
            d.support.push_back(sp);
        }
        d.xi_divisor_equiv_2p1 = j.value("xi_divisor_equiv_2p1", false);
        d.restriction_constant = j.value("restriction_constant", false);
        d.special_iso = iso_from_string(j.value("special_iso", std::string()));
    } else {
        throw ValidationError("description: unknown kind " + kind);
    }
    if (!validate(d)) throw ValidationError("description fails validation");
    return d;
}

json to_json(const Germ& g) {
    json j;
    j["branches"] = g.branches;
    j["truncation"] = g.trunc;
    j["conductors"] = g.conductors;
    j["quasihomogeneous"] = g.quasihomogeneous;
    if (!g.name.empty()) j["name"] = g.name;
    json gens = json::array();
    for (auto& gen : g.gens) {
        json tuple = json::array();
        for (auto& branch : gen) {
            json coeffs = json::array();
            for (auto& c : branch) coeffs.push_back(rat_to_json(c));
            tuple.push_back(coeffs);
        }
        gens.push_back(tuple);
    }
    j["generators"] = gens;
    return j;
}

Germ germ_from_json(const json& j) {
    Germ g;
    g.branches = j.at("branches").get<int>();
    g.trunc = j.at("truncation").get<int>();
    g.conductors = j.at("conductors").get<std::vector<int>>();
    g.quasihomogeneous = j.value("quasihomogeneous", true);
    g.name = j.value("name", std::string());
    for (auto& tuple : j.at("generators")) {
        std::vector<std::vector<Rat>> gen;
        for (auto& branch : tuple) {
            std::vector<Rat> coeffs(g.trunc, Rat(0));
            int i = 0;
            for (auto& c : branch) {
                if (i >= g.trunc) break;
                coeffs[i++] = rat_from_json(c);
            }
            gen.push_back(std::move(coeffs));
        }
        if (static_cast<int>(gen.size()) != g.branches)
            throw ValidationError("germ: generator tuple size mismatch");
        g.gens.push_back(std::move(gen));
    }
    return g;
}

json to_json(const GermInvariants& inv) {
    return json{{"delta", inv.delta}, {"r", inv.r}, {"t", inv.t}, {"e", inv.e}};
}

json to_json(const CurvePresentation& pres) {
    json params;
    for (auto& [k, v] : pres.params) params[k] = rat_to_json(v);
    return json{{"kind", to_string(pres.kind)}, {"params", params}};
}

CurvePresentation presentation_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.contains("params"))
        throw ValidationError("family: expected {kind, params}");
    std::map<std::string, Rat> params;
    for (auto& [k, v] : j.at("params").items())
        params.emplace(k, rat_from_json(v));
    return family(family_kind_from_string(j.at("kind").get<std::string>()),
                  params);
}

json to_json(const ExtractionResult& res) {
    json j;
    j["point"] = to_json(res.point);
    j["pi1"] = rat_to_json(res.pi1);
    j["pi2"] = rat_to_json(res.pi2);
    json raw;
    for (auto& [k, v] : res.raw) raw[k] = rat_to_json(v);
    j["coefficients"] = raw;
    json shifts;
    shifts["a1"] = rat_to_json(res.a1);
    shifts["b1"] = rat_to_json(res.b1);
    shifts["c1"] = rat_to_json(res.c1);
    shifts["a2"] = rat_to_json(res.a2);
    shifts["b2"] = rat_to_json(res.b2);
    shifts["c2"] = rat_to_json(res.c2);
    j["normalization"] = shifts;
    return j;
}

}  // namespace u22
