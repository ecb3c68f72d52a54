#include "hnc/surface_zoo.hpp"

#include <json.hpp>

#include "hnc/stability.hpp"

namespace hnc {

using nlohmann::ordered_json;

SurfaceModel hirzebruch(int n) {
    if (n < 0)
        throw Error(ErrorCode::ValidationError, "hirzebruch: n must be non-negative");

    SurfaceModel model;
    model.name = "hirzebruch:" + std::to_string(n);
    model.lattice.rank = 2;
    model.lattice.gram = {{-static_cast<long long>(n), 1}, {1, 0}};
    model.lattice.basis_labels = {"C0", "f"};
    model.canonical = div_class({-2, -(2 + static_cast<long>(n))});
    model.tangent_c1 = div_class({2, 2 + static_cast<long>(n)});

    // pair((0,1), H) = a and pair((1,0), H) = b - a*n for H = a*C0 + b*f,
    // so these two inequalities are exactly "a > 0 and b > a*n".
    model.cone.inequalities = {div_class({0, 1}), div_class({1, 0})};
    model.cone.generators = {{div_class({0, 1}), div_class({1, static_cast<long>(n)})}};

    if (n == 0) {
        model.candidates = {
            {"T1_X/P1", 1, div_class({2, 0}), true,
             "relative tangent bundle of the first projection"},
            {"T2_X/P1", 1, div_class({0, 2}), true,
             "relative tangent bundle of the second projection"},
        };
    } else {
        model.candidates = {
            {"T_X/P1", 1, div_class({2, static_cast<long>(n)}), true,
             "relative tangent bundle of the ruling"},
        };
    }
    model.flags.uniruled = true;
    model.flags.rc_hint = true;
    validate_model(model);
    return model;
}

SurfaceModel product_with_line(int g) {
    if (g < 1)
        throw Error(ErrorCode::InvalidGenus,
                    "product_with_line: need genus >= 1 (use hirzebruch(0) for g = 0)");

    SurfaceModel model;
    model.name = "product:" + std::to_string(g);
    model.lattice.rank = 2;
    model.lattice.gram = {{0, 1}, {1, 0}};
    model.lattice.basis_labels = {"s", "f"};
    model.canonical = div_class({-2, -(2 - 2 * static_cast<long>(g))});
    model.tangent_c1 = div_class({2, 2 - 2 * static_cast<long>(g)});
    model.cone.inequalities = {div_class({0, 1}), div_class({1, 0})};
    model.cone.generators = {{div_class({1, 0}), div_class({0, 1})}};
    model.candidates = {
        {"T_X/C", 1, div_class({2, 0}), true,
         "relative tangent bundle of the projection to C"},
    };
    model.flags.uniruled = true;
    model.flags.rc_hint = false;
    validate_model(model);
    return model;
}

SurfaceModel builtin_surface(const std::string& selector) {
    auto colon = selector.find(':');
    std::string family = selector.substr(0, colon);
    std::string param = colon == std::string::npos ? "" : selector.substr(colon + 1);

    auto parse_param = [&](const char* what) {
        auto r = param.empty() ? std::nullopt : try_parse_rat(param);
        if (!r || !is_integer(*r) || *r < 0 || *r > 1000)
            throw Error(ErrorCode::ParseError,
                        std::string("builtin '") + selector + "': " + what +
                            " needs an integer parameter in 0..1000");
        return static_cast<int>(r->get_num().get_si());
    };

    if (family == "hirzebruch") return hirzebruch(parse_param("hirzebruch"));
    if (family == "product") return product_with_line(parse_param("product"));
    throw Error(ErrorCode::ParseError,
                "unknown builtin '" + selector +
                    "' (expected hirzebruch:<n> or product:<g>)");
}

// ---------------------------------------------------------------------------
// Surface description format
// ---------------------------------------------------------------------------

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& why) {
    throw Error(ErrorCode::ParseError, path + ": " + why);
}

const ordered_json& need(const ordered_json& obj, const std::string& path, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) bad(path + "." + key, "missing");
    return *it;
}

void reject_unknown(const ordered_json& obj, const std::string& path,
                    std::initializer_list<const char*> known) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* k : known)
            if (it.key() == k) { ok = true; break; }
        if (!ok) bad(path + "." + it.key(), "unknown key");
    }
}

std::string get_string(const ordered_json& j, const std::string& path) {
    if (!j.is_string()) bad(path, "expected a string");
    return j.get<std::string>();
}

long long get_int(const ordered_json& j, const std::string& path) {
    if (!j.is_number_integer()) bad(path, "expected an integer");
    return j.get<long long>();
}

bool get_bool(const ordered_json& j, const std::string& path) {
    if (!j.is_boolean()) bad(path, "expected a boolean");
    return j.get<bool>();
}

Rat get_rat(const ordered_json& j, const std::string& path) {
    if (!j.is_string()) bad(path, "expected a rational string");
    auto r = try_parse_rat(j.get<std::string>());
    if (!r) bad(path, "invalid rational '" + j.get<std::string>() + "'");
    return *r;
}

DivClass get_rat_vector(const ordered_json& j, const std::string& path) {
    if (!j.is_array()) bad(path, "expected an array");
    std::vector<Rat> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(get_rat(j[i], path + "[" + std::to_string(i) + "]"));
    return DivClass(std::move(out));
}

DivClass get_int_vector(const ordered_json& j, const std::string& path) {
    if (!j.is_array()) bad(path, "expected an array");
    std::vector<Rat> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        out.emplace_back(get_int(j[i], path + "[" + std::to_string(i) + "]"));
    return DivClass(std::move(out));
}

IntMatrix get_int_matrix(const ordered_json& j, const std::string& path) {
    if (!j.is_array()) bad(path, "expected an array of arrays");
    IntMatrix m;
    m.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto& row = j[i];
        std::string rp = path + "[" + std::to_string(i) + "]";
        if (!row.is_array()) bad(rp, "expected an array");
        std::vector<long long> r;
        r.reserve(row.size());
        for (std::size_t k = 0; k < row.size(); ++k)
            r.push_back(get_int(row[k], rp + "[" + std::to_string(k) + "]"));
        m.push_back(std::move(r));
    }
    return m;
}

ordered_json rat_vector_json(const DivClass& v) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : v.coeffs) arr.push_back(rat_to_string(c));
    return arr;
}

ordered_json int_vector_json(const DivClass& v) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : v.coeffs) arr.push_back(c.get_num().get_si());
    return arr;
}

} // namespace

IngestResult from_config(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("document is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) bad("$", "expected an object");
    reject_unknown(doc, "$",
                   {"name", "rank", "basis", "gram", "canonical", "ample_cone", "candidates",
                    "automorphisms", "flags"});

    SurfaceModel model;
    model.name = get_string(need(doc, "$", "name"), "name");

    long long rank = get_int(need(doc, "$", "rank"), "rank");
    if (rank < 1 || rank > 64)
        throw Error(ErrorCode::ValidationError, "rank: must be in 1..64");
    model.lattice.rank = static_cast<int>(rank);

    const auto& basis = need(doc, "$", "basis");
    if (!basis.is_array()) bad("basis", "expected an array");
    for (std::size_t i = 0; i < basis.size(); ++i)
        model.lattice.basis_labels.push_back(
            get_string(basis[i], "basis[" + std::to_string(i) + "]"));

    model.lattice.gram = get_int_matrix(need(doc, "$", "gram"), "gram");
    model.canonical = get_rat_vector(need(doc, "$", "canonical"), "canonical");
    model.tangent_c1 = negate(model.canonical);

    const auto& cone = need(doc, "$", "ample_cone");
    if (!cone.is_object()) bad("ample_cone", "expected an object");
    reject_unknown(cone, "ample_cone", {"inequalities", "generators"});
    const auto& ineqs = need(cone, "ample_cone", "inequalities");
    if (!ineqs.is_array()) bad("ample_cone.inequalities", "expected an array");
    for (std::size_t i = 0; i < ineqs.size(); ++i)
        model.cone.inequalities.push_back(
            get_rat_vector(ineqs[i], "ample_cone.inequalities[" + std::to_string(i) + "]"));
    if (cone.contains("generators")) {
        const auto& gens = cone["generators"];
        if (!gens.is_array() || gens.size() != 2)
            bad("ample_cone.generators", "expected exactly two rays");
        model.cone.generators = {{get_int_vector(gens[0], "ample_cone.generators[0]"),
                                  get_int_vector(gens[1], "ample_cone.generators[1]")}};
    } else if (rank == 2) {
        throw Error(ErrorCode::ValidationError,
                    "ample_cone.generators: required at rank 2");
    }

    if (doc.contains("candidates")) {
        const auto& cands = doc["candidates"];
        if (!cands.is_array()) bad("candidates", "expected an array");
        for (std::size_t i = 0; i < cands.size(); ++i) {
            const auto& c = cands[i];
            std::string path = "candidates[" + std::to_string(i) + "]";
            if (!c.is_object()) bad(path, "expected an object");
            reject_unknown(c, path, {"label", "rank", "c1", "torsion_free_quotient", "note"});
            SheafDescriptor cand;
            cand.label = get_string(need(c, path, "label"), path + ".label");
            cand.rank = static_cast<int>(get_int(need(c, path, "rank"), path + ".rank"));
            cand.c1 = get_rat_vector(need(c, path, "c1"), path + ".c1");
            cand.torsion_free_quotient =
                c.contains("torsion_free_quotient")
                    ? get_bool(c["torsion_free_quotient"], path + ".torsion_free_quotient")
                    : true;
            if (c.contains("note")) cand.note = get_string(c["note"], path + ".note");
            model.candidates.push_back(std::move(cand));
        }
    }

    if (doc.contains("automorphisms")) {
        const auto& auts = doc["automorphisms"];
        if (!auts.is_array()) bad("automorphisms", "expected an array");
        for (std::size_t i = 0; i < auts.size(); ++i) {
            const auto& a = auts[i];
            std::string path = "automorphisms[" + std::to_string(i) + "]";
            if (!a.is_object()) bad(path, "expected an object");
            reject_unknown(a, path, {"label", "matrix", "identity_component"});
            LatticeAut aut;
            aut.label = get_string(need(a, path, "label"), path + ".label");
            aut.matrix = get_int_matrix(need(a, path, "matrix"), path + ".matrix");
            aut.identity_component =
                a.contains("identity_component")
                    ? get_bool(a["identity_component"], path + ".identity_component")
                    : false;
            model.automorphisms.push_back(std::move(aut));
        }
    }

    const auto& flags = need(doc, "$", "flags");
    if (!flags.is_object()) bad("flags", "expected an object");
    reject_unknown(flags, "flags", {"uniruled", "rc_hint"});
    model.flags.uniruled = get_bool(need(flags, "flags", "uniruled"), "flags.uniruled");
    if (flags.contains("rc_hint") && !flags["rc_hint"].is_null())
        model.flags.rc_hint = get_bool(flags["rc_hint"], "flags.rc_hint");

    IngestResult result{std::move(model), {}};
    result.warnings = validate_model(result.model);
    return result;
}

std::string serialize(const SurfaceModel& model) {
    ordered_json doc;
    doc["name"] = model.name;
    doc["rank"] = model.lattice.rank;
    doc["basis"] = model.lattice.basis_labels;
    doc["gram"] = model.lattice.gram;
    doc["canonical"] = rat_vector_json(model.canonical);

    ordered_json cone;
    cone["inequalities"] = ordered_json::array();
    for (const auto& w : model.cone.inequalities)
        cone["inequalities"].push_back(rat_vector_json(w));
    if (model.cone.generators)
        cone["generators"] = {int_vector_json((*model.cone.generators)[0]),
                              int_vector_json((*model.cone.generators)[1])};
    doc["ample_cone"] = std::move(cone);

    doc["candidates"] = ordered_json::array();
    for (const auto& cand : model.candidates) {
        ordered_json c;
        c["label"] = cand.label;
        c["rank"] = cand.rank;
        c["c1"] = rat_vector_json(cand.c1);
        c["torsion_free_quotient"] = cand.torsion_free_quotient;
        c["note"] = cand.note;
        doc["candidates"].push_back(std::move(c));
    }

    if (!model.automorphisms.empty()) {
        doc["automorphisms"] = ordered_json::array();
        for (const auto& aut : model.automorphisms) {
            ordered_json a;
            a["label"] = aut.label;
            a["matrix"] = aut.matrix;
            a["identity_component"] = aut.identity_component;
            doc["automorphisms"].push_back(std::move(a));
        }
    }

    ordered_json flags;
    flags["uniruled"] = model.flags.uniruled;
    if (model.flags.rc_hint)
        flags["rc_hint"] = *model.flags.rc_hint;
    else
        flags["rc_hint"] = nullptr;
    doc["flags"] = std::move(flags);

    return doc.dump(2) + "\n";
}

bool check_aut_invariance(const SurfaceModel& model, const std::string& aut_label,
                          const DivClass& H) {
    const LatticeAut& aut = find_automorphism(model, aut_label);
    auto L = max_destabilizer(model, H);
    if (!L)
        throw Error(ErrorCode::NoDestabilizer,
                    "check_aut_invariance: tangent bundle is semistable at " +
                        div_to_string(H) + " (relative to declared candidates)");
    return aut_apply(aut, L->c1) == L->c1;
}

} // namespace hnc
