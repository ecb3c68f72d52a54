#include "hnc/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <sstream>

#include "hnc/mrc_search.hpp"
#include "hnc/surface_zoo.hpp"
#include "hnc/svg_render.hpp"

namespace hnc::cli {

using nlohmann::ordered_json;

namespace {

struct UsageError {
    std::string message;
};

DivClass parse_vec(const char* flag, const std::string& text) {
    std::vector<Rat> coeffs;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string part =
            text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        auto r = try_parse_rat(part);
        if (!r)
            throw UsageError{std::string(flag) + ": invalid rational '" + part +
                             "' in vector '" + text + "'"};
        coeffs.push_back(*r);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return DivClass(std::move(coeffs));
}

Rat parse_rat_flag(const char* flag, const std::string& text) {
    auto r = try_parse_rat(text);
    if (!r) throw UsageError{std::string(flag) + ": invalid rational '" + text + "'"};
    return *r;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::ParseError, "cannot read file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorCode::ValidationError, "cannot write file '" + path + "'");
    out << content;
    if (!out)
        throw Error(ErrorCode::ValidationError, "failed writing file '" + path + "'");
}

ordered_json vec_json(const DivClass& v) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : v.coeffs) arr.push_back(rat_to_string(c));
    return arr;
}

ordered_json id_json(const ChamberId& id) {
    ordered_json j;
    switch (id.kind) {
    case ChamberId::Kind::Semistable:
        j["kind"] = "semistable";
        j["relative_to_declared_candidates"] = true;
        break;
    case ChamberId::Kind::Destab:
        j["kind"] = "destab";
        break;
    case ChamberId::Kind::AmbiguousWall:
        j["kind"] = "ambiguous_wall";
        break;
    }
    j["labels"] = id.labels;
    return j;
}

ordered_json sheaf_json(const SheafDescriptor& sheaf) {
    ordered_json j;
    j["label"] = sheaf.label;
    j["rank"] = sheaf.rank;
    j["c1"] = vec_json(sheaf.c1);
    if (!sheaf.note.empty()) j["note"] = sheaf.note;
    return j;
}

ordered_json hnf_json(const HNFResult& hnf) {
    ordered_json j;
    if (hnf.is_semistable()) {
        j["type"] = "semistable";
        j["relative_to_declared_candidates"] = true;
        j["slope"] = rat_to_string(hnf.as_semistable().slope);
    } else {
        const TwoStep& two = hnf.as_two_step();
        j["type"] = "two_step";
        j["destabilizer"] = sheaf_json(two.destabilizer);
        j["mu1"] = rat_to_string(two.mu1);
        j["mu2"] = rat_to_string(two.mu2);
    }
    j["positive_length"] = hnf.positive_length;
    return j;
}

ordered_json chamber_json(const Chamber& chamber) {
    ordered_json j;
    j["id"] = id_json(chamber.id);
    j["boundary"] = {vec_json(chamber.boundary[0]), vec_json(chamber.boundary[1])};
    j["boundary_closed"] = {chamber.boundary_closed[0], chamber.boundary_closed[1]};
    j["sample"] = vec_json(chamber.sample);
    return j;
}

// Shared per-invocation state: option strings bound to CLI11 plus the loaded
// model and provenance echo.
struct Invocation {
    std::string builtin, surface;
    std::string sheaf, H, from, to, nef, aux, svg, emit, name;
    std::string eps_cap = "1";

    ordered_json provenance = ordered_json::object();
    std::vector<std::string> warnings;

    SurfaceModel load_model() {
        if (builtin.empty() == surface.empty())
            throw UsageError{"exactly one of --builtin or --surface is required"};
        ordered_json src;
        if (!builtin.empty()) {
            src["builtin"] = builtin;
            provenance["surface"] = src;
            return builtin_surface(builtin);
        }
        src["path"] = surface;
        provenance["surface"] = src;
        IngestResult ingest = from_config(read_file(surface));
        warnings = ingest.warnings;
        return ingest.model;
    }
};

void add_source_options(CLI::App* cmd, Invocation& inv) {
    cmd->add_option("--builtin", inv.builtin, "builtin surface, e.g. hirzebruch:2 or product:3");
    cmd->add_option("--surface", inv.surface, "path to a surface description document");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact slope-stability and ample-cone chamber computations for surfaces"};
    app.name("hnchambers");
    app.require_subcommand(0, 1);

    Invocation inv;

    CLI::App* cmd_slope = app.add_subcommand("slope", "slope of a sheaf at a polarization");
    add_source_options(cmd_slope, inv);
    cmd_slope->add_option("--sheaf", inv.sheaf, "candidate label, or TX for the tangent bundle")
        ->required();
    cmd_slope->add_option("--H", inv.H, "polarization, comma-separated rationals")->required();

    CLI::App* cmd_hnf =
        app.add_subcommand("hnf", "Harder-Narasimhan filtration of the tangent bundle");
    add_source_options(cmd_hnf, inv);
    cmd_hnf->add_option("--H", inv.H, "polarization, comma-separated rationals")->required();

    CLI::App* cmd_chamber = app.add_subcommand("chamber", "chamber id of one polarization");
    add_source_options(cmd_chamber, inv);
    cmd_chamber->add_option("--H", inv.H, "polarization, comma-separated rationals")->required();

    CLI::App* cmd_chambers =
        app.add_subcommand("chambers", "wall-and-chamber decomposition of the ample cone");
    add_source_options(cmd_chambers, inv);
    cmd_chambers->add_option("--svg", inv.svg, "write an SVG figure to this path");

    CLI::App* cmd_segment =
        app.add_subcommand("segment", "chamber intervals along a polarization segment");
    add_source_options(cmd_segment, inv);
    cmd_segment->add_option("--from", inv.from, "segment start, ample")->required();
    cmd_segment->add_option("--to", inv.to, "segment end, ample")->required();

    CLI::App* cmd_mrc = app.add_subcommand(
        "mrc", "polarization whose filtration realizes the MRC quotient");
    add_source_options(cmd_mrc, inv);
    cmd_mrc->add_option("--nef", inv.nef, "very free curve class (rationally connected path)");
    cmd_mrc->add_option("--aux", inv.aux, "auxiliary ample class for the ray construction");
    cmd_mrc->add_option("--eps-cap", inv.eps_cap, "upper bound for epsilon (default 1)");

    CLI::App* cmd_builtin = app.add_subcommand("builtin", "emit a builtin surface description");
    cmd_builtin->add_option("name", inv.name, "builtin selector, e.g. hirzebruch:0")->required();
    cmd_builtin->add_option("--emit", inv.emit, "also write the document to this path");

    CLI::App* cmd_validate = app.add_subcommand("validate", "validate a surface description");
    cmd_validate->add_option("--surface", inv.surface, "path to a surface description document")
        ->required();

    std::vector<const char*> argv;
    argv.push_back("hnchambers");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }
    if (app.get_subcommands().empty()) {
        err << "usage error: a subcommand is required (see --help)\n";
        return 2;
    }

    ordered_json doc;
    doc["tool"] = "hnchambers";
    std::string sub = app.get_subcommands()[0]->get_name();
    doc["subcommand"] = sub;

    auto emit_doc = [&]() {
        if (!inv.warnings.empty()) doc["warnings"] = inv.warnings;
        out << doc.dump(2) << "\n";
    };

    try {
        ordered_json options = ordered_json::object();
        ordered_json result;

        if (app.got_subcommand(cmd_slope)) {
            SurfaceModel model = inv.load_model();
            options["sheaf"] = inv.sheaf;
            options["H"] = inv.H;
            DivClass H = parse_vec("--H", inv.H);
            SheafDescriptor sheaf;
            if (inv.sheaf == "TX") {
                sheaf = tangent_sheaf(model);
            } else {
                auto it = std::find_if(
                    model.candidates.begin(), model.candidates.end(),
                    [&](const SheafDescriptor& c) { return c.label == inv.sheaf; });
                if (it == model.candidates.end())
                    throw Error(ErrorCode::NotFound,
                                "no candidate labeled '" + inv.sheaf + "' on surface '" +
                                    model.name + "'");
                sheaf = *it;
            }
            result["sheaf"] = sheaf_json(sheaf);
            result["H"] = vec_json(H);
            result["slope"] = rat_to_string(slope(sheaf, H, model));
        } else if (app.got_subcommand(cmd_hnf)) {
            SurfaceModel model = inv.load_model();
            options["H"] = inv.H;
            DivClass H = parse_vec("--H", inv.H);
            result["H"] = vec_json(H);
            result["hnf"] = hnf_json(hn_filtration(model, H));
        } else if (app.got_subcommand(cmd_chamber)) {
            SurfaceModel model = inv.load_model();
            options["H"] = inv.H;
            DivClass H = parse_vec("--H", inv.H);
            result["H"] = vec_json(H);
            result["id"] = id_json(chamber_id(model, H));
        } else if (app.got_subcommand(cmd_chambers)) {
            SurfaceModel model = inv.load_model();
            if (!inv.svg.empty()) options["svg"] = inv.svg;
            Decomposition dec = decompose(model);
            result["count"] = dec.chambers.size();
            result["chambers"] = ordered_json::array();
            for (const auto& chamber : dec.chambers)
                result["chambers"].push_back(chamber_json(chamber));
            result["notes"] = dec.notes;
            if (!inv.svg.empty())
                write_file(inv.svg, render_chambers_svg(dec, model.cone, model.lattice));
        } else if (app.got_subcommand(cmd_segment)) {
            SurfaceModel model = inv.load_model();
            options["from"] = inv.from;
            options["to"] = inv.to;
            DivClass Ha = parse_vec("--from", inv.from);
            DivClass Hb = parse_vec("--to", inv.to);
            SegmentReport report = segment_analysis(model, Ha, Hb);
            result["intervals"] = ordered_json::array();
            for (const auto& iv : report.intervals) {
                ordered_json j;
                j["t_lo"] = rat_to_string(iv.lo);
                j["t_hi"] = rat_to_string(iv.hi);
                j["lo_closed"] = iv.lo_closed;
                j["hi_closed"] = iv.hi_closed;
                j["id"] = id_json(iv.id);
                result["intervals"].push_back(std::move(j));
            }
            result["crossings"] = ordered_json::array();
            for (const auto& t : report.crossings)
                result["crossings"].push_back(rat_to_string(t));
        } else if (app.got_subcommand(cmd_mrc)) {
            SurfaceModel model = inv.load_model();
            MRCOptions mrc_options;
            if (!inv.nef.empty()) {
                options["nef"] = inv.nef;
                mrc_options.nef_class = parse_vec("--nef", inv.nef);
            }
            if (!inv.aux.empty()) {
                options["aux"] = inv.aux;
                mrc_options.aux_ample = parse_vec("--aux", inv.aux);
            }
            options["eps_cap"] = inv.eps_cap;
            mrc_options.cap = parse_rat_flag("--eps-cap", inv.eps_cap);
            MRCResult mrc = mrc_polarization(model, mrc_options);
            result["polarization"] = vec_json(mrc.polarization);
            result["epsilon"] = mrc.epsilon ? ordered_json(rat_to_string(*mrc.epsilon))
                                            : ordered_json(nullptr);
            result["m"] = mrc.m;
            result["hnf"] = hnf_json(mrc.hnf);
            result["certificate"] = ordered_json::array();
            for (const auto& entry : mrc.certificate) {
                ordered_json j;
                j["expr"] = entry.expr;
                j["value"] = rat_to_string(entry.value);
                result["certificate"].push_back(std::move(j));
            }
            result["assumptions"] = mrc.assumptions;
        } else if (app.got_subcommand(cmd_builtin)) {
            ordered_json src;
            src["builtin"] = inv.name;
            inv.provenance["surface"] = src;
            SurfaceModel model = builtin_surface(inv.name);
            std::string text = serialize(model);
            if (!inv.emit.empty()) {
                options["emit"] = inv.emit;
                write_file(inv.emit, text);
            }
            result["model"] = ordered_json::parse(text);
        } else if (app.got_subcommand(cmd_validate)) {
            ordered_json src;
            src["path"] = inv.surface;
            inv.provenance["surface"] = src;
            IngestResult ingest = from_config(read_file(inv.surface));
            result["valid"] = true;
            result["name"] = ingest.model.name;
            result["warnings"] = ingest.warnings;
        }

        inv.provenance["options"] = std::move(options);
        doc["provenance"] = inv.provenance;
        doc["result"] = std::move(result);
        emit_doc();
        return 0;
    } catch (const UsageError& e) {
        err << "usage error: " << e.message << "\n";
        return 2;
    } catch (const Error& e) {
        doc["provenance"] = inv.provenance;
        ordered_json error;
        error["code"] = error_code_name(e.code());
        error["message"] = e.what();
        doc["error"] = std::move(error);
        emit_doc();
        return 1;
    } catch (const std::exception& e) {
        doc["provenance"] = inv.provenance;
        ordered_json error;
        error["code"] = "Internal";
        error["message"] = e.what();
        doc["error"] = std::move(error);
        emit_doc();
        return 1;
    }
}

} // namespace hnc::cli
