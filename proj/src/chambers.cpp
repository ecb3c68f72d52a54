#include "hnc/chambers.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace hnc {

ChamberId ChamberId::ambiguous(std::vector<std::string> labels) {
    std::sort(labels.begin(), labels.end());
    return {Kind::AmbiguousWall, std::move(labels)};
}

std::string chamber_id_to_string(const ChamberId& id) {
    switch (id.kind) {
    case ChamberId::Kind::Semistable:
        return "semistable";
    case ChamberId::Kind::Destab:
        return "destab(" + id.labels[0] + ")";
    case ChamberId::Kind::AmbiguousWall: {
        std::string out = "ambiguous_wall(";
        for (std::size_t i = 0; i < id.labels.size(); ++i) {
            if (i) out += ',';
            out += id.labels[i];
        }
        return out + ")";
    }
    }
    return "?";
}

ChamberId chamber_id(const SurfaceModel& model, const DivClass& H) {
    DestabScan scan = scan_destabilizers(model, H);
    if (scan.best.empty()) return ChamberId::semistable();
    if (scan.best.size() == 1)
        return ChamberId::destab(model.candidates[scan.best[0]].label);
    std::vector<std::string> labels;
    labels.reserve(scan.best.size());
    for (std::size_t i : scan.best) labels.push_back(model.candidates[i].label);
    return ChamberId::ambiguous(std::move(labels));
}

namespace {

// One maximal piece of the angular sweep: a ray (lo == hi) or an open sector.
struct SweepRegion {
    DivClass lo, hi;
    bool is_ray = false;
    ChamberId id;
};

} // namespace

Decomposition decompose(const SurfaceModel& model) {
    if (model.lattice.rank != 2)
        throw Error(ErrorCode::RankUnsupported,
                    "decompose: chamber decomposition is defined at rank 2 only");
    if (!model.cone.generators)
        throw Error(ErrorCode::MissingGenerators,
                    "decompose: ample cone generators are required");

    const DivClass& g1 = (*model.cone.generators)[0];
    const DivClass& g2 = (*model.cone.generators)[1];
    const int orient = sgn(cross2(g1, g2));
    assert(orient != 0);

    auto strictly_inside = [&](const DivClass& d) {
        return sgn(cross2(g1, d)) == orient && sgn(cross2(d, g2)) == orient;
    };

    Decomposition out;

    // Wall rays inside the open cone, merged when distinct candidates share a
    // direction.
    std::vector<std::pair<DivClass, std::vector<std::string>>> rays;
    for (const auto& cand : model.candidates) {
        DivClass w = wall_class(cand, model);
        if (w.is_zero()) {
            out.notes.push_back("candidate '" + cand.label +
                                "' has zero wall class (c1 = c1(T)/2); it never strictly "
                                "destabilizes and contributes no wall");
            continue;
        }
        DivClass normal = gram_apply(model.lattice, w);
        if (normal.is_zero()) {
            out.notes.push_back("candidate '" + cand.label +
                                "' has a wall class in the gram kernel; its wall value "
                                "vanishes identically and contributes no wall");
            continue;
        }
        DivClass dir(std::vector<Rat>{-normal.coeffs[1], normal.coeffs[0]});
        DivClass chosen;
        if (strictly_inside(dir))
            chosen = dir;
        else if (strictly_inside(negate(dir)))
            chosen = negate(dir);
        else
            continue; // wall misses the open cone
        DivClass prim = primitive(chosen, model.lattice, model.cone);
        auto it = std::find_if(rays.begin(), rays.end(),
                               [&](const auto& r) { return r.first == prim; });
        if (it == rays.end())
            rays.push_back({prim, {cand.label}});
        else
            it->second.push_back(cand.label);
    }

    std::sort(rays.begin(), rays.end(), [&](const auto& a, const auto& b) {
        return sgn(cross2(a.first, b.first)) == orient;
    });

    // Angular sweep g1 -> r_1 -> ... -> r_k -> g2, alternating sectors and
    // wall rays, each labeled by chamber_id at a sample point.
    std::vector<SweepRegion> regions;
    DivClass prev = g1;
    for (const auto& [ray, labels] : rays) {
        regions.push_back({prev, ray, false, {}});
        regions.push_back({ray, ray, true, {}});
        prev = ray;
    }
    regions.push_back({prev, g2, false, {}});
    for (auto& region : regions) {
        DivClass sample = region.is_ray ? region.lo : add(region.lo, region.hi);
        region.id = chamber_id(model, sample);
    }

    // Merge runs of equal id; an absorbed boundary ray closes the adjacent
    // sector on that side, a surviving ray becomes a zero-width chamber.
    for (std::size_t i = 0; i < regions.size();) {
        std::size_t j = i;
        while (j + 1 < regions.size() && regions[j + 1].id == regions[i].id) ++j;
        Chamber chamber;
        chamber.id = regions[i].id;
        chamber.boundary = {regions[i].lo, regions[j].hi};
        chamber.boundary_closed = {regions[i].is_ray, regions[j].is_ray};
        chamber.sample = (regions[i].lo == regions[j].hi)
                             ? regions[i].lo
                             : add(regions[i].lo, regions[j].hi);
        assert(chamber_id(model, chamber.sample) == chamber.id);
        out.chambers.push_back(std::move(chamber));
        i = j + 1;
    }
    return out;
}

SegmentReport segment_analysis(const SurfaceModel& model, const DivClass& Ha,
                               const DivClass& Hb) {
    require_ample(model, Ha, "segment_analysis");
    require_ample(model, Hb, "segment_analysis");
    DivClass dH = sub(Hb, Ha);

    std::vector<Rat> crossings;   // wall-value roots in [0,1]
    std::vector<Rat> breakpoints; // chamber-id breakpoints in (0,1)

    auto add_root = [](std::vector<Rat>& into, const Rat& t) {
        if (std::find(into.begin(), into.end(), t) == into.end()) into.push_back(t);
    };

    for (const auto& cand : model.candidates) {
        DivClass w = wall_class(cand, model);
        if (w.is_zero()) continue;
        Rat c = pair(model.lattice, w, Ha);
        Rat s = pair(model.lattice, w, dH);
        if (sgn(s) == 0) continue; // constant wall value, no isolated root
        Rat t = -c / s;
        if (t >= 0 && t <= 1) {
            add_root(crossings, t);
            if (t > 0 && t < 1) add_root(breakpoints, t);
        }
    }
    // Slope ties between candidates move the maximal destabilizer without any
    // wall value vanishing; their roots are breakpoints but not crossings.
    for (std::size_t i = 0; i < model.candidates.size(); ++i)
        for (std::size_t j = i + 1; j < model.candidates.size(); ++j) {
            DivClass diff = sub(model.candidates[i].c1, model.candidates[j].c1);
            Rat c = pair(model.lattice, diff, Ha);
            Rat s = pair(model.lattice, diff, dH);
            if (sgn(s) == 0) continue;
            Rat t = -c / s;
            if (t > 0 && t < 1) add_root(breakpoints, t);
        }

    std::sort(crossings.begin(), crossings.end());
    std::sort(breakpoints.begin(), breakpoints.end());

    // Pieces in order: point 0, open gap, point b1, ..., point 1.
    struct Piece {
        Rat lo, hi;
        bool is_point;
        ChamberId id;
    };
    std::vector<Rat> points;
    points.emplace_back(0);
    for (const auto& b : breakpoints) points.push_back(b);
    points.emplace_back(1);

    auto at = [&](const Rat& t) { return add(Ha, scale(t, dH)); };

    std::vector<Piece> pieces;
    for (std::size_t i = 0; i < points.size(); ++i) {
        pieces.push_back({points[i], points[i], true, chamber_id(model, at(points[i]))});
        if (i + 1 < points.size()) {
            Rat mid = (points[i] + points[i + 1]) / 2;
            pieces.push_back(
                {points[i], points[i + 1], false, chamber_id(model, at(mid))});
        }
    }

    SegmentReport report;
    report.crossings = std::move(crossings);
    for (std::size_t i = 0; i < pieces.size();) {
        std::size_t j = i;
        while (j + 1 < pieces.size() && pieces[j + 1].id == pieces[i].id) ++j;
        SegmentInterval interval;
        interval.id = pieces[i].id;
        interval.lo = pieces[i].lo;
        interval.hi = pieces[j].hi;
        interval.lo_closed = pieces[i].is_point;
        interval.hi_closed = pieces[j].is_point;
        report.intervals.push_back(std::move(interval));
        i = j + 1;
    }

    // Segment corollary: a report without semistable or ambiguous points must
    // be a single destabilizing chamber.
    bool all_destab = std::all_of(
        report.intervals.begin(), report.intervals.end(),
        [](const SegmentInterval& iv) { return iv.id.kind == ChamberId::Kind::Destab; });
    if (all_destab && report.intervals.size() != 1)
        throw std::logic_error(
            "segment_analysis: corollary violated (multiple destabilizing chambers on a "
            "segment without semistable points)");
    return report;
}

bool check_convexity(const SurfaceModel& model, const DivClass& H1, const DivClass& H2) {
    ChamberId a = chamber_id(model, H1);
    ChamberId b = chamber_id(model, H2);
    if (!(a == b)) return true; // implication is vacuous
    return chamber_id(model, add(H1, H2)) == a;
}

} // namespace hnc
