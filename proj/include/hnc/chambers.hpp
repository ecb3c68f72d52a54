#pragma once

#include "hnc/stability.hpp"

namespace hnc {

// Label of a region of the ample cone: semistable (no declared candidate
// destabilizes), a single maximal destabilizer, or a tie between several.
struct ChamberId {
    enum class Kind { Semistable, Destab, AmbiguousWall };
    Kind kind = Kind::Semistable;
    std::vector<std::string> labels; // sorted; empty for Semistable, one for Destab

    static ChamberId semistable() { return {Kind::Semistable, {}}; }
    static ChamberId destab(std::string label) { return {Kind::Destab, {std::move(label)}}; }
    static ChamberId ambiguous(std::vector<std::string> labels);

    bool operator==(const ChamberId&) const = default;
};

std::string chamber_id_to_string(const ChamberId& id);

// A sector of the ample cone (rank 2): boundary rays in angular order from
// the first cone generator, per-ray inclusion flags (whether ample points on
// that ray belong to this chamber), and an interior sample. lo == hi marks a
// zero-width chamber (a single ray).
struct Chamber {
    ChamberId id;
    std::array<DivClass, 2> boundary;
    std::array<bool, 2> boundary_closed{false, false};
    DivClass sample;
};

struct Decomposition {
    std::vector<Chamber> chambers;
    std::vector<std::string> notes; // e.g. candidates with degenerate zero wall class
};

struct SegmentInterval {
    Rat lo, hi;
    bool lo_closed = true, hi_closed = true;
    ChamberId id;
};

// Partition of the segment H(t) = Ha + t(Hb - Ha), t in [0,1], into maximal
// constant-chamber intervals, with the exact parameters where wall values
// vanish. Wall values are affine in t, so everything is decided exactly.
struct SegmentReport {
    std::vector<SegmentInterval> intervals;
    std::vector<Rat> crossings;
};

// Total on ample classes: a slope tie yields an AmbiguousWall id instead of
// an error.
ChamberId chamber_id(const SurfaceModel& model, const DivClass& H);

// Wall-and-chamber decomposition of a rank-2 ample cone with generators.
// Sectors are listed in angular order from the first generator; adjacent
// labels differ; zero-width ray chambers appear where the label changes but
// matches neither neighbor (e.g. a semistable wall between two destabilizing
// sectors).
Decomposition decompose(const SurfaceModel& model);

SegmentReport segment_analysis(const SurfaceModel& model, const DivClass& Ha,
                               const DivClass& Hb);

// chamber_id(H1) = chamber_id(H2) implies chamber_id(H1+H2) equals it; the
// structure lemma makes this always true, so the probe returns true or dies
// trying. Exposed for randomized property runs.
bool check_convexity(const SurfaceModel& model, const DivClass& H1, const DivClass& H2);

} // namespace hnc
