#pragma once

#include "hnc/chambers.hpp"

namespace hnc {

// A strict inequality verified at the returned polarization, with its exact
// value. Geometric hypotheses that cannot be checked numerically (uniruled,
// very-freeness of the curve class) are listed separately as assumptions.
struct CertEntry {
    std::string expr;
    Rat value; // > 0, re-checkable from scratch
};

struct MRCResult {
    DivClass polarization; // exact rational, ample
    HNFResult hnf;
    int m = 0; // positive length, >= 1
    std::optional<Rat> epsilon;
    std::vector<CertEntry> certificate;
    std::vector<std::string> assumptions;
};

// Affine function a + b*eps with exact coefficients, labeled for certificates.
struct AffineConstraint {
    std::string label;
    Rat constant;
    Rat slope;

    Rat at(const Rat& eps) const { return constant + slope * eps; }
};

struct RatInterval {
    Rat lo, hi; // open interval (lo, hi)
};

// The open subinterval of (0, cap) on which every constraint is strictly
// positive. Throws EmptyInterval when the intersection is empty.
RatInterval epsilon_interval(const std::vector<AffineConstraint>& constraints, const Rat& cap);

// An ample rational H with c1(T).H > 0: breadth-first mediants of the cone
// generators, then the caller's seeds. Requires the uniruled flag (the paper
// guarantees existence only for uniruled surfaces).
DivClass find_positive_polarization(const SurfaceModel& model,
                                    const std::vector<DivClass>& seeds = {});

// Polarizations H_eps = l + eps*H2 for nef l and ample H2. Verifies exactly
// that the maximal destabilizer is constant on the ray (all wall values and
// pairwise slope differences are affine in eps), solves for the eps interval
// making the required slopes positive, and returns the result at the
// smallest-denominator rational in that interval.
MRCResult mrc_ray_search(const SurfaceModel& model, const DivClass& l, const DivClass& H2,
                         const Rat& cap = Rat(1));

struct MRCOptions {
    std::optional<bool> rc_hint;      // overrides the model flag when set
    std::optional<DivClass> nef_class; // very free curve class l (RC path)
    std::optional<DivClass> aux_ample; // auxiliary ample class H2 (RC path)
    Rat cap = Rat(1);
};

// Driver for the main theorem's case split: try a positivity polarization
// directly (non-RC path); fall back to the nef-ray construction when the
// model is hinted rationally connected or no candidate destabilizes.
MRCResult mrc_polarization(const SurfaceModel& model, const MRCOptions& options = {});

} // namespace hnc
