#pragma once

#include <string>

#include "hnc/model.hpp"

namespace hnc {

// The n-th Hirzebruch surface Sigma_n in the basis (C0, f): C0^2 = -n,
// C0.f = 1, f^2 = 0; ample cone a > 0, b > a*n; -K = 2*C0 + (2+n)*f. The
// relative tangent bundle of the ruling is the declared candidate; n = 0
// additionally declares the second projection's.
SurfaceModel hirzebruch(int n);

// C x P^1 for a genus-g curve C, basis (s, f) with s^2 = f^2 = 0, s.f = 1;
// -K = 2s + (2-2g)f; candidate T_{X/C} with c1 = 2s. Uniruled but not
// rationally connected for g >= 1.
SurfaceModel product_with_line(int g);

/// Builtin by selector string, e.g. "hirzebruch:2" or "product:3".
SurfaceModel builtin_surface(const std::string& selector);

struct IngestResult {
    SurfaceModel model;
    std::vector<std::string> warnings;
};

/// Parse and validate a surface description document (UTF-8 JSON text).
IngestResult from_config(const std::string& text);

/// Serialize back to the description format; round-trips through from_config.
std::string serialize(const SurfaceModel& model);

// Does the automorphism fix c1 of the maximal destabilizer at H? A false
// answer is legitimate for general lattice automorphisms; the image class is
// available via aut_apply for reporting.
bool check_aut_invariance(const SurfaceModel& model, const std::string& aut_label,
                          const DivClass& H);

} // namespace hnc
