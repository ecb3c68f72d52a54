#pragma once

#include <optional>
#include <variant>

#include "hnc/model.hpp"

namespace hnc {

struct Semistable {
    Rat slope; // slope of the tangent bundle itself

    bool operator==(const Semistable&) const = default;
};

struct TwoStep {
    SheafDescriptor destabilizer;
    Rat mu1; // slope of the destabilizer
    Rat mu2; // slope of the quotient descriptor (c1(T) - c1(L), rank 1)

    bool operator==(const TwoStep&) const = default;
};

// Harder-Narasimhan data of the tangent bundle at one polarization. The
// rank-2 shortcut caps the filtration length at two steps.
struct HNFResult {
    std::variant<Semistable, TwoStep> value;
    int positive_length = 0; // m = number of leading slopes > 0

    bool is_semistable() const { return std::holds_alternative<Semistable>(value); }
    const Semistable& as_semistable() const { return std::get<Semistable>(value); }
    const TwoStep& as_two_step() const { return std::get<TwoStep>(value); }

    bool operator==(const HNFResult&) const = default;
};

/// Descriptor of the tangent bundle itself (rank 2, c1 = -K).
SheafDescriptor tangent_sheaf(const SurfaceModel& model);

/// Quotient descriptor T/L for a rank-1 subsheaf descriptor L.
SheafDescriptor quotient_sheaf(const SurfaceModel& model, const SheafDescriptor& L);

// mu_H(F) = c1(F).H / rk(F). Refused at non-ample H: the definition needs a
// polarization, and formal boundary values invite misreading.
Rat slope(const SheafDescriptor& sheaf, const DivClass& H, const SurfaceModel& model);

// 2 c1(L) - c1(T): the integral-scaled wall normal. L destabilizes at H
// exactly when this class pairs strictly positively with H.
DivClass wall_class(const SheafDescriptor& L, const SurfaceModel& model);

bool destabilizes(const SheafDescriptor& L, const DivClass& H, const SurfaceModel& model);

// Outcome of scanning the candidate list at one polarization; chamber_id and
// max_destabilizer are two readings of the same scan.
struct DestabScan {
    std::vector<std::size_t> best; // indices of candidates of maximal slope; empty = none destabilizes
    Rat best_slope;
};

DestabScan scan_destabilizers(const SurfaceModel& model, const DivClass& H);

// The unique destabilizing candidate of maximal slope, none if no candidate
// destabilizes. A tie is an AmbiguousWall error: the true maximal
// destabilizing subsheaf is unique, so tied numerical data cannot name it.
std::optional<SheafDescriptor> max_destabilizer(const SurfaceModel& model, const DivClass& H);

HNFResult hn_filtration(const SurfaceModel& model, const DivClass& H);

/// m = max{i | mu_i > 0}, zero when no slope is positive.
int positive_length(const HNFResult& hnf);

/// Throws NotAmple unless H passes the cone test.
void require_ample(const SurfaceModel& model, const DivClass& H, const char* who);

} // namespace hnc
