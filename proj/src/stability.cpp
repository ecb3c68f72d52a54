#include "hnc/stability.hpp"

#include <sstream>

namespace hnc {

SheafDescriptor tangent_sheaf(const SurfaceModel& model) {
    return SheafDescriptor{"TX", 2, model.tangent_c1, true, "tangent bundle"};
}

SheafDescriptor quotient_sheaf(const SurfaceModel& model, const SheafDescriptor& L) {
    return SheafDescriptor{"TX/" + L.label, 1, sub(model.tangent_c1, L.c1), true,
                           "quotient of the tangent bundle by " + L.label};
}

void require_ample(const SurfaceModel& model, const DivClass& H, const char* who) {
    if (H.dim() != static_cast<std::size_t>(model.lattice.rank))
        throw Error(ErrorCode::DimensionMismatch,
                    std::string(who) + ": polarization length does not match lattice rank");
    if (!is_ample(model.cone, model.lattice, H))
        throw Error(ErrorCode::NotAmple,
                    std::string(who) + ": " + div_to_string(H) + " is not ample");
}

Rat slope(const SheafDescriptor& sheaf, const DivClass& H, const SurfaceModel& model) {
    require_ample(model, H, "slope");
    return pair(model.lattice, sheaf.c1, H) / Rat(sheaf.rank);
}

DivClass wall_class(const SheafDescriptor& L, const SurfaceModel& model) {
    if (L.rank != 1)
        throw Error(ErrorCode::RankUnsupported,
                    "wall_class: candidate '" + L.label + "' has rank " +
                        std::to_string(L.rank) + ", need rank 1");
    return sub(scale(Rat(2), L.c1), model.tangent_c1);
}

bool destabilizes(const SheafDescriptor& L, const DivClass& H, const SurfaceModel& model) {
    if (L.rank != 1)
        throw Error(ErrorCode::RankUnsupported,
                    "destabilizes: candidate '" + L.label + "' has rank " +
                        std::to_string(L.rank) + ", need rank 1");
    Rat mu_L = slope(L, H, model);
    Rat mu_T = slope(tangent_sheaf(model), H, model);
    return mu_L > mu_T;
}

DestabScan scan_destabilizers(const SurfaceModel& model, const DivClass& H) {
    require_ample(model, H, "max_destabilizer");
    Rat mu_T = pair(model.lattice, model.tangent_c1, H) / Rat(2);
    DestabScan scan;
    for (std::size_t i = 0; i < model.candidates.size(); ++i) {
        Rat mu = pair(model.lattice, model.candidates[i].c1, H);
        if (!(mu > mu_T)) continue;
        if (scan.best.empty() || mu > scan.best_slope) {
            scan.best.assign(1, i);
            scan.best_slope = mu;
        } else if (mu == scan.best_slope) {
            scan.best.push_back(i);
        }
    }
    return scan;
}

std::optional<SheafDescriptor> max_destabilizer(const SurfaceModel& model, const DivClass& H) {
    DestabScan scan = scan_destabilizers(model, H);
    if (scan.best.empty()) return std::nullopt;
    if (scan.best.size() > 1) {
        std::ostringstream os;
        os << "max_destabilizer: candidates";
        for (std::size_t i : scan.best) os << " '" << model.candidates[i].label << "'";
        os << " tie with slope " << rat_to_string(scan.best_slope) << " at "
           << div_to_string(H);
        throw Error(ErrorCode::AmbiguousWall, os.str());
    }
    return model.candidates[scan.best[0]];
}

HNFResult hn_filtration(const SurfaceModel& model, const DivClass& H) {
    auto L = max_destabilizer(model, H);
    if (!L) {
        Rat mu_T = slope(tangent_sheaf(model), H, model);
        return HNFResult{Semistable{mu_T}, sgn(mu_T) > 0 ? 1 : 0};
    }
    Rat mu1 = slope(*L, H, model);
    Rat mu2 = slope(quotient_sheaf(model, *L), H, model);
    HNFResult result{TwoStep{*L, mu1, mu2}, 0};
    result.positive_length = sgn(mu1) > 0 ? (sgn(mu2) > 0 ? 2 : 1) : 0;
    return result;
}

int positive_length(const HNFResult& hnf) { return hnf.positive_length; }

} // namespace hnc
