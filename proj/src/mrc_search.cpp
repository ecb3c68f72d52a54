#include "hnc/mrc_search.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <sstream>

namespace hnc {

RatInterval epsilon_interval(const std::vector<AffineConstraint>& constraints, const Rat& cap) {
    if (sgn(cap) <= 0)
        throw Error(ErrorCode::ValidationError, "epsilon_interval: cap must be positive");
    Rat lo(0), hi(cap);
    for (const auto& c : constraints) {
        int s = sgn(c.slope);
        if (s == 0) {
            if (sgn(c.constant) <= 0)
                throw Error(ErrorCode::EmptyInterval,
                            "constraint '" + c.label + "' = " + rat_to_string(c.constant) +
                                " is never positive");
            continue;
        }
        Rat root = -c.constant / c.slope;
        if (s > 0)
            lo = std::max(lo, root);
        else
            hi = std::min(hi, root);
    }
    if (!(lo < hi))
        throw Error(ErrorCode::EmptyInterval,
                    "constraints admit no epsilon in (0, " + rat_to_string(cap) + ")");
    return {lo, hi};
}

DivClass find_positive_polarization(const SurfaceModel& model,
                                    const std::vector<DivClass>& seeds) {
    if (!model.flags.uniruled)
        throw Error(ErrorCode::ValidationError,
                    "find_positive_polarization: model is not declared uniruled");

    std::vector<DivClass> tested;
    auto good = [&](const DivClass& H) {
        if (!is_ample(model.cone, model.lattice, H)) return false;
        tested.push_back(H);
        return sgn(pair(model.lattice, model.tangent_c1, H)) > 0;
    };

    if (model.lattice.rank == 2 && model.cone.generators) {
        const DivClass& g1 = (*model.cone.generators)[0];
        const DivClass& g2 = (*model.cone.generators)[1];
        // Breadth-first mediant tree between the generators; every node is
        // interior to the cone, hence ample.
        std::deque<std::pair<DivClass, DivClass>> queue{{g1, g2}};
        const std::size_t max_nodes = 4095;
        for (std::size_t n = 0; n < max_nodes && !queue.empty(); ++n) {
            auto [a, b] = queue.front();
            queue.pop_front();
            DivClass mid = add(a, b);
            if (good(mid)) return mid;
            queue.emplace_back(a, mid);
            queue.emplace_back(mid, b);
        }
    }
    for (const auto& seed : seeds)
        if (good(seed)) return seed;

    std::ostringstream os;
    os << "find_positive_polarization: no tested class pairs positively with c1(T); tested "
       << tested.size() << " classes";
    for (std::size_t i = 0; i < tested.size() && i < 8; ++i)
        os << (i ? ", " : " (") << div_to_string(tested[i]);
    if (!tested.empty()) os << (tested.size() > 8 ? ", ..." : "") << ")";
    os << "; supply seeds for cones without rank-2 generators";
    throw Error(ErrorCode::NotFound, os.str());
}

namespace {

// Everything mrc_ray_search knows about the ray H_eps = l + eps*H2 after the
// exact breakpoint analysis of (0, cap).
struct RayAnalysis {
    // Open subintervals between consecutive breakpoints, with their ids.
    struct Piece {
        Rat lo, hi;
        ChamberId id;
    };
    std::vector<Piece> pieces;
    std::vector<std::pair<Rat, ChamberId>> breakpoint_ids;
};

AffineConstraint affine_pairing(const SurfaceModel& model, const std::string& label,
                                const DivClass& v, const DivClass& l, const DivClass& H2) {
    return {label, pair(model.lattice, v, l), pair(model.lattice, v, H2)};
}

RayAnalysis analyze_ray(const SurfaceModel& model, const DivClass& l, const DivClass& H2,
                        const Rat& cap) {
    std::vector<Rat> breaks;
    auto add_root = [&](const AffineConstraint& f) {
        if (sgn(f.slope) == 0) return;
        Rat t = -f.constant / f.slope;
        if (t > 0 && t < cap &&
            std::find(breaks.begin(), breaks.end(), t) == breaks.end())
            breaks.push_back(t);
    };

    for (const auto& cand : model.candidates) {
        DivClass w = wall_class(cand, model);
        if (w.is_zero()) continue;
        add_root(affine_pairing(model, "", w, l, H2));
    }
    for (std::size_t i = 0; i < model.candidates.size(); ++i)
        for (std::size_t j = i + 1; j < model.candidates.size(); ++j)
            add_root(affine_pairing(model, "",
                                    sub(model.candidates[i].c1, model.candidates[j].c1), l,
                                    H2));
    std::sort(breaks.begin(), breaks.end());

    auto id_at = [&](const Rat& eps) {
        return chamber_id(model, add(l, scale(eps, H2)));
    };

    RayAnalysis out;
    Rat prev(0);
    for (const auto& b : breaks) {
        out.pieces.push_back({prev, b, id_at((prev + b) / 2)});
        out.breakpoint_ids.emplace_back(b, id_at(b));
        prev = b;
    }
    out.pieces.push_back({prev, cap, id_at((prev + cap) / 2)});
    return out;
}

// Smallest-denominator rational in (lo, hi) avoiding the given points.
Rat pick_epsilon(const Rat& lo, const Rat& hi, const std::vector<Rat>& avoid) {
    std::vector<Rat> cuts;
    for (const auto& p : avoid)
        if (p > lo && p < hi) cuts.push_back(p);
    std::sort(cuts.begin(), cuts.end());

    std::optional<Rat> best;
    Rat left = lo;
    auto consider = [&](const Rat& a, const Rat& b) {
        Rat candidate = smallest_denominator_between(a, b);
        if (!best || candidate.get_den() < best->get_den() ||
            (candidate.get_den() == best->get_den() && candidate < *best))
            best = candidate;
    };
    for (const auto& c : cuts) {
        consider(left, c);
        left = c;
    }
    consider(left, hi);
    return *best;
}

} // namespace

MRCResult mrc_ray_search(const SurfaceModel& model, const DivClass& l, const DivClass& H2,
                         const Rat& cap) {
    require_ample(model, H2, "mrc_ray_search");
    if (l.dim() != static_cast<std::size_t>(model.lattice.rank))
        throw Error(ErrorCode::DimensionMismatch,
                    "mrc_ray_search: nef class length does not match lattice rank");
    if (!is_nef(model.cone, model.lattice, l))
        throw Error(ErrorCode::NotNef,
                    "mrc_ray_search: " + div_to_string(l) + " is outside the closed ample cone");
    if (sgn(cap) <= 0)
        throw Error(ErrorCode::ValidationError, "mrc_ray_search: cap must be positive");

    RayAnalysis ray = analyze_ray(model, l, H2, cap);

    for (const auto& piece : ray.pieces)
        if (piece.id.kind == ChamberId::Kind::AmbiguousWall)
            throw Error(ErrorCode::AmbiguousWall,
                        "mrc_ray_search: candidates " + chamber_id_to_string(piece.id) +
                            " tie on a whole subinterval of the ray");

    std::vector<AffineConstraint> base;
    for (std::size_t i = 0; i < model.cone.inequalities.size(); ++i)
        base.push_back(affine_pairing(model, "ampleness[" + std::to_string(i) + "]",
                                      model.cone.inequalities[i], l, H2));
    AffineConstraint tangent =
        affine_pairing(model, "tangent_degree: c1(TX).H_eps", model.tangent_c1, l, H2);

    MRCResult result;
    result.assumptions = {
        "uniruled: declared by the input, not verified",
        "semistability is relative to the declared candidate list",
        "nef class l: supplied by the caller; very-freeness of the underlying curve is "
        "not verified",
    };

    // Split per the theorem's proof: any semistable polarization on the ray
    // settles the claim with the trivial filtration; otherwise the (constant)
    // maximal destabilizer must acquire positive slopes. The semistable locus
    // is the trace of a closed convex cone, hence a single subinterval or a
    // single point.
    bool semi_piece = std::any_of(
        ray.pieces.begin(), ray.pieces.end(),
        [](const auto& p) { return p.id.kind == ChamberId::Kind::Semistable; });
    std::vector<Rat> semi_points;
    for (const auto& [t, id] : ray.breakpoint_ids)
        if (id.kind == ChamberId::Kind::Semistable) semi_points.push_back(t);
    bool any_semistable = semi_piece || !semi_points.empty();

    Rat eps;
    std::vector<AffineConstraint> enforced;
    if (semi_piece) {
        Rat s_lo = cap, s_hi = Rat(0);
        for (const auto& piece : ray.pieces)
            if (piece.id.kind == ChamberId::Kind::Semistable) {
                s_lo = std::min(s_lo, piece.lo);
                s_hi = std::max(s_hi, piece.hi);
            }
        enforced = base;
        enforced.push_back(tangent);
        RatInterval iv = epsilon_interval(enforced, cap);
        iv.lo = std::max(iv.lo, s_lo);
        iv.hi = std::min(iv.hi, s_hi);
        if (!(iv.lo < iv.hi))
            throw Error(ErrorCode::EmptyInterval,
                        "mrc_ray_search: c1(T) positivity and the semistable stretch of "
                        "the ray do not overlap");
        eps = pick_epsilon(iv.lo, iv.hi, {});
    } else if (!semi_points.empty()) {
        // Semistability only at an isolated wall point (the ray crosses
        // chambers there); the polarization is forced to that exact point.
        if (semi_points.size() > 1)
            throw Error(ErrorCode::ChamberNotConstant,
                        "mrc_ray_search: disconnected semistable locus on the ray; "
                        "candidate data is inconsistent");
        eps = semi_points[0];
        enforced = base;
        enforced.push_back(tangent);
        if (sgn(tangent.at(eps)) <= 0)
            throw Error(ErrorCode::EmptyInterval,
                        "mrc_ray_search: the only semistable point of the ray has "
                        "non-positive tangent degree");
    } else {
        // All pieces destabilized; collect the labels.
        std::vector<std::string> labels;
        for (const auto& piece : ray.pieces)
            if (std::find(labels.begin(), labels.end(), piece.id.labels[0]) == labels.end())
                labels.push_back(piece.id.labels[0]);
        if (labels.size() > 1) {
            bool tie_between = std::any_of(
                ray.breakpoint_ids.begin(), ray.breakpoint_ids.end(), [](const auto& b) {
                    return b.second.kind == ChamberId::Kind::AmbiguousWall;
                });
            std::string msg = "mrc_ray_search: distinct maximal destabilizers on the ray:";
            for (const auto& lab : labels) msg += " '" + lab + "'";
            throw Error(tie_between ? ErrorCode::AmbiguousWall : ErrorCode::ChamberNotConstant,
                        msg);
        }
        const std::string& label = labels[0];
        auto cand_it =
            std::find_if(model.candidates.begin(), model.candidates.end(),
                         [&](const SheafDescriptor& c) { return c.label == label; });
        assert(cand_it != model.candidates.end());
        const SheafDescriptor& L = *cand_it;

        std::vector<AffineConstraint> mandatory = base;
        mandatory.push_back(affine_pairing(model, "wall: (2c1(L)-c1(TX)).H_eps",
                                           wall_class(L, model), l, H2));
        mandatory.push_back(affine_pairing(model, "mu1: c1(L).H_eps", L.c1, l, H2));
        AffineConstraint quotient = affine_pairing(
            model, "mu2: c1(TX/L).H_eps", sub(model.tangent_c1, L.c1), l, H2);

        // Prefer both slopes positive (the theorem's rationally connected
        // case); fall back to tangent-degree positivity, then to the leading
        // slope alone (the non-RC shape, where mu2 stays negative).
        std::optional<RatInterval> iv;
        for (int tier = 0; tier < 3 && !iv; ++tier) {
            enforced = mandatory;
            if (tier <= 1) enforced.push_back(tangent);
            if (tier == 0) enforced.push_back(quotient);
            try {
                iv = epsilon_interval(enforced, cap);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::EmptyInterval || tier == 2) throw;
            }
        }

        // Isolated slope ties are excluded from the choice: the destabilizing
        // sheaf is unique there, but the numerical data cannot name it.
        std::vector<Rat> avoid;
        for (const auto& [t, id] : ray.breakpoint_ids)
            if (id.kind == ChamberId::Kind::AmbiguousWall) avoid.push_back(t);
        eps = pick_epsilon(iv->lo, iv->hi, avoid);

        // Redundant sampling guard on top of the exact analysis: the
        // destabilizer label must be identical at three interior rationals.
        Rat width = iv->hi - iv->lo;
        for (int k = 1; k <= 3; ++k) {
            Rat probe = iv->lo + width * k / 4;
            if (std::find(avoid.begin(), avoid.end(), probe) != avoid.end()) continue;
            ChamberId id = chamber_id(model, add(l, scale(probe, H2)));
            if (!(id == ChamberId::destab(label)))
                throw Error(ErrorCode::ChamberNotConstant,
                            "mrc_ray_search: sampled chamber " + chamber_id_to_string(id) +
                                " at eps = " + rat_to_string(probe) +
                                " disagrees with the exact analysis");
        }
    }

    DivClass H_star = add(l, scale(eps, H2));
    result.polarization = H_star;
    result.epsilon = eps;
    result.hnf = hn_filtration(model, H_star);
    result.m = positive_length(result.hnf);
    if (any_semistable && !result.hnf.is_semistable())
        throw Error(ErrorCode::ChamberNotConstant,
                    "mrc_ray_search: chosen epsilon left the semistable stretch; candidate "
                    "data is inconsistent");

    for (const auto& c : enforced) {
        Rat value = c.at(eps);
        assert(sgn(value) > 0);
        result.certificate.push_back({c.label, value});
    }
    if (result.hnf.is_semistable()) {
        // Record the strictly failing walls: no candidate destabilizes here.
        for (const auto& cand : model.candidates) {
            DivClass w = wall_class(cand, model);
            Rat value = pair(model.lattice, w, H_star);
            if (sgn(value) < 0)
                result.certificate.push_back(
                    {"wall(" + cand.label + ") < 0: -(2c1(L)-c1(TX)).H_eps", -value});
        }
    }
    return result;
}

MRCResult mrc_polarization(const SurfaceModel& model, const MRCOptions& options) {
    if (!model.flags.uniruled)
        throw Error(ErrorCode::ValidationError,
                    "mrc_polarization: model is not declared uniruled");

    // The case split reads the caller's hint only; the model's rc_hint flag
    // is descriptive metadata. Without a hint the direct path is tried first
    // and the ray construction is the fallback.
    if (!options.rc_hint.has_value() || !*options.rc_hint) {
        // Non-RC path: any polarization with positive tangent degree carries
        // a positive-slope destabilizer unless the surface is rationally
        // connected after all.
        DivClass H1 = find_positive_polarization(model);
        HNFResult hnf = hn_filtration(model, H1);
        if (!hnf.is_semistable()) {
            const TwoStep& two = hnf.as_two_step();
            Rat tangent_degree = pair(model.lattice, model.tangent_c1, H1);
            Rat mu_T = tangent_degree / 2;
            MRCResult result;
            result.polarization = H1;
            result.hnf = hnf;
            result.m = positive_length(hnf);
            result.certificate = {
                {"tangent_degree: c1(TX).H1", tangent_degree},
                {"mu1 - mu(TX): destabilizer exceeds the tangent slope", two.mu1 - mu_T},
                {"mu1: slope of the maximal destabilizer", two.mu1},
            };
            result.assumptions = {
                "uniruled: declared by the input, not verified",
                "semistability is relative to the declared candidate list",
            };
            return result;
        }
        // No declared candidate destabilizes: fall through to the ray
        // construction, which needs the caller's curve class.
    }

    if (!options.nef_class || !options.aux_ample) {
        std::string missing;
        if (!options.nef_class) missing += " nef_class";
        if (!options.aux_ample) missing += " aux_ample";
        throw Error(ErrorCode::MissingInput,
                    "mrc_polarization: rationally connected path requires" + missing +
                        " (a very free curve class and an auxiliary ample class)");
    }
    return mrc_ray_search(model, *options.nef_class, *options.aux_ample, options.cap);
}

} // namespace hnc
