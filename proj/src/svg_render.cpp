#include "hnc/svg_render.hpp"

#include <sstream>

namespace hnc {

namespace {

constexpr int kCanvas = 480;
constexpr int kPad = 48;
constexpr int kScale = 336; // pixels per unit on the slice

const char* const kPalette[] = {"#cfe8ff", "#ffe2c6", "#d8f5d3", "#f3d9f5",
                                "#fff3b8", "#dcdcf7", "#ffd6d6", "#d2f0ef"};
constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

// Intersection of the ray through r with the slice x + y = 1, exact.
std::array<Rat, 2> slice_point(const DivClass& r) {
    Rat sum = r.coeffs[0] + r.coeffs[1];
    if (sgn(sum) <= 0)
        throw Error(ErrorCode::RankUnsupported,
                    "render_chambers_svg: ray " + div_to_string(r) +
                        " does not meet the slice x + y = 1");
    return {r.coeffs[0] / sum, r.coeffs[1] / sum};
}

std::string px(const Rat& x) { return rat_to_fixed(Rat(kPad) + x * kScale, 6); }
std::string py(const Rat& y) {
    return rat_to_fixed(Rat(kCanvas - kPad) - y * kScale, 6);
}

std::string ray_attr(const DivClass& r) {
    std::string out;
    for (std::size_t i = 0; i < r.dim(); ++i) {
        if (i) out += ',';
        out += rat_to_string(r.coeffs[i]);
    }
    return out;
}

std::string labels_attr(const ChamberId& id) {
    std::string out;
    for (std::size_t i = 0; i < id.labels.size(); ++i) {
        if (i) out += ',';
        out += id.labels[i];
    }
    return out;
}

const char* kind_attr(const ChamberId& id) {
    switch (id.kind) {
    case ChamberId::Kind::Semistable: return "semistable";
    case ChamberId::Kind::Destab: return "destab";
    case ChamberId::Kind::AmbiguousWall: return "ambiguous_wall";
    }
    return "?";
}

} // namespace

std::string render_chambers_svg(const Decomposition& decomposition, const AmpleCone& cone,
                                const NSLattice& lattice) {
    if (lattice.rank != 2)
        throw Error(ErrorCode::RankUnsupported, "render_chambers_svg: rank 2 only");
    (void)cone;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kCanvas << "\" height=\""
        << kCanvas << "\" viewBox=\"0 0 " << kCanvas << " " << kCanvas << "\">\n";
    svg << "  <rect width=\"" << kCanvas << "\" height=\"" << kCanvas
        << "\" fill=\"#ffffff\"/>\n";

    const Rat axis_len(23, 20);
    svg << "  <line x1=\"" << px(Rat(0)) << "\" y1=\"" << py(Rat(0)) << "\" x2=\""
        << px(axis_len) << "\" y2=\"" << py(Rat(0))
        << "\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
    svg << "  <line x1=\"" << px(Rat(0)) << "\" y1=\"" << py(Rat(0)) << "\" x2=\""
        << px(Rat(0)) << "\" y2=\"" << py(axis_len)
        << "\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
    svg << "  <text x=\"" << px(axis_len) << "\" y=\""
        << rat_to_fixed(Rat(kCanvas - kPad) + 16, 6)
        << "\" font-family=\"monospace\" font-size=\"12\" fill=\"#444444\">x</text>\n";
    svg << "  <text x=\"" << rat_to_fixed(Rat(kPad) - 16, 6) << "\" y=\"" << py(axis_len)
        << "\" font-family=\"monospace\" font-size=\"12\" fill=\"#444444\">y</text>\n";

    const Rat reach(11, 10); // rays drawn slightly past the slice
    std::size_t color = 0;
    for (const auto& chamber : decomposition.chambers) {
        auto lo = slice_point(chamber.boundary[0]);
        auto hi = slice_point(chamber.boundary[1]);
        bool is_ray = chamber.boundary[0] == chamber.boundary[1];
        std::string common = std::string(" data-kind=\"") + kind_attr(chamber.id) +
                             "\" data-labels=\"" + labels_attr(chamber.id) +
                             "\" data-lo=\"" + ray_attr(chamber.boundary[0]) +
                             "\" data-hi=\"" + ray_attr(chamber.boundary[1]) +
                             "\" data-lo-closed=\"" +
                             (chamber.boundary_closed[0] ? "true" : "false") +
                             "\" data-hi-closed=\"" +
                             (chamber.boundary_closed[1] ? "true" : "false") + "\"";
        if (is_ray) {
            svg << "  <line class=\"chamber\"" << common << " x1=\"" << px(Rat(0))
                << "\" y1=\"" << py(Rat(0)) << "\" x2=\"" << px(lo[0] * reach) << "\" y2=\""
                << py(lo[1] * reach) << "\" stroke=\"#c03030\" stroke-width=\"2\"/>\n";
        } else {
            svg << "  <polygon class=\"chamber\"" << common << " points=\"" << px(Rat(0))
                << "," << py(Rat(0)) << " " << px(lo[0] * reach) << "," << py(lo[1] * reach)
                << " " << px(hi[0] * reach) << "," << py(hi[1] * reach) << "\" fill=\""
                << kPalette[color % kPaletteSize]
                << "\" stroke=\"#666666\" stroke-width=\"1\"/>\n";
            ++color;
        }
    }

    // Labels after all shapes so they stay on top.
    for (const auto& chamber : decomposition.chambers) {
        auto anchor = slice_point(chamber.sample);
        bool is_ray = chamber.boundary[0] == chamber.boundary[1];
        Rat lx = anchor[0] * Rat(is_ray ? 21 : 13, 20);
        Rat ly = anchor[1] * Rat(is_ray ? 21 : 13, 20);
        svg << "  <text x=\"" << px(lx) << "\" y=\"" << py(ly)
            << "\" font-family=\"monospace\" font-size=\"12\" fill=\"#202020\">"
            << chamber_id_to_string(chamber.id) << "</text>\n";
    }

    svg << "</svg>\n";
    return svg.str();
}

} // namespace hnc
