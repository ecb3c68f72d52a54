#include "hnc/ns_lattice.hpp"

#include <algorithm>
#include <sstream>

namespace hnc {

bool DivClass::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(),
                       [](const Rat& c) { return sgn(c) == 0; });
}

DivClass div_class(std::initializer_list<long> entries) {
    std::vector<Rat> c;
    c.reserve(entries.size());
    for (long e : entries) c.emplace_back(e);
    return DivClass(std::move(c));
}

namespace {

void require_same_dim(const DivClass& a, const DivClass& b, const char* op) {
    if (a.dim() != b.dim())
        throw Error(ErrorCode::DimensionMismatch,
                    std::string(op) + ": class lengths differ");
}

} // namespace

DivClass add(const DivClass& a, const DivClass& b) {
    require_same_dim(a, b, "add");
    DivClass out = a;
    for (std::size_t i = 0; i < b.dim(); ++i) out.coeffs[i] += b.coeffs[i];
    return out;
}

DivClass sub(const DivClass& a, const DivClass& b) {
    require_same_dim(a, b, "sub");
    DivClass out = a;
    for (std::size_t i = 0; i < b.dim(); ++i) out.coeffs[i] -= b.coeffs[i];
    return out;
}

DivClass scale(const Rat& k, const DivClass& a) {
    DivClass out = a;
    for (auto& c : out.coeffs) c *= k;
    return out;
}

DivClass negate(const DivClass& a) { return scale(Rat(-1), a); }

std::string div_to_string(const DivClass& a) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (i) os << ',';
        os << rat_to_string(a.coeffs[i]);
    }
    os << ')';
    return os.str();
}

std::vector<std::string> validate_lattice(const NSLattice& lattice, bool hodge_check) {
    if (lattice.rank < 1)
        throw Error(ErrorCode::ValidationError, "rank: must be a positive integer");
    std::size_t n = static_cast<std::size_t>(lattice.rank);
    if (lattice.gram.size() != n)
        throw Error(ErrorCode::ValidationError, "gram: expected rank x rank matrix");
    for (std::size_t i = 0; i < n; ++i)
        if (lattice.gram[i].size() != n)
            throw Error(ErrorCode::ValidationError,
                        "gram[" + std::to_string(i) + "]: expected rank entries");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (lattice.gram[i][j] != lattice.gram[j][i])
                throw Error(ErrorCode::ValidationError,
                            "gram: not symmetric at (" + std::to_string(i) + "," +
                                std::to_string(j) + ")");
    if (lattice.basis_labels.size() != n)
        throw Error(ErrorCode::ValidationError, "basis: expected one label per basis class");

    std::vector<std::string> warnings;
    if (hodge_check && lattice.rank == 2) {
        mpz_class det = mpz_class(lattice.gram[0][0]) * lattice.gram[1][1] -
                        mpz_class(lattice.gram[0][1]) * lattice.gram[1][0];
        if (det >= 0)
            warnings.push_back(
                "gram: det >= 0 at rank 2; intersection form does not have "
                "Hodge-index signature (1,1)");
    }
    return warnings;
}

Rat pair(const NSLattice& lattice, const DivClass& a, const DivClass& b) {
    std::size_t n = static_cast<std::size_t>(lattice.rank);
    if (a.dim() != n || b.dim() != n)
        throw Error(ErrorCode::DimensionMismatch,
                    "pair: class length does not match lattice rank");
    Rat acc(0);
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(a.coeffs[i]) == 0) continue;
        Rat row(0);
        for (std::size_t j = 0; j < n; ++j)
            row += Rat(lattice.gram[i][j]) * b.coeffs[j];
        acc += a.coeffs[i] * row;
    }
    return acc;
}

DivClass gram_apply(const NSLattice& lattice, const DivClass& v) {
    std::size_t n = static_cast<std::size_t>(lattice.rank);
    if (v.dim() != n)
        throw Error(ErrorCode::DimensionMismatch,
                    "gram_apply: class length does not match lattice rank");
    std::vector<Rat> out(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out[i] += Rat(lattice.gram[i][j]) * v.coeffs[j];
    return DivClass(std::move(out));
}

bool is_ample(const AmpleCone& cone, const NSLattice& lattice, const DivClass& H) {
    for (const auto& w : cone.inequalities)
        if (sgn(pair(lattice, w, H)) <= 0) return false;
    return true;
}

bool is_nef(const AmpleCone& cone, const NSLattice& lattice, const DivClass& H) {
    for (const auto& w : cone.inequalities)
        if (sgn(pair(lattice, w, H)) < 0) return false;
    return true;
}

DivClass primitive(const DivClass& v) {
    if (v.dim() == 0 || v.is_zero())
        throw Error(ErrorCode::ZeroVector, "primitive: zero vector has no ray");

    mpz_class den_lcm(1);
    for (const auto& c : v.coeffs)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());

    std::vector<mpz_class> ints;
    ints.reserve(v.dim());
    mpz_class g(0);
    for (const auto& c : v.coeffs) {
        mpz_class e = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
        ints.push_back(std::move(e));
    }
    int lead = 0;
    for (const auto& e : ints)
        if ((lead = sgn(Rat(e))) != 0) break;

    std::vector<Rat> out;
    out.reserve(ints.size());
    for (const auto& e : ints) out.emplace_back(lead < 0 ? mpz_class(-e) : e, g);
    DivClass result(std::move(out));
    for (auto& c : result.coeffs) c.canonicalize();
    return result;
}

DivClass primitive(const DivClass& v, const NSLattice& lattice, const AmpleCone& cone) {
    DivClass u = primitive(v);
    if (!is_nef(cone, lattice, u) && is_nef(cone, lattice, negate(u)))
        return negate(u);
    return u;
}

namespace {

// Strict homogeneous Fourier-Motzkin: is {n_i . x > 0 for all i} solvable?
bool strict_system_feasible(std::vector<std::vector<Rat>> rows, std::size_t dim) {
    for (;;) {
        for (const auto& row : rows) {
            bool all_zero = true;
            for (const auto& c : row)
                if (sgn(c) != 0) { all_zero = false; break; }
            if (all_zero) return false; // constraint reads 0 > 0
        }
        if (rows.empty()) return true;
        if (dim == 1) {
            bool pos = false, neg = false;
            for (const auto& row : rows)
                (sgn(row[0]) > 0 ? pos : neg) = true;
            return !(pos && neg);
        }

        std::vector<std::vector<Rat>> lower, upper, rest;
        for (auto& row : rows) {
            int s = sgn(row[dim - 1]);
            if (s > 0) lower.push_back(std::move(row));
            else if (s < 0) upper.push_back(std::move(row));
            else {
                row.pop_back();
                rest.push_back(std::move(row));
            }
        }
        // One-sided bounds on the eliminated variable are always satisfiable.
        if (!lower.empty() && !upper.empty()) {
            for (const auto& lo : lower)
                for (const auto& up : upper) {
                    const Rat& c = lo[dim - 1];  // > 0
                    const Rat& d = up[dim - 1];  // < 0
                    std::vector<Rat> combined(dim - 1);
                    for (std::size_t j = 0; j + 1 < dim; ++j)
                        combined[j] = c * up[j] - d * lo[j];
                    rest.push_back(std::move(combined));
                }
        }
        rows = std::move(rest);
        --dim;
    }
}

} // namespace

bool cone_is_nonempty(const AmpleCone& cone, const NSLattice& lattice) {
    std::vector<std::vector<Rat>> rows;
    rows.reserve(cone.inequalities.size());
    for (const auto& w : cone.inequalities)
        rows.push_back(gram_apply(lattice, w).coeffs);
    return strict_system_feasible(std::move(rows), static_cast<std::size_t>(lattice.rank));
}

void validate_cone(const AmpleCone& cone, const NSLattice& lattice, const std::string& where) {
    if (cone.inequalities.empty())
        throw Error(ErrorCode::ValidationError, where + ".inequalities: must be nonempty");
    for (std::size_t i = 0; i < cone.inequalities.size(); ++i)
        if (cone.inequalities[i].dim() != static_cast<std::size_t>(lattice.rank))
            throw Error(ErrorCode::ValidationError,
                        where + ".inequalities[" + std::to_string(i) +
                            "]: wrong dimension");

    if (cone.generators) {
        if (lattice.rank != 2)
            throw Error(ErrorCode::ValidationError,
                        where + ".generators: only supported at rank 2");
        const DivClass& g1 = (*cone.generators)[0];
        const DivClass& g2 = (*cone.generators)[1];
        for (int k = 0; k < 2; ++k) {
            const DivClass& g = (*cone.generators)[static_cast<std::size_t>(k)];
            std::string path = where + ".generators[" + std::to_string(k) + "]";
            if (g.dim() != 2)
                throw Error(ErrorCode::ValidationError, path + ": wrong dimension");
            for (const auto& c : g.coeffs)
                if (!is_integer(c))
                    throw Error(ErrorCode::ValidationError, path + ": entries must be integers");
            if (g.is_zero())
                throw Error(ErrorCode::ValidationError, path + ": zero vector");
            DivClass prim = primitive(g); // sign-normalized; either orientation is fine
            if (!(prim == g) && !(prim == negate(g)))
                throw Error(ErrorCode::ValidationError, path + ": not primitive");
        }
        if (sgn(cross2(g1, g2)) == 0)
            throw Error(ErrorCode::ValidationError, where + ".generators: rays are collinear");

        // Inequalities must cut exactly the open sector between the
        // generators: both rays on the closure, the mediant strictly inside,
        // and each generator tight against some inequality that separates it
        // from directions beyond the sector.
        bool tight1 = false, tight2 = false;
        for (std::size_t i = 0; i < cone.inequalities.size(); ++i) {
            const auto& w = cone.inequalities[i];
            Rat v1 = pair(lattice, w, g1);
            Rat v2 = pair(lattice, w, g2);
            if (sgn(v1) < 0 || sgn(v2) < 0)
                throw Error(ErrorCode::ValidationError,
                            where + ".generators: ray violates inequality " + std::to_string(i));
            if (sgn(v1) == 0 && sgn(v2) == 0)
                throw Error(ErrorCode::ValidationError,
                            where + ": inequality " + std::to_string(i) +
                                " vanishes on the whole sector (empty interior)");
            if (sgn(v1) == 0) tight1 = true;
            if (sgn(v2) == 0) tight2 = true;
        }
        if (!tight1 || !tight2)
            throw Error(ErrorCode::ValidationError,
                        where + ".generators: inequalities admit classes outside the "
                                "generator sector");
    } else {
        if (!cone_is_nonempty(cone, lattice))
            throw Error(ErrorCode::ValidationError,
                        where + ": inequalities admit no solution (empty cone)");
    }
}

Rat cross2(const DivClass& a, const DivClass& b) {
    if (a.dim() != 2 || b.dim() != 2)
        throw Error(ErrorCode::DimensionMismatch, "cross2: rank-2 classes required");
    return a.coeffs[0] * b.coeffs[1] - a.coeffs[1] * b.coeffs[0];
}

} // namespace hnc
