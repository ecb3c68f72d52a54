#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hnc/rational.hpp"

namespace hnc {

// A divisor class in the fixed lattice basis: a vector of exact rationals.
struct DivClass {
    std::vector<Rat> coeffs;

    DivClass() = default;
    explicit DivClass(std::vector<Rat> c) : coeffs(std::move(c)) {}

    std::size_t dim() const { return coeffs.size(); }
    bool is_zero() const;

    bool operator==(const DivClass&) const = default;
};

DivClass div_class(std::initializer_list<long> entries);
DivClass add(const DivClass& a, const DivClass& b);
DivClass sub(const DivClass& a, const DivClass& b);
DivClass scale(const Rat& k, const DivClass& a);
DivClass negate(const DivClass& a);
std::string div_to_string(const DivClass& a);

using IntMatrix = std::vector<std::vector<long long>>;

// The Neron-Severi group as a based lattice: rank, intersection matrix of the
// basis classes, and labels for reporting.
struct NSLattice {
    int rank = 0;
    IntMatrix gram;
    std::vector<std::string> basis_labels;

    bool operator==(const NSLattice&) const = default;
};

// Throws ValidationError on non-square/asymmetric gram or label mismatch.
// Returns warnings (rank-2 Hodge index check) when hodge_check is set; the
// check never hard-fails so abstract lattices stay usable.
std::vector<std::string> validate_lattice(const NSLattice& lattice, bool hodge_check = true);

/// Intersection number a.b, exact.
Rat pair(const NSLattice& lattice, const DivClass& a, const DivClass& b);

/// gram * v in the standard basis: the dot-space normal of the form pair(v, .).
DivClass gram_apply(const NSLattice& lattice, const DivClass& v);

// The ample cone, cut out by strict inequalities pair(w_i, H) > 0. Generators
// (rank 2 only) are the two primitive integer boundary rays, in order.
struct AmpleCone {
    std::vector<DivClass> inequalities;
    std::optional<std::array<DivClass, 2>> generators;

    bool operator==(const AmpleCone&) const = default;
};

bool is_ample(const AmpleCone& cone, const NSLattice& lattice, const DivClass& H);

/// Closed-cone membership: pair(w_i, H) >= 0 for every inequality.
bool is_nef(const AmpleCone& cone, const NSLattice& lattice, const DivClass& H);

// Primitive integer representative of the ray through v: clears denominators,
// divides by the gcd, and makes the first nonzero entry positive.
DivClass primitive(const DivClass& v);

// Same, but when the first-positive representative lies outside the closed
// ample cone while its negation lies inside, orient into the cone.
DivClass primitive(const DivClass& v, const NSLattice& lattice, const AmpleCone& cone);

/// Exact feasibility of {pair(w_i, x) > 0 for all i} by Fourier-Motzkin.
bool cone_is_nonempty(const AmpleCone& cone, const NSLattice& lattice);

// Checks the cone invariants: nonempty inequality list, feasibility, and at
// rank 2 with generators that the inequalities cut exactly the open sector
// between them. Throws ValidationError; `where` prefixes field paths.
void validate_cone(const AmpleCone& cone, const NSLattice& lattice,
                   const std::string& where = "ample_cone");

/// Rank-2 cross product a0*b1 - a1*b0 (exact sector tests, no angles).
Rat cross2(const DivClass& a, const DivClass& b);

} // namespace hnc
