#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hnc/ns_lattice.hpp"

namespace hnc {

// Numerical shadow of a torsion-free sheaf: rank and first Chern class.
// Candidate destabilizers of a surface tangent bundle carry rank 1 and a flag
// asserting the quotient T/L is torsion-free (a sheaf-level fact the lattice
// data cannot see; taken on faith from the input).
struct SheafDescriptor {
    std::string label;
    int rank = 1;
    DivClass c1;
    bool torsion_free_quotient = true;
    std::string note;

    bool operator==(const SheafDescriptor&) const = default;
};

struct LatticeAut {
    std::string label;
    IntMatrix matrix;
    bool identity_component = false;

    bool operator==(const LatticeAut&) const = default;
};

struct ModelFlags {
    bool uniruled = false;
    std::optional<bool> rc_hint;

    bool operator==(const ModelFlags&) const = default;
};

// A surface given by its numerical data: lattice, canonical class, ample
// cone, and the declared candidate destabilizers of the tangent bundle.
// Everything downstream is relative to the declared candidate list.
struct SurfaceModel {
    std::string name;
    NSLattice lattice;
    DivClass canonical;
    DivClass tangent_c1; // = -canonical, stored and cross-checked
    AmpleCone cone;
    std::vector<SheafDescriptor> candidates;
    std::vector<LatticeAut> automorphisms;
    ModelFlags flags;

    bool operator==(const SurfaceModel&) const = default;
};

// Full invariant check; throws ValidationError (field-path messages) and
// returns warnings (Hodge index at rank 2).
std::vector<std::string> validate_model(const SurfaceModel& model, bool hodge_check = true);

/// Apply an automorphism matrix to a class (coefficients in the lattice basis).
DivClass aut_apply(const LatticeAut& aut, const DivClass& v);

const LatticeAut& find_automorphism(const SurfaceModel& model, const std::string& label);

} // namespace hnc
