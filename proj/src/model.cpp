#include "hnc/model.hpp"

#include <set>

namespace hnc {

namespace {

bool matrix_is_identity(const IntMatrix& m) {
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j)
            if (m[i][j] != (i == j ? 1 : 0)) return false;
    return true;
}

// M^T * gram * M == gram, exactly.
bool preserves_gram(const IntMatrix& m, const IntMatrix& gram) {
    std::size_t n = gram.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            mpz_class acc(0);
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    acc += mpz_class(m[k][i]) * gram[k][l] * m[l][j];
            if (acc != gram[i][j]) return false;
        }
    return true;
}

} // namespace

DivClass aut_apply(const LatticeAut& aut, const DivClass& v) {
    std::size_t n = aut.matrix.size();
    if (v.dim() != n)
        throw Error(ErrorCode::DimensionMismatch,
                    "aut_apply: class length does not match matrix size");
    std::vector<Rat> out(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out[i] += Rat(aut.matrix[i][j]) * v.coeffs[j];
    return DivClass(std::move(out));
}

const LatticeAut& find_automorphism(const SurfaceModel& model, const std::string& label) {
    for (const auto& aut : model.automorphisms)
        if (aut.label == label) return aut;
    throw Error(ErrorCode::UnknownAutomorphism,
                "automorphism '" + label + "' is not declared on surface '" + model.name + "'");
}

std::vector<std::string> validate_model(const SurfaceModel& model, bool hodge_check) {
    std::vector<std::string> warnings = validate_lattice(model.lattice, hodge_check);
    std::size_t n = static_cast<std::size_t>(model.lattice.rank);

    if (model.canonical.dim() != n)
        throw Error(ErrorCode::ValidationError, "canonical: wrong dimension");
    if (model.tangent_c1.dim() != n)
        throw Error(ErrorCode::ValidationError, "tangent_c1: wrong dimension");
    if (!add(model.tangent_c1, model.canonical).is_zero())
        throw Error(ErrorCode::ValidationError,
                    "canonical: tangent_c1 + canonical must be the zero class");

    validate_cone(model.cone, model.lattice);

    std::set<std::string> labels;
    for (std::size_t i = 0; i < model.candidates.size(); ++i) {
        const auto& cand = model.candidates[i];
        std::string path = "candidates[" + std::to_string(i) + "]";
        if (cand.label.empty())
            throw Error(ErrorCode::ValidationError, path + ".label: empty");
        if (!labels.insert(cand.label).second)
            throw Error(ErrorCode::ValidationError,
                        path + ".label: duplicate '" + cand.label + "'");
        if (cand.rank != 1)
            throw Error(ErrorCode::ValidationError,
                        path + ".rank: candidate destabilizers must have rank 1");
        if (cand.c1.dim() != n)
            throw Error(ErrorCode::ValidationError, path + ".c1: wrong dimension");
    }

    std::set<std::string> aut_labels;
    for (std::size_t i = 0; i < model.automorphisms.size(); ++i) {
        const auto& aut = model.automorphisms[i];
        std::string path = "automorphisms[" + std::to_string(i) + "]";
        if (aut.label.empty())
            throw Error(ErrorCode::ValidationError, path + ".label: empty");
        if (!aut_labels.insert(aut.label).second)
            throw Error(ErrorCode::ValidationError,
                        path + ".label: duplicate '" + aut.label + "'");
        if (aut.matrix.size() != n)
            throw Error(ErrorCode::ValidationError, path + ".matrix: expected rank rows");
        for (const auto& row : aut.matrix)
            if (row.size() != n)
                throw Error(ErrorCode::ValidationError,
                            path + ".matrix: expected rank entries per row");
        if (!preserves_gram(aut.matrix, model.lattice.gram))
            throw Error(ErrorCode::ValidationError,
                        path + ".matrix: does not preserve the intersection form");
        // Aut^0 acts trivially on the (discrete) Neron-Severi group, so a
        // matrix flagged as identity-component must be the identity.
        if (aut.identity_component && !matrix_is_identity(aut.matrix))
            throw Error(ErrorCode::ValidationError,
                        path + ": identity_component matrix must be the identity");
        if (model.cone.generators) {
            for (int k = 0; k < 2; ++k) {
                DivClass image =
                    aut_apply(aut, (*model.cone.generators)[static_cast<std::size_t>(k)]);
                if (!is_nef(model.cone, model.lattice, image))
                    throw Error(ErrorCode::ValidationError,
                                path + ".matrix: image of cone generator " + std::to_string(k) +
                                    " leaves the closed ample cone");
            }
        }
    }
    return warnings;
}

} // namespace hnc
