#pragma once

#include <memory>

#include "pwt/field.hpp"
#include "pwt/quiver.hpp"

namespace pwt {

// A bound quiver algebra kQ/I with monomial admissible relations, together
// with its finite basis of nonzero paths. Immutable after construction;
// shared by every representation over it.
class BoundQuiverAlgebra {
public:
    // Relations are paths of length >= 2. The nonzero-path saturation is
    // capped at 2*|arrows|*|vertices| + 16 (or the explicit cap when
    // positive); exceeding it throws AdmissibilityViolation.
    static std::shared_ptr<const BoundQuiverAlgebra> build(Quiver quiver,
                                                           std::vector<Path> relations,
                                                           Field field,
                                                           std::size_t length_cap = 0);

    const Quiver& quiver() const { return quiver_; }
    const Field& field() const { return field_; }
    const std::vector<Path>& relations() const { return relations_; }
    const std::vector<Path>& path_basis() const { return path_basis_; }
    std::size_t dimension() const { return path_basis_.size(); }
    std::size_t num_vertices() const { return quiver_.num_vertices(); }

    // True when the word contains some relation as a contiguous subword.
    bool word_contains_relation(const std::vector<int>& arrows) const;
    bool path_is_zero(const Path& p) const { return word_contains_relation(p.arrows); }

    // Nonzero basis paths starting (resp. ending) at the vertex.
    std::vector<Path> basis_paths_from(int vertex) const;
    std::vector<Path> basis_paths_into(int vertex) const;

    bool is_source_vertex(int vertex) const { return quiver_.is_source_vertex(vertex); }
    bool is_nakayama() const { return quiver_.is_nakayama(); }

    std::uint64_t digest() const { return digest_; }

private:
    BoundQuiverAlgebra(Quiver q, std::vector<Path> rels, Field f)
        : quiver_(std::move(q)), field_(f), relations_(std::move(rels)) {}

    Quiver quiver_;
    Field field_;
    std::vector<Path> relations_;
    std::vector<Path> path_basis_;
    std::uint64_t digest_ = 0;
};

using AlgebraPtr = std::shared_ptr<const BoundQuiverAlgebra>;

inline void require_same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
    if (a.get() != b.get()) throw AlgebraMismatch("objects live over different algebras");
}

}  // namespace pwt
