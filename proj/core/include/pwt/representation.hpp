#pragma once

#include <span>

#include "pwt/algebra.hpp"
#include "pwt/matrix.hpp"

namespace pwt {

// A finite-dimensional right module, given as vertex spaces plus one matrix
// per arrow (rows indexed by the target space, columns by the source).
class Representation {
public:
    // Empty placeholder; every operation assumes a real algebra, so only
    // assign into default-constructed slots.
    Representation() = default;

    Representation(AlgebraPtr alg, std::vector<int> dims, std::vector<Matrix> arrow_maps);

    static Representation zero(const AlgebraPtr& alg);

    const AlgebraPtr& algebra() const { return alg_; }
    const std::vector<int>& dims() const { return dims_; }
    int dim(int vertex) const { return dims_[static_cast<std::size_t>(vertex)]; }
    int total_dim() const;
    bool is_zero() const { return total_dim() == 0; }

    const Matrix& arrow_map(int arrow) const { return maps_[static_cast<std::size_t>(arrow)]; }
    const std::vector<Matrix>& arrow_maps() const { return maps_; }

    // Composite along a path; identity for trivial paths.
    Matrix path_action(const Path& p) const;

    std::uint64_t hash() const;
    friend bool operator==(const Representation& a, const Representation& b);

private:
    AlgebraPtr alg_;
    std::vector<int> dims_;
    std::vector<Matrix> maps_;
};

Representation projective_rep(const AlgebraPtr& alg, int vertex);
Representation injective_rep(const AlgebraPtr& alg, int vertex);
Representation simple_rep(const AlgebraPtr& alg, int vertex);
// The regular module, i.e. the direct sum of all indecomposable projectives
// in vertex order.
Representation regular_rep(const AlgebraPtr& alg);

Representation direct_sum_reps(const AlgebraPtr& alg, std::span<const Representation> parts);

}  // namespace pwt
