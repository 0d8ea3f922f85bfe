#pragma once

#include <memory>

#include "pwt/cat_types.hpp"
#include "pwt/morphism.hpp"

namespace pwt {

// The abelian category of finite-dimensional representations of one bound
// quiver algebra, exposing the object/morphism operations the generic
// homological machinery is written against. TripleCat (one-point
// extensions) implements the same surface.
class RepCat {
public:
    using Obj = Representation;
    using Mor = Morphism;

    explicit RepCat(AlgebraPtr alg)
        : alg_(std::move(alg)), caches_(std::make_shared<CatCaches<Obj, Mor>>()) {}

    const AlgebraPtr& algebra() const { return alg_; }
    const Field& field() const { return alg_->field(); }
    // Number of simple modules.
    int rank() const { return static_cast<int>(alg_->num_vertices()); }
    std::vector<std::string> slot_labels() const { return alg_->quiver().vertices(); }

    // ----- objects -----
    std::vector<int> dims_by_slot(const Obj& x) const { return x.dims(); }
    int total_dim(const Obj& x) const { return x.total_dim(); }
    bool is_zero(const Obj& x) const { return x.is_zero(); }
    Obj zero_object() const { return Representation::zero(alg_); }
    bool obj_equal(const Obj& a, const Obj& b) const { return a == b; }
    std::uint64_t obj_hash(const Obj& a) const { return a.hash(); }

    Obj direct_sum(std::span<const Obj> parts) const { return direct_sum_reps(alg_, parts); }
    Mor summand_inclusion(std::span<const Obj> parts, std::size_t i) const;
    Mor summand_projection(std::span<const Obj> parts, std::size_t i) const;
    // Assembles x -> sum(parts) from components x -> parts[i].
    Mor into_sum(std::span<const Obj> parts, std::span<const Mor> comps) const;
    // Assembles sum(parts) -> y from components parts[i] -> y.
    Mor from_sum(std::span<const Obj> parts, std::span<const Mor> comps) const;

    // ----- morphisms -----
    std::vector<Mor> hom_basis(const Obj& a, const Obj& b) const { return pwt::hom_basis(a, b); }
    Mor identity(const Obj& a) const { return Morphism::identity(a); }
    Mor zero_mor(const Obj& a, const Obj& b) const { return Morphism::zero(a, b); }
    Mor compose(const Mor& g, const Mor& f) const { return pwt::compose(g, f); }
    Mor add(const Mor& a, const Mor& b) const { return a + b; }
    Mor scale(const Scalar& s, const Mor& a) const { return s * a; }
    Matrix flatten_mor(const Mor& f) const { return f.flatten(); }
    Matrix operator_matrix(const Mor& endo) const { return endo.operator_matrix(); }
    bool is_mono(const Mor& f) const { return f.is_injective(); }
    bool is_epi(const Mor& f) const { return f.is_surjective(); }
    bool is_iso(const Mor& f) const { return f.is_isomorphism(); }

    // ----- kernels, images, quotients -----
    SubObject<Obj, Mor> kernel(const Mor& f) const;
    SubObject<Obj, Mor> image(const Mor& f) const;
    QuotObject<Obj, Mor> cokernel(const Mor& f) const;
    SubObject<Obj, Mor> radical(const Obj& x) const;
    // Sub-representation spanned by the given per-vertex columns (must be
    // arrow-stable).
    SubObject<Obj, Mor> subobject_from_spans(const Obj& x, const std::vector<Matrix>& spans) const;
    QuotObject<Obj, Mor> quotient_by_spans(const Obj& x, const std::vector<Matrix>& spans) const;

    // ----- projectives -----
    std::pair<Obj, Mor> projective_cover(const Obj& x) const;
    std::vector<Obj> indecomposable_projectives() const;
    std::vector<Obj> indecomposable_injectives() const;
    Obj regular_object() const { return regular_rep(alg_); }

    CatCaches<Obj, Mor>& caches() const { return *caches_; }

private:
    AlgebraPtr alg_;
    std::shared_ptr<CatCaches<Obj, Mor>> caches_;
};

}  // namespace pwt
