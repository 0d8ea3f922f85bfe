#pragma once

#include "pwt/cat_types.hpp"
#include "pwt/morphism.hpp"
#include "pwt/rep_category.hpp"

namespace pwt {

// One-point extension data: the base algebra, the extension module M, and a
// label for the new vertex. Modules over the extended algebra are handled
// exclusively as triples (X, V, phi: V (x) M -> X); the extension is never
// re-presented as a bound quiver.
class ExtensionContext {
public:
    ExtensionContext(AlgebraPtr lambda, Representation m, std::string label);

    const AlgebraPtr& lambda() const { return lambda_; }
    const Representation& extension_module() const { return m_; }
    const std::string& label() const { return label_; }
    const Field& field() const { return lambda_->field(); }

    // M^{(+)count}
    Representation m_power(int count) const;

    std::uint64_t digest() const { return digest_; }

private:
    AlgebraPtr lambda_;
    Representation m_;
    std::string label_;
    std::uint64_t digest_;
};

using ContextPtr = std::shared_ptr<const ExtensionContext>;

ContextPtr extend(const AlgebraPtr& lambda, const Representation& m, std::string label = "a");

inline void require_same_context(const ContextPtr& a, const ContextPtr& b) {
    if (a.get() != b.get()) throw AlgebraMismatch("triples live over different extension contexts");
}

// A module over the one-point extension: a base representation X, the
// dimension v at the extension vertex, and phi : M^{(+)v} -> X.
class Triple {
public:
    Triple() = default;  // empty placeholder; only assign into
    Triple(ContextPtr ctx, Representation x, int v, Morphism phi);

    const ContextPtr& context() const { return ctx_; }
    const Representation& base() const { return x_; }
    int ext_dim_v() const { return v_; }
    const Morphism& phi() const { return phi_; }

    int total_dim() const { return x_.total_dim() + v_; }
    std::vector<int> dims_with_ext() const;
    std::uint64_t hash() const;
    friend bool operator==(const Triple& a, const Triple& b);

private:
    ContextPtr ctx_;
    Representation x_;
    int v_ = 0;
    Morphism phi_;
};

// Morphism of triples: a base morphism f and a matrix g on the extension
// spaces with f . phi_s = phi_t . (g (x) id_M).
class TripleMorphism {
public:
    TripleMorphism() = default;  // empty placeholder
    TripleMorphism(Triple source, Triple target, Morphism f, Matrix g);  // validates the square
    static TripleMorphism unchecked(Triple source, Triple target, Morphism f, Matrix g);

    const Triple& source() const { return src_; }
    const Triple& target() const { return dst_; }
    const Morphism& base_map() const { return f_; }
    const Matrix& ext_map() const { return g_; }

    bool is_injective() const { return f_.is_injective() && rank(g_) == g_.cols(); }
    bool is_surjective() const { return f_.is_surjective() && rank(g_) == g_.rows(); }

private:
    Triple src_, dst_;
    Morphism f_;
    Matrix g_;
};

// The morphism g (x) id_M : M^{(+)cols} -> M^{(+)rows}.
Morphism tensor_with_m(const ContextPtr& ctx, const Matrix& g);

// The extension functor X -> (X, 0, 0).
Triple e_functor(const ContextPtr& ctx, const Representation& x);
// The restriction functor (X, V, phi) -> X.
Representation r_functor(const Triple& t);
// P_a = (M, k, id) and S_a = (0, k, 0).
Triple proj_a(const ContextPtr& ctx);
Triple simple_a(const ContextPtr& ctx);
// 0 -> EM -> P_a -> S_a -> 0.
std::pair<TripleMorphism, TripleMorphism> canonical_sequence(const ContextPtr& ctx);

// The category of triples over one extension context, exposing the same
// interface as RepCat so all homological machinery instantiates over it.
class TripleCat {
public:
    using Obj = Triple;
    using Mor = TripleMorphism;

    explicit TripleCat(ContextPtr ctx)
        : ctx_(std::move(ctx)), rep_cat_(ctx_->lambda()), caches_(std::make_shared<CatCaches<Obj, Mor>>()) {}

    const ContextPtr& context() const { return ctx_; }
    RepCat& base_category() { return rep_cat_; }
    const Field& field() const { return ctx_->field(); }
    int rank() const { return static_cast<int>(ctx_->lambda()->num_vertices()) + 1; }
    std::vector<std::string> slot_labels() const;

    std::vector<int> dims_by_slot(const Obj& t) const { return t.dims_with_ext(); }
    int total_dim(const Obj& t) const { return t.total_dim(); }
    bool is_zero(const Obj& t) const { return t.total_dim() == 0; }
    Obj zero_object() const;
    bool obj_equal(const Obj& a, const Obj& b) const { return a == b; }
    std::uint64_t obj_hash(const Obj& a) const { return a.hash(); }

    Obj direct_sum(std::span<const Obj> parts) const;
    Mor summand_inclusion(std::span<const Obj> parts, std::size_t i) const;
    Mor summand_projection(std::span<const Obj> parts, std::size_t i) const;
    Mor into_sum(std::span<const Obj> parts, std::span<const Mor> comps) const;
    Mor from_sum(std::span<const Obj> parts, std::span<const Mor> comps) const;

    std::vector<Mor> hom_basis(const Obj& a, const Obj& b) const;
    Mor identity(const Obj& a) const;
    Mor zero_mor(const Obj& a, const Obj& b) const;
    Mor compose(const Mor& g, const Mor& f) const;
    Mor add(const Mor& a, const Mor& b) const;
    Mor scale(const Scalar& s, const Mor& a) const;
    Matrix flatten_mor(const Mor& f) const;
    Matrix operator_matrix(const Mor& endo) const;
    bool is_mono(const Mor& f) const { return f.is_injective(); }
    bool is_epi(const Mor& f) const { return f.is_surjective(); }

    SubObject<Obj, Mor> kernel(const Mor& f) const;
    SubObject<Obj, Mor> image(const Mor& f) const;
    QuotObject<Obj, Mor> cokernel(const Mor& f) const;
    SubObject<Obj, Mor> radical(const Obj& t) const;

    std::pair<Obj, Mor> projective_cover(const Obj& t) const;
    std::vector<Obj> indecomposable_projectives() const;
    // Available for source point extensions (and extensions by zero); throws
    // NotSourceExtension otherwise.
    std::vector<Obj> indecomposable_injectives() const;
    Obj regular_object() const;

    CatCaches<Obj, Mor>& caches() const { return *caches_; }

private:
    ContextPtr ctx_;
    mutable RepCat rep_cat_;
    std::shared_ptr<CatCaches<Obj, Mor>> caches_;
};

// Source vertex index of a source point extension: M is isomorphic to the
// simple at a source vertex. Returns -1 when the context is not one (the
// zero module also returns -1; callers treat it separately).
int source_extension_vertex(const ContextPtr& ctx);

}  // namespace pwt
