#include "pwt/rep_category.hpp"

namespace pwt {

Morphism RepCat::summand_inclusion(std::span<const Obj> parts, std::size_t i) const {
    std::vector<Mor> comps;
    comps.reserve(parts.size());
    for (std::size_t j = 0; j < parts.size(); ++j)
        comps.push_back(j == i ? identity(parts[i]) : zero_mor(parts[i], parts[j]));
    return into_sum(parts, comps);
}

Morphism RepCat::summand_projection(std::span<const Obj> parts, std::size_t i) const {
    std::vector<Mor> comps;
    comps.reserve(parts.size());
    for (std::size_t j = 0; j < parts.size(); ++j)
        comps.push_back(j == i ? identity(parts[i]) : zero_mor(parts[j], parts[i]));
    return from_sum(parts, comps);
}

Morphism RepCat::into_sum(std::span<const Obj> parts, std::span<const Mor> comps) const {
    if (parts.size() != comps.size()) throw DimensionMismatch("into_sum: component count mismatch");
    Obj total = direct_sum(parts);
    if (comps.empty()) throw DimensionMismatch("into_sum needs at least one component");
    const Obj& x = comps[0].source();
    std::vector<Matrix> mats;
    for (std::size_t v = 0; v < alg_->num_vertices(); ++v) {
        Matrix m(field(), 0, static_cast<std::size_t>(x.dim(static_cast<int>(v))));
        for (std::size_t j = 0; j < comps.size(); ++j) m = vcat(m, comps[j].component(static_cast<int>(v)));
        mats.push_back(std::move(m));
    }
    return Morphism::unchecked(x, std::move(total), std::move(mats));
}

Morphism RepCat::from_sum(std::span<const Obj> parts, std::span<const Mor> comps) const {
    if (parts.size() != comps.size()) throw DimensionMismatch("from_sum: component count mismatch");
    Obj total = direct_sum(parts);
    if (comps.empty()) throw DimensionMismatch("from_sum needs at least one component");
    const Obj& y = comps[0].target();
    std::vector<Matrix> mats;
    for (std::size_t v = 0; v < alg_->num_vertices(); ++v) {
        Matrix m(field(), static_cast<std::size_t>(y.dim(static_cast<int>(v))), 0);
        for (std::size_t j = 0; j < comps.size(); ++j) m = hcat(m, comps[j].component(static_cast<int>(v)));
        mats.push_back(std::move(m));
    }
    return Morphism::unchecked(std::move(total), y, std::move(mats));
}

SubObject<Representation, Morphism> RepCat::subobject_from_spans(const Obj& x, const std::vector<Matrix>& spans) const {
    const Quiver& q = alg_->quiver();
    std::vector<Matrix> bases;
    bases.reserve(spans.size());
    for (const Matrix& s : spans) bases.push_back(column_space_basis(s));
    std::vector<int> dims(q.num_vertices());
    for (std::size_t v = 0; v < q.num_vertices(); ++v) dims[v] = static_cast<int>(bases[v].cols());
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        int u = q.arrow_source(static_cast<int>(a));
        int w = q.arrow_target(static_cast<int>(a));
        Matrix pushed = x.arrow_map(static_cast<int>(a)) * bases[static_cast<std::size_t>(u)];
        auto coords = solve(bases[static_cast<std::size_t>(w)], pushed);
        if (!coords) throw InternalError("subobject spans are not arrow-stable");
        maps.push_back(std::move(*coords));
    }
    Obj sub(alg_, std::move(dims), std::move(maps));
    Mor incl = Morphism::unchecked(sub, x, bases);
    return {std::move(sub), std::move(incl)};
}

QuotObject<Representation, Morphism> RepCat::quotient_by_spans(const Obj& x, const std::vector<Matrix>& spans) const {
    const Quiver& q = alg_->quiver();
    std::vector<Matrix> proj, sect;
    std::vector<int> dims(q.num_vertices());
    for (std::size_t v = 0; v < q.num_vertices(); ++v) {
        SplitBasis sb = split_complement(spans[v]);
        dims[v] = static_cast<int>(sb.projection.rows());
        proj.push_back(sb.projection);
        sect.push_back(sb.section);
    }
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        int u = q.arrow_source(static_cast<int>(a));
        int w = q.arrow_target(static_cast<int>(a));
        maps.push_back(proj[static_cast<std::size_t>(w)] * x.arrow_map(static_cast<int>(a)) *
                       sect[static_cast<std::size_t>(u)]);
    }
    Obj quot(alg_, std::move(dims), std::move(maps));
    Mor pr = Morphism::unchecked(x, quot, proj);
    return {std::move(quot), std::move(pr)};
}

SubObject<Representation, Morphism> RepCat::kernel(const Mor& f) const {
    std::vector<Matrix> spans;
    for (std::size_t v = 0; v < alg_->num_vertices(); ++v) spans.push_back(kernel_basis(f.component(static_cast<int>(v))));
    return subobject_from_spans(f.source(), spans);
}

SubObject<Representation, Morphism> RepCat::image(const Mor& f) const {
    std::vector<Matrix> spans;
    for (std::size_t v = 0; v < alg_->num_vertices(); ++v) spans.push_back(f.component(static_cast<int>(v)));
    return subobject_from_spans(f.target(), spans);
}

QuotObject<Representation, Morphism> RepCat::cokernel(const Mor& f) const {
    std::vector<Matrix> spans;
    for (std::size_t v = 0; v < alg_->num_vertices(); ++v) spans.push_back(f.component(static_cast<int>(v)));
    return quotient_by_spans(f.target(), spans);
}

SubObject<Representation, Morphism> RepCat::radical(const Obj& x) const {
    const Quiver& q = alg_->quiver();
    std::vector<Matrix> spans;
    for (std::size_t v = 0; v < q.num_vertices(); ++v) {
        Matrix span(field(), static_cast<std::size_t>(x.dim(static_cast<int>(v))), 0);
        for (int a : q.arrows_into(static_cast<int>(v))) span = hcat(span, x.arrow_map(a));
        spans.push_back(std::move(span));
    }
    return subobject_from_spans(x, spans);
}

std::pair<Representation, Morphism> RepCat::projective_cover(const Obj& x) const {
    const Quiver& q = alg_->quiver();
    // Generators: standard-vector lifts of a basis of top(x) = x / rad(x).
    std::vector<Obj> parts;
    std::vector<Mor> comps;
    for (std::size_t v = 0; v < q.num_vertices(); ++v) {
        Matrix radspan(field(), static_cast<std::size_t>(x.dim(static_cast<int>(v))), 0);
        for (int a : q.arrows_into(static_cast<int>(v))) radspan = hcat(radspan, x.arrow_map(a));
        SplitBasis sb = split_complement(radspan);
        if (sb.complement.cols() == 0) continue;
        Obj pv = projective_rep(alg_, static_cast<int>(v));
        auto paths = alg_->basis_paths_from(static_cast<int>(v));
        std::vector<std::vector<Path>> grouped(q.num_vertices());
        for (const Path& p : paths) grouped[static_cast<std::size_t>(p.target)].push_back(p);
        for (std::size_t g = 0; g < sb.complement.cols(); ++g) {
            Matrix gen = sb.complement.col(g);
            // The morphism P_v -> x sending the trivial path to gen: a basis
            // path acts by the corresponding path action on gen.
            std::vector<Matrix> mats;
            for (std::size_t w = 0; w < q.num_vertices(); ++w) {
                Matrix m(field(), static_cast<std::size_t>(x.dim(static_cast<int>(w))), grouped[w].size());
                for (std::size_t c = 0; c < grouped[w].size(); ++c) {
                    Matrix img = x.path_action(grouped[w][c]) * gen;
                    for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) = img(r, 0);
                }
                mats.push_back(std::move(m));
            }
            parts.push_back(pv);
            comps.push_back(Morphism::unchecked(pv, x, std::move(mats)));
        }
    }
    if (parts.empty()) {
        Obj zero = zero_object();
        return {zero, Morphism::zero(zero, x)};
    }
    Mor cover = from_sum(parts, comps);
    if (!cover.is_surjective()) throw InternalError("projective cover failed to surject");
    return {cover.source(), cover};
}

std::vector<Representation> RepCat::indecomposable_projectives() const {
    std::vector<Obj> out;
    for (std::size_t v = 0; v < alg_->num_vertices(); ++v) out.push_back(projective_rep(alg_, static_cast<int>(v)));
    return out;
}

std::vector<Representation> RepCat::indecomposable_injectives() const {
    std::vector<Obj> out;
    for (std::size_t v = 0; v < alg_->num_vertices(); ++v) out.push_back(injective_rep(alg_, static_cast<int>(v)));
    return out;
}

}  // namespace pwt
