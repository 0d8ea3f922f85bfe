#include "pwt/opext.hpp"

#include "pwt/homology.hpp"
#include "pwt/util.hpp"

namespace pwt {

namespace {

// Intertwining system for Hom_Lambda(x, y); unknowns are the component
// entries vertex by vertex, row-major. Shared with the triple hom solver.
Matrix lambda_hom_system(const Representation& x, const Representation& y, std::vector<std::size_t>& offset) {
    const Quiver& q = x.algebra()->quiver();
    const Field& k = x.algebra()->field();
    offset.assign(q.num_vertices() + 1, 0);
    for (std::size_t v = 0; v < q.num_vertices(); ++v)
        offset[v + 1] = offset[v] + static_cast<std::size_t>(y.dim(static_cast<int>(v)) * x.dim(static_cast<int>(v)));
    std::size_t eq_count = 0;
    for (std::size_t a = 0; a < q.num_arrows(); ++a)
        eq_count += static_cast<std::size_t>(y.dim(q.arrow_target(static_cast<int>(a))) *
                                             x.dim(q.arrow_source(static_cast<int>(a))));
    Matrix sys(k, eq_count, offset.back());
    std::size_t eq = 0;
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        int u = q.arrow_source(static_cast<int>(a));
        int v = q.arrow_target(static_cast<int>(a));
        const Matrix& xa = x.arrow_map(static_cast<int>(a));
        const Matrix& ya = y.arrow_map(static_cast<int>(a));
        std::size_t yv = static_cast<std::size_t>(y.dim(v));
        std::size_t xu = static_cast<std::size_t>(x.dim(u));
        std::size_t xv = static_cast<std::size_t>(x.dim(v));
        std::size_t yu = static_cast<std::size_t>(y.dim(u));
        for (std::size_t r = 0; r < yv; ++r)
            for (std::size_t c = 0; c < xu; ++c) {
                for (std::size_t m = 0; m < xv; ++m)
                    sys(eq, offset[static_cast<std::size_t>(v)] + r * xv + m) =
                        sys(eq, offset[static_cast<std::size_t>(v)] + r * xv + m) + xa(m, c);
                for (std::size_t m = 0; m < yu; ++m)
                    sys(eq, offset[static_cast<std::size_t>(u)] + m * xu + c) =
                        sys(eq, offset[static_cast<std::size_t>(u)] + m * xu + c) - ya(r, m);
                ++eq;
            }
    }
    return sys;
}

}  // namespace

ExtensionContext::ExtensionContext(AlgebraPtr lambda, Representation m, std::string label)
    : lambda_(std::move(lambda)), m_(std::move(m)), label_(std::move(label)) {
    require_same_algebra(lambda_, m_.algebra());
    if (label_.empty()) throw Error("extension vertex label must be nonempty");
    for (const auto& v : lambda_->quiver().vertices())
        if (v == label_) throw Error("extension vertex label '" + label_ + "' collides with a base vertex");
    digest_ = hash_mix(hash_mix(lambda_->digest(), m_.hash()), fnv1a(label_));
}

Representation ExtensionContext::m_power(int count) const {
    if (count < 0) throw DimensionMismatch("negative extension multiplicity");
    std::vector<Representation> parts(static_cast<std::size_t>(count), m_);
    return direct_sum_reps(lambda_, parts);
}

ContextPtr extend(const AlgebraPtr& lambda, const Representation& m, std::string label) {
    return std::make_shared<const ExtensionContext>(lambda, m, std::move(label));
}

Triple::Triple(ContextPtr ctx, Representation x, int v, Morphism phi)
    : ctx_(std::move(ctx)), x_(std::move(x)), v_(v), phi_(std::move(phi)) {
    require_same_algebra(ctx_->lambda(), x_.algebra());
    if (v_ < 0) throw DimensionMismatch("negative dimension at the extension vertex");
    if (!(phi_.source() == ctx_->m_power(v_)))
        throw DimensionMismatch("phi source is not M^v");
    if (!(phi_.target() == x_)) throw DimensionMismatch("phi target is not the base representation");
}

std::vector<int> Triple::dims_with_ext() const {
    std::vector<int> d = x_.dims();
    d.push_back(v_);
    return d;
}

std::uint64_t Triple::hash() const {
    std::uint64_t h = hash_mix(ctx_->digest(), 0x747269706c65ULL);
    h = hash_mix(h, x_.hash());
    h = hash_mix(h, static_cast<std::uint64_t>(v_));
    for (const auto& c : phi_.components()) h = hash_mix(h, c.hash());
    return h;
}

bool operator==(const Triple& a, const Triple& b) {
    return a.ctx_.get() == b.ctx_.get() && a.v_ == b.v_ && a.x_ == b.x_ && a.phi_ == b.phi_;
}

Morphism tensor_with_m(const ContextPtr& ctx, const Matrix& g) {
    const Representation& m = ctx->extension_module();
    const AlgebraPtr& alg = ctx->lambda();
    int rows = static_cast<int>(g.rows());
    int cols = static_cast<int>(g.cols());
    Representation src = ctx->m_power(cols);
    Representation dst = ctx->m_power(rows);
    std::vector<Matrix> comps;
    for (std::size_t w = 0; w < alg->num_vertices(); ++w) {
        std::size_t mw = static_cast<std::size_t>(m.dim(static_cast<int>(w)));
        Matrix comp(alg->field(), static_cast<std::size_t>(rows) * mw, static_cast<std::size_t>(cols) * mw);
        for (std::size_t i = 0; i < static_cast<std::size_t>(rows); ++i)
            for (std::size_t j = 0; j < static_cast<std::size_t>(cols); ++j)
                for (std::size_t b = 0; b < mw; ++b) comp(i * mw + b, j * mw + b) = g(i, j);
        comps.push_back(std::move(comp));
    }
    return Morphism::unchecked(std::move(src), std::move(dst), std::move(comps));
}

TripleMorphism::TripleMorphism(Triple source, Triple target, Morphism f, Matrix g)
    : src_(std::move(source)), dst_(std::move(target)), f_(std::move(f)), g_(std::move(g)) {
    require_same_context(src_.context(), dst_.context());
    if (!(f_.source() == src_.base()) || !(f_.target() == dst_.base()))
        throw DimensionMismatch("triple morphism base map endpoints mismatch");
    if (g_.rows() != static_cast<std::size_t>(dst_.ext_dim_v()) ||
        g_.cols() != static_cast<std::size_t>(src_.ext_dim_v()))
        throw DimensionMismatch("triple morphism extension matrix shape mismatch");
    Morphism lhs = compose(f_, src_.phi());
    Morphism rhs = compose(dst_.phi(), tensor_with_m(src_.context(), g_));
    if (!(lhs == rhs)) throw DimensionMismatch("triple compatibility square does not commute");
}

TripleMorphism TripleMorphism::unchecked(Triple source, Triple target, Morphism f, Matrix g) {
    TripleMorphism t;
    t.src_ = std::move(source);
    t.dst_ = std::move(target);
    t.f_ = std::move(f);
    t.g_ = std::move(g);
    return t;
}

Triple e_functor(const ContextPtr& ctx, const Representation& x) {
    return Triple(ctx, x, 0, Morphism::zero(ctx->m_power(0), x));
}

Representation r_functor(const Triple& t) { return t.base(); }

Triple proj_a(const ContextPtr& ctx) {
    const Representation& m = ctx->extension_module();
    return Triple(ctx, m, 1, Morphism::identity(m));
}

Triple simple_a(const ContextPtr& ctx) {
    Representation zero = Representation::zero(ctx->lambda());
    return Triple(ctx, zero, 1, Morphism::zero(ctx->m_power(1), zero));
}

std::pair<TripleMorphism, TripleMorphism> canonical_sequence(const ContextPtr& ctx) {
    Triple em = e_functor(ctx, ctx->extension_module());
    Triple pa = proj_a(ctx);
    Triple sa = simple_a(ctx);
    TripleMorphism incl = TripleMorphism::unchecked(em, pa, Morphism::identity(ctx->extension_module()),
                                                    Matrix(ctx->field(), 1, 0));
    TripleMorphism proj = TripleMorphism::unchecked(
        pa, sa, Morphism::zero(ctx->extension_module(), Representation::zero(ctx->lambda())),
        Matrix::identity(ctx->field(), 1));
    return {incl, proj};
}

std::vector<std::string> TripleCat::slot_labels() const {
    std::vector<std::string> labels = ctx_->lambda()->quiver().vertices();
    labels.push_back(ctx_->label());
    return labels;
}

Triple TripleCat::zero_object() const {
    Representation zero = Representation::zero(ctx_->lambda());
    return Triple(ctx_, zero, 0, Morphism::zero(ctx_->m_power(0), zero));
}

Triple TripleCat::direct_sum(std::span<const Obj> parts) const {
    std::vector<Representation> xs;
    int v = 0;
    for (const auto& p : parts) {
        require_same_context(ctx_, p.context());
        xs.push_back(p.base());
        v += p.ext_dim_v();
    }
    Representation x = direct_sum_reps(ctx_->lambda(), xs);
    Representation src = ctx_->m_power(v);
    std::vector<Matrix> comps;
    const AlgebraPtr& alg = ctx_->lambda();
    for (std::size_t w = 0; w < alg->num_vertices(); ++w) {
        std::vector<Matrix> blocks;
        for (const auto& p : parts) blocks.push_back(p.phi().component(static_cast<int>(w)));
        comps.push_back(block_diag(field(), blocks));
    }
    Morphism phi = Morphism::unchecked(std::move(src), x, std::move(comps));
    return Triple(ctx_, x, v, std::move(phi));
}

TripleMorphism TripleCat::summand_inclusion(std::span<const Obj> parts, std::size_t i) const {
    std::vector<Mor> comps;
    for (std::size_t j = 0; j < parts.size(); ++j)
        comps.push_back(j == i ? identity(parts[i]) : zero_mor(parts[i], parts[j]));
    return into_sum(parts, comps);
}

TripleMorphism TripleCat::summand_projection(std::span<const Obj> parts, std::size_t i) const {
    std::vector<Mor> comps;
    for (std::size_t j = 0; j < parts.size(); ++j)
        comps.push_back(j == i ? identity(parts[i]) : zero_mor(parts[j], parts[i]));
    return from_sum(parts, comps);
}

TripleMorphism TripleCat::into_sum(std::span<const Obj> parts, std::span<const Mor> comps) const {
    if (parts.size() != comps.size() || comps.empty()) throw DimensionMismatch("into_sum component mismatch");
    Obj total = direct_sum(parts);
    const Obj& x = comps[0].source();
    std::vector<Morphism> base_comps;
    Matrix g(field(), 0, static_cast<std::size_t>(x.ext_dim_v()));
    for (const auto& c : comps) {
        base_comps.push_back(c.base_map());
        g = vcat(g, c.ext_map());
    }
    std::vector<Representation> base_parts;
    for (const auto& p : parts) base_parts.push_back(p.base());
    Morphism f = rep_cat_.into_sum(base_parts, base_comps);
    return Mor::unchecked(x, std::move(total), std::move(f), std::move(g));
}

TripleMorphism TripleCat::from_sum(std::span<const Obj> parts, std::span<const Mor> comps) const {
    if (parts.size() != comps.size() || comps.empty()) throw DimensionMismatch("from_sum component mismatch");
    Obj total = direct_sum(parts);
    const Obj& y = comps[0].target();
    std::vector<Morphism> base_comps;
    Matrix g(field(), static_cast<std::size_t>(y.ext_dim_v()), 0);
    for (const auto& c : comps) {
        base_comps.push_back(c.base_map());
        g = hcat(g, c.ext_map());
    }
    std::vector<Representation> base_parts;
    for (const auto& p : parts) base_parts.push_back(p.base());
    Morphism f = rep_cat_.from_sum(base_parts, base_comps);
    return Mor::unchecked(std::move(total), y, std::move(f), std::move(g));
}

std::vector<TripleMorphism> TripleCat::hom_basis(const Obj& a, const Obj& b) const {
    require_same_context(ctx_, a.context());
    require_same_context(ctx_, b.context());
    const AlgebraPtr& alg = ctx_->lambda();
    const Field& k = field();
    const Representation& m = ctx_->extension_module();

    std::vector<std::size_t> offset;
    Matrix lsys = lambda_hom_system(a.base(), b.base(), offset);
    std::size_t f_unknowns = offset.back();
    std::size_t vs = static_cast<std::size_t>(a.ext_dim_v());
    std::size_t vt = static_cast<std::size_t>(b.ext_dim_v());
    std::size_t g_unknowns = vt * vs;  // g[j][i], row-major

    // Compatibility equations: f_w . phi_a[w] = phi_b[w] . (g (x) id)_w.
    std::size_t extra = 0;
    for (std::size_t w = 0; w < alg->num_vertices(); ++w)
        extra += static_cast<std::size_t>(b.base().dim(static_cast<int>(w))) * vs *
                 static_cast<std::size_t>(m.dim(static_cast<int>(w)));

    Matrix sys(k, lsys.rows() + extra, f_unknowns + g_unknowns);
    for (std::size_t r = 0; r < lsys.rows(); ++r)
        for (std::size_t c = 0; c < lsys.cols(); ++c) sys(r, c) = lsys(r, c);

    std::size_t eq = lsys.rows();
    for (std::size_t w = 0; w < alg->num_vertices(); ++w) {
        std::size_t mw = static_cast<std::size_t>(m.dim(static_cast<int>(w)));
        std::size_t xv = static_cast<std::size_t>(a.base().dim(static_cast<int>(w)));
        std::size_t yv = static_cast<std::size_t>(b.base().dim(static_cast<int>(w)));
        const Matrix& pa = a.phi().component(static_cast<int>(w));  // xv x (vs*mw)
        const Matrix& pb = b.phi().component(static_cast<int>(w));  // yv x (vt*mw)
        for (std::size_t r = 0; r < yv; ++r)
            for (std::size_t i = 0; i < vs; ++i)
                for (std::size_t bb = 0; bb < mw; ++bb) {
                    std::size_t c = i * mw + bb;
                    for (std::size_t mm = 0; mm < xv; ++mm)
                        sys(eq, offset[w] + r * xv + mm) = sys(eq, offset[w] + r * xv + mm) + pa(mm, c);
                    for (std::size_t j = 0; j < vt; ++j)
                        sys(eq, f_unknowns + j * vs + i) =
                            sys(eq, f_unknowns + j * vs + i) - pb(r, j * mw + bb);
                    ++eq;
                }
    }

    Matrix basis = kernel_basis(sys);
    std::vector<Mor> out;
    out.reserve(basis.cols());
    for (std::size_t col = 0; col < basis.cols(); ++col) {
        std::vector<Matrix> comps;
        for (std::size_t w = 0; w < alg->num_vertices(); ++w) {
            std::size_t rows = static_cast<std::size_t>(b.base().dim(static_cast<int>(w)));
            std::size_t cols = static_cast<std::size_t>(a.base().dim(static_cast<int>(w)));
            Matrix mm(k, rows, cols);
            for (std::size_t r = 0; r < rows; ++r)
                for (std::size_t c = 0; c < cols; ++c) mm(r, c) = basis(offset[w] + r * cols + c, col);
            comps.push_back(std::move(mm));
        }
        Matrix g(k, vt, vs);
        for (std::size_t j = 0; j < vt; ++j)
            for (std::size_t i = 0; i < vs; ++i) g(j, i) = basis(f_unknowns + j * vs + i, col);
        out.push_back(Mor::unchecked(a, b, Morphism::unchecked(a.base(), b.base(), std::move(comps)), std::move(g)));
    }
    return out;
}

TripleMorphism TripleCat::identity(const Obj& a) const {
    return Mor::unchecked(a, a, Morphism::identity(a.base()),
                          Matrix::identity(field(), static_cast<std::size_t>(a.ext_dim_v())));
}

TripleMorphism TripleCat::zero_mor(const Obj& a, const Obj& b) const {
    return Mor::unchecked(a, b, Morphism::zero(a.base(), b.base()),
                          Matrix(field(), static_cast<std::size_t>(b.ext_dim_v()),
                                 static_cast<std::size_t>(a.ext_dim_v())));
}

TripleMorphism TripleCat::compose(const Mor& g, const Mor& f) const {
    return Mor::unchecked(f.source(), g.target(), pwt::compose(g.base_map(), f.base_map()),
                          g.ext_map() * f.ext_map());
}

TripleMorphism TripleCat::add(const Mor& a, const Mor& b) const {
    return Mor::unchecked(a.source(), a.target(), a.base_map() + b.base_map(), a.ext_map() + b.ext_map());
}

TripleMorphism TripleCat::scale(const Scalar& s, const Mor& a) const {
    return Mor::unchecked(a.source(), a.target(), s * a.base_map(), s * a.ext_map());
}

Matrix TripleCat::flatten_mor(const Mor& f) const { return vcat(f.base_map().flatten(), vec(f.ext_map())); }

Matrix TripleCat::operator_matrix(const Mor& endo) const {
    std::vector<Matrix> blocks = endo.base_map().components();
    blocks.push_back(endo.ext_map());
    return block_diag(field(), blocks);
}

SubObject<Triple, TripleMorphism> TripleCat::kernel(const Mor& f) const {
    auto kx = rep_cat_.kernel(f.base_map());
    Matrix gker = kernel_basis(f.ext_map());
    int vk = static_cast<int>(gker.cols());
    // phi restricted to the kernel: phi_s . (gker (x) id) lands in K_X.
    Morphism pushed = pwt::compose(f.source().phi(), tensor_with_m(ctx_, gker));
    std::vector<Matrix> comps;
    for (std::size_t w = 0; w < ctx_->lambda()->num_vertices(); ++w) {
        auto coords = solve(kx.inclusion.component(static_cast<int>(w)), pushed.component(static_cast<int>(w)));
        if (!coords) throw InternalError("triple kernel: phi does not restrict");
        comps.push_back(std::move(*coords));
    }
    Morphism phi_k = Morphism::unchecked(ctx_->m_power(vk), kx.object, std::move(comps));
    Triple ker(ctx_, kx.object, vk, std::move(phi_k));
    Mor incl = Mor::unchecked(ker, f.source(), kx.inclusion, gker);
    return {std::move(ker), std::move(incl)};
}

SubObject<Triple, TripleMorphism> TripleCat::image(const Mor& f) const {
    auto ix = rep_cat_.image(f.base_map());
    Matrix gim = column_space_basis(f.ext_map());
    int vi = static_cast<int>(gim.cols());
    Morphism pushed = pwt::compose(f.target().phi(), tensor_with_m(ctx_, gim));
    std::vector<Matrix> comps;
    for (std::size_t w = 0; w < ctx_->lambda()->num_vertices(); ++w) {
        auto coords = solve(ix.inclusion.component(static_cast<int>(w)), pushed.component(static_cast<int>(w)));
        if (!coords) throw InternalError("triple image: phi does not restrict");
        comps.push_back(std::move(*coords));
    }
    Morphism phi_i = Morphism::unchecked(ctx_->m_power(vi), ix.object, std::move(comps));
    Triple img(ctx_, ix.object, vi, std::move(phi_i));
    Mor incl = Mor::unchecked(img, f.target(), ix.inclusion, gim);
    return {std::move(img), std::move(incl)};
}

QuotObject<Triple, TripleMorphism> TripleCat::cokernel(const Mor& f) const {
    auto cx = rep_cat_.cokernel(f.base_map());
    SplitBasis sb = split_complement(f.ext_map());
    int vc = static_cast<int>(sb.projection.rows());
    // phi on the quotient: pi_X . phi_t . (section (x) id).
    Morphism lifted = pwt::compose(cx.projection, pwt::compose(f.target().phi(), tensor_with_m(ctx_, sb.section)));
    Morphism phi_c = Morphism::unchecked(ctx_->m_power(vc), cx.object, lifted.components());
    Triple quot(ctx_, cx.object, vc, std::move(phi_c));
    Mor proj = Mor::unchecked(f.target(), quot, cx.projection, sb.projection);
    return {std::move(quot), std::move(proj)};
}

SubObject<Triple, TripleMorphism> TripleCat::radical(const Obj& t) const {
    // rad(X, V, phi) = (rad_Lambda X + im phi, 0, 0): the new vertex only
    // maps outward, so nothing lands in V and im phi joins the base radical.
    const AlgebraPtr& alg = ctx_->lambda();
    std::vector<Matrix> spans;
    for (std::size_t w = 0; w < alg->num_vertices(); ++w) {
        Matrix span(field(), static_cast<std::size_t>(t.base().dim(static_cast<int>(w))), 0);
        for (int ar : alg->quiver().arrows_into(static_cast<int>(w))) span = hcat(span, t.base().arrow_map(ar));
        span = hcat(span, t.phi().component(static_cast<int>(w)));
        spans.push_back(std::move(span));
    }
    auto sub = rep_cat_.subobject_from_spans(t.base(), spans);
    Triple rad(ctx_, sub.object, 0, Morphism::zero(ctx_->m_power(0), sub.object));
    Mor incl = Mor::unchecked(rad, t, sub.inclusion, Matrix(field(), static_cast<std::size_t>(t.ext_dim_v()), 0));
    return {std::move(rad), std::move(incl)};
}

std::pair<Triple, TripleMorphism> TripleCat::projective_cover(const Obj& t) const {
    // Cover = P_a^{v} (+) E(cover of coker phi); the map hits V identically
    // and the base through phi plus a projective lift over the cokernel.
    auto cok = rep_cat_.cokernel(t.phi());
    auto [pc, cmap] = rep_cat_.projective_cover(cok.object);
    std::optional<Morphism> lift;
    if (!pc.is_zero()) {
        lift = factor_right(rep_cat_, cok.projection, cmap);
        if (!lift) throw InternalError("triple cover: projective lift failed");
    }

    std::vector<Obj> parts;
    std::vector<Mor> comps;
    Triple pa = proj_a(ctx_);
    const Representation& m = ctx_->extension_module();
    for (int j = 0; j < t.ext_dim_v(); ++j) {
        // copy j of P_a maps by the j-th block of phi on the base and by the
        // j-th standard vector on V
        std::vector<Matrix> fj;
        for (std::size_t w = 0; w < ctx_->lambda()->num_vertices(); ++w) {
            std::size_t mw = static_cast<std::size_t>(m.dim(static_cast<int>(w)));
            const Matrix& pw = t.phi().component(static_cast<int>(w));
            Matrix block(field(), pw.rows(), mw);
            for (std::size_t r = 0; r < pw.rows(); ++r)
                for (std::size_t b = 0; b < mw; ++b) block(r, b) = pw(r, static_cast<std::size_t>(j) * mw + b);
            fj.push_back(std::move(block));
        }
        Matrix gj(field(), static_cast<std::size_t>(t.ext_dim_v()), 1);
        gj(static_cast<std::size_t>(j), 0) = Scalar::one(field());
        parts.push_back(pa);
        comps.push_back(Mor::unchecked(pa, t, Morphism::unchecked(m, t.base(), std::move(fj)), std::move(gj)));
    }
    if (!pc.is_zero()) {
        Triple epc = e_functor(ctx_, pc);
        parts.push_back(epc);
        comps.push_back(Mor::unchecked(epc, t, *lift, Matrix(field(), static_cast<std::size_t>(t.ext_dim_v()), 0)));
    }
    if (parts.empty()) {
        Obj zero = zero_object();
        return {zero, zero_mor(zero, t)};
    }
    Mor cover = from_sum(parts, comps);
    if (!cover.is_surjective()) throw InternalError("triple projective cover failed to surject");
    return {cover.source(), cover};
}

std::vector<Triple> TripleCat::indecomposable_projectives() const {
    std::vector<Obj> out;
    for (std::size_t v = 0; v < ctx_->lambda()->num_vertices(); ++v)
        out.push_back(e_functor(ctx_, projective_rep(ctx_->lambda(), static_cast<int>(v))));
    out.push_back(proj_a(ctx_));
    return out;
}

std::vector<Triple> TripleCat::indecomposable_injectives() const {
    const AlgebraPtr& alg = ctx_->lambda();
    if (ctx_->extension_module().is_zero()) {
        std::vector<Obj> out;
        for (std::size_t v = 0; v < alg->num_vertices(); ++v)
            out.push_back(e_functor(ctx_, injective_rep(alg, static_cast<int>(v))));
        out.push_back(simple_a(ctx_));
        return out;
    }
    int i = source_extension_vertex(ctx_);
    if (i < 0)
        throw NotSourceExtension("injective triples are only classified for source point extensions");
    std::vector<Obj> out;
    for (std::size_t v = 0; v < alg->num_vertices(); ++v) {
        if (static_cast<int>(v) == i) continue;
        out.push_back(e_functor(ctx_, injective_rep(alg, static_cast<int>(v))));
    }
    out.push_back(proj_a(ctx_));    // the injective envelope of E(S_i)
    out.push_back(simple_a(ctx_));  // the injective simple at the new source
    return out;
}

Triple TripleCat::regular_object() const {
    auto projs = indecomposable_projectives();
    return direct_sum(projs);
}

int source_extension_vertex(const ContextPtr& ctx) {
    const Representation& m = ctx->extension_module();
    if (m.total_dim() != 1) return -1;
    for (std::size_t v = 0; v < ctx->lambda()->num_vertices(); ++v) {
        if (m.dim(static_cast<int>(v)) == 1) {
            return ctx->lambda()->is_source_vertex(static_cast<int>(v)) ? static_cast<int>(v) : -1;
        }
    }
    return -1;
}

}  // namespace pwt
