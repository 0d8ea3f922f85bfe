#include "pwt/morphism.hpp"

namespace pwt {

namespace {

void check_shapes(const Representation& src, const Representation& dst, const std::vector<Matrix>& comps) {
    require_same_algebra(src.algebra(), dst.algebra());
    const Quiver& q = src.algebra()->quiver();
    if (comps.size() != q.num_vertices()) throw DimensionMismatch("morphism component count != number of vertices");
    for (std::size_t v = 0; v < q.num_vertices(); ++v) {
        if (comps[v].rows() != static_cast<std::size_t>(dst.dim(static_cast<int>(v))) ||
            comps[v].cols() != static_cast<std::size_t>(src.dim(static_cast<int>(v))))
            throw DimensionMismatch("morphism component shape mismatch at vertex " + q.vertices()[v]);
    }
}

}  // namespace

Morphism::Morphism(Representation source, Representation target, std::vector<Matrix> components)
    : src_(std::move(source)), dst_(std::move(target)), comps_(std::move(components)) {
    check_shapes(src_, dst_, comps_);
    const Quiver& q = src_.algebra()->quiver();
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        int u = q.arrow_source(static_cast<int>(a));
        int v = q.arrow_target(static_cast<int>(a));
        Matrix lhs = comps_[static_cast<std::size_t>(v)] * src_.arrow_map(static_cast<int>(a));
        Matrix rhs = dst_.arrow_map(static_cast<int>(a)) * comps_[static_cast<std::size_t>(u)];
        if (lhs != rhs)
            throw DimensionMismatch("components do not intertwine arrow '" + q.arrows()[a].id + "'");
    }
}

Morphism Morphism::unchecked(Representation source, Representation target, std::vector<Matrix> components) {
    check_shapes(source, target, components);
    return Morphism(UncheckedTag{}, std::move(source), std::move(target), std::move(components));
}

Morphism Morphism::identity(const Representation& x) {
    std::vector<Matrix> comps;
    for (std::size_t v = 0; v < x.algebra()->num_vertices(); ++v)
        comps.push_back(Matrix::identity(x.algebra()->field(), static_cast<std::size_t>(x.dim(static_cast<int>(v)))));
    return unchecked(x, x, std::move(comps));
}

Morphism Morphism::zero(const Representation& source, const Representation& target) {
    std::vector<Matrix> comps;
    for (std::size_t v = 0; v < source.algebra()->num_vertices(); ++v)
        comps.emplace_back(source.algebra()->field(), static_cast<std::size_t>(target.dim(static_cast<int>(v))),
                           static_cast<std::size_t>(source.dim(static_cast<int>(v))));
    return unchecked(source, target, std::move(comps));
}

bool Morphism::is_zero() const {
    for (const auto& m : comps_)
        if (!m.is_zero()) return false;
    return true;
}

bool Morphism::is_injective() const {
    for (const auto& m : comps_)
        if (rank(m) != m.cols()) return false;
    return true;
}

bool Morphism::is_surjective() const {
    for (const auto& m : comps_)
        if (rank(m) != m.rows()) return false;
    return true;
}

bool Morphism::is_isomorphism() const {
    for (const auto& m : comps_)
        if (!is_invertible(m)) return false;
    return true;
}

Morphism operator+(const Morphism& a, const Morphism& b) {
    if (!(a.src_ == b.src_) || !(a.dst_ == b.dst_)) throw DimensionMismatch("morphism addition shape mismatch");
    std::vector<Matrix> comps;
    for (std::size_t v = 0; v < a.comps_.size(); ++v) comps.push_back(a.comps_[v] + b.comps_[v]);
    return Morphism::unchecked(a.src_, a.dst_, std::move(comps));
}

Morphism operator*(const Scalar& s, const Morphism& a) {
    std::vector<Matrix> comps;
    for (const auto& m : a.comps_) comps.push_back(s * m);
    return Morphism::unchecked(a.src_, a.dst_, std::move(comps));
}

Morphism Morphism::operator-() const {
    std::vector<Matrix> comps;
    for (const auto& m : comps_) comps.push_back(-m);
    return Morphism::unchecked(src_, dst_, std::move(comps));
}

bool operator==(const Morphism& a, const Morphism& b) {
    return a.src_ == b.src_ && a.dst_ == b.dst_ && a.comps_ == b.comps_;
}

Matrix Morphism::flatten() const {
    Matrix out(src_.algebra()->field(), 0, 1);
    for (const auto& m : comps_) out = vcat(out, vec(m));
    return out;
}

Matrix Morphism::operator_matrix() const {
    if (!(src_ == dst_)) throw DimensionMismatch("operator matrix requires an endomorphism");
    return block_diag(src_.algebra()->field(), comps_);
}

Morphism compose(const Morphism& g, const Morphism& f) {
    if (!(f.target() == g.source())) throw DimensionMismatch("composition target/source mismatch");
    std::vector<Matrix> comps;
    for (std::size_t v = 0; v < f.components().size(); ++v)
        comps.push_back(g.components()[v] * f.components()[v]);
    return Morphism::unchecked(f.source(), g.target(), std::move(comps));
}

std::vector<Morphism> hom_basis(const Representation& x, const Representation& y) {
    require_same_algebra(x.algebra(), y.algebra());
    const AlgebraPtr& alg = x.algebra();
    const Quiver& q = alg->quiver();
    const Field& k = alg->field();

    // Unknowns: entries of each vertex component, vertex by vertex,
    // row-major within a component.
    std::vector<std::size_t> offset(q.num_vertices() + 1, 0);
    for (std::size_t v = 0; v < q.num_vertices(); ++v)
        offset[v + 1] = offset[v] + static_cast<std::size_t>(y.dim(static_cast<int>(v)) * x.dim(static_cast<int>(v)));
    std::size_t unknowns = offset.back();

    std::size_t eq_count = 0;
    for (std::size_t a = 0; a < q.num_arrows(); ++a)
        eq_count += static_cast<std::size_t>(y.dim(q.arrow_target(static_cast<int>(a))) *
                                             x.dim(q.arrow_source(static_cast<int>(a))));

    Matrix sys(k, eq_count, unknowns);
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
        // Equation (r, c): sum_m f_v[r,m] * xa[m,c]  -  sum_m ya[r,m] * f_u[m,c] == 0
        for (std::size_t r = 0; r < yv; ++r) {
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
    }

    Matrix basis = kernel_basis(sys);
    std::vector<Morphism> out;
    out.reserve(basis.cols());
    for (std::size_t j = 0; j < basis.cols(); ++j) {
        std::vector<Matrix> comps;
        for (std::size_t v = 0; v < q.num_vertices(); ++v) {
            std::size_t rows = static_cast<std::size_t>(y.dim(static_cast<int>(v)));
            std::size_t cols = static_cast<std::size_t>(x.dim(static_cast<int>(v)));
            Matrix m(k, rows, cols);
            for (std::size_t r = 0; r < rows; ++r)
                for (std::size_t c = 0; c < cols; ++c) m(r, c) = basis(offset[v] + r * cols + c, j);
            comps.push_back(std::move(m));
        }
        out.push_back(Morphism::unchecked(x, y, std::move(comps)));
    }
    return out;
}

}  // namespace pwt
