#include "pwt/representation.hpp"

#include <numeric>

#include "pwt/util.hpp"

namespace pwt {

Representation::Representation(AlgebraPtr alg, std::vector<int> dims, std::vector<Matrix> arrow_maps)
    : alg_(std::move(alg)), dims_(std::move(dims)), maps_(std::move(arrow_maps)) {
    const Quiver& q = alg_->quiver();
    if (dims_.size() != q.num_vertices()) throw DimensionMismatch("dimension vector length != number of vertices");
    for (int d : dims_)
        if (d < 0) throw DimensionMismatch("negative vertex dimension");
    if (maps_.size() != q.num_arrows()) throw DimensionMismatch("arrow map count != number of arrows");
    for (std::size_t a = 0; a < maps_.size(); ++a) {
        const Matrix& m = maps_[a];
        if (m.field() != alg_->field()) throw FieldMismatch("arrow map field differs from algebra field");
        std::size_t want_rows = static_cast<std::size_t>(dims_[static_cast<std::size_t>(q.arrow_target(static_cast<int>(a)))]);
        std::size_t want_cols = static_cast<std::size_t>(dims_[static_cast<std::size_t>(q.arrow_source(static_cast<int>(a)))]);
        if (m.rows() != want_rows || m.cols() != want_cols)
            throw DimensionMismatch("arrow map '" + q.arrows()[a].id + "' has shape " + std::to_string(m.rows()) +
                                    "x" + std::to_string(m.cols()) + ", expected " + std::to_string(want_rows) + "x" +
                                    std::to_string(want_cols));
    }
    for (const Path& rel : alg_->relations()) {
        if (!path_action(rel).is_zero())
            throw DimensionMismatch("relation '" + path_to_string(q, rel) + "' does not act by zero");
    }
}

Representation Representation::zero(const AlgebraPtr& alg) {
    const Quiver& q = alg->quiver();
    std::vector<int> dims(q.num_vertices(), 0);
    std::vector<Matrix> maps;
    maps.reserve(q.num_arrows());
    for (std::size_t a = 0; a < q.num_arrows(); ++a) maps.emplace_back(alg->field(), 0, 0);
    return Representation(alg, std::move(dims), std::move(maps));
}

int Representation::total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), 0); }

Matrix Representation::path_action(const Path& p) const {
    if (p.is_trivial()) return Matrix::identity(alg_->field(), static_cast<std::size_t>(dim(p.source)));
    Matrix m = maps_[static_cast<std::size_t>(p.arrows.front())];
    for (std::size_t i = 1; i < p.arrows.size(); ++i) m = maps_[static_cast<std::size_t>(p.arrows[i])] * m;
    return m;
}

std::uint64_t Representation::hash() const {
    std::uint64_t h = hash_mix(alg_->digest(), 0x726570);
    for (int d : dims_) h = hash_mix(h, static_cast<std::uint64_t>(d));
    for (const Matrix& m : maps_) h = hash_mix(h, m.hash());
    return h;
}

bool operator==(const Representation& a, const Representation& b) {
    if (a.alg_.get() != b.alg_.get()) return false;
    return a.dims_ == b.dims_ && a.maps_ == b.maps_;
}

namespace {

// Basis bookkeeping for path-graded canonical modules: lists of basis paths
// per vertex, in path-basis order.
std::vector<std::vector<Path>> group_paths_by(const AlgebraPtr& alg, const std::vector<Path>& paths, bool by_target) {
    std::vector<std::vector<Path>> per_vertex(alg->num_vertices());
    for (const Path& p : paths) per_vertex[static_cast<std::size_t>(by_target ? p.target : p.source)].push_back(p);
    return per_vertex;
}

int find_word(const std::vector<Path>& list, const std::vector<int>& word) {
    for (std::size_t i = 0; i < list.size(); ++i)
        if (list[i].arrows == word) return static_cast<int>(i);
    return -1;
}

}  // namespace

Representation projective_rep(const AlgebraPtr& alg, int vertex) {
    const Quiver& q = alg->quiver();
    if (vertex < 0 || static_cast<std::size_t>(vertex) >= q.num_vertices())
        throw UnknownVertex("projective_rep: bad vertex index");
    auto per_vertex = group_paths_by(alg, alg->basis_paths_from(vertex), /*by_target=*/true);
    std::vector<int> dims(q.num_vertices());
    for (std::size_t v = 0; v < q.num_vertices(); ++v) dims[v] = static_cast<int>(per_vertex[v].size());
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        int u = q.arrow_source(static_cast<int>(a));
        int w = q.arrow_target(static_cast<int>(a));
        const auto& src = per_vertex[static_cast<std::size_t>(u)];
        const auto& dst = per_vertex[static_cast<std::size_t>(w)];
        Matrix m(alg->field(), dst.size(), src.size());
        for (std::size_t c = 0; c < src.size(); ++c) {
            std::vector<int> word = src[c].arrows;
            word.push_back(static_cast<int>(a));
            if (alg->word_contains_relation(word)) continue;
            int r = find_word(dst, word);
            if (r < 0) throw InternalError("projective_rep: extended path missing from basis");
            m(static_cast<std::size_t>(r), c) = Scalar::one(alg->field());
        }
        maps.push_back(std::move(m));
    }
    return Representation(alg, std::move(dims), std::move(maps));
}

Representation injective_rep(const AlgebraPtr& alg, int vertex) {
    const Quiver& q = alg->quiver();
    if (vertex < 0 || static_cast<std::size_t>(vertex) >= q.num_vertices())
        throw UnknownVertex("injective_rep: bad vertex index");
    auto per_vertex = group_paths_by(alg, alg->basis_paths_into(vertex), /*by_target=*/false);
    std::vector<int> dims(q.num_vertices());
    for (std::size_t v = 0; v < q.num_vertices(); ++v) dims[v] = static_cast<int>(per_vertex[v].size());
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        int u = q.arrow_source(static_cast<int>(a));
        int w = q.arrow_target(static_cast<int>(a));
        const auto& src = per_vertex[static_cast<std::size_t>(u)];
        const auto& dst = per_vertex[static_cast<std::size_t>(w)];
        // Dual path basis: delta sends p* to q* exactly when p = delta.q.
        Matrix m(alg->field(), dst.size(), src.size());
        for (std::size_t c = 0; c < src.size(); ++c) {
            const std::vector<int>& word = src[c].arrows;
            if (word.empty() || word.front() != static_cast<int>(a)) continue;
            std::vector<int> tail(word.begin() + 1, word.end());
            int r = find_word(dst, tail);
            if (r < 0) throw InternalError("injective_rep: truncated path missing from basis");
            m(static_cast<std::size_t>(r), c) = Scalar::one(alg->field());
        }
        maps.push_back(std::move(m));
    }
    return Representation(alg, std::move(dims), std::move(maps));
}

Representation simple_rep(const AlgebraPtr& alg, int vertex) {
    const Quiver& q = alg->quiver();
    if (vertex < 0 || static_cast<std::size_t>(vertex) >= q.num_vertices())
        throw UnknownVertex("simple_rep: bad vertex index");
    std::vector<int> dims(q.num_vertices(), 0);
    dims[static_cast<std::size_t>(vertex)] = 1;
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        std::size_t r = static_cast<std::size_t>(dims[static_cast<std::size_t>(q.arrow_target(static_cast<int>(a)))]);
        std::size_t c = static_cast<std::size_t>(dims[static_cast<std::size_t>(q.arrow_source(static_cast<int>(a)))]);
        maps.emplace_back(alg->field(), r, c);
    }
    return Representation(alg, std::move(dims), std::move(maps));
}

Representation regular_rep(const AlgebraPtr& alg) {
    std::vector<Representation> parts;
    for (std::size_t v = 0; v < alg->num_vertices(); ++v) parts.push_back(projective_rep(alg, static_cast<int>(v)));
    return direct_sum_reps(alg, parts);
}

Representation direct_sum_reps(const AlgebraPtr& alg, std::span<const Representation> parts) {
    const Quiver& q = alg->quiver();
    std::vector<int> dims(q.num_vertices(), 0);
    for (const auto& p : parts) {
        require_same_algebra(alg, p.algebra());
        for (std::size_t v = 0; v < q.num_vertices(); ++v) dims[v] += p.dim(static_cast<int>(v));
    }
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        std::vector<Matrix> blocks;
        blocks.reserve(parts.size());
        for (const auto& p : parts) blocks.push_back(p.arrow_map(static_cast<int>(a)));
        maps.push_back(block_diag(alg->field(), blocks));
    }
    return Representation(alg, std::move(dims), std::move(maps));
}

}  // namespace pwt
