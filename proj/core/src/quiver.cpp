#include "pwt/quiver.hpp"

#include <sstream>

namespace pwt {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (vertices_[i].empty()) throw Error("empty vertex id");
        if (!vertex_idx_.emplace(vertices_[i], static_cast<int>(i)).second)
            throw Error("duplicate vertex id '" + vertices_[i] + "'");
    }
    out_.resize(vertices_.size());
    in_.resize(vertices_.size());
    for (std::size_t i = 0; i < arrows_.size(); ++i) {
        const Arrow& a = arrows_[i];
        if (a.id.empty()) throw Error("empty arrow id");
        if (!arrow_idx_.emplace(a.id, static_cast<int>(i)).second)
            throw Error("duplicate arrow id '" + a.id + "'");
        int s = vertex_index(a.source);
        int t = vertex_index(a.target);
        arrow_src_.push_back(s);
        arrow_dst_.push_back(t);
        out_[static_cast<std::size_t>(s)].push_back(static_cast<int>(i));
        in_[static_cast<std::size_t>(t)].push_back(static_cast<int>(i));
    }
}

int Quiver::vertex_index(const std::string& id) const {
    auto it = vertex_idx_.find(id);
    if (it == vertex_idx_.end()) throw UnknownVertex("unknown vertex '" + id + "'");
    return it->second;
}

int Quiver::arrow_index(const std::string& id) const {
    auto it = arrow_idx_.find(id);
    if (it == arrow_idx_.end()) throw Error("unknown arrow '" + id + "'");
    return it->second;
}

bool Quiver::is_nakayama() const {
    for (std::size_t v = 0; v < vertices_.size(); ++v)
        if (out_[v].size() > 1 || in_[v].size() > 1) return false;
    return true;
}

Path make_path(const Quiver& q, const std::vector<int>& arrow_indices) {
    if (arrow_indices.empty()) throw Error("make_path requires at least one arrow; use trivial_path");
    Path p;
    p.arrows = arrow_indices;
    p.source = q.arrow_source(arrow_indices.front());
    p.target = q.arrow_target(arrow_indices.back());
    for (std::size_t i = 0; i + 1 < arrow_indices.size(); ++i)
        if (q.arrow_target(arrow_indices[i]) != q.arrow_source(arrow_indices[i + 1]))
            throw Error("arrows do not compose: '" + q.arrows()[static_cast<std::size_t>(arrow_indices[i])].id +
                        "' then '" + q.arrows()[static_cast<std::size_t>(arrow_indices[i + 1])].id + "'");
    return p;
}

Path trivial_path(int vertex) { return Path{vertex, vertex, {}}; }

std::string path_to_string(const Quiver& q, const Path& p) {
    if (p.is_trivial()) return "e_" + q.vertices()[static_cast<std::size_t>(p.source)];
    std::ostringstream os;
    for (std::size_t i = 0; i < p.arrows.size(); ++i) {
        if (i) os << "*";
        os << q.arrows()[static_cast<std::size_t>(p.arrows[i])].id;
    }
    return os.str();
}

}  // namespace pwt
