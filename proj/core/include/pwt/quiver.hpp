#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "pwt/errors.hpp"

namespace pwt {

struct Arrow {
    std::string id;
    std::string source;
    std::string target;
};

class Quiver {
public:
    Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    std::size_t num_vertices() const { return vertices_.size(); }
    std::size_t num_arrows() const { return arrows_.size(); }

    int vertex_index(const std::string& id) const;  // throws UnknownVertex
    int arrow_index(const std::string& id) const;   // throws Error
    int arrow_source(int arrow) const { return arrow_src_[static_cast<std::size_t>(arrow)]; }
    int arrow_target(int arrow) const { return arrow_dst_[static_cast<std::size_t>(arrow)]; }

    const std::vector<int>& arrows_from(int vertex) const { return out_[static_cast<std::size_t>(vertex)]; }
    const std::vector<int>& arrows_into(int vertex) const { return in_[static_cast<std::size_t>(vertex)]; }

    bool is_source_vertex(int vertex) const { return in_[static_cast<std::size_t>(vertex)].empty(); }
    // At most one arrow in and one out at every vertex.
    bool is_nakayama() const;

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::vector<int> arrow_src_, arrow_dst_;
    std::vector<std::vector<int>> out_, in_;
    std::unordered_map<std::string, int> vertex_idx_, arrow_idx_;
};

// A composable arrow word; arrows compose left to right, so {a, b} is the
// path "first a, then b". Trivial paths have an empty word.
struct Path {
    int source;
    int target;
    std::vector<int> arrows;

    std::size_t length() const { return arrows.size(); }
    bool is_trivial() const { return arrows.empty(); }
};

Path make_path(const Quiver& q, const std::vector<int>& arrow_indices);
Path trivial_path(int vertex);
std::string path_to_string(const Quiver& q, const Path& p);

}  // namespace pwt
