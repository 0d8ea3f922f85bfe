#include "pwt/algebra.hpp"

#include <algorithm>

#include "pwt/util.hpp"

namespace pwt {

namespace {

bool contains_subword(const std::vector<int>& word, const std::vector<int>& sub) {
    if (sub.size() > word.size()) return false;
    for (std::size_t start = 0; start + sub.size() <= word.size(); ++start) {
        bool hit = true;
        for (std::size_t i = 0; i < sub.size(); ++i)
            if (word[start + i] != sub[i]) {
                hit = false;
                break;
            }
        if (hit) return true;
    }
    return false;
}

}  // namespace

bool BoundQuiverAlgebra::word_contains_relation(const std::vector<int>& arrows) const {
    for (const Path& rel : relations_)
        if (contains_subword(arrows, rel.arrows)) return true;
    return false;
}

std::shared_ptr<const BoundQuiverAlgebra> BoundQuiverAlgebra::build(Quiver quiver,
                                                                    std::vector<Path> relations,
                                                                    Field field,
                                                                    std::size_t length_cap) {
    for (const Path& rel : relations) {
        if (rel.length() < 2)
            throw Error("relation of length " + std::to_string(rel.length()) + "; admissible relations need length >= 2");
        // Re-validate composability against this quiver.
        make_path(quiver, rel.arrows);
    }
    if (length_cap == 0) length_cap = 2 * quiver.num_arrows() * quiver.num_vertices() + 16;

    auto alg = std::shared_ptr<BoundQuiverAlgebra>(
        new BoundQuiverAlgebra(std::move(quiver), std::move(relations), field));

    // Saturate nonzero paths breadth-first by length. The frontier empties
    // exactly when every longer word contains a relation.
    std::vector<Path>& basis = alg->path_basis_;
    std::vector<Path> frontier;
    for (std::size_t v = 0; v < alg->quiver_.num_vertices(); ++v) {
        frontier.push_back(trivial_path(static_cast<int>(v)));
        basis.push_back(frontier.back());
    }
    std::size_t length = 0;
    while (!frontier.empty()) {
        ++length;
        if (length > length_cap)
            throw AdmissibilityViolation("nonzero paths exceed the length cap " + std::to_string(length_cap) +
                                         "; the ideal is not admissible (or raise the cap)");
        std::vector<Path> next;
        for (const Path& p : frontier) {
            for (int a : alg->quiver_.arrows_from(p.target)) {
                std::vector<int> word = p.arrows;
                word.push_back(a);
                if (alg->word_contains_relation(word)) continue;
                Path ext{p.source, alg->quiver_.arrow_target(a), std::move(word)};
                next.push_back(ext);
                basis.push_back(next.back());
            }
        }
        frontier = std::move(next);
    }

    std::stable_sort(basis.begin(), basis.end(), [](const Path& a, const Path& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        if (a.source != b.source) return a.source < b.source;
        return a.arrows < b.arrows;
    });

    std::uint64_t h = fnv1a(field.name());
    for (const auto& v : alg->quiver_.vertices()) h = fnv1a(v, hash_mix(h, 0x76));
    for (const auto& a : alg->quiver_.arrows()) {
        h = fnv1a(a.id, hash_mix(h, 0x61));
        h = fnv1a(a.source, h);
        h = fnv1a(a.target, h);
    }
    for (const auto& rel : alg->relations_) {
        h = hash_mix(h, 0x72);
        for (int ai : rel.arrows) h = hash_mix(h, static_cast<std::uint64_t>(ai));
    }
    alg->digest_ = h;
    return alg;
}

std::vector<Path> BoundQuiverAlgebra::basis_paths_from(int vertex) const {
    std::vector<Path> out;
    for (const Path& p : path_basis_)
        if (p.source == vertex) out.push_back(p);
    return out;
}

std::vector<Path> BoundQuiverAlgebra::basis_paths_into(int vertex) const {
    std::vector<Path> out;
    for (const Path& p : path_basis_)
        if (p.target == vertex) out.push_back(p);
    return out;
}

}  // namespace pwt
