#pragma once

#include <sstream>

#include "pwt/decompose.hpp"

namespace pwt {

// Radical-layer descriptor of an indecomposable: vertex labels of top(X),
// then top(rad X), ... joined by '/'. P_2 over the 2->3->4 fixture reads
// "2/3", its simple top just "2".
template <class Cat>
std::string indec_descriptor(Cat& cat, const typename Cat::Obj& x) {
    auto labels = cat.slot_labels();
    std::ostringstream os;
    typename Cat::Obj current = x;
    bool first_layer = true;
    while (!cat.is_zero(current)) {
        auto sub = cat.radical(current);
        auto full = cat.dims_by_slot(current);
        auto rad = cat.dims_by_slot(sub.object);
        if (!first_layer) os << "/";
        bool first_label = true;
        for (std::size_t v = 0; v < labels.size(); ++v) {
            int mult = full[v] - rad[v];
            for (int i = 0; i < mult; ++i) {
                if (!first_label) os << " ";
                os << labels[v];
                first_label = false;
            }
        }
        first_layer = false;
        current = sub.object;
    }
    std::string s = os.str();
    return s.empty() ? "0" : s;
}

template <class Cat>
std::string descriptor(Cat& cat, const typename Cat::Obj& x, const Options& opts = {}) {
    if (cat.is_zero(x)) return "0";
    auto dec = decompose(cat, x, opts);
    std::ostringstream os;
    bool first = true;
    for (const auto& s : dec.summands) {
        if (!first) os << " ⊕ ";
        if (s.multiplicity > 1) os << s.multiplicity << "*";
        os << indec_descriptor(cat, s.object);
        first = false;
    }
    return os.str();
}

template <class Cat>
std::string dim_vector_string(Cat& cat, const typename Cat::Obj& x) {
    std::ostringstream os;
    os << "(";
    auto dims = cat.dims_by_slot(x);
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (i) os << ",";
        os << dims[i];
    }
    os << ")";
    return os.str();
}

namespace detail {

inline std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace detail

// Mutation graph in DOT form; node labels are module descriptors, edge
// labels name the exchanged summands.
template <class Cat>
std::string dot_graph(Cat& cat, const MutationGraph<typename Cat::Obj>& graph, const Options& opts = {}) {
    std::ostringstream os;
    os << "digraph mutations {\n  rankdir=LR;\n";
    for (std::size_t i = 0; i < graph.nodes.size(); ++i)
        os << "  n" << i << " [label=" << detail::dot_quote(descriptor(cat, graph.nodes[i], opts)) << "];\n";
    for (const auto& e : graph.edges)
        os << "  n" << e.from << " -> n" << e.to << " [label="
           << detail::dot_quote(indec_descriptor(cat, e.exchanged_out) + " -> " +
                                indec_descriptor(cat, e.exchanged_in))
           << "];\n";
    os << "}\n";
    return os.str();
}

}  // namespace pwt
