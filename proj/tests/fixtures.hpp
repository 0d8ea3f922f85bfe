#pragma once

#include "pwt/indec_enum.hpp"
#include "pwt/rep_category.hpp"

// Shared fixture algebras.
//
//   lambda0: 2 --a--> 3 --b--> 4 with relation ab = 0
//   a2:      1 --a--> 2
//   c3:      cyclic 1 -> 2 -> 3 -> 1 with every length-2 path zero
//   gamma0:  1 --g--> 2 --a--> 3 --b--> 4 with ga = 0, ab = 0
namespace fixtures {

inline pwt::AlgebraPtr lambda0(const pwt::Field& k) {
    pwt::Quiver q({"2", "3", "4"}, {{"a", "2", "3"}, {"b", "3", "4"}});
    std::vector<pwt::Path> rels = {pwt::make_path(q, {q.arrow_index("a"), q.arrow_index("b")})};
    return pwt::BoundQuiverAlgebra::build(std::move(q), std::move(rels), k);
}

inline pwt::AlgebraPtr a2(const pwt::Field& k) {
    pwt::Quiver q({"1", "2"}, {{"a", "1", "2"}});
    return pwt::BoundQuiverAlgebra::build(std::move(q), {}, k);
}

inline pwt::AlgebraPtr c3(const pwt::Field& k) {
    pwt::Quiver q({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "3", "1"}});
    std::vector<pwt::Path> rels = {
        pwt::make_path(q, {q.arrow_index("a"), q.arrow_index("b")}),
        pwt::make_path(q, {q.arrow_index("b"), q.arrow_index("c")}),
        pwt::make_path(q, {q.arrow_index("c"), q.arrow_index("a")}),
    };
    return pwt::BoundQuiverAlgebra::build(std::move(q), std::move(rels), k);
}

inline pwt::AlgebraPtr gamma0(const pwt::Field& k) {
    pwt::Quiver q({"1", "2", "3", "4"}, {{"g", "1", "2"}, {"a", "2", "3"}, {"b", "3", "4"}});
    std::vector<pwt::Path> rels = {
        pwt::make_path(q, {q.arrow_index("g"), q.arrow_index("a")}),
        pwt::make_path(q, {q.arrow_index("a"), q.arrow_index("b")}),
    };
    return pwt::BoundQuiverAlgebra::build(std::move(q), std::move(rels), k);
}

}  // namespace fixtures
