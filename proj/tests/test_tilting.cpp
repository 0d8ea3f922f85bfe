#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "pwt/tilting.hpp"

using namespace pwt;

namespace {

struct L0 {
    AlgebraPtr alg;
    RepCat cat;
    Representation p2, p3, p4, s2, s3, u1, u2, u3;
    std::vector<Representation> indecs;
    explicit L0(const Field& k, IndecStrategy strategy = IndecStrategy::Auto)
        : alg(fixtures::lambda0(k)),
          cat(alg),
          p2(projective_rep(alg, 0)),
          p3(projective_rep(alg, 1)),
          p4(projective_rep(alg, 2)),
          s2(simple_rep(alg, 0)),
          s3(simple_rep(alg, 1)),
          u1(direct_sum_reps(alg, std::vector{p2, p3, p4})),
          u2(direct_sum_reps(alg, std::vector{p2, p3, s3})),
          u3(direct_sum_reps(alg, std::vector{p2, p3, s2})) {
        Options opts;
        opts.indec_strategy = strategy;
        indecs = enumerate_indecomposables(cat, opts);
    }
};

// Every basic module built from a subset of the indecomposable list.
std::vector<Representation> basic_candidates(const AlgebraPtr& alg, const std::vector<Representation>& indecs) {
    std::vector<Representation> out;
    for (std::size_t mask = 1; mask < (std::size_t(1) << indecs.size()); ++mask) {
        std::vector<Representation> parts;
        for (std::size_t i = 0; i < indecs.size(); ++i)
            if (mask & (std::size_t(1) << i)) parts.push_back(indecs[i]);
        out.push_back(direct_sum_reps(alg, parts));
    }
    return out;
}

}  // namespace

TEST_CASE("self-orthogonality fixtures") {
    L0 f(Field::gf(101));
    Options opts;
    CHECK(is_self_orthogonal(f.cat, f.u1, opts).vanishes);
    CHECK(is_self_orthogonal(f.cat, f.u3, opts).vanishes);
    CHECK(!is_self_orthogonal(f.cat, direct_sum_reps(f.alg, std::vector{f.s2, f.s3}), opts).vanishes);
}

TEST_CASE("perpendicular categories over lambda0") {
    L0 f(Field::gf(101));
    Options opts;
    CHECK(perp_category(f.cat, f.u1, f.indecs, opts).size() == 5);

    auto perp3 = perp_category(f.cat, f.u3, f.indecs, opts);
    REQUIRE(perp3.size() == 3);
    for (const auto& x : perp3)
        CHECK((is_isomorphic(f.cat, x, f.p2, opts) || is_isomorphic(f.cat, x, f.p3, opts) ||
               is_isomorphic(f.cat, x, f.s2, opts)));

    auto perp2 = perp_category(f.cat, f.u2, f.indecs, opts);
    REQUIRE(perp2.size() == 4);
    for (const auto& x : perp2) CHECK(!is_isomorphic(f.cat, x, f.p4, opts));
}

TEST_CASE("ext progenerator certification") {
    L0 f(Field::gf(101));
    Options opts;

    auto c1 = is_ext_progenerator(f.cat, f.u1, f.indecs, opts);
    CHECK(c1.positive);

    auto c2 = is_ext_progenerator(f.cat, f.u2, f.indecs, opts);
    CHECK(c2.positive);
    bool saw_s2_witness = false;
    for (const auto& w : c2.witnesses) {
        if (is_isomorphic(f.cat, w.target, f.s2, opts)) {
            saw_s2_witness = true;
            CHECK(is_isomorphic(f.cat, w.middle, f.p2, opts));
            CHECK(is_isomorphic(f.cat, w.kernel, f.s3, opts));
            CHECK(w.kernel_in_perp);
        }
    }
    CHECK(saw_s2_witness);

    Representation pp = direct_sum_reps(f.alg, std::vector{f.p2, f.p3});
    auto c3 = is_ext_progenerator(f.cat, pp, f.indecs, opts);
    CHECK(!c3.positive);

    Representation bad = direct_sum_reps(f.alg, std::vector{f.s2, f.s3});
    CHECK_THROWS_AS(is_ext_progenerator(f.cat, bad, f.indecs, opts), NotSelfOrthogonal);
}

TEST_CASE("is_pwt in both modes") {
    L0 f(Field::gf(101));
    Options opts;
    CHECK(is_pwt(f.cat, f.u2, PwtMode::Maximal, f.indecs, opts).positive);
    CHECK(is_pwt(f.cat, f.u2, PwtMode::Direct, f.indecs, opts).positive);

    Representation pp = direct_sum_reps(f.alg, std::vector{f.p2, f.p3});
    auto neg = is_pwt(f.cat, pp, PwtMode::Maximal, f.indecs, opts);
    CHECK(!neg.positive);
    CHECK(neg.module_count == 2);

    Representation nso = direct_sum_reps(f.alg, std::vector{f.s2, f.s3, f.p4});
    CHECK(!is_pwt(f.cat, nso, PwtMode::Maximal, f.indecs, opts).positive);
    CHECK(!is_pwt(f.cat, nso, PwtMode::Direct, f.indecs, opts).positive);
}

TEST_CASE("enumerate_pwt: lambda0 has exactly U1, U2, U3") {
    for (Field k : {Field::gf(2), Field::gf(3), Field::gf(101), Field::rationals()}) {
        CAPTURE(k.name());
        L0 f(k, IndecStrategy::Nakayama);
        Options opts;
        auto pwts = enumerate_pwt(f.cat, f.indecs, opts);
        REQUIRE(pwts.size() == 3);
        int hits = 0;
        for (const auto& u : pwts)
            for (const auto& expected : {f.u1, f.u2, f.u3})
                if (is_isomorphic(f.cat, u, expected, opts)) ++hits;
        CHECK(hits == 3);
    }
}

TEST_CASE("enumerate_pwt: A2 and C3") {
    Options opts;
    {
        auto alg = fixtures::a2(Field::gf(2));
        RepCat cat(alg);
        auto indecs = enumerate_indecomposables(cat, opts);
        auto pwts = enumerate_pwt(cat, indecs, opts);
        REQUIRE(pwts.size() == 2);
        Representation lambda = regular_rep(alg);
        Representation other = direct_sum_reps(alg, std::vector{projective_rep(alg, 0), simple_rep(alg, 0)});
        int hits = 0;
        for (const auto& u : pwts)
            for (const auto& e : {lambda, other})
                if (is_isomorphic(cat, u, e, opts)) ++hits;
        CHECK(hits == 2);
    }
    {
        auto alg = fixtures::c3(Field::gf(2));
        RepCat cat(alg);
        auto indecs = enumerate_indecomposables(cat, opts);
        auto pwts = enumerate_pwt(cat, indecs, opts);
        REQUIRE(pwts.size() == 1);
        CHECK(is_isomorphic(cat, pwts[0], regular_rep(alg), opts));
    }
}

TEST_CASE("enumerate_pwt cross-validates against direct certification") {
    // Standing cross-check: the clique enumeration equals the set of basic
    // candidates passing the direct Ext-progenerator definition.
    for (auto make : {fixtures::lambda0, fixtures::a2, fixtures::c3}) {
        auto alg = make(Field::gf(3));
        RepCat cat(alg);
        Options opts;
        auto indecs = enumerate_indecomposables(cat, opts);
        auto pwts = enumerate_pwt(cat, indecs, opts);
        std::size_t direct_count = 0;
        for (const auto& cand : basic_candidates(alg, indecs))
            if (is_pwt(cat, cand, PwtMode::Direct, indecs, opts).positive) ++direct_count;
        CHECK(direct_count == pwts.size());
    }
}

TEST_CASE("Wakamatsu tilting") {
    L0 f(Field::gf(101));
    Options opts;
    CHECK(is_wakamatsu_tilting(f.cat, regular_rep(f.alg), opts).value);
    CHECK(is_wakamatsu_tilting(f.cat, f.u2, opts).value);
    CHECK(is_wakamatsu_tilting(f.cat, f.u3, opts).value);
    auto neg = is_wakamatsu_tilting(f.cat, direct_sum_reps(f.alg, std::vector{f.s2, f.s3}), opts);
    CHECK(!neg.value);

    auto c3 = fixtures::c3(Field::gf(101));
    RepCat ccat(c3);
    CHECK(is_wakamatsu_tilting(ccat, regular_rep(c3), opts).value);
}

TEST_CASE("tilting certification with explicit coresolutions") {
    L0 f(Field::gf(101));
    Options opts;

    auto t1 = is_tilting(f.cat, regular_rep(f.alg), opts);
    CHECK(t1.positive);
    CHECK(t1.pd == 0);

    auto t2 = is_tilting(f.cat, f.u2, opts);
    CHECK(t2.positive);
    CHECK(t2.pd == 1);

    auto t3 = is_tilting(f.cat, f.u3, opts);
    CHECK(t3.positive);
    CHECK(t3.pd == 2);

    auto neg = is_tilting(f.cat, direct_sum_reps(f.alg, std::vector{f.p2, f.p3}), opts);
    CHECK(!neg.positive);  // no finite coresolution of the regular module

    auto c3alg = fixtures::c3(Field::gf(101));
    RepCat ccat(c3alg);
    Representation s1 = simple_rep(c3alg, 0);
    auto inf = is_tilting(ccat, s1, opts);
    CHECK(!inf.positive);  // infinite projective dimension
}

TEST_CASE("inclusion chain: tilting => PWT => Wakamatsu on every basic candidate") {
    for (auto make : {fixtures::lambda0, fixtures::a2}) {
        auto alg = make(Field::gf(3));
        RepCat cat(alg);
        Options opts;
        auto indecs = enumerate_indecomposables(cat, opts);
        for (const auto& cand : basic_candidates(alg, indecs)) {
            bool tilt = is_tilting(cat, cand, opts).positive;
            bool pwt = is_pwt(cat, cand, PwtMode::Direct, indecs, opts).positive;
            bool waka = is_wakamatsu_tilting(cat, cand, opts).value;
            if (tilt) CHECK(pwt);
            if (pwt) CHECK(waka);
        }
    }
}

TEST_CASE("Lemma-style three-way agreement on representation-finite fixtures") {
    for (auto make : {fixtures::lambda0, fixtures::a2, fixtures::c3}) {
        auto alg = make(Field::gf(2));
        RepCat cat(alg);
        Options opts;
        auto indecs = enumerate_indecomposables(cat, opts);
        auto cliques = enumerate_pwt(cat, indecs, opts);
        std::vector<Representation> direct, waka;
        for (const auto& cand : basic_candidates(alg, indecs)) {
            if (is_pwt(cat, cand, PwtMode::Direct, indecs, opts).positive) direct.push_back(cand);
            if (is_wakamatsu_tilting(cat, cand, opts).value) waka.push_back(cand);
        }
        REQUIRE(cliques.size() == direct.size());
        REQUIRE(cliques.size() == waka.size());
        for (const auto& u : cliques) {
            bool in_direct = false, in_waka = false;
            for (const auto& d : direct)
                if (is_isomorphic(cat, u, d, opts)) in_direct = true;
            for (const auto& w : waka)
                if (is_isomorphic(cat, u, w, opts)) in_waka = true;
            CHECK(in_direct);
            CHECK(in_waka);
        }
    }
}

TEST_CASE("projective-injective indecomposables appear in every PWT module") {
    for (auto make : {fixtures::lambda0, fixtures::a2, fixtures::c3}) {
        auto alg = make(Field::gf(3));
        RepCat cat(alg);
        Options opts;
        auto indecs = enumerate_indecomposables(cat, opts);
        auto pwts = enumerate_pwt(cat, indecs, opts);
        std::vector<Representation> proj_inj;
        for (std::size_t v = 0; v < alg->num_vertices(); ++v) {
            Representation pv = projective_rep(alg, static_cast<int>(v));
            for (std::size_t w = 0; w < alg->num_vertices(); ++w)
                if (is_isomorphic(cat, pv, injective_rep(alg, static_cast<int>(w)), opts)) {
                    proj_inj.push_back(pv);
                    break;
                }
        }
        for (const auto& u : pwts) {
            auto dec = decompose(cat, u, opts);
            for (const auto& pi : proj_inj) {
                bool contained = false;
                for (const auto& s : dec.summands)
                    if (indec_isomorphic(cat, s.object, pi)) contained = true;
                CHECK(contained);
            }
        }
    }
}

TEST_CASE("left mutations over lambda0") {
    L0 f(Field::gf(101));
    Options opts;

    auto m1 = left_mutation(f.cat, f.u1, f.p4, opts);
    REQUIRE(m1.status == MutationStatus::Ok);
    CHECK(is_isomorphic(f.cat, m1.output, f.u2, opts));
    CHECK(is_isomorphic(f.cat, m1.middle, f.p3, opts));
    CHECK(is_isomorphic(f.cat, m1.cokernel, f.s3, opts));
    CHECK(m1.approximation.injective);

    auto m2 = left_mutation(f.cat, f.u2, f.s3, opts);
    REQUIRE(m2.status == MutationStatus::Ok);
    CHECK(is_isomorphic(f.cat, m2.output, f.u3, opts));
    CHECK(is_isomorphic(f.cat, m2.middle, f.p2, opts));
    CHECK(is_isomorphic(f.cat, m2.cokernel, f.s2, opts));

    auto m3 = left_mutation(f.cat, f.u3, f.s2, opts);
    CHECK(m3.status == MutationStatus::UndefinedNotInjective);

    CHECK_THROWS_AS(left_mutation(f.cat, f.u1, f.s2, opts), SummandMissing);
    Representation nonbasic = direct_sum_reps(f.alg, std::vector{f.p2, f.p2, f.p3});
    CHECK_THROWS_AS(left_mutation(f.cat, nonbasic, f.p2, opts), PreconditionError);
}

TEST_CASE("mutation exchange keeps all but one summand") {
    L0 f(Field::gf(101));
    Options opts;
    auto m = left_mutation(f.cat, f.u1, f.p4, opts);
    REQUIRE(m.status == MutationStatus::Ok);
    auto din = decompose(f.cat, f.u1, opts);
    auto dout = decompose(f.cat, m.output, opts);
    int shared = 0;
    for (const auto& a : din.summands)
        for (const auto& b : dout.summands)
            if (indec_isomorphic(f.cat, a.object, b.object)) ++shared;
    CHECK(shared == f.cat.rank() - 1);
    CHECK(!indec_isomorphic(f.cat, m.cokernel, m.chosen));
}

TEST_CASE("mutation graphs") {
    Options opts;
    {
        L0 f(Field::gf(101));
        auto graph = mutation_graph(f.cat, f.indecs, opts);
        REQUIRE(graph.nodes.size() == 3);
        REQUIRE(graph.edges.size() == 2);
        // chain U1 -> U2 -> U3 under the canonical node order
        auto find = [&](const Representation& u) {
            for (std::size_t i = 0; i < graph.nodes.size(); ++i)
                if (is_isomorphic(f.cat, graph.nodes[i], u, opts)) return static_cast<int>(i);
            return -1;
        };
        int i1 = find(f.u1), i2 = find(f.u2), i3 = find(f.u3);
        REQUIRE(i1 >= 0);
        REQUIRE(i2 >= 0);
        REQUIRE(i3 >= 0);
        bool e12 = false, e23 = false;
        for (const auto& e : graph.edges) {
            if (e.from == i1 && e.to == i2) e12 = true;
            if (e.from == i2 && e.to == i3) e23 = true;
        }
        CHECK(e12);
        CHECK(e23);
    }
    {
        auto alg = fixtures::a2(Field::gf(101));
        RepCat cat(alg);
        auto indecs = enumerate_indecomposables(cat, opts);
        auto graph = mutation_graph(cat, indecs, opts);
        CHECK(graph.nodes.size() == 2);
        REQUIRE(graph.edges.size() == 1);
        CHECK(is_isomorphic(cat, graph.nodes[static_cast<std::size_t>(graph.edges[0].from)], regular_rep(alg), opts));
    }
    {
        // one-vertex algebra: a single node, no edges
        Quiver q({"1"}, {});
        auto alg = BoundQuiverAlgebra::build(std::move(q), {}, Field::gf(101));
        RepCat cat(alg);
        auto indecs = enumerate_indecomposables(cat, opts);
        auto graph = mutation_graph(cat, indecs, opts);
        CHECK(graph.nodes.size() == 1);
        CHECK(graph.edges.empty());
    }
}

TEST_CASE("pwt enumeration is independent of the field backend") {
    std::vector<std::size_t> counts;
    for (Field k : {Field::gf(2), Field::gf(3), Field::gf(101), Field::rationals()}) {
        L0 f(k, IndecStrategy::Nakayama);
        Options opts;
        counts.push_back(enumerate_pwt(f.cat, f.indecs, opts).size());
    }
    CHECK(counts == std::vector<std::size_t>{3, 3, 3, 3});
}
