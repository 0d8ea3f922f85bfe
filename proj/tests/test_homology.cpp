#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "pwt/homology.hpp"

using namespace pwt;

namespace {

struct L0 {
    AlgebraPtr alg;
    RepCat cat;
    Representation p2, p3, p4, s2, s3;
    std::vector<Representation> indecs;
    explicit L0(const Field& k)
        : alg(fixtures::lambda0(k)),
          cat(alg),
          p2(projective_rep(alg, 0)),
          p3(projective_rep(alg, 1)),
          p4(projective_rep(alg, 2)),
          s2(simple_rep(alg, 0)),
          s3(simple_rep(alg, 1)) {
        indecs = {p2, p3, p4, s2, s3};
    }
};

}  // namespace

TEST_CASE("projective covers over lambda0") {
    L0 f(Field::gf(101));
    Options opts;

    auto [c2, m2] = f.cat.projective_cover(f.s2);
    CHECK(is_isomorphic(f.cat, c2, f.p2, opts));
    CHECK(is_isomorphic(f.cat, f.cat.kernel(m2).object, f.s3, opts));

    auto [c3, m3] = f.cat.projective_cover(f.s3);
    CHECK(is_isomorphic(f.cat, c3, f.p3, opts));
    CHECK(is_isomorphic(f.cat, f.cat.kernel(m3).object, f.p4, opts));

    auto [cp, mp] = f.cat.projective_cover(f.p2);
    CHECK(cp.total_dim() == f.p2.total_dim());
    CHECK(f.cat.kernel(mp).object.is_zero());

    // minimality: the kernel lies inside rad(cover)
    auto ker = f.cat.kernel(m2);
    auto rad = f.cat.radical(c2);
    for (std::size_t v = 0; v < 3; ++v) {
        Matrix kv = ker.inclusion.component(static_cast<int>(v));
        if (kv.cols() == 0) continue;
        CHECK(solve(rad.inclusion.component(static_cast<int>(v)), kv).has_value());
    }
}

TEST_CASE("syzygy orbits") {
    L0 f(Field::gf(101));
    Options opts;

    auto orb = syzygy_orbit(f.cat, f.s2, 16, opts);
    CHECK(orb.status == OrbitStatus::TerminatesAtZero);
    CHECK(orb.pd == 2);
    REQUIRE(orb.entries.size() == 2);
    CHECK(is_isomorphic(f.cat, orb.entries[1], f.s3, opts));

    auto oproj = syzygy_orbit(f.cat, f.p3, 16, opts);
    CHECK(oproj.status == OrbitStatus::TerminatesAtZero);
    CHECK(oproj.pd == 0);

    auto c3 = fixtures::c3(Field::gf(101));
    RepCat ccat(c3);
    auto ocyc = syzygy_orbit(ccat, simple_rep(c3, 0), 16, opts);
    CHECK(ocyc.status == OrbitStatus::Cycles);
    CHECK(ocyc.cycle_entry == 0);
    CHECK(ocyc.cycle_period == 3);

    auto ocap = syzygy_orbit(ccat, simple_rep(c3, 0), 2, opts);
    CHECK(ocap.status == OrbitStatus::CapExceeded);
}

TEST_CASE("ext dimensions over lambda0") {
    for (Field k : {Field::gf(2), Field::gf(101), Field::rationals()}) {
        CAPTURE(k.name());
        L0 f(k);
        Options opts;

        CHECK(ext_dim(f.cat, f.s2, f.s3, 1, opts) == 1);
        CHECK(ext_dim(f.cat, f.s2, f.p4, 2, opts) == 1);
        CHECK(ext_dim(f.cat, f.s3, f.p4, 1, opts) == 1);
        CHECK(ext_dim(f.cat, f.s2, f.s2, 1, opts) == 0);
        CHECK(ext_dim(f.cat, f.s2, f.p2, 1, opts) == 0);
        CHECK(ext_dim(f.cat, f.s3, f.s3, 1, opts) == 0);
        for (const auto& y : f.indecs) {
            CHECK(ext_dim(f.cat, f.p2, y, 1, opts) == 0);
            CHECK(ext_dim(f.cat, f.p2, y, 2, opts) == 0);
        }
        CHECK(ext_dim(f.cat, f.s2, f.s3, 0, opts) == 0);
        CHECK(ext_dim(f.cat, f.s3, f.p2, 0, opts) == 1);
    }
}

TEST_CASE("ext between simples counts arrows and relations") {
    // For a monomial algebra with minimal relations, dim Ext^1(S_u, S_v) is
    // the number of arrows u -> v and dim Ext^2(S_u, S_v) the number of
    // relation paths u -> v.
    for (auto make : {fixtures::lambda0, fixtures::a2, fixtures::c3, fixtures::gamma0}) {
        auto alg = make(Field::gf(101));
        RepCat cat(alg);
        Options opts;
        const Quiver& q = alg->quiver();
        for (std::size_t u = 0; u < q.num_vertices(); ++u) {
            for (std::size_t v = 0; v < q.num_vertices(); ++v) {
                int arrows = 0;
                for (int a : q.arrows_from(static_cast<int>(u)))
                    if (q.arrow_target(a) == static_cast<int>(v)) ++arrows;
                int rels = 0;
                for (const Path& r : alg->relations())
                    if (r.source == static_cast<int>(u) && r.target == static_cast<int>(v)) ++rels;
                Representation su = simple_rep(alg, static_cast<int>(u));
                Representation sv = simple_rep(alg, static_cast<int>(v));
                CHECK(ext_dim(cat, su, sv, 1, opts) == arrows);
                CHECK(ext_dim(cat, su, sv, 2, opts) == rels);
            }
        }
    }
}

TEST_CASE("dimension shift") {
    L0 f(Field::gf(101));
    Options opts;
    for (const auto& x : f.indecs) {
        auto [cover, map] = f.cat.projective_cover(x);
        Representation omega = f.cat.kernel(map).object;
        for (const auto& y : f.indecs)
            for (int i = 1; i <= 4; ++i)
                CHECK(ext_dim(f.cat, x, y, i + 1, opts) == ext_dim(f.cat, omega, y, i, opts));
    }
}

TEST_CASE("Euler form against the Cartan matrix") {
    // Sum (-1)^i dim Ext^i(X,Y) equals dim(X) C^{-1} dim(Y)^t, with
    // C_{vw} = dim (P_v)_w; an independent combinatorial route to the same
    // numbers. gldim lambda0 = 2, so degrees 0..2 suffice.
    for (Field k : {Field::gf(2), Field::gf(101), Field::rationals()}) {
        CAPTURE(k.name());
        L0 f(k);
        Options opts;
        Field qq = Field::rationals();
        Matrix cartan(qq, 3, 3);
        for (int v = 0; v < 3; ++v) {
            Representation pv = projective_rep(f.alg, v);
            for (int w = 0; w < 3; ++w) cartan(static_cast<std::size_t>(v), static_cast<std::size_t>(w)) =
                Scalar::of(qq, pv.dim(w));
        }
        Matrix cinv = *inverse(cartan);
        for (const auto& x : f.indecs) {
            for (const auto& y : f.indecs) {
                long long alt = 0;
                for (int i = 0; i <= 2; ++i) {
                    int d = ext_dim(f.cat, x, y, i, opts);
                    alt += (i % 2 == 0) ? d : -d;
                }
                Matrix dx(qq, 1, 3), dy(qq, 3, 1);
                for (int v = 0; v < 3; ++v) {
                    dx(0, static_cast<std::size_t>(v)) = Scalar::of(qq, x.dim(v));
                    dy(static_cast<std::size_t>(v), 0) = Scalar::of(qq, y.dim(v));
                }
                Matrix pairing = dx * cinv * dy;
                CHECK(pairing(0, 0) == Scalar::of(qq, alt));
            }
        }
    }
}

TEST_CASE("certified total ext vanishing") {
    L0 f(Field::gf(101));
    Options opts;

    Representation u2 = direct_sum_reps(f.alg, std::vector{f.p2, f.p3, f.s3});
    auto upos = ext_vanishes_all_positive(f.cat, u2, u2, opts);
    CHECK(upos.vanishes);
    CHECK(upos.mode == ExtVanishCertificate::Mode::FinitePd);

    Representation ss = direct_sum_reps(f.alg, std::vector{f.s2, f.s3});
    auto uneg = ext_vanishes_all_positive(f.cat, ss, ss, opts);
    CHECK(!uneg.vanishes);
    CHECK(uneg.witness_degree == 1);
    CHECK(uneg.witness_dim == 1);

    auto c3 = fixtures::c3(Field::gf(101));
    RepCat ccat(c3);
    Representation s1 = simple_rep(c3, 0);
    auto cyc = ext_vanishes_all_positive(ccat, s1, s1, opts);
    CHECK(!cyc.vanishes);
    CHECK(cyc.mode == ExtVanishCertificate::Mode::Cycle);
    CHECK(cyc.witness_degree == 3);

    Options tight = opts;
    tight.syzygy_cap = 2;
    CHECK_THROWS_AS(ext_vanishes_all_positive(ccat, s1, s1, tight), CertificationFailed);
}

TEST_CASE("ext vanishing certificates agree with degreewise checks up to 10") {
    Options opts;
    for (auto make : {fixtures::lambda0, fixtures::c3}) {
        auto alg = make(Field::gf(101));
        RepCat cat(alg);
        std::vector<Representation> indecs;
        {
            Options e;
            indecs = enumerate_indecomposables(cat, e);
        }
        for (const auto& x : indecs) {
            for (const auto& y : indecs) {
                bool all_zero = true;
                for (int i = 1; i <= 10; ++i)
                    if (ext_dim(cat, x, y, i, opts) != 0) {
                        all_zero = false;
                        break;
                    }
                CHECK(ext_vanishes_all_positive(cat, x, y, opts).vanishes == all_zero);
            }
        }
    }
}

TEST_CASE("right approximations") {
    L0 f(Field::gf(101));
    Options opts;
    Representation u1 = regular_rep(f.alg);

    auto a = right_approximation(f.cat, u1, f.s3, opts);
    CHECK(a.surjective);
    CHECK(is_isomorphic(f.cat, a.through, f.p3, opts));
    CHECK(is_isomorphic(f.cat, f.cat.kernel(a.map).object, f.p4, opts));

    // an object of add t splits off
    Representation u2 = direct_sum_reps(f.alg, std::vector{f.p2, f.p3, f.s3});
    auto split = right_approximation(f.cat, u2, f.p2, opts);
    CHECK(split.surjective);
    CHECK(is_isomorphic(f.cat, split.through, f.p2, opts));

    auto none = right_approximation(f.cat, u2, f.p4, opts);
    CHECK(!none.surjective);
    CHECK(none.through.is_zero());

    // Hom(t, -) surjectivity onto Hom(t, x): tautological property
    auto taut = right_approximation(f.cat, u2, f.s2, opts, /*minimalize=*/false);
    for (const auto& g : hom_basis(u2, f.s2)) CHECK(factor_right(f.cat, taut.map, g).has_value());
}

TEST_CASE("minimal left approximations") {
    L0 f(Field::gf(101));
    Options opts;
    Representation c = direct_sum_reps(f.alg, std::vector{f.p2, f.p3});

    auto a4 = minimal_left_approximation(f.cat, f.p4, c, opts);
    CHECK(a4.injective);
    CHECK(is_isomorphic(f.cat, a4.through, f.p3, opts));

    auto a3 = minimal_left_approximation(f.cat, f.s3, c, opts);
    CHECK(a3.injective);
    CHECK(is_isomorphic(f.cat, a3.through, f.p2, opts));

    auto none = minimal_left_approximation(f.cat, f.p2, f.p4, opts);
    CHECK(none.through.is_zero());
    CHECK(!none.injective);

    // factoring property over a full hom basis, and minimality: removing the
    // surviving summand breaks factorization
    for (const auto& g : hom_basis(f.p4, f.p2)) CHECK(factor_left(f.cat, a4.map, g).has_value());
    for (const auto& g : hom_basis(f.p4, f.p3)) CHECK(factor_left(f.cat, a4.map, g).has_value());
    Morphism to_zero = Morphism::zero(f.p4, Representation::zero(f.alg));
    bool all_factor = true;
    for (const auto& g : hom_basis(f.p4, f.p3))
        if (!factor_left(f.cat, to_zero, g)) all_factor = false;
    CHECK(!all_factor);
}

TEST_CASE("paper minimality criterion: h f = f forces h invertible") {
    L0 f(Field::gf(5));
    Options opts;
    Representation c = direct_sum_reps(f.alg, std::vector{f.p2, f.p3});
    auto appr = minimal_left_approximation(f.cat, f.s3, c, opts);
    const Representation& e = appr.through;
    // solve h f = f over the endomorphism ring of the target
    for (const auto& h : hom_basis(e, e)) {
        Morphism hf = compose(h, appr.map);
        // check every solution of h f = f among basis combinations: brute
        // force all GF(5) combos of End(e) (End is small here)
    }
    auto endos = hom_basis(e, e);
    REQUIRE(endos.size() <= 2);
    std::vector<int> digits(endos.size(), 0);
    while (true) {
        std::size_t pos = 0;
        while (pos < digits.size() && digits[pos] == 4) digits[pos++] = 0;
        if (pos == digits.size()) break;
        ++digits[pos];
        Morphism h = Morphism::zero(e, e);
        for (std::size_t i = 0; i < endos.size(); ++i)
            if (digits[i]) h = h + Scalar::of(Field::gf(5), digits[i]) * endos[i];
        if (compose(h, appr.map) == appr.map) CHECK(h.is_isomorphism());
    }
}
