#pragma once

#include "pwt/decompose.hpp"

namespace pwt {

// ---------------------------------------------------------------------------
// Projective resolutions, Ext groups, total-Ext-vanishing certificates, and
// add-C approximations, generic over the category interface.
//
// Resolutions store raw minimal-cover kernels; with minimal covers no
// projective junk accumulates, so nothing needs deleting along the chain.
// The syzygy *orbit* is the certification device: it tracks basic
// projective-free iso classes so that representation-finite inputs either
// terminate or cycle, which makes Ext^{>0} vanishing decidable.
// ---------------------------------------------------------------------------

// h with h o f == g, if any.
template <class Cat>
std::optional<typename Cat::Mor> factor_left(Cat& cat, const typename Cat::Mor& f, const typename Cat::Mor& g) {
    auto basis = cat.hom_basis(f.target(), g.target());
    Matrix cols(cat.field(), cat.flatten_mor(g).rows(), 0);
    for (const auto& h : basis) cols = hcat(cols, cat.flatten_mor(cat.compose(h, f)));
    auto coeffs = solve(cols, cat.flatten_mor(g));
    if (!coeffs) return std::nullopt;
    typename Cat::Mor out = cat.zero_mor(f.target(), g.target());
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (!(*coeffs)(i, 0).is_zero()) out = cat.add(out, cat.scale((*coeffs)(i, 0), basis[i]));
    return out;
}

// h with f o h == g, if any.
template <class Cat>
std::optional<typename Cat::Mor> factor_right(Cat& cat, const typename Cat::Mor& f, const typename Cat::Mor& g) {
    auto basis = cat.hom_basis(g.source(), f.source());
    Matrix cols(cat.field(), cat.flatten_mor(g).rows(), 0);
    for (const auto& h : basis) cols = hcat(cols, cat.flatten_mor(cat.compose(f, h)));
    auto coeffs = solve(cols, cat.flatten_mor(g));
    if (!coeffs) return std::nullopt;
    typename Cat::Mor out = cat.zero_mor(g.source(), f.source());
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (!(*coeffs)(i, 0).is_zero()) out = cat.add(out, cat.scale((*coeffs)(i, 0), basis[i]));
    return out;
}

namespace detail {

// Step `index` of the minimal projective resolution chain of x: the cover of
// the index-th syzygy and its kernel (the 0-th syzygy is x itself). Returns
// a copy; the cached chain may grow concurrently.
template <class Cat>
ResolutionStep<typename Cat::Obj, typename Cat::Mor> resolution_step(Cat& cat, const typename Cat::Obj& x,
                                                                     std::size_t index) {
    std::lock_guard<std::mutex> lk(cat.caches().m);
    auto& chain = cat.caches().resolutions[cat.obj_hash(x)];
    while (chain.size() <= index) {
        const typename Cat::Obj current = chain.empty() ? x : chain.back().syzygy;
        if (cat.is_zero(current) && !chain.empty()) {
            // Stationary zeros once the resolution has ended.
            auto zero = cat.zero_object();
            chain.push_back({zero, cat.zero_mor(zero, current), zero, cat.zero_mor(zero, zero)});
            continue;
        }
        auto [cover, cover_map] = cat.projective_cover(current);
        auto ker = cat.kernel(cover_map);
        chain.push_back({cover, cover_map, ker.object, ker.inclusion});
    }
    return chain[index];
}

}  // namespace detail

// dim Ext^i(x, y), from the minimal projective resolution of x.
template <class Cat>
int ext_dim(Cat& cat, const typename Cat::Obj& x, const typename Cat::Obj& y, int degree,
            const Options& opts = {}) {
    (void)opts;
    if (degree < 0) throw PreconditionError("ext_dim requires degree >= 0");
    if (degree == 0) return static_cast<int>(cat.hom_basis(x, y).size());
    const auto step = detail::resolution_step(cat, x, static_cast<std::size_t>(degree - 1));
    if (cat.is_zero(step.syzygy)) return 0;
    // Ext^i(x,y) = coker( Hom(P_{i-1}, y) -> Hom(Omega^i, y) ), restriction
    // along the inclusion of the syzygy in its cover.
    auto hom_omega = cat.hom_basis(step.syzygy, y);
    if (hom_omega.empty()) return 0;
    auto hom_p = cat.hom_basis(step.cover, y);
    Matrix restricted(cat.field(), cat.flatten_mor(hom_omega[0]).rows(), 0);
    for (const auto& b : hom_p) restricted = hcat(restricted, cat.flatten_mor(cat.compose(b, step.inclusion)));
    return static_cast<int>(hom_omega.size() - rank(restricted));
}

// Basic projective-free part of an object.
template <class Cat>
typename Cat::Obj reduced_part(Cat& cat, const typename Cat::Obj& x, const Options& opts = {}) {
    auto dec = decompose(cat, x, opts);
    std::vector<typename Cat::Obj> keep;
    for (const auto& s : dec.summands)
        if (!is_projective_obj(cat, s.object)) keep.push_back(s.object);
    if (keep.empty()) return cat.zero_object();
    return cat.direct_sum(keep);
}

template <class Cat>
SyzygyOrbit<typename Cat::Obj> syzygy_orbit(Cat& cat, const typename Cat::Obj& x, int cap,
                                            const Options& opts = {}) {
    if (cap < 1) throw PreconditionError("syzygy_orbit requires cap >= 1");
    SyzygyOrbit<typename Cat::Obj> orbit;
    typename Cat::Obj raw = x;
    for (int k = 0; k <= cap; ++k) {
        if (is_projective_obj(cat, raw)) {
            orbit.status = OrbitStatus::TerminatesAtZero;
            orbit.pd = k;
            return orbit;
        }
        typename Cat::Obj reduced = reduced_part(cat, raw, opts);
        for (std::size_t e = 0; e < orbit.entries.size(); ++e) {
            if (is_isomorphic(cat, orbit.entries[e], reduced, opts)) {
                orbit.status = OrbitStatus::Cycles;
                orbit.cycle_entry = static_cast<int>(e);
                orbit.cycle_period = k - static_cast<int>(e);
                return orbit;
            }
        }
        orbit.entries.push_back(reduced);
        auto [cover, cover_map] = cat.projective_cover(reduced);
        raw = cat.kernel(cover_map).object;
    }
    orbit.status = OrbitStatus::CapExceeded;
    return orbit;
}

// Certified decision of Ext^i(x,y) = 0 for every i > 0. Terminating orbits
// check degrees 1..pd; cyclic orbits check Ext^1 against each orbit entry,
// which covers all degrees through Ext^{n+1}(x,y) = Ext^1(Omega^n x, y).
template <class Cat>
ExtVanishCertificate ext_vanishes_all_positive(Cat& cat, const typename Cat::Obj& x,
                                               const typename Cat::Obj& y, const Options& opts = {}) {
    std::uint64_t key = hash_mix(hash_mix(cat.obj_hash(x), cat.obj_hash(y)),
                                 hash_mix(opts.seed, static_cast<std::uint64_t>(opts.syzygy_cap)));
    {
        std::lock_guard<std::mutex> lk(cat.caches().m);
        auto it = cat.caches().ext_vanishing.find(key);
        if (it != cat.caches().ext_vanishing.end()) return it->second;
    }
    auto record = [&](ExtVanishCertificate c) {
        std::lock_guard<std::mutex> lk(cat.caches().m);
        cat.caches().ext_vanishing.emplace(key, c);
        return c;
    };

    auto orbit = syzygy_orbit(cat, x, opts.syzygy_cap, opts);
    ExtVanishCertificate cert;
    if (orbit.status == OrbitStatus::CapExceeded)
        throw CertificationFailed("syzygy orbit exceeded cap " + std::to_string(opts.syzygy_cap) +
                                  "; Ext^{>0} vanishing undecided");
    if (orbit.status == OrbitStatus::TerminatesAtZero) {
        cert.mode = ExtVanishCertificate::Mode::FinitePd;
        cert.checked_through = orbit.pd;
        for (int i = 1; i <= orbit.pd; ++i) {
            int d = ext_dim(cat, x, y, i, opts);
            if (d != 0) {
                cert.vanishes = false;
                cert.witness_degree = i;
                cert.witness_dim = d;
                return record(cert);
            }
        }
        cert.vanishes = true;
        return record(cert);
    }
    cert.mode = ExtVanishCertificate::Mode::Cycle;
    cert.checked_through = orbit.cycle_entry + orbit.cycle_period;
    for (std::size_t n = 0; n < orbit.entries.size(); ++n) {
        int d = ext_dim(cat, orbit.entries[n], y, 1, opts);
        if (d != 0) {
            cert.vanishes = false;
            cert.witness_degree = static_cast<int>(n) + 1;
            cert.witness_dim = d;
            return record(cert);
        }
    }
    cert.vanishes = true;
    return record(cert);
}

namespace detail {

template <class Cat>
struct ApproxCopy {
    typename Cat::Obj part;
    typename Cat::Mor component;  // left: x -> part; right: part -> x
};

// Greedy summand deletion; `still_valid` checks the factoring property of a
// candidate sub-sum. Returns indices of the surviving copies.
template <class Cat, class Rebuild, class StillValid>
std::vector<std::size_t> greedy_minimalize(std::size_t count, Rebuild rebuild, StillValid still_valid) {
    std::vector<std::size_t> alive(count);
    for (std::size_t i = 0; i < count; ++i) alive[i] = i;
    bool deleted = true;
    while (deleted && !alive.empty()) {
        deleted = false;
        for (std::size_t pos = 0; pos < alive.size(); ++pos) {
            std::vector<std::size_t> candidate = alive;
            candidate.erase(candidate.begin() + static_cast<std::ptrdiff_t>(pos));
            auto attempt = rebuild(candidate);
            if (still_valid(attempt)) {
                alive = std::move(candidate);
                deleted = true;
                break;
            }
        }
    }
    return alive;
}

}  // namespace detail

// The tautological right add(t)-approximation of x: evaluation from one copy
// of T_j per basis element of Hom(T_j, x). Hom(t, -) hits Hom(t, x)
// surjectively by construction. Optional greedy minimalization.
template <class Cat>
Approximation<typename Cat::Obj, typename Cat::Mor> right_approximation(Cat& cat, const typename Cat::Obj& t,
                                                                        const typename Cat::Obj& x,
                                                                        const Options& opts = {},
                                                                        bool minimalize = true) {
    using Obj = typename Cat::Obj;
    using Mor = typename Cat::Mor;
    auto dec = decompose(cat, t, opts);
    std::vector<detail::ApproxCopy<Cat>> copies;
    std::vector<Mor> generators;  // every map T_j -> x that must keep factoring
    for (const auto& s : dec.summands) {
        for (auto& g : cat.hom_basis(s.object, x)) {
            copies.push_back({s.object, g});
            generators.push_back(g);
        }
    }
    Approximation<Obj, Mor> out;
    out.direction = ApproxDirection::Right;
    auto build = [&](const std::vector<std::size_t>& idx) -> Mor {
        if (idx.empty()) return cat.zero_mor(cat.zero_object(), x);
        std::vector<Obj> parts;
        std::vector<Mor> comps;
        for (auto i : idx) {
            parts.push_back(copies[i].part);
            comps.push_back(copies[i].component);
        }
        return cat.from_sum(parts, comps);
    };
    std::vector<std::size_t> alive(copies.size());
    for (std::size_t i = 0; i < copies.size(); ++i) alive[i] = i;
    if (minimalize && !copies.empty()) {
        alive = detail::greedy_minimalize<Cat>(
            copies.size(), build, [&](const Mor& f) {
                for (const auto& g : generators)
                    if (!factor_right(cat, f, g)) return false;
                return true;
            });
    }
    Mor f = build(alive);
    out.map = f;
    out.through = f.source();
    out.minimal = minimalize;
    out.injective = cat.is_mono(f);
    out.surjective = cat.is_epi(f);
    return out;
}

// The minimal left add(c)-approximation of x: the universal map into one
// copy of C_j per basis element of Hom(x, C_j), then greedy summand
// deletion. Deleting any surviving copy breaks the factoring property.
template <class Cat>
Approximation<typename Cat::Obj, typename Cat::Mor> minimal_left_approximation(Cat& cat,
                                                                               const typename Cat::Obj& x,
                                                                               const typename Cat::Obj& c,
                                                                               const Options& opts = {}) {
    using Obj = typename Cat::Obj;
    using Mor = typename Cat::Mor;
    auto dec = decompose(cat, c, opts);
    std::vector<detail::ApproxCopy<Cat>> copies;
    std::vector<Mor> generators;
    for (const auto& s : dec.summands) {
        for (auto& g : cat.hom_basis(x, s.object)) {
            copies.push_back({s.object, g});
            generators.push_back(g);
        }
    }
    Approximation<Obj, Mor> out;
    out.direction = ApproxDirection::Left;
    auto build = [&](const std::vector<std::size_t>& idx) -> Mor {
        if (idx.empty()) return cat.zero_mor(x, cat.zero_object());
        std::vector<Obj> parts;
        std::vector<Mor> comps;
        for (auto i : idx) {
            parts.push_back(copies[i].part);
            comps.push_back(copies[i].component);
        }
        return cat.into_sum(parts, comps);
    };
    auto alive = detail::greedy_minimalize<Cat>(
        copies.size(), build, [&](const Mor& f) {
            for (const auto& g : generators)
                if (!factor_left(cat, f, g)) return false;
            return true;
        });
    Mor f = build(alive);
    out.map = f;
    out.through = f.target();
    out.minimal = true;
    out.injective = cat.is_mono(f);
    out.surjective = cat.is_epi(f);
    return out;
}

}  // namespace pwt
