#pragma once

#include "pwt/homology.hpp"

namespace pwt {

struct CertifiedBool {
    bool value = false;
    std::string reason;  // filled on the negative side
};

struct TiltingCertificate {
    bool positive = false;
    std::string reason;
    int pd = -1;                   // projective dimension of the candidate
    int coresolution_length = -1;  // length of the add-T coresolution of the regular module
};

template <class Cat>
ExtVanishCertificate is_self_orthogonal(Cat& cat, const typename Cat::Obj& t, const Options& opts = {}) {
    return ext_vanishes_all_positive(cat, t, t, opts);
}

// Members of the complete indecomposable list lying in t's right
// perpendicular category.
template <class Cat>
std::vector<typename Cat::Obj> perp_category(Cat& cat, const typename Cat::Obj& t,
                                             std::span<const typename Cat::Obj> indecs,
                                             const Options& opts = {}) {
    std::vector<typename Cat::Obj> out;
    for (const auto& x : indecs)
        if (ext_vanishes_all_positive(cat, t, x, opts).vanishes) out.push_back(x);
    return out;
}

namespace detail {

// Shared by is_ext_progenerator and direct-mode is_pwt; assumes t is
// already known self-orthogonal.
template <class Cat>
PwtCertificate<typename Cat::Obj, typename Cat::Mor> progenerator_check(
    Cat& cat, const typename Cat::Obj& t, std::span<const typename Cat::Obj> indecs, const Options& opts) {
    PwtCertificate<typename Cat::Obj, typename Cat::Mor> cert;
    cert.mode = PwtMode::Direct;
    cert.algebra_rank = cat.rank();
    for (const auto& x : perp_category(cat, t, indecs, opts)) {
        auto approx = right_approximation(cat, t, x, opts, /*minimalize=*/true);
        ProgeneratorWitness<typename Cat::Obj, typename Cat::Mor> w{
            x, approx.through, cat.zero_object(), approx.map, approx.surjective, false};
        if (!approx.surjective) {
            cert.positive = false;
            cert.reason = "no surjective add(T)-approximation onto a perpendicular object";
            cert.witnesses.push_back(std::move(w));
            return cert;
        }
        auto ker = cat.kernel(approx.map);
        w.kernel = ker.object;
        w.kernel_in_perp = ext_vanishes_all_positive(cat, t, ker.object, opts).vanishes;
        if (!w.kernel_in_perp) {
            cert.positive = false;
            cert.reason = "approximation kernel escapes the perpendicular category";
            cert.witnesses.push_back(std::move(w));
            return cert;
        }
        cert.witnesses.push_back(std::move(w));
    }
    cert.positive = true;
    return cert;
}

}  // namespace detail

// Direct Ext-progenerator certification. Throws NotSelfOrthogonal when the
// precondition fails; a failing progenerator property yields a negative
// certificate with its witness.
template <class Cat>
PwtCertificate<typename Cat::Obj, typename Cat::Mor> is_ext_progenerator(
    Cat& cat, const typename Cat::Obj& t, std::span<const typename Cat::Obj> indecs, const Options& opts = {}) {
    auto so = is_self_orthogonal(cat, t, opts);
    if (!so.vanishes)
        throw NotSelfOrthogonal("Ext^" + std::to_string(so.witness_degree) + "(T,T) has dimension " +
                                std::to_string(so.witness_dim));
    auto cert = detail::progenerator_check(cat, t, indecs, opts);
    cert.self_orthogonality = so;
    return cert;
}

// Maximal mode checks |T| = |algebra rank| on a basic self-orthogonal
// module (valid over representation-finite algebras); direct mode runs the
// Ext-progenerator definition against the complete indecomposable list.
template <class Cat>
PwtCertificate<typename Cat::Obj, typename Cat::Mor> is_pwt(Cat& cat, const typename Cat::Obj& t, PwtMode mode,
                                                            std::span<const typename Cat::Obj> indecs,
                                                            const Options& opts = {}) {
    using Obj = typename Cat::Obj;
    using Mor = typename Cat::Mor;
    auto dec = decompose(cat, t, opts);
    if (dec.max_residue_dim() > 1)
        throw NonSplitResidueField("a summand has residue division ring of dimension " +
                                   std::to_string(dec.max_residue_dim()) + " over " + cat.field().name());
    Obj basic = basic_part(cat, dec);

    PwtCertificate<Obj, Mor> cert;
    cert.mode = mode;
    cert.algebra_rank = cat.rank();
    cert.module_count = dec.distinct_count();
    auto so = is_self_orthogonal(cat, basic, opts);
    cert.self_orthogonality = so;
    if (!so.vanishes) {
        cert.positive = false;
        cert.reason = "not self-orthogonal: Ext^" + std::to_string(so.witness_degree) + "(T,T) = " +
                      std::to_string(so.witness_dim);
        return cert;
    }
    if (mode == PwtMode::Maximal) {
        cert.positive = cert.module_count == cert.algebra_rank;
        if (!cert.positive)
            cert.reason = "|T| = " + std::to_string(cert.module_count) + " != |algebra| = " +
                          std::to_string(cert.algebra_rank);
        return cert;
    }
    auto direct = detail::progenerator_check(cat, basic, indecs, opts);
    direct.self_orthogonality = so;
    direct.module_count = cert.module_count;
    return direct;
}

// All basic PWT modules, as cliques of size rank() in the orthogonality
// graph on self-orthogonal indecomposables (self-orthogonality of a direct
// sum is exactly pairwise plus diagonal vanishing). Requires the complete
// indecomposable list.
template <class Cat>
std::vector<typename Cat::Obj> enumerate_pwt(Cat& cat, std::span<const typename Cat::Obj> indecs,
                                             const Options& opts = {}) {
    using Obj = typename Cat::Obj;
    std::vector<Obj> so;
    for (const auto& x : indecs)
        if (ext_vanishes_all_positive(cat, x, x, opts).vanishes) so.push_back(x);
    std::vector<Summand<Obj>> order;
    for (auto& x : so) order.push_back(Summand<Obj>{x, 1, 1});
    detail::sort_canonical(cat, order);
    so.clear();
    for (auto& s : order) so.push_back(s.object);

    std::size_t n = so.size();
    std::vector<std::vector<bool>> compatible(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        compatible[i][i] = true;
        for (std::size_t j = i + 1; j < n; ++j) {
            bool ok = ext_vanishes_all_positive(cat, so[i], so[j], opts).vanishes &&
                      ext_vanishes_all_positive(cat, so[j], so[i], opts).vanishes;
            compatible[i][j] = compatible[j][i] = ok;
        }
    }

    std::size_t want = static_cast<std::size_t>(cat.rank());
    std::vector<Obj> result;
    std::vector<std::size_t> chosen;
    auto backtrack = [&](auto&& self, std::size_t next) -> void {
        if (chosen.size() == want) {
            std::vector<Obj> parts;
            for (auto i : chosen) parts.push_back(so[i]);
            result.push_back(cat.direct_sum(parts));
            return;
        }
        if (next >= n || chosen.size() + (n - next) < want) return;
        for (std::size_t i = next; i < n; ++i) {
            bool ok = true;
            for (auto j : chosen)
                if (!compatible[j][i]) {
                    ok = false;
                    break;
                }
            if (ok) {
                chosen.push_back(i);
                self(self, i + 1);
                chosen.pop_back();
            }
        }
    };
    backtrack(backtrack, 0);
    return result;
}

// Wakamatsu tilting: a self-orthogonal module admitting an infinite exact
// add(T)-coresolution of the regular module with Ext-orthogonal images. The
// cokernel sequence must reach zero or revisit an iso class within the cap;
// a revisit certifies the infinite sequence by periodic continuation.
template <class Cat>
CertifiedBool is_wakamatsu_tilting(Cat& cat, const typename Cat::Obj& t, const Options& opts = {}) {
    using Obj = typename Cat::Obj;
    auto so = is_self_orthogonal(cat, t, opts);
    if (!so.vanishes)
        return {false, "not self-orthogonal: Ext^" + std::to_string(so.witness_degree) + "(T,T) = " +
                           std::to_string(so.witness_dim)};
    Obj tb = basic_part(cat, t, opts);
    Obj a = cat.regular_object();
    std::vector<Obj> seen;
    for (int step = 0; step <= opts.syzygy_cap; ++step) {
        if (cat.is_zero(a)) return {true, ""};
        if (step > 0) {
            auto ortho = ext_vanishes_all_positive(cat, a, tb, opts);
            if (!ortho.vanishes)
                return {false, "image orthogonality fails at coresolution step " + std::to_string(step)};
            for (const auto& prev : seen)
                if (is_isomorphic(cat, prev, a, opts)) return {true, ""};
            seen.push_back(a);
        }
        auto approx = minimal_left_approximation(cat, a, tb, opts);
        if (!approx.injective)
            return {false, "left add(T)-approximation not injective at coresolution step " + std::to_string(step)};
        a = cat.cokernel(approx.map).object;
    }
    throw CertificationFailed("Wakamatsu coresolution neither terminated nor cycled within cap " +
                              std::to_string(opts.syzygy_cap));
}

// Tilting: finite projective dimension, self-orthogonal, finite add(T)-
// coresolution of the regular module.
template <class Cat>
TiltingCertificate is_tilting(Cat& cat, const typename Cat::Obj& t, const Options& opts = {}) {
    using Obj = typename Cat::Obj;
    TiltingCertificate cert;
    auto orbit = syzygy_orbit(cat, t, opts.syzygy_cap, opts);
    if (orbit.status == OrbitStatus::CapExceeded)
        throw CertificationFailed("projective dimension undecided within syzygy cap");
    if (orbit.status == OrbitStatus::Cycles) {
        cert.reason = "infinite projective dimension (syzygy orbit cycles)";
        return cert;
    }
    cert.pd = orbit.pd;
    auto so = is_self_orthogonal(cat, t, opts);
    if (!so.vanishes) {
        cert.reason = "not self-orthogonal: Ext^" + std::to_string(so.witness_degree) + "(T,T) = " +
                      std::to_string(so.witness_dim);
        return cert;
    }
    Obj tb = basic_part(cat, t, opts);
    Obj a = cat.regular_object();
    std::vector<Obj> seen;
    for (int step = 0; step <= opts.syzygy_cap; ++step) {
        if (cat.is_zero(a)) {
            cert.positive = true;
            cert.coresolution_length = step;
            return cert;
        }
        for (const auto& prev : seen) {
            if (is_isomorphic(cat, prev, a, opts)) {
                cert.reason = "coresolution cokernels cycle; no finite add(T)-coresolution";
                return cert;
            }
        }
        seen.push_back(a);
        auto approx = minimal_left_approximation(cat, a, tb, opts);
        if (!approx.injective) {
            cert.reason = "left add(T)-approximation not injective at coresolution step " + std::to_string(step);
            return cert;
        }
        a = cat.cokernel(approx.map).object;
    }
    throw CertificationFailed("add(T)-coresolution did not resolve within cap");
}

// Left mutation at an indecomposable summand x of the basic module u: the
// exchange sequence 0 -> x -> E -> Y -> 0 along the minimal left
// approximation of x into the complement.
template <class Cat>
MutationResult<typename Cat::Obj, typename Cat::Mor> left_mutation(Cat& cat, const typename Cat::Obj& u,
                                                                   const typename Cat::Obj& x,
                                                                   const Options& opts = {}) {
    using Obj = typename Cat::Obj;
    using Mor = typename Cat::Mor;
    auto dec = decompose(cat, u, opts);
    if (!dec.is_basic()) throw PreconditionError("left mutation requires a basic module");

    MutationResult<Obj, Mor> res;
    res.input = u;
    res.chosen = x;
    std::vector<Obj> rest;
    bool found = false;
    for (const auto& s : dec.summands) {
        if (!found && indec_isomorphic(cat, s.object, x)) {
            found = true;
            res.chosen = s.object;
            continue;
        }
        rest.push_back(s.object);
    }
    if (!found) throw SummandMissing("the chosen module is not a summand of the input");
    Obj complement = rest.empty() ? cat.zero_object() : cat.direct_sum(rest);
    res.complement = complement;

    auto approx = minimal_left_approximation(cat, res.chosen, complement, opts);
    res.approximation = approx;
    res.middle = approx.through;
    if (!approx.injective) {
        res.status = MutationStatus::UndefinedNotInjective;
        res.detail = "minimal left approximation into the complement is not injective";
        res.cokernel = cat.zero_object();
        res.output = complement;
        return res;
    }
    Obj y = cat.cokernel(approx.map).object;
    auto ydec = decompose(cat, y, opts);
    res.cokernel = y;
    if (!ydec.is_indecomposable()) {
        res.status = MutationStatus::OutputNotPwt;
        res.detail = "exchange cokernel is not indecomposable";
        res.output = complement;
        return res;
    }
    if (indec_isomorphic(cat, y, res.chosen)) {
        res.status = MutationStatus::OutputNotPwt;
        res.detail = "exchange cokernel is isomorphic to the replaced summand";
        res.output = complement;
        return res;
    }
    std::vector<Obj> outparts = rest;
    outparts.push_back(y);
    res.output = cat.direct_sum(outparts);
    // Maximality count and self-orthogonality together certify the output is
    // again PWT over a representation-finite algebra.
    auto so = is_self_orthogonal(cat, res.output, opts);
    auto odec = decompose(cat, res.output, opts);
    if (!so.vanishes || odec.distinct_count() != cat.rank() || !odec.is_basic()) {
        res.status = MutationStatus::OutputNotPwt;
        res.detail = !so.vanishes ? "mutated module is not self-orthogonal" : "mutated module is not maximal basic";
        return res;
    }
    res.status = MutationStatus::Ok;
    return res;
}

// Directed graph of defined left mutations between the enumerated PWT
// modules.
template <class Cat>
MutationGraph<typename Cat::Obj> mutation_graph(Cat& cat, std::span<const typename Cat::Obj> indecs,
                                                const Options& opts = {}) {
    using Obj = typename Cat::Obj;
    MutationGraph<Obj> graph;
    graph.nodes = enumerate_pwt(cat, indecs, opts);
    for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
        auto dec = decompose(cat, graph.nodes[i], opts);
        for (const auto& s : dec.summands) {
            auto res = left_mutation(cat, graph.nodes[i], s.object, opts);
            if (res.status != MutationStatus::Ok) continue;
            bool placed = false;
            for (std::size_t j = 0; j < graph.nodes.size(); ++j) {
                if (is_isomorphic(cat, graph.nodes[j], res.output, opts)) {
                    graph.edges.push_back({static_cast<int>(i), static_cast<int>(j), s.object, res.cokernel});
                    placed = true;
                    break;
                }
            }
            if (!placed) throw InternalError("left mutation left the enumerated PWT set");
        }
    }
    return graph;
}

}  // namespace pwt
