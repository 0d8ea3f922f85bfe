#include "pwt/indec_enum.hpp"

#include <atomic>
#include <future>

#include "pwt/decompose.hpp"

namespace pwt {

namespace {

std::vector<std::vector<int>> dim_vectors_within(std::size_t vertices, int bound) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(vertices, 0);
    while (true) {
        std::size_t pos = 0;
        while (pos < vertices && cur[pos] == bound) cur[pos++] = 0;
        if (pos == vertices) break;
        ++cur[pos];
        out.push_back(cur);
    }
    return out;
}

// All indecomposable representations with the given dim vector, by
// exhausting arrow matrices over GF(p).
std::vector<Representation> brute_for_dims(RepCat& cat, const std::vector<int>& dims, const Options& opts,
                                           std::atomic<long long>& budget) {
    const AlgebraPtr& alg = cat.algebra();
    const Quiver& q = alg->quiver();
    const Field& k = alg->field();
    std::int64_t p = k.characteristic();

    struct Slot {
        std::size_t arrow, row, col;
    };
    std::vector<Slot> slots;
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        std::size_t rows = static_cast<std::size_t>(dims[static_cast<std::size_t>(q.arrow_target(static_cast<int>(a)))]);
        std::size_t cols = static_cast<std::size_t>(dims[static_cast<std::size_t>(q.arrow_source(static_cast<int>(a)))]);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) slots.push_back({a, r, c});
    }

    std::vector<Representation> found;
    std::vector<std::int64_t> digits(slots.size(), 0);
    bool first = true;
    while (true) {
        if (!first) {
            std::size_t pos = 0;
            while (pos < digits.size() && digits[pos] == p - 1) digits[pos++] = 0;
            if (pos == digits.size()) break;
            ++digits[pos];
        }
        first = false;
        if (budget.fetch_sub(1) <= 0)
            throw EnumerationBudgetExceeded("brute enumeration exceeded the candidate budget");

        std::vector<Matrix> maps;
        for (std::size_t a = 0; a < q.num_arrows(); ++a) {
            std::size_t rows = static_cast<std::size_t>(dims[static_cast<std::size_t>(q.arrow_target(static_cast<int>(a)))]);
            std::size_t cols = static_cast<std::size_t>(dims[static_cast<std::size_t>(q.arrow_source(static_cast<int>(a)))]);
            maps.emplace_back(k, rows, cols);
        }
        for (std::size_t s = 0; s < slots.size(); ++s)
            if (digits[s] != 0) maps[slots[s].arrow](slots[s].row, slots[s].col) = Scalar::of(k, digits[s]);

        // Relation screen before paying for the full construction.
        bool ok = true;
        for (const Path& rel : alg->relations()) {
            Matrix m = maps[static_cast<std::size_t>(rel.arrows.front())];
            for (std::size_t i = 1; i < rel.arrows.size() && ok; ++i)
                m = maps[static_cast<std::size_t>(rel.arrows[i])] * m;
            if (!m.is_zero()) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;

        Representation candidate(alg, dims, maps);
        auto dec = decompose(cat, candidate, opts);
        if (!dec.is_indecomposable()) continue;
        if (dec.summands[0].residue_dim > 1)
            throw NonSplitResidueField("enumerated indecomposable with residue division ring dimension " +
                                       std::to_string(dec.summands[0].residue_dim));
        bool fresh = true;
        for (const auto& seen : found)
            if (is_isomorphic(cat, seen, candidate, opts)) {
                fresh = false;
                break;
            }
        if (fresh) found.push_back(std::move(candidate));
    }
    return found;
}

std::vector<Representation> enumerate_brute(RepCat& cat, const Options& opts, int bound) {
    if (!cat.field().is_prime())
        throw PreconditionError("brute enumeration requires the GF(p) backend");
    auto dimvecs = dim_vectors_within(cat.algebra()->num_vertices(), bound);
    std::atomic<long long> budget(opts.enumeration_budget);

    std::vector<std::vector<Representation>> per_dimvec(dimvecs.size());
    int threads = std::max(1, opts.threads);
    if (threads == 1) {
        for (std::size_t i = 0; i < dimvecs.size(); ++i) per_dimvec[i] = brute_for_dims(cat, dimvecs[i], opts, budget);
    } else {
        std::atomic<std::size_t> next(0);
        std::vector<std::future<void>> workers;
        for (int t = 0; t < threads; ++t) {
            workers.push_back(std::async(std::launch::async, [&]() {
                while (true) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= dimvecs.size()) return;
                    per_dimvec[i] = brute_for_dims(cat, dimvecs[i], opts, budget);
                }
            }));
        }
        for (auto& w : workers) w.get();
    }

    std::vector<Representation> all;
    for (auto& bucket : per_dimvec)
        for (auto& r : bucket) {
            bool fresh = true;
            for (const auto& seen : all)
                if (is_isomorphic(cat, seen, r, opts)) {
                    fresh = false;
                    break;
                }
            if (fresh) all.push_back(std::move(r));
        }
    return all;
}

std::vector<Representation> enumerate_nakayama(RepCat& cat, const Options& opts) {
    const AlgebraPtr& alg = cat.algebra();
    if (!alg->is_nakayama())
        throw NotNakayama("the nakayama strategy needs <=1 arrow in and out at every vertex");
    std::vector<Representation> out;
    for (std::size_t v = 0; v < alg->num_vertices(); ++v) {
        Representation pv = projective_rep(alg, static_cast<int>(v));
        if (pv.is_zero()) continue;
        // Radical powers as subspaces of P_v, then the interval quotients
        // P_v / rad^k for k = 1..loewy length (the last one is P_v itself).
        std::vector<std::vector<Matrix>> power_spans;
        Representation current = pv;
        Morphism to_ambient = Morphism::identity(pv);
        while (true) {
            auto rad = cat.radical(current);
            if (rad.object.is_zero()) break;
            Morphism incl = compose(to_ambient, rad.inclusion);
            power_spans.push_back(incl.components());
            current = rad.object;
            to_ambient = incl;
        }
        for (std::size_t k = 0; k < power_spans.size(); ++k) {
            auto quot = cat.quotient_by_spans(pv, power_spans[k]);
            out.push_back(quot.object);
        }
        out.push_back(pv);
    }
    std::vector<Representation> dedup;
    for (auto& r : out) {
        bool fresh = true;
        for (const auto& seen : dedup)
            if (is_isomorphic(cat, seen, r, opts)) {
                fresh = false;
                break;
            }
        if (fresh) dedup.push_back(std::move(r));
    }
    return dedup;
}

void sort_reps(RepCat& cat, std::vector<Representation>& reps) {
    std::vector<Summand<Representation>> order;
    for (auto& r : reps) order.push_back(Summand<Representation>{r, 1, 1});
    detail::sort_canonical(cat, order);
    reps.clear();
    for (auto& s : order) reps.push_back(std::move(s.object));
}

}  // namespace

std::vector<Representation> enumerate_indecomposables(RepCat& cat, const Options& opts) {
    IndecStrategy strategy = opts.indec_strategy;
    if (strategy == IndecStrategy::Auto)
        strategy = cat.algebra()->is_nakayama() ? IndecStrategy::Nakayama : IndecStrategy::Brute;

    std::vector<Representation> result;
    if (strategy == IndecStrategy::Nakayama) {
        result = enumerate_nakayama(cat, opts);
    } else {
        result = enumerate_brute(cat, opts, opts.dim_bound);
        if (opts.check_stability) {
            auto wider = enumerate_brute(cat, opts, opts.dim_bound + 1);
            if (wider.size() != result.size())
                throw NotRepresentationFiniteWithinBounds(
                    "indecomposable list unstable: " + std::to_string(result.size()) + " classes at bound " +
                    std::to_string(opts.dim_bound) + " but " + std::to_string(wider.size()) + " at bound " +
                    std::to_string(opts.dim_bound + 1));
        }
    }
    sort_reps(cat, result);
    return result;
}

}  // namespace pwt
