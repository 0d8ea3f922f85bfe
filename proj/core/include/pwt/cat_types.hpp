#pragma once

#include <cstdint>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace pwt {

template <class Obj, class Mor>
struct SubObject {
    Obj object;
    Mor inclusion;  // object -> ambient
};

template <class Obj, class Mor>
struct QuotObject {
    Obj object;
    Mor projection;  // ambient -> object
};

template <class Obj>
struct Summand {
    Obj object;
    int multiplicity = 1;
    // Dimension over the base field of End/rad for this indecomposable; 1
    // unless the splitting field is strictly larger than the base field.
    int residue_dim = 1;
};

template <class Obj>
struct Decomposition {
    std::vector<Summand<Obj>> summands;

    int total_count() const {
        int n = 0;
        for (const auto& s : summands) n += s.multiplicity;
        return n;
    }
    int distinct_count() const { return static_cast<int>(summands.size()); }
    bool is_basic() const {
        for (const auto& s : summands)
            if (s.multiplicity != 1) return false;
        return true;
    }
    bool is_indecomposable() const { return summands.size() == 1 && summands[0].multiplicity == 1; }
    int max_residue_dim() const {
        int d = 1;
        for (const auto& s : summands) d = std::max(d, s.residue_dim);
        return d;
    }
};

enum class OrbitStatus { TerminatesAtZero, Cycles, CapExceeded };

// Iterated syzygies with projective summands deleted at every step; entries
// hold basic projective-free representatives.
template <class Obj>
struct SyzygyOrbit {
    std::vector<Obj> entries;
    OrbitStatus status = OrbitStatus::CapExceeded;
    int pd = -1;          // projective dimension when terminating
    int cycle_entry = -1;
    int cycle_period = 0;
};

struct ExtVanishCertificate {
    bool vanishes = false;
    enum class Mode { FinitePd, Cycle } mode = Mode::FinitePd;
    // Degrees 1..checked_through were verified; by the orbit structure this
    // covers every positive degree.
    int checked_through = 0;
    int witness_degree = 0;  // smallest degree with nonzero Ext when !vanishes
    int witness_dim = 0;
};

enum class ApproxDirection { Left, Right };

template <class Obj, class Mor>
struct Approximation {
    Mor map;      // left: x -> through; right: through -> x
    Obj through;  // object in add C
    ApproxDirection direction = ApproxDirection::Left;
    bool minimal = false;
    bool injective = false;
    bool surjective = false;
};

// One short exact sequence 0 -> kernel -> middle -> target -> 0 witnessing
// the progenerator property for a single perpendicular object.
template <class Obj, class Mor>
struct ProgeneratorWitness {
    Obj target;
    Obj middle;
    Obj kernel;
    Mor onto;
    bool surjective = false;
    bool kernel_in_perp = false;
};

enum class PwtMode { Maximal, Direct };

template <class Obj, class Mor>
struct PwtCertificate {
    PwtMode mode = PwtMode::Direct;
    bool positive = false;
    std::string reason;  // set on a negative certificate
    ExtVanishCertificate self_orthogonality;
    // Maximal mode bookkeeping.
    int module_count = 0;
    int algebra_rank = 0;
    // Direct mode witnesses, one per perpendicular indecomposable.
    std::vector<ProgeneratorWitness<Obj, Mor>> witnesses;
};

enum class MutationStatus { Ok, UndefinedNotInjective, OutputNotPwt };

template <class Obj, class Mor>
struct MutationResult {
    MutationStatus status = MutationStatus::Ok;
    Obj input;
    Obj chosen;     // the replaced indecomposable summand
    Obj complement; // input with one copy of chosen removed
    Obj middle;     // approximation object E
    Obj cokernel;   // Y
    Obj output;     // complement + Y
    Approximation<Obj, Mor> approximation;
    std::string detail;
};

template <class Obj>
struct MutationEdge {
    int from = 0;
    int to = 0;
    Obj exchanged_out;  // X
    Obj exchanged_in;   // Y
};

template <class Obj>
struct MutationGraph {
    std::vector<Obj> nodes;
    std::vector<MutationEdge<Obj>> edges;
};

template <class Obj, class Mor>
struct ResolutionStep {
    Obj cover;
    Mor cover_map;  // cover -> previous syzygy
    Obj syzygy;     // next syzygy, projective summands removed
    Mor inclusion;  // syzygy -> cover
};

// Per-category memoization; guarded by one mutex since entries are tiny.
template <class Obj, class Mor>
struct CatCaches {
    std::mutex m;
    std::unordered_map<std::uint64_t, Decomposition<Obj>> decompositions;
    std::unordered_map<std::uint64_t, bool> iso_pairs;
    std::unordered_map<std::uint64_t, ExtVanishCertificate> ext_vanishing;
    std::unordered_map<std::uint64_t, std::vector<ResolutionStep<Obj, Mor>>> resolutions;
    std::unordered_map<std::uint64_t, bool> projectivity;
};

}  // namespace pwt
