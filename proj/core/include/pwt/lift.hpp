#pragma once

#include "pwt/opext.hpp"
#include "pwt/tilting.hpp"

namespace pwt {

struct ReportCheck {
    std::string name;
    bool pass = false;
    std::string witness;
};

struct LiftMutationReport {
    bool hypothesis_ok = false;
    std::vector<ReportCheck> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

struct BijectionReport {
    int pwt_lambda = 0;
    int pwt_lambda_with_si = 0;
    int rpwt = 0;
    int pwt_gamma = 0;
    std::vector<Representation> lambda_pwts;
    std::vector<Triple> lifted;      // images of the two lifting maps
    std::vector<Triple> gamma_pwts;  // independent enumeration over triples

    // Tilting counts under the finite-pd definition and under pd <= 1.
    int tilt_lambda = 0;
    int tilt_gamma = 0;
    int tilt_lambda_pd1 = 0;
    int tilt_gamma_pd1 = 0;
    bool tilt_counts_equal = false;
    bool tilt_pd1_counts_equal = false;
    bool tilt_preserved_under_lift = false;

    std::vector<ReportCheck> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Complete list of indecomposable triples. The structural strategy covers
// source point extensions (E of each base indecomposable plus P_a and S_a)
// and extensions by zero; brute exhausts base representations, extension
// multiplicities, and compatible structure maps over GF(p).
std::vector<Triple> enumerate_triple_indecomposables(TripleCat& tcat, const Options& opts = {});

// E(U) + P_a for a basic PWT module U with M in U-perp; throws
// HypothesisViolated when the orthogonality assumption fails.
Triple lift_pwt(TripleCat& tcat, const Representation& u, const Options& opts = {});

// E(U') + P_a + S_a for a basic PWT module U = U' + S_i over a source point
// extension by S_i.
Triple lift_pwt_source(TripleCat& tcat, const Representation& u, const Options& opts = {});

// Re-derives the left mutation u -> u_prime over the base algebra and checks
// that lifting commutes with it: the orthogonality hypothesis, the
// surjectivity criterion Hom(E,M) ->> Hom(X,M), minimality of the lifted
// approximation (including that it has no component into P_a), and equality
// of the lifted mutation with the lift of the mutation.
LiftMutationReport verify_lift_mutation(TripleCat& tcat, const Representation& u, const Representation& u_prime,
                                        const Options& opts = {});

// The classification over a source point extension: computes PWT(base),
// RPWT(base, S_i), the two lifting maps and an independent enumeration of
// PWT over triples; checks that lifts are pairwise non-isomorphic and
// exhaustive and that the counting identity holds. Also reports tilting
// counts under both readings of the tilting definition.
BijectionReport bijection_report(TripleCat& tcat, const Options& opts = {});

}  // namespace pwt
