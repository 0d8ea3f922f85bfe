#pragma once

#include "pwt/rep_category.hpp"
#include "pwt/options.hpp"

namespace pwt {

// Complete list of pairwise non-isomorphic indecomposables with dim-vector
// entries <= opts.dim_bound.
//
// Brute strategy (prime fields only): every arrow-matrix tuple over GF(p)
// for every dim vector within bounds, kept when indecomposable, deduplicated
// up to isomorphism. Exhaustive by construction. With opts.check_stability
// the run is repeated at bound+1 and NotRepresentationFiniteWithinBounds is
// thrown when new classes appear.
//
// Nakayama strategy: valid only when every vertex has at most one incoming
// and one outgoing arrow; returns the interval modules P_v / rad^k P_v.
//
// Auto picks Nakayama when the algebra qualifies, otherwise brute.
std::vector<Representation> enumerate_indecomposables(RepCat& cat, const Options& opts = {});

}  // namespace pwt
