#pragma once

// Independent brute-force cross checks of the classification machinery,
// packaged as certificates suitable for serialization.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ulrich/catalog.hpp"
#include "ulrich/lattice.hpp"

namespace ulrich {

struct VerificationCertificate {
    std::string suite;
    int64_t domain_size = 0;
    bool passed = false;
    std::vector<std::string> counterexamples;  // capped at 10
    int64_t runtime_ms = 0;
    std::vector<std::string> notes;
};

// all multisets of r twisted cubic classes summing to d (exhaustive DFS
// over non-decreasing catalog indices, pruned on residual degree and on
// residual line values staying within [0, 2k])
std::vector<std::vector<TwistedCubicClass>> brute_decompose(const DivisorClass& d, int64_t r);

// the Ulrich criterion agrees with brute-force decomposability for every
// degree-3r standard class, r in [2, max_rank]
VerificationCertificate check_condD(int64_t max_rank = 4);

// the subtraction step preserves its contract on every Ulrich class of
// degree up to max_degree: T.L in [0,2], D.T = a, reduced class standard,
// rank-(r-1) postconditions where the hypotheses hold
VerificationCertificate check_propalg(int64_t max_degree = 21);

// standard forms are unique per orbit: all orbit members of each corpus
// class reduce to the same standard form, which lies in the orbit
VerificationCertificate check_standard_uniqueness(int random_count = 100,
                                                  uint64_t seed = 2026);

// for each m in [2, max_m] and each split 2m = s + t (s, t >= 2), the only
// way to write m*D0 = C + D with stable_exists on both summands is
// m = 2, s = t = 2, C = D = D0
VerificationCertificate check_cor48(int64_t max_m = 4);

// dimension formulas over all Ulrich classes of degree <= max_degree:
// stable implies moduli_dim >= 1; m*D0 has polystable_dim m; otherwise
// polystable_dim equals D^2 - 2r^2 + 4r - 2a and is >= the stable bound
VerificationCertificate check_dimension_claims(int64_t max_degree = 15);

// decompose() output is one of brute_decompose()'s multisets, for every
// Ulrich class of degree <= max_degree
VerificationCertificate check_decompose_agreement(int64_t max_degree = 12);

std::vector<VerificationCertificate> run_all_checks();

}  // namespace ulrich
