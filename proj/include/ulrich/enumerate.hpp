#pragma once

// Exhaustive enumeration of standard-form classes of a given degree, and
// regeneration of the rank-r classification tables.

#include <optional>
#include <string>
#include <vector>

#include "ulrich/classify.hpp"
#include "ulrich/lattice.hpp"

namespace ulrich {

struct EnumFilter {
    int64_t degree = 0;
    bool require_b6_nonneg = true;
    bool require_D2_positive = false;
    std::optional<int64_t> line_max_bound;
    std::optional<int64_t> line_min_bound;
};

// all classes with b1 >= ... >= b6 >= 0, a >= b1+b2+b3 and the given
// degree, passing the optional filters; ascending lexicographic order
std::vector<DivisorClass> standard_classes(const EnumFilter& filter);

struct TableRow {
    DivisorClass cls;
    int64_t d2 = 0;
    std::string decomposition_label;  // empty when not decomposable
    bool is_ulrich = false;
    bool stable = false;
    int64_t dim_formula = 0;                  // D^2 - 2r^2 + 1
    std::optional<int64_t> polystable_dim;    // when Ulrich but not stable
    std::optional<int64_t> simple_ss_dim;     // rank 2 only: T1.T2 - 3
};

// degree-3r standard classes with b6 >= 0 and D^2 > 0, classified.
// For r >= 3 only classes with 0 <= D.L <= 2r are listed by default;
// include_all keeps the rest too.
std::vector<TableRow> ulrich_table(int64_t r, bool include_all = false);

// family letters with primes for repeated families, e.g. "2B+B'"
std::string decomposition_label(const std::vector<TwistedCubicClass>& parts);

}  // namespace ulrich
