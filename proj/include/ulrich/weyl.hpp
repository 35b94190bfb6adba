#pragma once

// Weyl-group reduction to standard form (b1 >= ... >= b6, a >= b1+b2+b3).
// Moves are permutations of the b-slots and Cremona reflections in the
// roots l - e_i - e_j - e_k; both are lattice isometries fixing K.

#include <array>
#include <vector>

#include "ulrich/lattice.hpp"

namespace ulrich {

struct WeylMove {
    enum class Kind { SortB, Cremona } kind;
    // SortB: output slot i receives input slot perm[i]
    std::array<int, 6> perm{0, 1, 2, 3, 4, 5};
    // Cremona: 0-based slot indices i < j < k
    int i = 0, j = 1, k = 2;
};

// apply: output.b[s] = input.b[perm[s]]
DivisorClass apply_slot_permutation(const DivisorClass& d, const std::array<int, 6>& perm);

DivisorClass apply_move(const DivisorClass& d, const WeylMove& move);

// reflection in l - e_i - e_j - e_k (1-based indices, i < j < k):
// with t = a - b_i - b_j - b_k, adds t to a and to the three slots
DivisorClass cremona(const DivisorClass& d, int i, int j, int k);

bool is_standard_form(const DivisorClass& d);

struct ReductionTrace {
    DivisorClass input;
    std::vector<WeylMove> moves;
    DivisorClass output;
};

ReductionTrace to_standard_form(const DivisorClass& d, int iteration_cap = 10000);

inline DivisorClass standard_form(const DivisorClass& d) { return to_standard_form(d).output; }

// closure of {d} under all slot transpositions and all 20 Cremona moves,
// returned sorted for determinism; orbits have size <= |W(E6)| = 51840
std::vector<DivisorClass> weyl_orbit(const DivisorClass& d, size_t size_cap = 100000);

}  // namespace ulrich
