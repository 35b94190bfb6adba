#pragma once

// Fixed catalogs: the 27 line classes and the 72 twisted cubic classes of
// the cubic surface, with intersection profiles against them.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ulrich/lattice.hpp"

namespace ulrich {

struct LineClass {
    std::string label;  // E1..E6, F12..F56, G1..G6
    DivisorClass cls;
};

enum class CubicFamily { A, B, C, D, E };

char family_letter(CubicFamily f);

struct TwistedCubicClass {
    CubicFamily family;
    std::string label;  // e.g. "B_456", "C_2.6" (slot of the 2, slot of the 0)
    DivisorClass cls;
};

// 27 entries, fixed order: E1..E6, F12..F56 (lexicographic), G1..G6
const std::vector<LineClass>& all_lines();

// 72 entries, fixed order: A, then each family's permutations in
// ascending lexicographic order of the b-tuple
const std::vector<TwistedCubicClass>& all_twisted_cubics();

// index into all_twisted_cubics() of the entry with this class, if any
std::optional<int> twisted_cubic_index(const DivisorClass& d);

struct LineProfile {
    int64_t min = 0;
    int64_t max = 0;
    std::array<int64_t, 27> values{};  // catalog order
};

struct CubicProfile {
    int64_t min = 0;
    int64_t max = 0;
    std::vector<int> argmins;  // catalog indices attaining min
};

LineProfile line_profile(const DivisorClass& d);
CubicProfile cubic_profile(const DivisorClass& d);

}  // namespace ulrich
