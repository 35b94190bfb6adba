#pragma once

// Classification core: Ulrich / stable-Ulrich criteria for a first Chern
// class, decomposition into twisted cubics, and the numerical invariants
// (c2, chi, moduli and polystable dimensions, threefold numbers).

#include <optional>
#include <vector>

#include "ulrich/catalog.hpp"
#include "ulrich/lattice.hpp"
#include "ulrich/weyl.hpp"

namespace ulrich {

// r >= 2: degree(D) = 3r and 0 <= D.L <= 2r for all 27 lines.
// r = 1: D is one of the 72 twisted cubic classes.
bool is_ulrich_c1(const DivisorClass& d, int64_t r);

struct PropalgStep {
    TwistedCubicClass cubic;       // T with D.T = a
    DivisorClass reduced;          // D' = D - T, re-sorted to standard form
    int case_id = 0;               // 1..5
    std::array<int, 6> sort_perm;  // reduced.b[i] = (D - T).b[sort_perm[i]]
};

// One step of the twisted-cubic subtraction algorithm. Requires D in
// standard form with degree 3r and 0 <= D.L <= 2r.
PropalgStep propalg_step(const DivisorClass& d, int64_t r);

// r twisted cubic classes summing to standard_form(d); nullopt when the
// class is not an Ulrich first Chern class for rank r.
std::optional<std::vector<TwistedCubicClass>> decompose(const DivisorClass& d, int64_t r);

struct StableResult {
    bool stable = false;
    std::optional<int64_t> mD0;  // m when standard_form(d) = m*D0, m >= 2
};

// D.T >= 2r for all twisted cubics and standard form not a multiple of D0
StableResult stable_exists(const DivisorClass& d, int64_t r);

// D^2 - 2r^2 + 1 (meaningful as a moduli dimension when stable_exists)
int64_t moduli_dim(const DivisorClass& d, int64_t r);

// dimension of the polystable family when Ulrich but not stable
int64_t polystable_dim(const DivisorClass& d, int64_t r);

// (D^2 - r)/2; nullopt flags odd parity
std::optional<int64_t> c2_of(const DivisorClass& d, int64_t r);

struct SurfaceData {
    int64_t d = 3;    // degree
    int64_t p_a = 0;  // arithmetic genus
    DivisorClass canonical = K;
};

inline constexpr SurfaceData cubic_surface{};

// chi(E tensor F dual) for Ulrich bundles of ranks r, s and first Chern
// classes C, D: r*D.K - C.D + r*s*(2d - 1 - p_a)
int64_t chi_pair(int64_t r, const DivisorClass& c, int64_t s, const DivisorClass& d,
                 const SurfaceData& surface = cubic_surface);

// del Pezzo fast path: (d - 1)*r*s - C.D
int64_t chi_pair_del_pezzo(int64_t r, const DivisorClass& c, int64_t s, const DivisorClass& d,
                           int64_t surface_degree = 3);

// r*d*binomial(n + N, N); zero when n + N < N
int64_t hilbert_poly(int64_t r, int64_t d, int64_t big_n, int64_t n);

// true when r*(d - 1) is odd (no Ulrich bundle can exist)
bool parity_obstruction(int64_t r, int64_t d);

struct StabilityInequality {
    std::optional<int64_t> h0_estimate;  // h0(O(D - T)) = (D^2 - 2 D.T + 3r)/2
    std::optional<int64_t> n;            // c2 = (D^2 - r)/2
    bool satisfied = false;              // h0_estimate <= n, i.e. D.T >= 2r
};

StabilityInequality stability_inequality(const DivisorClass& d, int64_t r,
                                         const TwistedCubicClass& t);

struct ThreefoldNumbers {
    int64_t moduli_dim;            // r^2 + 1
    int64_t ext_dim;               // 2(r - 2)
    int64_t extension_family_dim;  // r^2 - 2r + 5
    int64_t h0;                    // 3r
};

ThreefoldNumbers threefold_numbers(int64_t r);

struct UlrichReport {
    DivisorClass input;
    DivisorClass standard;
    int64_t rank = 0;
    bool degree_ok = false;
    int64_t line_min = 0;
    int64_t line_max = 0;
    int64_t cubic_min = 0;
    bool is_ulrich = false;
    std::optional<std::vector<TwistedCubicClass>> decomposition;
    bool stable = false;
    std::optional<int64_t> is_mD0;
    std::optional<int64_t> c2;
    std::optional<int64_t> moduli_dim;
    std::optional<int64_t> polystable_dim;
};

UlrichReport classify(const DivisorClass& d, int64_t r);

}  // namespace ulrich
