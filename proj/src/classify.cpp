#include "ulrich/classify.hpp"

#include <algorithm>
#include <numeric>

namespace ulrich {

bool is_ulrich_c1(const DivisorClass& d, int64_t r) {
    if (r < 1) throw std::invalid_argument("is_ulrich_c1: rank must be >= 1");
    if (r == 1) return twisted_cubic_index(d).has_value();
    if (degree(d) != 3 * r) return false;
    LineProfile p = line_profile(d);
    return p.min >= 0 && p.max <= 2 * r;
}

PropalgStep propalg_step(const DivisorClass& d, int64_t r) {
    if (r < 2) throw std::invalid_argument("propalg_step: rank must be >= 2");
    if (!is_standard_form(d)) throw std::invalid_argument("propalg_step: class not in standard form");
    if (degree(d) != 3 * r) throw std::invalid_argument("propalg_step: degree must be 3r");
    {
        LineProfile p = line_profile(d);
        if (p.min < 0 || p.max > 2 * r)
            throw std::invalid_argument("propalg_step: line bounds 0 <= D.L <= 2r violated");
    }

    const int64_t a = d.a;
    const auto& b = d.b;
    const int64_t s3 = b[0] + b[1] + b[2];

    DivisorClass t{0, {}};
    int case_id = 0;
    if (a > s3) {
        case_id = 1;
        t = DivisorClass{1, {0, 0, 0, 0, 0, 0}};
    } else if (b[1] > b[3] || b[2] > b[4]) {
        case_id = 2;
        t = DivisorClass{2, {1, 1, 1, 0, 0, 0}};
    } else if (b[1] > b[5]) {
        // here b2 = b3 = b4 = b5 > b6
        case_id = 3;
        t = DivisorClass{3, {2, 1, 1, 1, 1, 0}};
    } else if (b[0] > b[1]) {
        // b1 > b2 = ... = b6
        case_id = 4;
        t = DivisorClass{3, {2, 1, 1, 1, 1, 0}};
    } else {
        // all b_i equal and a = 3b, i.e. D = rH
        case_id = 5;
        t = DivisorClass{5, {2, 2, 2, 2, 2, 2}};
    }

    if (intersect(d, t) != a) throw std::logic_error("propalg_step: D.T != a");

    DivisorClass raw = d - t;
    PropalgStep step;
    std::iota(step.sort_perm.begin(), step.sort_perm.end(), 0);
    std::stable_sort(step.sort_perm.begin(), step.sort_perm.end(),
                     [&raw](int x, int y) { return raw.b[x] > raw.b[y]; });
    step.reduced = apply_slot_permutation(raw, step.sort_perm);
    step.case_id = case_id;
    auto idx = twisted_cubic_index(t);
    if (!idx) throw std::logic_error("propalg_step: chosen T not in catalog");
    step.cubic = all_twisted_cubics()[*idx];

    if (!is_standard_form(step.reduced))
        throw std::logic_error("propalg_step: reduced class not in standard form");
    return step;
}

namespace {

// decomposition of a standard-form Ulrich class; cubics sum exactly to d
std::vector<TwistedCubicClass> decompose_standard(const DivisorClass& d, int64_t r) {
    const auto& cubics = all_twisted_cubics();
    if (r == 1) {
        auto idx = twisted_cubic_index(d);
        if (!idx) throw std::logic_error("decompose: rank-1 class not a twisted cubic");
        return {cubics[*idx]};
    }
    if (r == 2) {
        for (size_t i = 0; i < cubics.size(); ++i) {
            auto j = twisted_cubic_index(d - cubics[i].cls);
            if (j && *j >= static_cast<int>(i)) return {cubics[i], cubics[*j]};
        }
        throw std::logic_error("decompose: no rank-2 pair found for Ulrich class");
    }
    PropalgStep step = propalg_step(d, r);
    std::vector<TwistedCubicClass> rest = decompose_standard(step.reduced, r - 1);
    std::vector<TwistedCubicClass> result{step.cubic};
    // undo the sorting permutation so the parts sum to d - T
    for (const auto& c : rest) {
        DivisorClass back{c.cls.a, {}};
        for (int s = 0; s < 6; ++s) back.b[step.sort_perm[s]] = c.cls.b[s];
        auto idx = twisted_cubic_index(back);
        if (!idx) throw std::logic_error("decompose: permuted part left the catalog");
        result.push_back(all_twisted_cubics()[*idx]);
    }
    return result;
}

}  // namespace

std::optional<std::vector<TwistedCubicClass>> decompose(const DivisorClass& d, int64_t r) {
    if (r < 1) throw std::invalid_argument("decompose: rank must be >= 1");
    if (!is_ulrich_c1(d, r)) return std::nullopt;
    DivisorClass std_form = standard_form(d);
    auto parts = decompose_standard(std_form, r);
    DivisorClass sum{0, {}};
    for (const auto& p : parts) sum = sum + p.cls;
    if (sum != std_form) throw std::logic_error("decompose: parts do not sum to standard form");
    return parts;
}

StableResult stable_exists(const DivisorClass& d, int64_t r) {
    if (r < 2) throw std::invalid_argument("stable_exists: rank must be >= 2");
    StableResult result;
    DivisorClass std_form = standard_form(d);
    // only even r can match m*D0: degree forces r = 2m
    if (r % 2 == 0 && r / 2 >= 2 && std_form == (r / 2) * D0) result.mD0 = r / 2;
    if (!is_ulrich_c1(d, r)) return result;
    result.stable = cubic_profile(std_form).min >= 2 * r && !result.mD0;
    return result;
}

int64_t moduli_dim(const DivisorClass& d, int64_t r) {
    return self_intersection(d) - 2 * r * r + 1;
}

int64_t polystable_dim(const DivisorClass& d, int64_t r) {
    if (r < 2) throw std::invalid_argument("polystable_dim: rank must be >= 2");
    if (!is_ulrich_c1(d, r)) throw std::invalid_argument("polystable_dim: class is not Ulrich");
    StableResult s = stable_exists(d, r);
    if (s.stable) throw std::invalid_argument("polystable_dim: stable bundles exist");
    if (s.mD0) return *s.mD0;
    DivisorClass std_form = standard_form(d);
    // a < 2r here; D^2 - 2r^2 + 4r - 2a is a lower bound, attained exactly
    // when the reduced class already carries stable bundles
    int64_t closed = self_intersection(std_form) - 2 * r * r + 4 * r - 2 * std_form.a;
    if (r == 2) return closed;
    PropalgStep step = propalg_step(std_form, r);
    StableResult next = stable_exists(step.reduced, r - 1);
    int64_t value = next.stable ? moduli_dim(step.reduced, r - 1)
                                : polystable_dim(step.reduced, r - 1);
    if (value < closed || (next.stable && value != closed))
        throw std::logic_error("polystable_dim: recursion fell below the closed-form bound");
    return value;
}

std::optional<int64_t> c2_of(const DivisorClass& d, int64_t r) {
    int64_t t = self_intersection(d) - r;
    if (t % 2 != 0) return std::nullopt;
    return t / 2;
}

int64_t chi_pair(int64_t r, const DivisorClass& c, int64_t s, const DivisorClass& d,
                 const SurfaceData& surface) {
    return checked_add(
        checked_sub(checked_mul(r, intersect(d, surface.canonical)), intersect(c, d)),
        checked_mul(checked_mul(r, s), 2 * surface.d - 1 - surface.p_a));
}

int64_t chi_pair_del_pezzo(int64_t r, const DivisorClass& c, int64_t s, const DivisorClass& d,
                           int64_t surface_degree) {
    return checked_sub(checked_mul(surface_degree - 1, checked_mul(r, s)), intersect(c, d));
}

int64_t hilbert_poly(int64_t r, int64_t d, int64_t big_n, int64_t n) {
    if (big_n < 1) throw std::invalid_argument("hilbert_poly: N must be >= 1");
    int64_t m = n + big_n;
    if (m < big_n) return 0;  // binomial(m, N) = 0 for m < N
    int64_t binom = 1;
    for (int64_t i = 1; i <= big_n; ++i)
        binom = checked_mul(binom, m - big_n + i) / i;
    return checked_mul(checked_mul(r, d), binom);
}

bool parity_obstruction(int64_t r, int64_t d) {
    if (d < 3) throw std::invalid_argument("parity_obstruction: d must be >= 3");
    return (r * (d - 1)) % 2 != 0;
}

StabilityInequality stability_inequality(const DivisorClass& d, int64_t r,
                                         const TwistedCubicClass& t) {
    StabilityInequality result;
    int64_t dt = intersect(d, t.cls);
    int64_t num = self_intersection(d) - 2 * dt + 3 * r;
    if (num % 2 == 0) result.h0_estimate = num / 2;
    result.n = c2_of(d, r);
    result.satisfied = dt >= 2 * r;
    return result;
}

ThreefoldNumbers threefold_numbers(int64_t r) {
    if (r < 2) throw std::invalid_argument("threefold_numbers: rank must be >= 2");
    return {r * r + 1, 2 * (r - 2), r * r - 2 * r + 5, 3 * r};
}

UlrichReport classify(const DivisorClass& d, int64_t r) {
    if (r < 1) throw std::invalid_argument("classify: rank must be >= 1");
    UlrichReport rep;
    rep.input = d;
    rep.standard = standard_form(d);
    rep.rank = r;
    rep.degree_ok = degree(d) == 3 * r;
    LineProfile lp = line_profile(rep.standard);
    rep.line_min = lp.min;
    rep.line_max = lp.max;
    rep.cubic_min = cubic_profile(rep.standard).min;
    rep.is_ulrich = is_ulrich_c1(d, r);
    rep.decomposition = decompose(d, r);
    if (r >= 2) {
        StableResult s = stable_exists(d, r);
        rep.stable = s.stable;
        rep.is_mD0 = s.mD0;
    } else {
        rep.stable = rep.is_ulrich;  // rank 1: O(T) is stable
    }
    if (rep.is_ulrich) {
        rep.c2 = c2_of(d, r);
        rep.moduli_dim = moduli_dim(d, r);
        if (!rep.stable && r >= 2) rep.polystable_dim = polystable_dim(d, r);
    }
    return rep;
}

}  // namespace ulrich
