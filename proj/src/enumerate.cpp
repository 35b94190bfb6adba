#include "ulrich/enumerate.hpp"

#include <algorithm>
#include <map>

namespace ulrich {

namespace {

void gen_b(DivisorClass& cur, int slot, int64_t remaining, int64_t bound,
           const EnumFilter& filter, std::vector<DivisorClass>& out) {
    if (slot == 6) {
        if (remaining != 0) return;
        if (cur.a < cur.b[0] + cur.b[1] + cur.b[2]) return;
        if (filter.require_D2_positive && self_intersection(cur) <= 0) return;
        if (filter.line_max_bound || filter.line_min_bound) {
            LineProfile p = line_profile(cur);
            if (filter.line_max_bound && p.max > *filter.line_max_bound) return;
            if (filter.line_min_bound && p.min < *filter.line_min_bound) return;
        }
        out.push_back(cur);
        return;
    }
    for (int64_t v = std::min(bound, remaining); v >= 0; --v) {
        cur.b[slot] = v;
        gen_b(cur, slot + 1, remaining - v, v, filter, out);
    }
    cur.b[slot] = 0;
}

}  // namespace

std::vector<DivisorClass> standard_classes(const EnumFilter& filter) {
    if (filter.degree < 1) throw std::invalid_argument("standard_classes: degree must be >= 1");
    if (!filter.require_b6_nonneg)
        throw std::invalid_argument("standard_classes: only the b6 >= 0 regime is supported");
    std::vector<DivisorClass> out;
    // sum b = 3a - degree >= 0, and sum b <= 2a under the standard-form
    // inequality with b6 >= 0, so a <= degree
    for (int64_t a = (filter.degree + 2) / 3; a <= filter.degree; ++a) {
        DivisorClass cur{a, {}};
        gen_b(cur, 0, 3 * a - filter.degree, a, filter, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string decomposition_label(const std::vector<TwistedCubicClass>& parts) {
    // per family: distinct permutations in catalog-label order, primed in turn
    std::map<char, std::map<std::string, int>> by_family;
    for (const auto& p : parts) by_family[family_letter(p.family)][p.label] += 1;
    std::string out;
    for (const auto& [letter, perms] : by_family) {
        int primes = 0;
        for (const auto& [label, count] : perms) {
            if (!out.empty()) out += '+';
            if (count > 1) out += std::to_string(count);
            out += letter;
            out.append(primes, '\'');
            ++primes;
        }
    }
    return out;
}

std::vector<TableRow> ulrich_table(int64_t r, bool include_all) {
    if (r < 2) throw std::invalid_argument("ulrich_table: rank must be >= 2");
    EnumFilter filter;
    filter.degree = 3 * r;
    filter.require_D2_positive = true;
    std::vector<DivisorClass> classes = standard_classes(filter);
    if (!include_all && r >= 3) {
        std::erase_if(classes, [r](const DivisorClass& d) {
            LineProfile p = line_profile(d);
            return p.min < 0 || p.max > 2 * r;
        });
    }
    // layout convention: lexicographic, except that at rank 2 the two a=4
    // rows are listed as (4;2,1,1,1,1,0), (4;1,1,1,1,1,1)
    std::sort(classes.begin(), classes.end(), [r](const DivisorClass& x, const DivisorClass& y) {
        if (x.a != y.a) return x.a < y.a;
        if (r == 2 && x.a == 4) return x.b > y.b;
        return x.b < y.b;
    });

    std::vector<TableRow> rows;
    rows.reserve(classes.size());
    for (const auto& cls : classes) {
        TableRow row;
        row.cls = cls;
        row.d2 = self_intersection(cls);
        row.is_ulrich = is_ulrich_c1(cls, r);
        row.dim_formula = moduli_dim(cls, r);
        auto parts = decompose(cls, r);
        if (parts) row.decomposition_label = decomposition_label(*parts);
        if (row.is_ulrich) {
            StableResult s = stable_exists(cls, r);
            row.stable = s.stable;
            if (!s.stable) row.polystable_dim = polystable_dim(cls, r);
        }
        if (r == 2 && parts) {
            const auto& t1 = (*parts)[0];
            const auto& t2 = (*parts)[1];
            int64_t prod = intersect(t1.cls, t2.cls);
            if (t1.cls != t2.cls && prod >= 3) row.simple_ss_dim = prod - 3;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace ulrich
