#include "ulrich/weyl.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

namespace ulrich {

DivisorClass apply_slot_permutation(const DivisorClass& d, const std::array<int, 6>& perm) {
    DivisorClass r{d.a, {}};
    for (int s = 0; s < 6; ++s) r.b[s] = d.b[perm[s]];
    return r;
}

DivisorClass cremona(const DivisorClass& d, int i, int j, int k) {
    if (!(1 <= i && i < j && j < k && k <= 6))
        throw std::invalid_argument("cremona: need 1 <= i < j < k <= 6");
    int64_t t = d.a;
    t = checked_sub(t, d.b[i - 1]);
    t = checked_sub(t, d.b[j - 1]);
    t = checked_sub(t, d.b[k - 1]);
    DivisorClass r = d;
    r.a = checked_add(r.a, t);
    r.b[i - 1] = checked_add(r.b[i - 1], t);
    r.b[j - 1] = checked_add(r.b[j - 1], t);
    r.b[k - 1] = checked_add(r.b[k - 1], t);
    return r;
}

DivisorClass apply_move(const DivisorClass& d, const WeylMove& move) {
    if (move.kind == WeylMove::Kind::SortB) return apply_slot_permutation(d, move.perm);
    return cremona(d, move.i + 1, move.j + 1, move.k + 1);
}

bool is_standard_form(const DivisorClass& d) {
    for (int i = 0; i + 1 < 6; ++i)
        if (d.b[i] < d.b[i + 1]) return false;
    return d.a >= checked_add(checked_add(d.b[0], d.b[1]), d.b[2]);
}

namespace {

// stable sort descending, returning the permutation as a SortB move
WeylMove sorting_move(const DivisorClass& d) {
    WeylMove m{WeylMove::Kind::SortB, {}, 0, 0, 0};
    std::iota(m.perm.begin(), m.perm.end(), 0);
    std::stable_sort(m.perm.begin(), m.perm.end(),
                     [&d](int x, int y) { return d.b[x] > d.b[y]; });
    return m;
}

bool sorted_descending(const DivisorClass& d) {
    for (int i = 0; i + 1 < 6; ++i)
        if (d.b[i] < d.b[i + 1]) return false;
    return true;
}

}  // namespace

ReductionTrace to_standard_form(const DivisorClass& d, int iteration_cap) {
    ReductionTrace trace;
    trace.input = d;
    DivisorClass cur = d;
    if (!sorted_descending(cur)) {
        WeylMove m = sorting_move(cur);
        cur = apply_slot_permutation(cur, m.perm);
        trace.moves.push_back(m);
    }
    int iterations = 0;
    while (cur.a < checked_add(checked_add(cur.b[0], cur.b[1]), cur.b[2])) {
        if (++iterations > iteration_cap)
            throw std::logic_error("to_standard_form: iteration cap exceeded");
        WeylMove cm{WeylMove::Kind::Cremona, {}, 0, 1, 2};
        cur = cremona(cur, 1, 2, 3);  // strictly decreases a
        trace.moves.push_back(cm);
        if (!sorted_descending(cur)) {
            WeylMove m = sorting_move(cur);
            cur = apply_slot_permutation(cur, m.perm);
            trace.moves.push_back(m);
        }
    }
    trace.output = cur;
    return trace;
}

std::vector<DivisorClass> weyl_orbit(const DivisorClass& d, size_t size_cap) {
    std::unordered_set<DivisorClass, DivisorClassHash> seen{d};
    std::deque<DivisorClass> queue{d};
    while (!queue.empty()) {
        DivisorClass cur = queue.front();
        queue.pop_front();
        auto visit = [&](const DivisorClass& next) {
            if (seen.insert(next).second) {
                if (seen.size() > size_cap)
                    throw std::runtime_error("weyl_orbit: size cap exceeded");
                queue.push_back(next);
            }
        };
        // all 15 transpositions
        for (int x = 0; x < 6; ++x)
            for (int y = x + 1; y < 6; ++y) {
                if (cur.b[x] == cur.b[y]) continue;
                DivisorClass next = cur;
                std::swap(next.b[x], next.b[y]);
                visit(next);
            }
        // all 20 Cremona moves
        for (int i = 1; i <= 6; ++i)
            for (int j = i + 1; j <= 6; ++j)
                for (int k = j + 1; k <= 6; ++k) visit(cremona(cur, i, j, k));
    }
    std::vector<DivisorClass> orbit(seen.begin(), seen.end());
    std::sort(orbit.begin(), orbit.end());
    return orbit;
}

}  // namespace ulrich
