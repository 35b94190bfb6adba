#include "ulrich/catalog.hpp"

#include <algorithm>
#include <unordered_map>

namespace ulrich {

char family_letter(CubicFamily f) {
    switch (f) {
        case CubicFamily::A: return 'A';
        case CubicFamily::B: return 'B';
        case CubicFamily::C: return 'C';
        case CubicFamily::D: return 'D';
        case CubicFamily::E: return 'E';
    }
    return '?';
}

namespace {

std::vector<LineClass> build_lines() {
    std::vector<LineClass> lines;
    lines.reserve(27);
    // E_i = e_i, so D.E_i = b_i
    for (int i = 0; i < 6; ++i) {
        DivisorClass c{0, {}};
        c.b[i] = -1;
        lines.push_back({"E" + std::to_string(i + 1), c});
    }
    // F_ij = l - e_i - e_j
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
            DivisorClass c{1, {}};
            c.b[i] = 1;
            c.b[j] = 1;
            lines.push_back({"F" + std::to_string(i + 1) + std::to_string(j + 1), c});
        }
    // G_i = 2l - sum_{j != i} e_j
    for (int i = 0; i < 6; ++i) {
        DivisorClass c{2, {1, 1, 1, 1, 1, 1}};
        c.b[i] = 0;
        lines.push_back({"G" + std::to_string(i + 1), c});
    }
    return lines;
}

std::string cubic_label(CubicFamily fam, const std::array<int64_t, 6>& b) {
    std::string s(1, family_letter(fam));
    auto slots_of = [&b](int64_t v) {
        std::string t;
        for (int i = 0; i < 6; ++i)
            if (b[i] == v) t += static_cast<char>('1' + i);
        return t;
    };
    switch (fam) {
        case CubicFamily::A:
        case CubicFamily::E:
            break;
        case CubicFamily::B:  // slots of the three 1s
            s += "_" + slots_of(1);
            break;
        case CubicFamily::C:  // slot of the 2, slot of the 0
            s += "_" + slots_of(2) + "." + slots_of(0);
            break;
        case CubicFamily::D:  // slots of the three 2s
            s += "_" + slots_of(2);
            break;
    }
    return s;
}

std::vector<TwistedCubicClass> build_cubics() {
    struct Template {
        CubicFamily fam;
        int64_t a;
        std::array<int64_t, 6> b;  // ascending, for next_permutation
    };
    const Template templates[] = {
        {CubicFamily::A, 1, {0, 0, 0, 0, 0, 0}},
        {CubicFamily::B, 2, {0, 0, 0, 1, 1, 1}},
        {CubicFamily::C, 3, {0, 1, 1, 1, 1, 2}},
        {CubicFamily::D, 4, {1, 1, 1, 2, 2, 2}},
        {CubicFamily::E, 5, {2, 2, 2, 2, 2, 2}},
    };
    std::vector<TwistedCubicClass> cubics;
    cubics.reserve(72);
    for (const auto& t : templates) {
        auto b = t.b;
        do {
            DivisorClass c{t.a, b};
            cubics.push_back({t.fam, cubic_label(t.fam, b), c});
        } while (std::next_permutation(b.begin(), b.end()));
    }
    return cubics;
}

}  // namespace

const std::vector<LineClass>& all_lines() {
    static const std::vector<LineClass> lines = build_lines();
    return lines;
}

const std::vector<TwistedCubicClass>& all_twisted_cubics() {
    static const std::vector<TwistedCubicClass> cubics = build_cubics();
    return cubics;
}

std::optional<int> twisted_cubic_index(const DivisorClass& d) {
    static const auto index = [] {
        std::unordered_map<DivisorClass, int, DivisorClassHash> m;
        const auto& cubics = all_twisted_cubics();
        for (int i = 0; i < static_cast<int>(cubics.size()); ++i) m.emplace(cubics[i].cls, i);
        return m;
    }();
    auto it = index.find(d);
    if (it == index.end()) return std::nullopt;
    return it->second;
}

LineProfile line_profile(const DivisorClass& d) {
    LineProfile p;
    const auto& lines = all_lines();
    for (size_t i = 0; i < lines.size(); ++i) p.values[i] = intersect(d, lines[i].cls);
    p.min = *std::min_element(p.values.begin(), p.values.end());
    p.max = *std::max_element(p.values.begin(), p.values.end());
    return p;
}

CubicProfile cubic_profile(const DivisorClass& d) {
    CubicProfile p;
    const auto& cubics = all_twisted_cubics();
    std::vector<int64_t> vals(cubics.size());
    for (size_t i = 0; i < cubics.size(); ++i) vals[i] = intersect(d, cubics[i].cls);
    p.min = *std::min_element(vals.begin(), vals.end());
    p.max = *std::max_element(vals.begin(), vals.end());
    for (int i = 0; i < static_cast<int>(vals.size()); ++i)
        if (vals[i] == p.min) p.argmins.push_back(i);
    return p;
}

}  // namespace ulrich
