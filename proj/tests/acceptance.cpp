// Acceptance battery: one pass/fail line per criterion, nonzero exit on
// any failure.  Every expectation is exact integer arithmetic.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "ulrich/classify.hpp"
#include "ulrich/enumerate.hpp"
#include "ulrich/verify.hpp"

using namespace ulrich;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, int64_t budget_ms,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    if (ms > budget_ms) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::to_string(ms) + " ms over budget";
    }
    if (!ok) ++failures;
    std::printf("%s criterion %2d: %s (%lld ms)%s%s\n", ok ? "PASS" : "FAIL", number,
                name.c_str(), static_cast<long long>(ms), detail.empty() ? "" : " -- ",
                detail.c_str());
}

DivisorClass dc(const std::string& text) { return parse_divisor_class(text); }

template <typename T>
bool expect_eq(const T& got, const T& want, const std::string& what, std::string& detail) {
    if (got == want) return true;
    detail += what + " mismatch; ";
    return false;
}

}  // namespace

int main() {
    criterion(1, "catalog counts and characterizations", 1000, [](std::string& detail) {
        bool ok = true;
        ok &= expect_eq(all_lines().size(), size_t{27}, "line count", detail);
        ok &= expect_eq(all_twisted_cubics().size(), size_t{72}, "cubic count", detail);
        std::array<int, 5> fam{};
        for (const auto& t : all_twisted_cubics()) fam[static_cast<int>(t.family)] += 1;
        ok &= expect_eq(fam, std::array<int, 5>{1, 20, 30, 20, 1}, "family sizes", detail);
        // brute-force characterization sets within bounded boxes
        std::set<DivisorClass> line_set, cubic_set;
        for (const auto& l : all_lines()) line_set.insert(l.cls);
        for (const auto& t : all_twisted_cubics()) cubic_set.insert(t.cls);
        std::set<DivisorClass> brute_lines, brute_cubics;
        DivisorClass d{};
        for (d.b[0] = -6; d.b[0] <= 6; ++d.b[0])
            for (d.b[1] = -6; d.b[1] <= 6; ++d.b[1])
                for (d.b[2] = -6; d.b[2] <= 6; ++d.b[2])
                    for (d.b[3] = -6; d.b[3] <= 6; ++d.b[3])
                        for (d.b[4] = -6; d.b[4] <= 6; ++d.b[4])
                            for (d.b[5] = -6; d.b[5] <= 6; ++d.b[5]) {
                                int64_t sum = 0;
                                for (int64_t b : d.b) sum += b;
                                if ((1 + sum) % 3 == 0) {
                                    d.a = (1 + sum) / 3;
                                    if (self_intersection(d) == -1) brute_lines.insert(d);
                                }
                                if ((3 + sum) % 3 == 0) {
                                    d.a = (3 + sum) / 3;
                                    if (self_intersection(d) == 1) brute_cubics.insert(d);
                                }
                            }
        ok &= expect_eq(line_set, brute_lines, "line characterization", detail);
        ok &= expect_eq(cubic_set, brute_cubics, "cubic characterization", detail);
        return ok;
    });

    criterion(2, "rank-2 table regeneration", 5000, [](std::string& detail) {
        auto rows = ulrich_table(2);
        bool ok = expect_eq(rows.size(), size_t{6}, "row count", detail);
        if (!ok) return false;
        std::vector<int64_t> d2, want_d2{4, 6, 4, 8, 10, 12};
        std::vector<bool> ul, want_ul{true, true, false, true, true, true};
        for (const auto& r : rows) {
            d2.push_back(r.d2);
            ul.push_back(r.is_ulrich);
        }
        ok &= expect_eq(d2, want_d2, "D^2 column", detail);
        ok &= expect_eq(ul, want_ul, "Ulrich flags", detail);
        std::vector<std::optional<int64_t>> ss, want_ss{std::nullopt, std::nullopt, std::nullopt,
                                                        0,            1,            2};
        for (const auto& r : rows) ss.push_back(r.simple_ss_dim);
        ok &= expect_eq(ss, want_ss, "ss-simple dims", detail);
        std::vector<std::optional<int64_t>> sd(6), want_sd{std::nullopt, std::nullopt,
                                                           std::nullopt, 1, 3, 5};
        for (size_t i = 0; i < rows.size(); ++i)
            if (rows[i].stable) sd[i] = rows[i].dim_formula;
        ok &= expect_eq(sd, want_sd, "stable dims", detail);
        return ok;
    });

    criterion(3, "rank-3 table regeneration", 10000, [](std::string& detail) {
        auto rows = ulrich_table(3);
        bool ok = expect_eq(rows.size(), size_t{11}, "row count", detail);
        if (!ok) return false;
        std::vector<int64_t> d2, want_d2{9, 13, 19, 17, 15, 21, 19, 19, 25, 23, 27};
        std::vector<int64_t> dim, want_dim{-8, -4, 2, 0, -2, 4, 2, 2, 8, 6, 10};
        for (const auto& r : rows) {
            d2.push_back(r.d2);
            dim.push_back(r.dim_formula);
        }
        ok &= expect_eq(d2, want_d2, "D^2 column", detail);
        ok &= expect_eq(dim, want_dim, "dim column", detail);
        for (size_t i = 0; i < rows.size(); ++i)
            ok &= expect_eq(rows[i].stable, i >= 5, "stable flag row " + std::to_string(i + 1),
                            detail);
        ok &= expect_eq(rows[2].polystable_dim, std::optional<int64_t>{3}, "row 3 polystable",
                        detail);
        ok &= expect_eq(rows[3].polystable_dim, std::optional<int64_t>{1}, "row 4 polystable",
                        detail);
        // each row's decomposition is one of the brute-force multisets
        for (const auto& r : rows) {
            auto parts = decompose(r.cls, 3);
            if (!parts) {
                detail += to_string(r.cls) + " has no decomposition; ";
                ok = false;
                continue;
            }
            std::multiset<DivisorClass> got;
            for (const auto& t : *parts) got.insert(t.cls);
            bool member = false;
            for (const auto& cand : brute_decompose(r.cls, 3)) {
                std::multiset<DivisorClass> c;
                for (const auto& t : cand) c.insert(t.cls);
                if (c == got) member = true;
            }
            if (!member) {
                detail += to_string(r.cls) + " decomposition not brute-force-confirmed; ";
                ok = false;
            }
        }
        return ok;
    });

    criterion(4, "Ulrich criterion vs brute force (r = 2, 3, 4)", 120000, [](std::string& detail) {
        auto cert = check_condD(4);
        if (!cert.passed && !cert.counterexamples.empty()) detail += cert.counterexamples[0];
        return cert.passed;
    });

    criterion(5, "subtraction step postconditions (degrees 6-15)", 60000,
              [](std::string& detail) {
                  auto cert = check_propalg(15);
                  if (!cert.passed && !cert.counterexamples.empty())
                      detail += cert.counterexamples[0];
                  return cert.passed;
              });

    criterion(6, "standard form uniqueness (17 table + 100 random classes)", 120000,
              [](std::string& detail) {
                  auto cert = check_standard_uniqueness(100);
                  if (cert.domain_size != 117) detail += "unexpected corpus size; ";
                  if (!cert.passed && !cert.counterexamples.empty())
                      detail += cert.counterexamples[0];
                  return cert.passed && cert.domain_size == 117;
              });

    criterion(7, "min/max line and cubic values on standard classes", 10000,
              [](std::string& detail) {
                  bool ok = true;
                  for (int64_t deg = 1; deg <= 15; ++deg) {
                      EnumFilter f;
                      f.degree = deg;
                      for (const auto& d : standard_classes(f)) {
                          LineProfile lp = line_profile(d);
                          CubicProfile cp = cubic_profile(d);
                          if (lp.min != d.b[5] || lp.max != deg - d.a + d.b[0] ||
                              cp.min != d.a) {
                              detail += to_string(d) + "; ";
                              ok = false;
                          }
                      }
                  }
                  return ok;
              });

    criterion(8, "splitting multiples of D0 (m <= 4)", 60000, [](std::string& detail) {
        auto cert = check_cor48(4);
        bool one = false;
        for (const auto& n : cert.notes) one |= n == "stable splittings found: 1";
        if (!one) detail += "expected exactly one splitting; ";
        if (!cert.passed && !cert.counterexamples.empty()) detail += cert.counterexamples[0];
        return cert.passed && one;
    });

    criterion(9, "moduli dimension of rH series", 1000, [](std::string& detail) {
        bool ok = true;
        for (int64_t r = 2; r <= 10; ++r)
            ok &= expect_eq(moduli_dim(r * H, r), r * r + 1, "r = " + std::to_string(r), detail);
        return ok;
    });

    criterion(10, "cubic threefold dimension counts", 1000, [](std::string& detail) {
        bool ok = expect_eq(threefold_numbers(2).moduli_dim, int64_t{5}, "rank-2 moduli", detail);
        for (int64_t r = 2; r <= 8; ++r) {
            ThreefoldNumbers n = threefold_numbers(r);
            ok &= expect_eq(n.moduli_dim, r * r + 1, "moduli", detail);
            ok &= expect_eq(n.ext_dim, 2 * (r - 2), "ext", detail);
            ok &= expect_eq(n.extension_family_dim, r * r - 2 * r + 5, "extension family",
                            detail);
            if (r >= 4 && n.extension_family_dim >= n.moduli_dim) {
                detail += "extension family not smaller at r = " + std::to_string(r) + "; ";
                ok = false;
            }
        }
        return ok;
    });

    criterion(11, "chi consistency and ext dimensions", 5000, [](std::string& detail) {
        bool ok = true;
        // both chi paths agree on every ordered pair of table classes
        std::vector<std::pair<int64_t, DivisorClass>> pool;
        for (int64_t r : {2, 3})
            for (const auto& row : ulrich_table(r)) pool.emplace_back(r, row.cls);
        for (const auto& [r, c] : pool)
            for (const auto& [s, d] : pool)
                if (chi_pair(r, c, s, d) != chi_pair_del_pezzo(r, c, s, d)) {
                    detail += "chi paths disagree on " + to_string(c) + " x " + to_string(d) + "; ";
                    ok = false;
                }
        // Ext^1 between the two summands of each stable rank-2 class: 1, 2, 3
        std::vector<int64_t> ext, want_ext{1, 2, 3};
        for (const auto& text : {"4;2,1,1,1,1,0", "4;1,1,1,1,1,1", "6;2,2,2,2,2,2"}) {
            auto parts = decompose(dc(text), 2);
            if (!parts || parts->size() != 2) {
                detail += std::string(text) + " did not split; ";
                return false;
            }
            ext.push_back(-chi_pair(1, (*parts)[0].cls, 1, (*parts)[1].cls));
        }
        ok &= expect_eq(ext, want_ext, "ext dims", detail);
        return ok;
    });

    if (failures == 0) {
        std::printf("all 11 acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criteria FAILED\n", failures);
    return 1;
}
