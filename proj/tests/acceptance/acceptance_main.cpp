// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "domkit/circulant_solver.hpp"
#include "domkit/periodic_construct.hpp"
#include "domkit/ratio_formula.hpp"
#include "domkit/ratio_search.hpp"

using namespace domkit;

namespace {

bool in_family(std::int64_t d, std::int64_t s) { return !(s >= 0 && s <= d - 2); }
bool modular(std::int64_t d, std::int64_t s) { return ((s + 1) % d + d) % d == 0; }

// Collects the first few mismatches for the report line.
struct Checker {
    int failures = 0;
    std::ostringstream detail;
    void expect(bool ok, const std::string& what) {
        if (ok) return;
        if (failures++ < 3) detail << " [" << what << "]";
    }
};

std::string show(std::int64_t d, std::int64_t s) { return "d=" + std::to_string(d) + ",s=" + std::to_string(s); }

void formula_regression(Checker& c) {
    for (std::int64_t k = 1; k <= 20; ++k) {
        c.expect(domination_ratio(3, 3 * k + 2).value == Rational(1, 3), show(3, 3 * k + 2));
        c.expect(domination_ratio(3, 3 * k + 1).value == Rational(k + 1, 3 * k + 2), show(3, 3 * k + 1));
        c.expect(domination_ratio(3, -3 * k).value == Rational(k + 1, 3 * k + 2), show(3, -3 * k));
        c.expect(domination_ratio(3, 3 * k).value == Rational(2 * k, 6 * k - 1), show(3, 3 * k));
        c.expect(domination_ratio(3, -3 * k + 1).value == Rational(2 * k, 6 * k - 1), show(3, -3 * k + 1));
    }
}

void family_tables(Checker& c) {
    auto check = [&](std::int64_t d, std::int64_t s, Rational want) {
        c.expect(domination_ratio(d, s).value == want, show(d, s));
    };
    for (std::int64_t k = 1; k <= 20; ++k) {
        check(4, 4 * k, Rational(2 * k, 8 * k - 2));
        check(4, -4 * k + 2, Rational(2 * k, 8 * k - 2));
        check(4, 4 * k + 1, Rational(k + 1, 4 * k + 2));
        check(4, -4 * k + 1, Rational(k + 1, 4 * k + 2));
        check(4, 4 * k + 2, Rational(k + 1, 4 * k + 3));
        check(4, -4 * k, Rational(k + 1, 4 * k + 3));

        check(5, 5 * k + 2, Rational(k + 1, 5 * k + 3));
        check(5, -5 * k + 1, Rational(k + 1, 5 * k + 3));
        check(5, 5 * k + 3, Rational(k + 1, 5 * k + 4));
        check(5, -5 * k, Rational(k + 1, 5 * k + 4));
        if (k >= 2) {
            check(5, 5 * k, Rational(2 * k, 10 * k - 3));
            check(5, -5 * k + 3, Rational(2 * k, 10 * k - 3));
            check(5, 5 * k + 1, Rational(k + 1, 5 * k + 2));
            check(5, -5 * k + 2, Rational(k + 1, 5 * k + 2));
        }
    }
    for (std::int64_t s : {-3, -2, 5, 6}) check(5, s, Rational(1, 4));
    check(4, 4, Rational(1, 3));
    check(4, 5, Rational(1, 3));
    check(4, 6, Rational(2, 7));
}

void construction_soundness(Checker& c) {
    for (std::int64_t d = 2; d <= 8; ++d)
        for (std::int64_t s = -40; s <= 40; ++s) {
            if (!in_family(d, s)) continue;
            const auto built = construct_best(d, s);
            c.expect(verify_dominating(built.set, DifferenceSet::family(d, s)), "dominating " + show(d, s));
            c.expect(density(built.set) == domination_ratio(d, s).value, "density " + show(d, s));
            c.expect(check_block_lemma(built.set, d, s), "block lemma " + show(d, s));
        }
}

void solver_vs_oracle(Checker& c) {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<std::int64_t> nn(1, 18), size(1, 4), value(-40, 40);
    for (int trial = 0; trial < 200; ++trial) {
        const auto n = nn(rng);
        std::vector<std::int64_t> values;
        for (auto i = size(rng); i > 0; --i) {
            auto v = value(rng);
            values.push_back(v == 0 ? 1 : v);
        }
        const CirculantInstance inst(n, values);
        c.expect(gamma_exact(inst).gamma == gamma_bruteforce(inst), "random n=" + std::to_string(n));
    }
    for (std::int64_t d = 3; d <= 5; ++d)
        for (std::int64_t s = -12; s <= 12; ++s) {
            if (!in_family(d, s)) continue;
            const auto diffs = DifferenceSet::family(d, s);
            for (std::int64_t p = 1; p <= 18; ++p) {
                const auto inst = reduce_mod(diffs, p);
                c.expect(gamma_exact(inst).gamma == gamma_bruteforce(inst), show(d, s) + ",p=" + std::to_string(p));
            }
        }
}

void circulant_values(Checker& c) {
    auto gamma = [](std::int64_t n, std::vector<std::int64_t> set) { return gamma_exact(CirculantInstance(n, set)).gamma; };
    for (std::int64_t k = 1; k <= 8; ++k) c.expect(gamma(3 * k + 2, {1, 2}) == k + 1, "{1,2} k=" + std::to_string(k));
    for (std::int64_t k = 1; k <= 5; ++k)
        c.expect(gamma(6 * k - 1, {1, 3 * k}) == 2 * k, "{1,3k} k=" + std::to_string(k));
    c.expect(gamma(10, {1, 2, 3}) == 3, "Z_10 {1,2,3}");
    c.expect(gamma(14, {1, 2, 8}) == 4, "Z_14 {1,2,8}");
}

void search_consistency(Checker& c) {
    for (std::int64_t d = 3; d <= 5; ++d)
        for (std::int64_t s = -12; s <= 12; ++s) {
            if (!in_family(d, s)) continue;
            const auto report = consistency_check(d, s, 40);
            c.expect(report.best_ratio == report.formula, "min ratio " + show(d, s));
            c.expect(report.attained_at_construction, "attained " + show(d, s));
            c.expect(report.violating_periods.empty(), "smaller ratio " + show(d, s));
        }
}

void eds_characterization(Checker& c) {
    for (std::int64_t d = 2; d <= 8; ++d)
        for (std::int64_t s = -40; s <= 40; ++s) {
            if (!in_family(d, s)) continue;
            const auto diffs = DifferenceSet::family(d, s);
            const auto built = construct_best(d, s);
            std::vector<std::int64_t> periods{built.set.period()};
            for (std::int64_t p = 1; p <= 2 * d; ++p) periods.push_back(p);

            bool found = false;
            for (auto p : periods) {
                const auto code = perfect_code_exists(reduce_mod(diffs, p));
                if (!code) continue;
                found = true;
                c.expect(verify_efficient(PeriodicSet(p, *code), diffs), "lift not efficient " + show(d, s));
            }
            const bool expected = d == 2 || modular(d, s);
            c.expect(found == expected, "perfect code " + show(d, s));
            c.expect((domination_ratio(d, s).value == Rational(1, d)) == expected, "ratio 1/d " + show(d, s));
            c.expect(eds_exists_family(d, s) == expected, "eds_exists_family " + show(d, s));
        }
}

void property_suite(Checker& c) {
    for (std::int64_t d = 2; d <= 8; ++d)
        for (std::int64_t k = 1; k <= 20; ++k)
            for (std::int64_t e = 1; e <= d - 1; ++e)
                c.expect(domination_ratio(d, d * k + e - 1).value == domination_ratio(d, -d * k + d - e - 1).value,
                         "sign symmetry d=" + std::to_string(d));

    for (std::int64_t d = 2; d <= 12; ++d)
        for (std::int64_t s = -100; s <= 100; ++s) {
            if (!in_family(d, s)) continue;
            const auto v = domination_ratio(d, s).value;
            c.expect(Rational(1, d) <= v && v <= Rational(1, d - 1), "range " + show(d, s));
            if (!modular(d, s)) c.expect(decompose(d, s).reconstruct() == s, "roundtrip " + show(d, s));
        }

    std::mt19937_64 rng(8);
    std::uniform_int_distribution<std::int64_t> value(-10, 10);
    auto random_set = [&](std::size_t size) {
        std::vector<std::int64_t> elems;
        while (elems.size() < size) {
            auto v = value(rng);
            if (v != 0 && std::find(elems.begin(), elems.end(), v) == elems.end()) elems.push_back(v);
        }
        return elems;
    };
    for (int trial = 0; trial < 30; ++trial) {
        auto small = random_set(2);
        auto big = small;
        for (auto v : random_set(2))
            if (std::find(big.begin(), big.end(), v) == big.end()) big.push_back(v);
        std::vector<std::int64_t> neg;
        for (auto v : small) neg.push_back(-v);
        const auto base = search_ratio(DifferenceSet(small), 18).best_ratio;
        c.expect(search_ratio(DifferenceSet(big), 18).best_ratio <= base, "subset monotonicity");
        c.expect(search_ratio(DifferenceSet(neg), 18).best_ratio == base, "negation invariance");
    }

    // Efficient periodic sets have density 1/(|S|+1).
    std::uniform_int_distribution<std::int64_t> period(1, 12);
    int efficient = 0;
    for (int trial = 0; trial < 20000; ++trial) {
        const auto p = period(rng);
        std::vector<std::int64_t> residues;
        for (std::int64_t r = 0; r < p; ++r)
            if (rng() % 3 == 0) residues.push_back(r);
        const DifferenceSet diffs(random_set(1 + rng() % 3));
        const PeriodicSet set(p, residues);
        if (!verify_efficient(set, diffs)) continue;
        ++efficient;
        c.expect(verify_dominating(set, diffs), "efficient implies dominating");
        c.expect(density(set) == Rational(1, static_cast<std::int64_t>(diffs.size()) + 1), "efficient density");
    }
    c.expect(efficient > 0, "no efficient samples drawn");
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        double budget_seconds;
        std::function<void(Checker&)> run;
    };
    const Criterion criteria[] = {
        {"1 formula regression (d=3, k=1..20)", 1, formula_regression},
        {"2 family tables (d=4, d=5)", 1, family_tables},
        {"3 construction soundness (d<=8, |s|<=40)", 30, construction_soundness},
        {"4 solver vs oracle", 60, solver_vs_oracle},
        {"5 circulant domination numbers", 30, circulant_values},
        {"6 search consistency (maxP=40)", 180, search_consistency},
        {"7 efficient dominating set characterization", 60, eds_characterization},
        {"8 property suite", 120, property_suite},
    };

    int failed = 0;
    for (const auto& criterion : criteria) {
        Checker checker;
        const auto start = std::chrono::steady_clock::now();
        try {
            criterion.run(checker);
        } catch (const std::exception& e) {
            checker.expect(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs <= criterion.budget_seconds;
        const bool ok = checker.failures == 0 && in_time;
        if (!ok) ++failed;
        std::printf("[%s] %s  (%.2fs / %.0fs budget)%s%s\n", ok ? "PASS" : "FAIL", criterion.name, secs,
                    criterion.budget_seconds, in_time ? "" : " over budget", checker.detail.str().c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
    return failed == 0 ? 0 : 1;
}
