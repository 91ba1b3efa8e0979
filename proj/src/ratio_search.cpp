#include "domkit/ratio_search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "domkit/circulant_solver.hpp"
#include "domkit/error.hpp"
#include "domkit/periodic_construct.hpp"
#include "domkit/ratio_formula.hpp"

namespace domkit {

unsigned worker_threads() {
    if (const char* env = std::getenv("DOMKIT_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

SearchReport search_ratio(const DifferenceSet& diffs, std::int64_t max_period) {
    if (max_period < 1) throw DomainError("max period must be positive");

    const auto count = static_cast<std::size_t>(max_period);
    std::vector<PeriodResult> results(count, PeriodResult{0, 0, Rational()});
    std::vector<std::vector<std::int64_t>> witnesses(count);

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        try {
            for (auto i = next++; i < count; i = next++) {
                const auto p = static_cast<std::int64_t>(i) + 1;
                auto cert = gamma_exact(reduce_mod(diffs, p));
                results[i] = {p, cert.gamma, Rational(cert.gamma, p)};
                witnesses[i] = std::move(cert.witness);
            }
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    };
    const auto threads = std::min<std::size_t>(worker_threads(), count);
    {
        std::vector<std::jthread> pool;
        for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
        worker();
    }
    if (failure) std::rethrow_exception(failure);

    std::size_t best = 0;
    for (std::size_t i = 1; i < count; ++i)
        if (results[i].ratio < results[best].ratio) best = i;

    std::int64_t a = 0, b = 0;
    for (auto t : diffs.elements()) {
        a = std::max(a, t);
        b = std::max(b, -t);
    }
    const std::int64_t c = a + b;
    std::optional<std::uint64_t> theoretical;
    if (c < 58) theoretical = static_cast<std::uint64_t>(c) << c;

    return SearchReport{results[best].ratio,
                        results[best].period,
                        PeriodicSet(results[best].period, witnesses[best]),
                        std::move(results),
                        max_period,
                        c,
                        theoretical};
}

ConsistencyReport consistency_check(std::int64_t d, std::int64_t s, std::int64_t max_period) {
    const auto built = construct_best(d, s);
    const auto period = built.set.period();
    if (max_period < period) throw DomainError("cap too small");

    const auto diffs = DifferenceSet::family(d, s);
    const auto scan = search_ratio(diffs, max_period);
    const auto& formula = built.ratio.value;

    ConsistencyReport report{d,     s,      max_period, formula, scan.best_ratio, scan.best_period,
                             period, 0,     false,      {},      false};
    for (const auto& row : scan.per_period) {
        if (row.ratio < formula) report.violating_periods.push_back(row.period);
        if (row.period == period) report.gamma_at_construction = row.gamma;
    }
    report.attained_at_construction = Rational(report.gamma_at_construction, period) == formula;
    report.consistent =
        scan.best_ratio == formula && report.violating_periods.empty() && report.attained_at_construction;
    return report;
}

}  // namespace domkit
