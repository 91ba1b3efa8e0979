#include "cli_app.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <functional>
#include <ostream>

#include "domkit/circulant_solver.hpp"
#include "domkit/error.hpp"
#include "domkit/json_io.hpp"
#include "domkit/periodic_construct.hpp"
#include "domkit/ratio_formula.hpp"
#include "domkit/ratio_search.hpp"

namespace domkit::cli {

namespace {

using nlohmann::json;

std::vector<std::int64_t> parse_csv(const std::string& text) {
    std::vector<std::int64_t> out;
    std::size_t pos = 0;
    while (pos <= text.size() && !text.empty()) {
        auto comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        auto field = text.substr(pos, comma - pos);
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
            throw DomainError("malformed integer '" + field + "' in set");
        out.push_back(value);
        pos = comma + 1;
    }
    return out;
}

std::string join(const std::vector<std::int64_t>& values) {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) s += (i ? "," : "") + std::to_string(values[i]);
    return s;
}

struct Family {
    std::string label;
    std::function<std::int64_t(std::int64_t)> s_of_k;
    std::function<Rational(std::int64_t)> stated;
};

std::vector<Family> table_families(const std::string& which) {
    if (which == "d3") {
        auto third = [](std::int64_t) { return Rational(1, 3); };
        auto mid = [](std::int64_t k) { return Rational(k + 1, 3 * k + 2); };
        auto low = [](std::int64_t k) { return Rational(2 * k, 6 * k - 1); };
        return {{"3k+2", [](auto k) { return 3 * k + 2; }, third},
                {"3k+1", [](auto k) { return 3 * k + 1; }, mid},
                {"-3k", [](auto k) { return -3 * k; }, mid},
                {"3k", [](auto k) { return 3 * k; }, low},
                {"-3k+1", [](auto k) { return -3 * k + 1; }, low}};
    }
    if (which == "d4") {
        auto a = [](std::int64_t k) { return Rational(2 * k, 8 * k - 2); };
        auto b = [](std::int64_t k) { return Rational(k + 1, 4 * k + 2); };
        auto c = [](std::int64_t k) { return Rational(k + 1, 4 * k + 3); };
        return {{"4k", [](auto k) { return 4 * k; }, a},        {"-4k+2", [](auto k) { return -4 * k + 2; }, a},
                {"4k+1", [](auto k) { return 4 * k + 1; }, b},  {"-4k+1", [](auto k) { return -4 * k + 1; }, b},
                {"4k+2", [](auto k) { return 4 * k + 2; }, c},  {"-4k", [](auto k) { return -4 * k; }, c}};
    }
    if (which == "d5") {
        // At k = 1 the first two pairs give s in {-3, -2, 5, 6}, all with ratio 1/4.
        auto a = [](std::int64_t k) { return k == 1 ? Rational(1, 4) : Rational(2 * k, 10 * k - 3); };
        auto b = [](std::int64_t k) { return k == 1 ? Rational(1, 4) : Rational(k + 1, 5 * k + 2); };
        auto c = [](std::int64_t k) { return Rational(k + 1, 5 * k + 3); };
        auto e = [](std::int64_t k) { return Rational(k + 1, 5 * k + 4); };
        return {{"5k", [](auto k) { return 5 * k; }, a},        {"-5k+3", [](auto k) { return -5 * k + 3; }, a},
                {"5k+1", [](auto k) { return 5 * k + 1; }, b},  {"-5k+2", [](auto k) { return -5 * k + 2; }, b},
                {"5k+2", [](auto k) { return 5 * k + 2; }, c},  {"-5k+1", [](auto k) { return -5 * k + 1; }, c},
                {"5k+3", [](auto k) { return 5 * k + 3; }, e},  {"-5k", [](auto k) { return -5 * k; }, e}};
    }
    throw DomainError("unknown table '" + which + "' (expected d3, d4, d5 or circulant)");
}

constexpr std::int64_t kTableCheckMaxN = 120;

void ratio_table(std::ostream& out, const std::string& which, std::int64_t d, std::int64_t k_max, bool check) {
    const auto families = table_families(which);
    out << "family\tk\ts\tstated\tratio\tagrees";
    if (check) out << "\tperiod\tgamma\tgamma_agrees";
    out << '\n';
    for (std::int64_t k = 1; k <= k_max; ++k) {
        for (const auto& f : families) {
            const auto s = f.s_of_k(k);
            const auto stated = f.stated(k);
            const auto ratio = domination_ratio(d, s).value;
            out << f.label << '\t' << k << '\t' << s << '\t' << stated << '\t' << ratio << '\t'
                << (stated == ratio ? "yes" : "no");
            if (check) {
                const auto built = construct_best(d, s);
                const auto p = built.set.period();
                out << '\t' << p;
                if (p <= kTableCheckMaxN) {
                    const auto g = gamma_exact(reduce_mod(DifferenceSet::family(d, s), p)).gamma;
                    out << '\t' << g << '\t' << (Rational(g, p) == ratio ? "yes" : "no");
                } else {
                    out << "\t-\t-";
                }
            }
            out << '\n';
        }
    }
}

void circulant_table(std::ostream& out, std::int64_t d_max, std::int64_t k_max, bool check) {
    out << "family\td\tk\te\tn\tset\tpredicted";
    if (check) out << "\tgamma\tagrees";
    out << '\n';
    auto emit = [&](const std::string& family, std::int64_t d, std::int64_t k, std::int64_t e, std::int64_t n,
                    const std::vector<std::int64_t>& set, std::int64_t predicted) {
        out << family << '\t' << d << '\t' << k << '\t' << e << '\t' << n << '\t' << join(set) << '\t' << predicted;
        if (check) {
            if (n <= kTableCheckMaxN) {
                const auto g = gamma_exact(CirculantInstance(n, set)).gamma;
                out << '\t' << g << '\t' << (g == predicted ? "yes" : "no");
            } else {
                out << "\t-\t-";
            }
        }
        out << '\n';
    };
    for (std::int64_t d = 2; d <= d_max; ++d) {
        for (std::int64_t k = 1; k <= k_max; ++k) {
            for (std::int64_t e = 2; e <= d - 1; ++e) {
                if (d > k + e + 1) continue;
                std::vector<std::int64_t> upto, mirrored{-1};
                for (std::int64_t i = 1; i <= d - 1; ++i) upto.push_back(i);
                for (std::int64_t i = 1; i <= d - 2; ++i) mirrored.push_back(i);
                emit("short", d, k, e, d * k + e, upto, k + 1);
                emit("short-mirror", d, k, e, d * k + e, mirrored, k + 1);
            }
            if (d <= 2 * k + 2) {
                std::vector<std::int64_t> set;
                for (std::int64_t i = 1; i <= d - 2; ++i) set.push_back(i);
                set.push_back(d * k);
                emit("long", d, k, 1, 2 * d * k - d + 2, set, 2 * k);
            }
        }
    }
}

void print(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Domination ratios of integer distance digraphs and circulant domination numbers", "domkit"};
    app.require_subcommand(1);

    std::int64_t d = 0, s = 0, n = 0, max_period = 0, k_max = 5, d_max = 5;
    std::string format = "json", set_csv, which;
    bool verify = false, oracle = false, normalize_flag = false, check = false;

    auto* ratio_cmd = app.add_subcommand("ratio", "Closed-form domination ratio of {1,...,d-2,s}");
    ratio_cmd->add_option("--d", d, "Degree parameter (>= 2)")->required();
    ratio_cmd->add_option("--s", s, "Distinguished element, outside [0, d-2]")->required();
    ratio_cmd->add_option("--format", format, "json or plain")->check(CLI::IsMember({"json", "plain"}));

    auto* construct_cmd = app.add_subcommand("construct", "Verified periodic dominating set of minimum density");
    construct_cmd->add_option("--d", d)->required();
    construct_cmd->add_option("--s", s)->required();
    construct_cmd->add_flag("--verify", verify, "Re-run the domination and block-size checks");

    auto* gamma_cmd = app.add_subcommand("gamma", "Exact domination number of Cay(Z_n, set)");
    gamma_cmd->add_option("--n", n)->required();
    gamma_cmd->add_option("--set", set_csv, "Comma-separated connection set (reduced mod n)");
    gamma_cmd->add_flag("--oracle", oracle, "Cross-check with exhaustive search (n <= 24)");

    auto* perfect_cmd = app.add_subcommand("perfect", "Efficient dominating set (perfect code) of Cay(Z_n, set)");
    perfect_cmd->add_option("--n", n)->required();
    perfect_cmd->add_option("--set", set_csv);

    auto* search_cmd = app.add_subcommand("search", "Upper-bound the domination ratio of Cay(Z, set) by scanning periods");
    search_cmd->add_option("--set", set_csv)->required();
    search_cmd->add_option("--max-period", max_period)->required();
    search_cmd->add_flag("--normalize", normalize_flag, "Divide by the gcd and fix the sign first");

    auto* check_cmd = app.add_subcommand("check", "Compare formula, construction and period scan");
    check_cmd->add_option("--d", d)->required();
    check_cmd->add_option("--s", s)->required();
    check_cmd->add_option("--max-period", max_period)->required();

    auto* table_cmd = app.add_subcommand("table", "Print family tables as TSV");
    table_cmd->add_option("--which", which, "d3, d4, d5 or circulant")->required();
    table_cmd->add_option("--k-max", k_max);
    table_cmd->add_option("--d-max", d_max, "Largest d for the circulant table");
    table_cmd->add_flag("--check", check, "Confirm with the exact circulant solver");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (ratio_cmd->parsed()) {
            const auto r = domination_ratio(d, s);
            if (format == "plain")
                out << r.value << '\n';
            else
                print(out, io::encode(r, d, s));
        } else if (construct_cmd->parsed()) {
            const auto built = construct_best(d, s);
            auto j = io::encode(built.set);
            j["d"] = d;
            j["s"] = s;
            j["density"] = io::encode(density(built.set));
            j["case"] = std::string(case_name(built.ratio.case_label));
            j["blocks"] = blocks_of(built.set).sizes();
            if (verify) {
                const bool dominating = verify_dominating(built.set, DifferenceSet::family(d, s));
                const bool lemma = dominating && check_block_lemma(built.set, d, s);
                j["verified"] = dominating;
                j["block_lemma"] = lemma;
                print(out, j);
                if (!dominating || !lemma) {
                    err << "verification failed for (" << d << "," << s << ")\n";
                    return kInternal;
                }
                return kOk;
            }
            print(out, j);
        } else if (gamma_cmd->parsed()) {
            const CirculantInstance inst(n, parse_csv(set_csv));
            const auto cert = gamma_exact(inst);
            auto j = io::encode(cert, inst);
            if (oracle) {
                const auto brute = gamma_bruteforce(inst);
                j["oracle_gamma"] = brute;
                j["oracle_agrees"] = brute == cert.gamma;
                if (brute != cert.gamma) {
                    print(out, j);
                    err << "solver and oracle disagree\n";
                    return kInternal;
                }
            }
            print(out, j);
        } else if (perfect_cmd->parsed()) {
            const CirculantInstance inst(n, parse_csv(set_csv));
            const auto code = perfect_code_exists(inst);
            nlohmann::json j = {{"n", n}, {"connection", inst.connection()}};
            j["perfect_code"] = code ? nlohmann::json(*code) : nlohmann::json(nullptr);
            print(out, j);
        } else if (search_cmd->parsed()) {
            DifferenceSet diffs(parse_csv(set_csv));
            if (normalize_flag) diffs = normalize(diffs);
            print(out, io::encode(search_ratio(diffs, max_period), diffs));
        } else if (check_cmd->parsed()) {
            const auto report = consistency_check(d, s, max_period);
            print(out, io::encode(report));
            if (!report.consistent) {
                err << "inconsistent: formula " << report.formula << ", scan " << report.best_ratio << '\n';
                return kInternal;
            }
        } else if (table_cmd->parsed()) {
            if (k_max < 1) throw DomainError("k-max must be positive");
            if (which == "circulant")
                circulant_table(out, d_max, k_max, check);
            else
                ratio_table(out, which, which == "d3" ? 3 : which == "d4" ? 4 : 5, k_max, check);
        }
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ConsistencyError& e) {
        err << "internal: " << e.what() << '\n';
        return kInternal;
    } catch (const std::exception& e) {
        err << "internal: " << e.what() << '\n';
        return kInternal;
    }
    return kOk;
}

}  // namespace domkit::cli
