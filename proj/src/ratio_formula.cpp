#include "domkit/ratio_formula.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "domkit/error.hpp"

namespace domkit {

std::string_view case_name(RatioCase c) {
    switch (c) {
        case RatioCase::eds_mod: return "EDS_MOD";
        case RatioCase::e_ge_2: return "CASE_E_GE_2";
        case RatioCase::e_eq_1: return "CASE_E_EQ_1";
        case RatioCase::d_minus_1: return "CASE_D_MINUS_1";
    }
    return "?";
}

namespace {

void check_family(std::int64_t d, std::int64_t s) {
    if (d < 2) throw DomainError("d must be at least 2");
    if (s >= 0 && s <= d - 2) throw DomainError("degenerate S");
}

bool is_modular(std::int64_t d, std::int64_t s) { return mod(s + 1, d) == 0; }

}  // namespace

Decomposition decompose(std::int64_t d, std::int64_t s) {
    check_family(d, s);
    if (is_modular(d, s)) throw DomainError("modular case, no decomposition");
    // s + 1 = dk + e for positive s; d - 1 - s = dk + e for negative s.
    // In both cases e = (that value) mod d is nonzero because s != -1 (mod d).
    Decomposition dec{d, s, Sign::positive, 0, 0};
    std::int64_t base = s + 1;
    if (s < 0) {
        dec.sign = Sign::negative;
        base = d - 1 - s;
    }
    dec.k = base / d;
    dec.e = base % d;
    if (dec.k < 1 || dec.e < 1 || dec.reconstruct() != s)
        throw ConsistencyError("decomposition failed for d=" + std::to_string(d) + ", s=" + std::to_string(s));
    return dec;
}

FormulaTerms formula_terms(const Decomposition& dec) {
    const auto d = dec.d, k = dec.k, e = dec.e;
    return {Rational(k + 1, d * k + e), Rational(2 * k + e - 1, 2 * d * k - d + 2 * e), Rational(1, d - 1)};
}

RatioResult domination_ratio(std::int64_t d, std::int64_t s) {
    check_family(d, s);
    if (is_modular(d, s)) return {Rational(1, d), RatioCase::eds_mod, std::nullopt};

    const auto dec = decompose(d, s);
    const auto terms = formula_terms(dec);
    const Rational value = std::min({terms.short_blocks, terms.long_blocks, terms.uniform});

    RatioCase label = RatioCase::d_minus_1;
    Rational cased = terms.uniform;
    if (dec.e >= 2 && d <= dec.k + dec.e + 1) {
        label = RatioCase::e_ge_2;
        cased = terms.short_blocks;
    } else if (dec.e == 1 && d <= 2 * dec.k + 2) {
        label = RatioCase::e_eq_1;
        cased = terms.long_blocks;
    }
    if (cased != value)
        throw ConsistencyError("case split disagrees with minimum for d=" + std::to_string(d) +
                               ", s=" + std::to_string(s));
    return {value, label, dec};
}

bool eds_exists_family(std::int64_t d, std::int64_t s) {
    check_family(d, s);
    return d == 2 || is_modular(d, s);
}

std::pair<Rational, Rational> general_bounds(const DifferenceSet& set) {
    const auto n = static_cast<std::int64_t>(set.size());
    Rational lower(1, n + 1);
    if (n <= 1) return {lower, lower};
    return {lower, Rational(1, 2)};
}

DifferenceSet normalize(const DifferenceSet& set) {
    std::int64_t g = 0;
    for (auto x : set.elements()) g = std::gcd(g, x);
    std::vector<std::int64_t> scaled;
    for (auto x : set.elements()) scaled.push_back(x / g);

    auto by_abs = scaled;
    std::sort(by_abs.begin(), by_abs.end(), [](std::int64_t a, std::int64_t b) {
        auto aa = a < 0 ? -a : a, bb = b < 0 ? -b : b;
        return aa != bb ? aa < bb : a < b;
    });
    bool negate = false;
    for (auto x : by_abs) {
        if (!std::binary_search(scaled.begin(), scaled.end(), -x)) {
            negate = x < 0;
            break;
        }
    }
    if (negate)
        for (auto& x : scaled) x = -x;
    return DifferenceSet(std::move(scaled));
}

}  // namespace domkit
