#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace sqcol {

/// Published upper bounds on chi_2 of planar graphs as functions of Delta.
/// A bound is empty outside the Delta range it was proved for.
struct BoundFormula {
    std::string column;
    /// Counted towards the best prior bound.
    bool prior = true;
    std::optional<long> (*value)(long delta);
};

namespace detail {

constexpr long ceil_div(long a, long b) { return (a + b - 1) / b; }

inline std::optional<long> when(bool ok, long v) { return ok ? std::optional<long>(v) : std::nullopt; }

} // namespace detail

inline const std::vector<BoundFormula>& bound_formulas()
{
    using detail::ceil_div;
    using detail::when;
    static const std::vector<BoundFormula> table = {
        {"wegner_conjecture", false,
         [](long d) -> std::optional<long> { return d <= 3 ? 7 : d <= 7 ? d + 5 : 3 * d / 2 + 1; }},
        {"thomassen", true, [](long d) { return when(d <= 3, 7); }},
        {"jonas", true, [](long d) { return when(d >= 7, 8 * d - 22); }},
        {"wong", true, [](long d) { return when(d >= 7, 3 * d + 5); }},
        {"madaras_marcinova", true, [](long d) { return when(d >= 12, 2 * d + 18); }},
        {"borodin_et_al", true,
         [](long d) -> std::optional<long> { return d <= 20 ? 59 : d <= 46 ? d + 39 : ceil_div(9 * d, 5) + 1; }},
        {"van_den_heuvel_mcguinness_9d", true, [](long d) { return when(d >= 5, 9 * d - 19); }},
        {"van_den_heuvel_mcguinness_2d", true, [](long d) -> std::optional<long> { return 2 * d + 25; }},
        {"agnarsson_halldorsson", true, [](long d) { return when(d >= 749, 9 * d / 5 + 2); }},
        {"molloy_salavatipour_25", true, [](long d) { return when(d >= 241, ceil_div(5 * d, 3) + 25); }},
        {"molloy_salavatipour_78", true, [](long d) -> std::optional<long> { return ceil_div(5 * d, 3) + 78; }},
        {"zhu_bu", true, [](long d) -> std::optional<long> { return d <= 5 ? 20 : 5 * d - 7; }},
        {"greedy", false, [](long d) -> std::optional<long> { return 5 * d + 1; }},
        {"three_delta_plus_4", false, [](long d) -> std::optional<long> { return 3 * d + 4; }},
    };
    return table;
}

struct BoundRow {
    long delta = 0;
    /// One entry per bound_formulas() column.
    std::vector<std::optional<long>> values;
    long best_prior = 0;
    /// Delta + 1, forced by a star.
    long lower = 0;

    long three_delta_plus_4() const { return 3 * delta + 4; }
};

inline BoundRow bound_row(long delta)
{
    BoundRow row;
    row.delta = delta;
    row.lower = delta + 1;
    std::optional<long> best;
    for (const auto& f : bound_formulas()) {
        const auto v = f.value(delta);
        row.values.push_back(v);
        if (f.prior && v)
            best = best ? std::min(*best, *v) : *v;
    }
    row.best_prior = best.value_or(0);
    return row;
}

inline std::vector<BoundRow> bound_table(long lo = 3, long hi = 23)
{
    std::vector<BoundRow> out;
    for (long d = lo; d <= hi; ++d)
        out.push_back(bound_row(d));
    return out;
}

inline std::string bounds_csv(long lo = 3, long hi = 23)
{
    std::ostringstream out;
    out << "delta";
    for (const auto& f : bound_formulas())
        out << ',' << f.column;
    out << ",best_prior,lower_bound\n";
    for (const auto& row : bound_table(lo, hi)) {
        out << row.delta;
        for (const auto& v : row.values) {
            out << ',';
            if (v)
                out << *v;
        }
        out << ',' << row.best_prior << ',' << row.lower << '\n';
    }
    return out.str();
}

} // namespace sqcol
