#include "bellkit/chsh.hpp"

#include "bellkit/error.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace bellkit {

namespace {

void require_binary(const CondFamily& cond, const char* op) {
    if (cond.alphabet() != Alphabet::binary) {
        throw Error(Errc::alphabet_violation,
                    std::string(op) + " requires the binary alphabet");
    }
}

}  // namespace

ChshReport chsh_from_correlations(const std::array<Rat, 4>& correlations) {
    ChshReport report;
    report.correlations = correlations;
    Rat sum = 0;
    for (const Rat& e : correlations) sum += e;
    report.s_max = 0;
    for (int k = 0; k < 4; ++k) {
        report.s_values[k] = sum - 2 * correlations[k];
        const Rat magnitude = abs(report.s_values[k]);
        if (magnitude > report.s_max) report.s_max = magnitude;
    }
    return report;
}

ChshReport chsh(const CondFamily& cond) {
    require_binary(cond, "chsh");
    return chsh_from_correlations(cond.correlations());
}

NoSignallingReport no_signalling(const CondFamily& cond) {
    require_binary(cond, "no_signalling");
    NoSignallingReport report;
    report.max_delta = 0;
    for (int a = 1; a <= 2; ++a) {
        for (int x : outcome_values(Alphabet::binary)) {
            const Rat delta =
                abs(cond.at(a, 1).marginal_x(x) - cond.at(a, 2).marginal_x(x));
            report.delta_a[a - 1][outcome_index(Alphabet::binary, x)] = delta;
            if (delta > report.max_delta) report.max_delta = delta;
        }
    }
    for (int b = 1; b <= 2; ++b) {
        for (int y : outcome_values(Alphabet::binary)) {
            const Rat delta =
                abs(cond.at(1, b).marginal_y(y) - cond.at(2, b).marginal_y(y));
            report.delta_b[b - 1][outcome_index(Alphabet::binary, y)] = delta;
            if (delta > report.max_delta) report.max_delta = delta;
        }
    }
    return report;
}

Spreadsheet Spreadsheet::validated(std::vector<Row> rows) {
    if (rows.empty()) {
        throw Error(Errc::empty_sheet, "spreadsheet has no rows");
    }
    for (const Row& row : rows) {
        for (int v : {row.x1, row.x2, row.y1, row.y2}) {
            if (v != 1 && v != -1) {
                throw Error(Errc::alphabet_violation,
                            "spreadsheet entry " + std::to_string(v));
            }
        }
    }
    return Spreadsheet{std::move(rows)};
}

ChshReport spreadsheet_chsh(const Spreadsheet& sheet) {
    if (sheet.rows.empty()) {
        throw Error(Errc::empty_sheet, "spreadsheet has no rows");
    }
    // Exact means: integer sums of x_a*y_b over rows, row count as denominator.
    std::int64_t sums[4] = {0, 0, 0, 0};
    for (const Spreadsheet::Row& row : sheet.rows) {
        const int xs[2] = {row.x1, row.x2};
        const int ys[2] = {row.y1, row.y2};
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) sums[a * 2 + b] += xs[a] * ys[b];
        }
    }
    const auto n = static_cast<std::int64_t>(sheet.rows.size());
    std::array<Rat, 4> correlations;
    for (int k = 0; k < 4; ++k) correlations[k] = Rat(sums[k], n);
    return chsh_from_correlations(correlations);
}

Rat settings_outcome_dependence(const JointDist& joint) {
    const Alphabet alpha = joint.alphabet();
    // Outcome-pair marginal, summed over setting pairs.
    std::map<std::pair<int, int>, Rat> outcome_marginal;
    for (int x : outcome_values(alpha)) {
        for (int y : outcome_values(alpha)) {
            Rat total = 0;
            for (const auto& [a, b] : setting_pairs) total += joint.at(a, b, x, y);
            outcome_marginal[{x, y}] = total;
        }
    }
    Rat l1 = 0;
    for (const auto& [a, b] : setting_pairs) {
        const Rat setting_mass = joint.setting_mass(a, b);
        for (int x : outcome_values(alpha)) {
            for (int y : outcome_values(alpha)) {
                l1 += abs(joint.at(a, b, x, y) - setting_mass * outcome_marginal[{x, y}]);
            }
        }
    }
    return l1 / 2;
}

}  // namespace bellkit
