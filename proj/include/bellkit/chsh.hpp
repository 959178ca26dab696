#pragma once

#include "bellkit/dist.hpp"

#include <vector>

namespace bellkit {

// Correlations E_ab and the four signed CHSH combinations. s_values[k] is the
// combination with the minus sign placed at setting pair k (canonical pair
// order); all four patterns are computed, s_max = max |s_values|.
struct ChshReport {
    std::array<Rat, 4> correlations;
    std::array<Rat, 4> s_values;
    Rat s_max;
};

ChshReport chsh_from_correlations(const std::array<Rat, 4>& correlations);

// Exact CHSH report of a conditional family. Binary alphabet only; run a
// post-selection first to reduce ternary data.
ChshReport chsh(const CondFamily& cond);

// Marginal deltas |P(X=x|a,b=1) - P(X=x|a,b=2)| and the mirror-image for Bob.
// Zero everywhere iff each party's marginals ignore the remote setting.
struct NoSignallingReport {
    // delta_a[a-1][i]: i indexes the binary outcome order (-1, +1)
    std::array<std::array<Rat, 2>, 2> delta_a;
    std::array<std::array<Rat, 2>, 2> delta_b;
    Rat max_delta;
};

NoSignallingReport no_signalling(const CondFamily& cond);  // binary only

// N x 4 table of realized counterfactual quadruples, one row per trial.
struct Spreadsheet {
    struct Row {
        int x1, x2, y1, y2;
    };
    std::vector<Row> rows;

    // Checks every entry is +-1 and the sheet is nonempty.
    static Spreadsheet validated(std::vector<Row> rows);
};

// Empirical correlations of a sheet, exact rational means over rows. Every
// S value is guaranteed to lie in [-2, 2]: each row's signed combination
// x_a*y_b is +-2, and an average of +-2's cannot leave the interval.
ChshReport spreadsheet_chsh(const Spreadsheet& sheet);

// Total-variation distance between the joint law of ((A,B),(X,Y)) and the
// product of its two marginals; zero iff outcomes are independent of settings.
Rat settings_outcome_dependence(const JointDist& joint);

}  // namespace bellkit
