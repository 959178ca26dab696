#pragma once

#include "bellkit/chsh.hpp"
#include "bellkit/rational.hpp"

#include <array>

namespace bellkit {

// One party-pair response plan: the outcome each side would produce under
// either setting. The coordinates double as a counterfactual quadruple
// (X1, X2, Y1, Y2).
struct DeterministicStrategy {
    int x1, x2, y1, y2;  // each +-1

    int x(int a) const { return a == 1 ? x1 : x2; }
    int y(int b) const { return b == 1 ? y1 : y2; }

    bool operator==(const DeterministicStrategy&) const = default;
};

// Position in the canonical order: lexicographic over (x1, x2, y1, y2) with
// -1 before +1.
int quad_index(const DeterministicStrategy& q);
DeterministicStrategy quad_at(int index);

// A joint law over counterfactual quadruples {-1,+1}^4. Its pairwise margins
// (X_a, Y_b) are what an experiment can see.
class Coupling {
  public:
    static Coupling validated(std::array<Rat, 16> pmf);
    static Coupling point_mass(const DeterministicStrategy& q);

    const Rat& at(const DeterministicStrategy& q) const { return pmf_[quad_index(q)]; }
    const std::array<Rat, 16>& pmf() const { return pmf_; }

    // Law of (X_a, Y_b) under the coupling.
    OutcomePmf pair_margin(int a, int b) const;

    bool operator==(const Coupling&) const = default;

  private:
    explicit Coupling(std::array<Rat, 16> pmf) : pmf_(std::move(pmf)) {}
    std::array<Rat, 16> pmf_;
};

// Correlations E(X_a * Y_b) under the coupling. Every report satisfies
// s_max <= 2: per quadruple each signed combination is +-2, and the
// expectation is a convex average of those row values.
ChshReport chsh_of_coupling(const Coupling& coupling);

// The four pairwise margins as a conditional family (what the coupling
// predicts for each setting pair).
CondFamily coupling_to_joint(const Coupling& coupling);

}  // namespace bellkit
