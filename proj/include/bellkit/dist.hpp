#pragma once

#include "bellkit/rational.hpp"

#include <array>
#include <span>
#include <utility>
#include <vector>

namespace bellkit {

// Measurement outcomes are -1/+1, with 0 standing for a missed detection in
// the ternary alphabet. Settings are 1 or 2 on each side.
enum class Alphabet { binary, ternary };

std::span<const int> outcome_values(Alphabet alpha);
int outcome_count(Alphabet alpha);
// Position of x in the canonical outcome order (-1, 0, +1); throws
// Errc::alphabet_violation if x is not a member (e.g. 0 under binary).
int outcome_index(Alphabet alpha, int x);
const char* alphabet_name(Alphabet alpha);

// Setting pairs in canonical order (1,1), (1,2), (2,1), (2,2).
inline constexpr std::array<std::pair<int, int>, 4> setting_pairs{
    {{1, 1}, {1, 2}, {2, 1}, {2, 2}}};

int pair_index(int a, int b);  // validates a, b in {1,2}

// Law of one trial's outcome pair (x, y), e.g. a single q_ab.
class OutcomePmf {
  public:
    // Cells in canonical row-major order over (x, y). Checks non-negativity
    // and exact normalization; no silent renormalization.
    static OutcomePmf validated(Alphabet alpha, std::vector<Rat> cells);
    static OutcomePmf uniform(Alphabet alpha);
    static OutcomePmf point_mass(Alphabet alpha, int x, int y);

    const Rat& at(int x, int y) const;
    Alphabet alphabet() const { return alpha_; }
    const std::vector<Rat>& cells() const { return cells_; }

    Rat marginal_x(int x) const;
    Rat marginal_y(int y) const;

    bool operator==(const OutcomePmf&) const = default;

  private:
    OutcomePmf(Alphabet alpha, std::vector<Rat> cells)
        : alpha_(alpha), cells_(std::move(cells)) {}
    Alphabet alpha_;
    std::vector<Rat> cells_;
};

// E(XY) = sum x*y*p(x,y); exact, zeros contribute nothing.
Rat expectation_xy(const OutcomePmf& pmf);

// Marginal law of the setting choices (A, B).
class SettingsDist {
  public:
    static SettingsDist validated(std::array<Rat, 4> masses);
    static SettingsDist uniform();
    static SettingsDist point_mass(int a, int b);

    const Rat& at(int a, int b) const { return masses_[pair_index(a, b)]; }
    const std::array<Rat, 4>& masses() const { return masses_; }
    bool full_support() const;

    Rat marginal_a(int a) const;
    Rat marginal_b(int b) const;

    bool operator==(const SettingsDist&) const = default;

  private:
    explicit SettingsDist(std::array<Rat, 4> masses) : masses_(std::move(masses)) {}
    std::array<Rat, 4> masses_;
};

// The four conditional outcome laws q_ab, one per setting pair.
class CondFamily {
  public:
    static CondFamily validated(std::array<OutcomePmf, 4> pmfs);  // alphabets must agree
    static CondFamily uniform(Alphabet alpha);

    const OutcomePmf& at(int a, int b) const { return pmfs_[pair_index(a, b)]; }
    const OutcomePmf& at_pair(int k) const { return pmfs_[k]; }
    Alphabet alphabet() const { return alpha_; }

    std::array<Rat, 4> correlations() const;  // E(XY | a, b) per pair

    bool operator==(const CondFamily&) const = default;

  private:
    CondFamily(Alphabet alpha, std::array<OutcomePmf, 4> pmfs)
        : alpha_(alpha), pmfs_(std::move(pmfs)) {}
    Alphabet alpha_;
    std::array<OutcomePmf, 4> pmfs_;
};

// Full observable law of one trial, (A, B, X, Y).
class JointDist {
  public:
    // Cells in canonical order: lexicographic over (a, b, x, y) with outcomes
    // ordered (-1, 0, +1). Size 16 (binary) or 36 (ternary).
    static JointDist validated(Alphabet alpha, std::vector<Rat> cells);

    const Rat& at(int a, int b, int x, int y) const;
    Alphabet alphabet() const { return alpha_; }
    const std::vector<Rat>& cells() const { return cells_; }

    Rat setting_mass(int a, int b) const;  // sum over outcomes

    static int cell_index(Alphabet alpha, int a, int b, int x, int y);
    // Inverse of cell_index.
    static std::array<int, 4> cell_coords(Alphabet alpha, int index);

    bool operator==(const JointDist&) const = default;

  private:
    JointDist(Alphabet alpha, std::vector<Rat> cells)
        : alpha_(alpha), cells_(std::move(cells)) {}
    Alphabet alpha_;
    std::vector<Rat> cells_;
};

// pmf(a,b,x,y) = settings(a,b) * q_ab(x,y)
JointDist compose(const SettingsDist& settings, const CondFamily& cond);

enum class ZeroSettingPolicy {
    error,             // throw Errc::zero_setting_mass
    uniform_fallback,  // substitute a uniform conditional, flagged in the result
};

struct Factorization {
    SettingsDist settings;
    CondFamily cond;
    // Pairs whose conditional was undefined and filled in under
    // ZeroSettingPolicy::uniform_fallback. Empty means every pair was genuine.
    std::vector<std::pair<int, int>> fallback_pairs;
};

// Exact conditionals q_ab = pmf(a,b,.,.) / settings(a,b). Round trip with
// compose is an identity whenever settings has full support.
Factorization factor(const JointDist& joint,
                     ZeroSettingPolicy policy = ZeroSettingPolicy::error);

}  // namespace bellkit
