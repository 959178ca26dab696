#include "bellkit/dist.hpp"

#include "bellkit/error.hpp"

#include <string>

namespace bellkit {

namespace {

constexpr std::array<int, 2> binary_outcomes{-1, +1};
constexpr std::array<int, 3> ternary_outcomes{-1, 0, +1};

std::string pair_text(int a, int b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

// Shared pmf validation: every mass >= 0 and the total exactly 1.
void check_pmf(std::span<const Rat> cells, const std::string& what) {
    Rat total = 0;
    for (const Rat& p : cells) {
        if (p < 0) {
            throw Error(Errc::negative_mass,
                        what + " has entry " + format_rational(p));
        }
        total += p;
    }
    if (total != 1) {
        const Rat deficit = Rat(1) - total;
        throw Error(Errc::not_normalized, what + " sums to " + format_rational(total) +
                                              " (deficit " + format_rational(deficit) + ")");
    }
}

}  // namespace

std::span<const int> outcome_values(Alphabet alpha) {
    if (alpha == Alphabet::binary) return binary_outcomes;
    return ternary_outcomes;
}

int outcome_count(Alphabet alpha) {
    return alpha == Alphabet::binary ? 2 : 3;
}

int outcome_index(Alphabet alpha, int x) {
    const auto values = outcome_values(alpha);
    for (int i = 0; i < static_cast<int>(values.size()); ++i) {
        if (values[i] == x) return i;
    }
    throw Error(Errc::alphabet_violation, "outcome " + std::to_string(x) + " not in " +
                                              std::string(alphabet_name(alpha)) +
                                              " alphabet");
}

const char* alphabet_name(Alphabet alpha) {
    return alpha == Alphabet::binary ? "binary" : "ternary";
}

int pair_index(int a, int b) {
    if (a < 1 || a > 2 || b < 1 || b > 2) {
        throw Error(Errc::alphabet_violation, "setting pair " + pair_text(a, b));
    }
    return (a - 1) * 2 + (b - 1);
}

OutcomePmf OutcomePmf::validated(Alphabet alpha, std::vector<Rat> cells) {
    const std::size_t n = static_cast<std::size_t>(outcome_count(alpha));
    if (cells.size() != n * n) {
        throw Error(Errc::parse_error, "outcome pmf needs " + std::to_string(n * n) +
                                           " cells, got " + std::to_string(cells.size()));
    }
    check_pmf(cells, "outcome pmf");
    return OutcomePmf(alpha, std::move(cells));
}

OutcomePmf OutcomePmf::uniform(Alphabet alpha) {
    const int n = outcome_count(alpha);
    return OutcomePmf(alpha, std::vector<Rat>(static_cast<std::size_t>(n) * n,
                                              Rat(1, n * n)));
}

OutcomePmf OutcomePmf::point_mass(Alphabet alpha, int x, int y) {
    const int n = outcome_count(alpha);
    std::vector<Rat> cells(static_cast<std::size_t>(n) * n, Rat(0));
    cells[static_cast<std::size_t>(outcome_index(alpha, x)) * n + outcome_index(alpha, y)] = 1;
    return OutcomePmf(alpha, std::move(cells));
}

const Rat& OutcomePmf::at(int x, int y) const {
    const int n = outcome_count(alpha_);
    return cells_[static_cast<std::size_t>(outcome_index(alpha_, x)) * n +
                  outcome_index(alpha_, y)];
}

Rat OutcomePmf::marginal_x(int x) const {
    Rat total = 0;
    for (int y : outcome_values(alpha_)) total += at(x, y);
    return total;
}

Rat OutcomePmf::marginal_y(int y) const {
    Rat total = 0;
    for (int x : outcome_values(alpha_)) total += at(x, y);
    return total;
}

Rat expectation_xy(const OutcomePmf& pmf) {
    Rat total = 0;
    for (int x : outcome_values(pmf.alphabet())) {
        for (int y : outcome_values(pmf.alphabet())) {
            if (x == 0 || y == 0) continue;
            total += Rat(x * y) * pmf.at(x, y);
        }
    }
    return total;
}

SettingsDist SettingsDist::validated(std::array<Rat, 4> masses) {
    check_pmf(masses, "settings pmf");
    return SettingsDist(std::move(masses));
}

SettingsDist SettingsDist::uniform() {
    return SettingsDist({Rat(1, 4), Rat(1, 4), Rat(1, 4), Rat(1, 4)});
}

SettingsDist SettingsDist::point_mass(int a, int b) {
    std::array<Rat, 4> masses{Rat(0), Rat(0), Rat(0), Rat(0)};
    masses[pair_index(a, b)] = 1;
    return SettingsDist(std::move(masses));
}

bool SettingsDist::full_support() const {
    for (const Rat& p : masses_) {
        if (p == 0) return false;
    }
    return true;
}

Rat SettingsDist::marginal_a(int a) const {
    return at(a, 1) + at(a, 2);
}

Rat SettingsDist::marginal_b(int b) const {
    return at(1, b) + at(2, b);
}

CondFamily CondFamily::validated(std::array<OutcomePmf, 4> pmfs) {
    const Alphabet alpha = pmfs[0].alphabet();
    for (const OutcomePmf& pmf : pmfs) {
        if (pmf.alphabet() != alpha) {
            throw Error(Errc::alphabet_violation, "mixed alphabets in conditional family");
        }
    }
    return CondFamily(alpha, std::move(pmfs));
}

CondFamily CondFamily::uniform(Alphabet alpha) {
    const OutcomePmf u = OutcomePmf::uniform(alpha);
    return CondFamily(alpha, {u, u, u, u});
}

std::array<Rat, 4> CondFamily::correlations() const {
    std::array<Rat, 4> e;
    for (int k = 0; k < 4; ++k) e[k] = expectation_xy(pmfs_[k]);
    return e;
}

JointDist JointDist::validated(Alphabet alpha, std::vector<Rat> cells) {
    const std::size_t n = static_cast<std::size_t>(outcome_count(alpha));
    if (cells.size() != 4 * n * n) {
        throw Error(Errc::parse_error, "joint pmf needs " + std::to_string(4 * n * n) +
                                           " cells, got " + std::to_string(cells.size()));
    }
    check_pmf(cells, "joint pmf");
    return JointDist(alpha, std::move(cells));
}

int JointDist::cell_index(Alphabet alpha, int a, int b, int x, int y) {
    const int n = outcome_count(alpha);
    return (pair_index(a, b) * n + outcome_index(alpha, x)) * n + outcome_index(alpha, y);
}

std::array<int, 4> JointDist::cell_coords(Alphabet alpha, int index) {
    const int n = outcome_count(alpha);
    const auto values = outcome_values(alpha);
    const int y = values[index % n];
    const int x = values[(index / n) % n];
    const int k = index / (n * n);
    return {setting_pairs[k].first, setting_pairs[k].second, x, y};
}

const Rat& JointDist::at(int a, int b, int x, int y) const {
    return cells_[cell_index(alpha_, a, b, x, y)];
}

Rat JointDist::setting_mass(int a, int b) const {
    Rat total = 0;
    for (int x : outcome_values(alpha_)) {
        for (int y : outcome_values(alpha_)) total += at(a, b, x, y);
    }
    return total;
}

JointDist compose(const SettingsDist& settings, const CondFamily& cond) {
    const Alphabet alpha = cond.alphabet();
    const int n = outcome_count(alpha);
    std::vector<Rat> cells(static_cast<std::size_t>(4) * n * n);
    for (const auto& [a, b] : setting_pairs) {
        for (int x : outcome_values(alpha)) {
            for (int y : outcome_values(alpha)) {
                cells[JointDist::cell_index(alpha, a, b, x, y)] =
                    settings.at(a, b) * cond.at(a, b).at(x, y);
            }
        }
    }
    return JointDist::validated(alpha, std::move(cells));
}

Factorization factor(const JointDist& joint, ZeroSettingPolicy policy) {
    const Alphabet alpha = joint.alphabet();
    const int n = outcome_count(alpha);
    std::array<Rat, 4> masses;
    std::vector<OutcomePmf> pmfs;
    std::vector<std::pair<int, int>> fallback;
    for (const auto& [a, b] : setting_pairs) {
        const Rat mass = joint.setting_mass(a, b);
        masses[pair_index(a, b)] = mass;
        if (mass == 0) {
            if (policy == ZeroSettingPolicy::error) {
                throw Error(Errc::zero_setting_mass,
                            "conditional undefined for pair " + pair_text(a, b));
            }
            fallback.emplace_back(a, b);
            pmfs.push_back(OutcomePmf::uniform(alpha));
            continue;
        }
        std::vector<Rat> cells(static_cast<std::size_t>(n) * n);
        std::size_t i = 0;
        for (int x : outcome_values(alpha)) {
            for (int y : outcome_values(alpha)) {
                cells[i++] = joint.at(a, b, x, y) / mass;
            }
        }
        pmfs.push_back(OutcomePmf::validated(alpha, std::move(cells)));
    }
    return Factorization{
        SettingsDist::validated(std::move(masses)),
        CondFamily::validated({pmfs[0], pmfs[1], pmfs[2], pmfs[3]}),
        std::move(fallback)};
}

}  // namespace bellkit
