#include "bellkit/coupling.hpp"

#include "bellkit/error.hpp"

#include <vector>

namespace bellkit {

namespace {

int bit(int v) {
    return v == -1 ? 0 : 1;
}

void check_pm1(int v) {
    if (v != 1 && v != -1) {
        throw Error(Errc::alphabet_violation, "strategy entry " + std::to_string(v));
    }
}

}  // namespace

int quad_index(const DeterministicStrategy& q) {
    check_pm1(q.x1);
    check_pm1(q.x2);
    check_pm1(q.y1);
    check_pm1(q.y2);
    return bit(q.x1) * 8 + bit(q.x2) * 4 + bit(q.y1) * 2 + bit(q.y2);
}

DeterministicStrategy quad_at(int index) {
    const auto sign = [](int b) { return b ? +1 : -1; };
    return DeterministicStrategy{sign((index >> 3) & 1), sign((index >> 2) & 1),
                                 sign((index >> 1) & 1), sign(index & 1)};
}

Coupling Coupling::validated(std::array<Rat, 16> pmf) {
    Rat total = 0;
    for (const Rat& p : pmf) {
        if (p < 0) {
            throw Error(Errc::negative_mass, "coupling entry " + format_rational(p));
        }
        total += p;
    }
    if (total != 1) {
        throw Error(Errc::not_normalized, "coupling sums to " + format_rational(total));
    }
    return Coupling(std::move(pmf));
}

Coupling Coupling::point_mass(const DeterministicStrategy& q) {
    std::array<Rat, 16> pmf;
    pmf.fill(Rat(0));
    pmf[quad_index(q)] = 1;
    return Coupling(std::move(pmf));
}

OutcomePmf Coupling::pair_margin(int a, int b) const {
    // Cells in canonical binary order over (x, y).
    std::vector<Rat> cells(4, Rat(0));
    for (int i = 0; i < 16; ++i) {
        const DeterministicStrategy q = quad_at(i);
        const int xi = outcome_index(Alphabet::binary, q.x(a));
        const int yi = outcome_index(Alphabet::binary, q.y(b));
        cells[static_cast<std::size_t>(xi) * 2 + yi] += pmf_[i];
    }
    return OutcomePmf::validated(Alphabet::binary, std::move(cells));
}

ChshReport chsh_of_coupling(const Coupling& coupling) {
    std::array<Rat, 4> correlations;
    for (const auto& [a, b] : setting_pairs) {
        Rat e = 0;
        for (int i = 0; i < 16; ++i) {
            const DeterministicStrategy q = quad_at(i);
            e += Rat(q.x(a) * q.y(b)) * coupling.pmf()[i];
        }
        correlations[pair_index(a, b)] = e;
    }
    return chsh_from_correlations(correlations);
}

CondFamily coupling_to_joint(const Coupling& coupling) {
    return CondFamily::validated(
        {coupling.pair_margin(1, 1), coupling.pair_margin(1, 2),
         coupling.pair_margin(2, 1), coupling.pair_margin(2, 2)});
}

}  // namespace bellkit
