#include "bellkit/lhv.hpp"

#include "bellkit/error.hpp"

#include <set>

namespace bellkit {

LhvModel LhvModel::validated(std::vector<Atom> atoms) {
    if (atoms.empty()) {
        throw Error(Errc::not_normalized, "model has no hidden values");
    }
    Rat total = 0;
    std::set<std::string> labels;
    for (const Atom& atom : atoms) {
        if (atom.weight < 0) {
            throw Error(Errc::negative_mass,
                        "weight of '" + atom.label + "' is " + format_rational(atom.weight));
        }
        quad_index(atom.response);  // validates +-1 entries
        if (!labels.insert(atom.label).second) {
            throw Error(Errc::parse_error, "duplicate hidden-value label '" + atom.label + "'");
        }
        total += atom.weight;
    }
    if (total != 1) {
        throw Error(Errc::not_normalized,
                    "hidden-value law sums to " + format_rational(total));
    }
    return LhvModel(std::move(atoms));
}

std::array<DeterministicStrategy, 16> enumerate_deterministic() {
    std::array<DeterministicStrategy, 16> all;
    for (int i = 0; i < 16; ++i) all[i] = quad_at(i);
    return all;
}

Coupling coupling_of(const LhvModel& model) {
    std::array<Rat, 16> pmf;
    pmf.fill(Rat(0));
    for (const LhvModel::Atom& atom : model.atoms()) {
        pmf[quad_index(atom.response)] += atom.weight;
    }
    return Coupling::validated(std::move(pmf));
}

JointDist predict(const LhvModel& model, const SettingsDist& settings) {
    return compose(settings, coupling_to_joint(coupling_of(model)));
}

CertifiedChsh verify_chsh_bound(const LhvModel& model) {
    Coupling coupling = coupling_of(model);
    ChshReport report = chsh_of_coupling(coupling);
    if (report.s_max > 2) {
        throw Error(Errc::internal_bound_violation,
                    "coupling produced s_max " + format_rational(report.s_max));
    }
    return CertifiedChsh{std::move(report), std::move(coupling), true};
}

}  // namespace bellkit
