#pragma once

#include "bellkit/coupling.hpp"
#include "bellkit/dist.hpp"

#include <string>
#include <vector>

namespace bellkit {

// Local hidden-variable model: a finite labelled space of hidden values, a
// law over it, and a deterministic response plan per value. The hidden value
// is drawn independently of the settings. Stochastic per-value responses are
// modeled by enlarging the space, which loses no generality.
class LhvModel {
  public:
    struct Atom {
        std::string label;  // opaque, no ordering assumed
        Rat weight;
        DeterministicStrategy response;
    };

    // Checks weights are non-negative and sum to 1, labels are unique.
    static LhvModel validated(std::vector<Atom> atoms);

    const std::vector<Atom>& atoms() const { return atoms_; }

  private:
    explicit LhvModel(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {}
    std::vector<Atom> atoms_;
};

// All 16 response plans, each exactly once, in canonical quad order.
std::array<DeterministicStrategy, 16> enumerate_deterministic();

// Pushforward of the hidden-value law through the responses. Affine in the
// model's law: mixing models mixes couplings.
Coupling coupling_of(const LhvModel& model);

// Observable law of one trial: pmf(a,b,x,y) = settings(a,b) * P(X_a=x, Y_b=y).
// Measurement independence is built in, so the result never signals.
JointDist predict(const LhvModel& model, const SettingsDist& settings);

struct CertifiedChsh {
    ChshReport report;
    Coupling coupling;  // the certificate
    bool certified;
};

// Computes chsh_of_coupling(coupling_of(model)) and asserts s_max <= 2.
// The assertion cannot fire for a valid model; if it ever does, that is a
// defect in this library, reported as Errc::internal_bound_violation.
CertifiedChsh verify_chsh_bound(const LhvModel& model);

}  // namespace bellkit
