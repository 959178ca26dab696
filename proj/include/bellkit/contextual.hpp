#pragma once

#include "bellkit/dist.hpp"
#include "bellkit/hidden.hpp"

#include <array>
#include <string>
#include <vector>

namespace bellkit {

// Setting-dependent hidden-variable model. Each trial draws a source pair
// (l1, l2) and, per setting pair (a, b), an instrument pair (la, lb) from a
// joint law that is NOT required to factor; deterministic responses then fix
// the +-1 outcomes. The instrument spaces carry (party, setting) tags and are
// pairwise disjoint.
struct ContextualModel {
    std::vector<SourcePoint> source;  // pmf over (l1, l2)

    // Instrument-space tokens, indexed by setting - 1.
    std::array<std::vector<std::string>, 2> alice_space;
    std::array<std::vector<std::string>, 2> bob_space;

    // Per setting pair, a dense pmf over alice_space[a-1] x bob_space[b-1]
    // (row-major, Alice's index first). Dense on purpose: zero cells are data,
    // not an assumption.
    std::array<std::vector<Rat>, 4> pair_pmf;

    ResponseTable response_x;  // (a, l1, la) -> +-1
    ResponseTable response_y;  // (b, l2, lb) -> +-1

    // Checks normalization of the source and of each pair pmf, token
    // uniqueness per space, and pmf shapes. Responses are checked lazily at
    // evaluation, where the support is known.
    void validate() const;
};

// All instrument values with their tags; pairwise distinct by construction.
std::vector<TaggedValue> instrument_values(const ContextualModel& model);

// Law of (X_ab, Y_ab) per setting pair: the double sum of source mass times
// instrument mass over response preimages. Exact; the result is binary.
CondFamily evaluate(const ContextualModel& model);

// Builds a model that reproduces an arbitrary binary target family exactly:
// instrument spaces are the outcomes themselves ({-1,+1} tagged per party and
// setting), the pair pmf embeds the target, responses read the token back,
// and the source is a designated one-point space. No-signalling and CHSH
// bounds play no role: any target works, which is the point.
ContextualModel universal_construct(const CondFamily& target);

}  // namespace bellkit
