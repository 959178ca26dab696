#pragma once

#include "bellkit/rational.hpp"

#include <compare>
#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace bellkit {

enum class Party { alice, bob };

const char* party_name(Party party);

// An instrument hidden value. The (party, setting) tag is part of the
// identity, so the four instrument spaces are pairwise disjoint even when
// their tokens coincide: a value determines whose apparatus it belongs to and
// which setting is in use.
struct TaggedValue {
    Party party;
    int setting;
    std::string token;

    auto operator<=>(const TaggedValue&) const = default;
};

// One atom of the source law: a pair of source hidden values and its mass.
struct SourcePoint {
    std::string l1, l2;
    Rat p;
};

// Deterministic response X_a(l1, la) or Y_b(l2, lb), stored as an explicit
// table keyed by (setting, source token, instrument token).
class ResponseTable {
  public:
    void define(int setting, const std::string& source_token,
                const std::string& instrument_token, int outcome);

    // Throws Errc::response_undefined when the combination is missing.
    int at(int setting, const std::string& source_token,
           const std::string& instrument_token) const;

    bool empty() const { return table_.empty(); }

    using Key = std::tuple<int, std::string, std::string>;
    const std::map<Key, int>& entries() const { return table_; }

  private:
    std::map<Key, int> table_;
};

}  // namespace bellkit
