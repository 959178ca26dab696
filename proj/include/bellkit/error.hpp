#pragma once

#include <stdexcept>
#include <string>

namespace bellkit {

// Failure classes surfaced by validation and evaluation. The CLI maps these
// onto its exit-code protocol; library callers switch on code().
enum class Errc {
    parse_error,
    negative_mass,
    not_normalized,
    alphabet_violation,
    zero_setting_mass,
    empty_sheet,
    response_undefined,
    zero_detection,
    empty_trials,
    missing_setting_pair,
    internal_bound_violation,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

  private:
    Errc code_;
};

}  // namespace bellkit
