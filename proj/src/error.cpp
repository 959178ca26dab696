#include "bellkit/error.hpp"

namespace bellkit {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::parse_error: return "PARSE_ERROR";
        case Errc::negative_mass: return "NEGATIVE_MASS";
        case Errc::not_normalized: return "NOT_NORMALIZED";
        case Errc::alphabet_violation: return "ALPHABET_VIOLATION";
        case Errc::zero_setting_mass: return "ZERO_SETTING_MASS";
        case Errc::empty_sheet: return "EMPTY_SHEET";
        case Errc::response_undefined: return "RESPONSE_UNDEFINED";
        case Errc::zero_detection: return "ZERO_DETECTION";
        case Errc::empty_trials: return "EMPTY_TRIALS";
        case Errc::missing_setting_pair: return "MISSING_SETTING_PAIR";
        case Errc::internal_bound_violation: return "INTERNAL_BOUND_VIOLATION";
    }
    return "UNKNOWN";
}

}  // namespace bellkit
