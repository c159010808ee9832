#pragma once

#include <string>

#include "turancert/frames.hpp"
#include "turancert/kernels.hpp"
#include "turancert/oscillation.hpp"
#include "turancert/witness.hpp"

namespace turancert {

// Deterministic JSON with stable field names; identical inputs produce
// byte-identical output. Non-finite values serialize as null.
std::string to_json(const WitnessCertificate& cert);
std::string to_json(const OscillationReport& report);
std::string to_json(const FrameBounds& bounds);
std::string to_json(const TranslateNetwork& net);  // {"lambda":.., "coefficients":[[k,c],..]}

TranslateNetwork network_from_json(const std::string& text);

// Locale-independent decimal formatting at 17 significant digits.
std::string format_double(double value);

}  // namespace turancert
