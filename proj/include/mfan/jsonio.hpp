#pragma once

#include <string>
#include <variant>

#include "json.hpp"
#include "mfan/cohomology.hpp"
#include "mfan/gallery.hpp"

namespace mfan {

using Json = nlohmann::json;

// Rationals travel as "p/q" strings, never as floats; index sets are
// 1-based on the wire and 0-based in memory.

Json to_json(const MarkedFan& mf);
Json to_json(const C2Triple& t);
Json to_json(const Certificate& cert);
Json to_json(const BettiVector& betti, const std::string& method);
Json to_json(const MarkedFanIso& iso);

MarkedFan marked_fan_from_json(const Json& j);
C2Triple triple_from_json(const Json& j);
Certificate certificate_from_json(const Json& j);
Mat matrix_from_json(const Json& j);  // array of rows

/// Distinguishes the two object schemas by their fields.
GalleryEntry entry_from_json(const Json& j);

/// Reads and parses a file; ParseError on I/O or JSON failure.
Json load_json(const std::string& path);

}  // namespace mfan
