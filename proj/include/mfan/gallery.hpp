#pragma once

#include <string>
#include <variant>
#include <vector>

#include "mfan/lift.hpp"

namespace mfan {

using GalleryEntry = std::variant<MarkedFan, C2Triple>;

/// Names of the built-in instances, in a fixed order.
const std::vector<std::string>& gallery_names();

/// Returns the canned instance; UnknownExample for anything else.
GalleryEntry gallery(const std::string& name);

/// The marked fan of an entry: the entry itself, or the quotient of a triple.
MarkedFan gallery_marked_fan(const std::string& name, unsigned seed = kDefaultSeed);

}  // namespace mfan
