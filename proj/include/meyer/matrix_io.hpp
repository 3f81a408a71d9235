#pragma once

#include <string>

#include "meyer/symplectic.hpp"

namespace meyer {

// On-disk matrix documents, JSON:
//   {"g": N, "matrix": [[...], ...]}          full 2g x 2g form
//   {"g": N, "P": [...], "Q": [...], "S": [...]}  block form, g x g each
// Entries are JSON integers, or decimal strings for values beyond 64 bits.
// Malformed documents raise InvalidDocument; membership failures raise the
// usual NotSymplectic / NotUpperTriangular.

SpElement sp_from_json(const std::string& json_text);
SpElement load_sp_element(const std::string& path);

// Block-form documents validate directly; full-form documents must pass
// split_ursp.
UrSpElement ursp_from_json(const std::string& json_text);
UrSpElement load_ursp_element(const std::string& path);

// Serialization, in the same schema (full form for SpElement, block form
// for UrSpElement).
std::string to_json(const SpElement& a);
std::string to_json(const UrSpElement& a);

}  // namespace meyer
