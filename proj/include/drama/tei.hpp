#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "drama/play.hpp"

namespace drama {

/// Malformed XML. byte_offset points at the offending position in the input.
struct TeiParseError : std::runtime_error {
    TeiParseError(const std::string& what, long offset)
        : std::runtime_error(what), byte_offset(offset) {}
    long byte_offset = -1;
};

/// Well-formed XML that lacks the structure we need (no scene divisions).
struct TeiStructureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parse a TEI-encoded play.
///
/// Scene casts are the union of the annotated cast (stage/@who inside the
/// scene) and every speaker observed in that scene. Word counts cover spoken
/// text only; speaker labels and stage directions inside speeches are
/// excluded. Speakers missing from the character declaration are synthesized
/// (is_group=false) and reported through `warnings`.
Play parse_tei(std::string_view xml_bytes, std::vector<std::string>* warnings = nullptr);

}  // namespace drama
