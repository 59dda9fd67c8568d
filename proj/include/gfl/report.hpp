#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "gfl/constructions.hpp"
#include "gfl/detect.hpp"
#include "gfl/gallai.hpp"
#include "gfl/search.hpp"

namespace gfl {

using Json = nlohmann::ordered_json;

/// "sha256:<hex>" of the given bytes.
auto sha256_digest(std::string_view bytes) -> std::string;

auto to_json(const RainbowTriangle &t) -> Json;
auto to_json(const MonoFan &f) -> Json;
auto to_json(const Certificate &c) -> Json;
auto to_json(const GallaiPartition &p) -> Json;
auto to_json(const BoundRow &r) -> Json;
auto to_json(const BoundTable &t) -> Json;
auto to_json(const VerifyReport &r) -> Json;
auto to_json(const SearchStats &s, bool with_timing) -> Json;
/// The witness, when present, is embedded as .gcg text.
auto to_json(const SearchOutcome &o, bool with_timing) -> Json;

/// Inverse of to_json for certificates. Throws FormatError on a bad shape.
auto certificate_from_json(const Json &j) -> Certificate;

/// Fixed-width text rendering of a bound table.
auto format_table_text(const BoundTable &t) -> std::string;

} // namespace gfl
