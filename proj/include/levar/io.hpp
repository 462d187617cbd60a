#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>

#include "json.hpp"
#include "levar/array.hpp"
#include "levar/nesting.hpp"

namespace levar {

// On-disk document, format tag "levar-v1": UTF-8 JSON with sorted keys and
// no insignificant whitespace, so equal arrays serialize to equal bytes.
//   {"data":[...],"format":"levar-v1","level":L,"shape":S}
// where S is null at level 0 and {"extents":[...],"inner":S'} above, and
// data is the flat row-major buffer of 64-bit signed integers.

nlohmann::json shape_to_json(const Shape& s);
Shape shape_from_json(const nlohmann::json& j);   // FormatError, LengthMismatch

nlohmann::json cut_to_json(const RankedCut& c);
// Cut fragments: null (level 0), {"side":N} (level 1), {"slot":I,"split":K}
// (level >= 2). CutMismatch when the fragment does not fit s's level.
RankedCut cut_from_json(const Shape& s, const nlohmann::json& j);

void write_array(const Array<std::int64_t>& a, std::ostream& sink);
std::string write_array_string(const Array<std::int64_t>& a);

// FormatError on bad JSON/tag/field types, LengthMismatch when data or an
// extents vector has the wrong length, LevelMismatch when the declared
// level differs from the shape depth. Always returns a materialized array.
Array<std::int64_t> read_array(std::istream& source);
Array<std::int64_t> read_array_string(const std::string& text);

struct Iota {};
struct Const {
    std::int64_t value;
};
// Deterministic per seed: element k is the k-th output of a
// std::mt19937_64 seeded with `seed`, shifted right by 33 bits, hence
// uniform in [0, 2^31).
struct Rand {
    std::uint64_t seed;
};
using Fill = std::variant<Iota, Const, Rand>;

Array<std::int64_t> generate(const Shape& s, const Fill& fill);

} // namespace levar
