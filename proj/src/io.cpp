#include "levar/io.hpp"

#include <ostream>
#include <random>
#include <sstream>

namespace levar {

using nlohmann::json;
using std::int64_t;

json shape_to_json(const Shape& s) {
    if (s.is_unit()) return nullptr;
    json j;
    j["inner"] = shape_to_json(s.inner());
    j["extents"] = s.extents();
    return j;
}

Shape shape_from_json(const json& j) {
    if (j.is_null()) return Shape::unit();
    if (!j.is_object() || !j.contains("inner") || !j.contains("extents"))
        fail(ErrorKind::FormatError, "shape must be null or {\"inner\":...,\"extents\":[...]}");
    Shape inner = shape_from_json(j["inner"]);
    const json& ext = j["extents"];
    if (!ext.is_array()) fail(ErrorKind::FormatError, "shape extents must be an array");
    std::vector<std::size_t> extents;
    extents.reserve(ext.size());
    for (const json& e : ext) {
        if (!e.is_number_integer() && !e.is_number_unsigned())
            fail(ErrorKind::FormatError, "shape extents must be naturals");
        if (e.is_number_integer() && e.get<int64_t>() < 0)
            fail(ErrorKind::FormatError, "shape extents must be non-negative");
        extents.push_back(e.get<std::size_t>());
    }
    return Shape::node(std::move(inner), std::move(extents));
}

json cut_to_json(const RankedCut& c) {
    switch (c.kind()) {
        case RankedCut::Kind::Trivial: return nullptr;
        case RankedCut::Kind::Side: return json{{"side", c.side().value()}};
        case RankedCut::Kind::Slot:
            return json{{"slot", c.slot().value()}, {"split", c.split().value()}};
    }
    return nullptr;
}

namespace {

std::size_t natural_field(const json& j, const char* key) {
    if (!j.contains(key) || (!j[key].is_number_integer() && !j[key].is_number_unsigned()) ||
        (j[key].is_number_integer() && j[key].get<int64_t>() < 0))
        fail(ErrorKind::FormatError, std::string("cut field \"") + key + "\" must be a natural");
    return j[key].get<std::size_t>();
}

} // namespace

RankedCut cut_from_json(const Shape& s, const json& j) {
    if (s.level() == 0) {
        if (!j.is_null()) fail(ErrorKind::CutMismatch, "level-0 cuts are written as null");
        return trivial_cut();
    }
    if (j.is_null()) fail(ErrorKind::CutMismatch, "only level-0 cuts are written as null");
    if (!j.is_object()) fail(ErrorKind::FormatError, "cut must be null or an object");
    if (s.level() == 1) {
        if (!j.contains("side"))
            fail(ErrorKind::CutMismatch, "level-1 cuts are written as {\"side\":N}");
        return side_cut(natural_field(j, "side"));
    }
    if (!j.contains("slot") || !j.contains("split"))
        fail(ErrorKind::CutMismatch,
             "cuts above level 1 are written as {\"slot\":I,\"split\":K}");
    return slot_cut(s, natural_field(j, "slot"), natural_field(j, "split"));
}

std::string write_array_string(const Array<int64_t>& a) {
    const Array<int64_t> m = tabulate(a);
    json j;
    j["format"] = "levar-v1";
    j["level"] = m.shape().level();
    j["shape"] = shape_to_json(m.shape());
    j["data"] = m.buffer();
    return j.dump();
}

void write_array(const Array<int64_t>& a, std::ostream& sink) {
    sink << write_array_string(a);
}

Array<int64_t> read_array_string(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(ErrorKind::FormatError, "input is not valid JSON");
    if (!j.is_object() || !j.contains("format") || j["format"] != "levar-v1")
        fail(ErrorKind::FormatError, "missing or unknown format tag, expected \"levar-v1\"");
    if (!j.contains("level") ||
        (!j["level"].is_number_integer() && !j["level"].is_number_unsigned()) ||
        (j["level"].is_number_integer() && j["level"].get<int64_t>() < 0))
        fail(ErrorKind::FormatError, "level must be a natural");
    if (!j.contains("shape") || !j.contains("data") || !j["data"].is_array())
        fail(ErrorKind::FormatError, "document needs shape and data fields");

    const Shape s = shape_from_json(j["shape"]);
    const std::size_t level = j["level"].get<std::size_t>();
    if (s.level() != level)
        fail(ErrorKind::LevelMismatch, "declared level " + std::to_string(level) +
                                           " but shape has depth " + std::to_string(s.level()));

    std::vector<int64_t> data;
    data.reserve(j["data"].size());
    for (const json& e : j["data"]) {
        if (!e.is_number_integer() && !e.is_number_unsigned())
            fail(ErrorKind::FormatError, "data entries must be 64-bit integers");
        data.push_back(e.get<int64_t>());
    }
    if (data.size() != prod(s))
        fail(ErrorKind::LengthMismatch, "data has " + std::to_string(data.size()) +
                                            " elements, shape has prod " +
                                            std::to_string(prod(s)));
    return Array<int64_t>::from_buffer(s, std::move(data));
}

Array<int64_t> read_array(std::istream& source) {
    std::ostringstream text;
    text << source.rdbuf();
    return read_array_string(text.str());
}

Array<int64_t> generate(const Shape& s, const Fill& fill) {
    const std::size_t total = prod(s);
    std::vector<int64_t> data(total);
    if (std::holds_alternative<Iota>(fill)) {
        for (std::size_t k = 0; k < total; ++k) data[k] = static_cast<int64_t>(k);
    } else if (const Const* c = std::get_if<Const>(&fill)) {
        for (auto& x : data) x = c->value;
    } else {
        std::mt19937_64 engine(std::get<Rand>(fill).seed);
        for (auto& x : data) x = static_cast<int64_t>(engine() >> 33);
    }
    return Array<int64_t>::from_buffer(s, std::move(data));
}

} // namespace levar
