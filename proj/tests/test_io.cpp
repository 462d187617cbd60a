#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "levar/io.hpp"

using namespace levar;
using levar_tests::mat_array;
using levar_tests::vec_array;
using std::int64_t;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

const std::string golden_dir = std::string(LEVAR_TESTS_DIR) + "/golden/";

} // namespace

TEST_CASE("write_array emits the documented byte-exact form") {
    const auto sca = Array<int64_t>::from_buffer(Shape::unit(), {42});
    CHECK(write_array_string(sca) ==
          R"({"data":[42],"format":"levar-v1","level":0,"shape":null})");

    CHECK(write_array_string(vec_array({1, 2, 3})) ==
          R"({"data":[1,2,3],"format":"levar-v1","level":1,"shape":{"extents":[3],"inner":null}})");

    std::ostringstream sink;
    write_array(sca, sink);
    CHECK(sink.str() == write_array_string(sca));
}

TEST_CASE("golden files are byte-exact") {
    CHECK(slurp(golden_dir + "scalar.json") ==
          write_array_string(Array<int64_t>::from_buffer(Shape::unit(), {42})));
    CHECK(slurp(golden_dir + "vector.json") == write_array_string(vec_array({1, 2, 3})));
    CHECK(slurp(golden_dir + "pool_input.json") ==
          write_array_string(mat_array({{1, 2, 5, 6}, {3, 4, 7, 8}})));
    CHECK(slurp(golden_dir + "pool_expected.json") ==
          write_array_string(mat_array({{2, 6}})));

    for (const char* name : {"scalar.json", "vector.json", "pool_input.json"}) {
        const std::string text = slurp(golden_dir + name);
        const auto a = read_array_string(text);
        CHECK(write_array_string(a) == text);
    }
}

TEST_CASE("read_array validates the document") {
    const auto a = read_array_string(
        R"({"data":[1,2,3,4],"format":"levar-v1","level":2,)"
        R"("shape":{"extents":[2,2],"inner":{"extents":[2],"inner":null}}})");
    CHECK(a.shape() == Shape::matrix_of(2, 2));
    CHECK(a.buffer() == std::vector<int64_t>{1, 2, 3, 4});

    // data length vs prod
    CHECK_FAILS(LengthMismatch,
                read_array_string(
                    R"({"data":[1,2],"format":"levar-v1","level":1,)"
                    R"("shape":{"extents":[3],"inner":null}})"));
    // declared level vs shape depth
    CHECK_FAILS(LevelMismatch,
                read_array_string(
                    R"({"data":[1],"format":"levar-v1","level":2,)"
                    R"("shape":{"extents":[1],"inner":null}})"));
    // extents length vs prod(inner)
    CHECK_FAILS(LengthMismatch,
                read_array_string(
                    R"({"data":[1,2,3,4,5,6],"format":"levar-v1","level":2,)"
                    R"("shape":{"extents":[2,3],"inner":{"extents":[3],"inner":null}}})"));
    CHECK_FAILS(FormatError, read_array_string("this is not json"));
    CHECK_FAILS(FormatError,
                read_array_string(R"({"data":[1],"format":"other","level":0,"shape":null})"));
    CHECK_FAILS(FormatError,
                read_array_string(
                    R"({"data":[1.5],"format":"levar-v1","level":0,"shape":null})"));
    CHECK_FAILS(FormatError,
                read_array_string(R"({"format":"levar-v1","level":0,"shape":null})"));
}

TEST_CASE("read after write is the identity") {
    std::mt19937_64 rng(11);
    const std::vector<Shape> shapes = {
        Shape::unit(),
        Shape::vector_of(6),
        Shape::of_axes({0, 2}),
        Shape::of_axes({3, 2, 2}),
        make_shape(3, {{2}, {2, 2}, {2, 1, 2, 2}}),
    };
    for (const Shape& s : shapes) {
        for (int round = 0; round < 20; ++round) {
            const auto a = generate(s, Rand{rng()});
            const auto back = read_array_string(write_array_string(a));
            CHECK(elementwise_equal(back, a));
            CHECK(back.shape() == s);
        }
    }
}

TEST_CASE("generate fills") {
    CHECK(generate(Shape::of_axes({2, 2}), Iota{}).buffer() ==
          std::vector<int64_t>{0, 1, 2, 3});
    CHECK(generate(Shape::unit(), Const{7}).buffer() == std::vector<int64_t>{7});

    const auto r1 = generate(Shape::of_axes({4, 4}), Rand{99});
    const auto r2 = generate(Shape::of_axes({4, 4}), Rand{99});
    CHECK(r1.buffer() == r2.buffer());
    CHECK(r1.buffer() != generate(Shape::of_axes({4, 4}), Rand{100}).buffer());
    for (int64_t x : r1.buffer()) {
        CHECK(x >= 0);
        CHECK(x < (int64_t{1} << 31));
    }
}

TEST_CASE("shape and cut JSON fragments") {
    const Shape s3 = make_shape(3, {{2}, {2, 2}, {1, 2, 3, 4}});
    CHECK(shape_from_json(shape_to_json(s3)) == s3);
    CHECK(shape_to_json(Shape::unit()).is_null());
    CHECK_FAILS(FormatError, shape_from_json(nlohmann::json::parse(R"({"extents":[2]})")));
    CHECK_FAILS(FormatError, shape_from_json(nlohmann::json::parse(R"([2,3])")));
    CHECK_FAILS(FormatError,
                shape_from_json(nlohmann::json::parse(R"({"extents":[-2],"inner":null})")));
    CHECK_FAILS(FormatError,
                read_array_string(R"({"data":[1],"format":"levar-v1","level":0.5,"shape":null})"));
    CHECK_FAILS(LengthMismatch,
                shape_from_json(nlohmann::json::parse(
                    R"({"extents":[2,3],"inner":{"extents":[3],"inner":null}})")));

    CHECK(cut_from_json(Shape::unit(), nlohmann::json(nullptr)) == trivial_cut());
    CHECK(cut_from_json(Shape::vector_of(2), nlohmann::json::parse(R"({"side":1})")) ==
          side_cut(1));
    CHECK(cut_to_json(trivial_cut()).is_null());
    CHECK(cut_to_json(side_cut(1)) == nlohmann::json::parse(R"({"side":1})"));
    CHECK_FAILS(CutMismatch,
                cut_from_json(Shape::vector_of(2), nlohmann::json::parse(R"({"side":2})")));
    const auto parsed =
        cut_from_json(s3, nlohmann::json::parse(R"({"slot":1,"split":2})"));
    CHECK(parsed == slot_cut(s3, 1, 2));
    CHECK(cut_from_json(s3, cut_to_json(parsed)) == parsed);
    CHECK_FAILS(CutMismatch,
                cut_from_json(Shape::vector_of(2), nlohmann::json(nullptr)));
    CHECK_FAILS(CutMismatch,
                cut_from_json(s3, nlohmann::json::parse(R"({"slot":9,"split":0})")));
}
