#include "levar/kernels.hpp"

#include <functional>

#include "levar/nesting.hpp"

namespace levar {

using std::int64_t;

Array<int64_t> plus(const Array<int64_t>& a, const Array<int64_t>& b) {
    return zip_with(std::plus<int64_t>(), a, b);
}

namespace {

void require_matrix(const Array<int64_t>& a, const char* who) {
    if (a.shape().level() != 2)
        fail(ErrorKind::LevelMismatch, std::string(who) + " needs level-2 arrays, got level " +
                                           std::to_string(a.shape().level()));
    if (a.shape().rank() != 2)
        fail(ErrorKind::DimMismatch, std::string(who) + " needs rank-2 arrays, got rank " +
                                         std::to_string(a.shape().rank()));
}

int64_t sum(const Array<int64_t>& a) { return reduce(std::plus<int64_t>(), int64_t{0}, a); }

} // namespace

Array<int64_t> matmul(const Array<int64_t>& a, const Array<int64_t>& b) {
    require_matrix(a, "matmul");
    require_matrix(b, "matmul");
    const std::size_t m = a.shape().extents()[0];
    const std::size_t p = a.shape().extents()[1];
    const std::size_t n = b.shape().extents()[1];
    if (b.shape().extents()[0] != p)
        fail(ErrorKind::DimMismatch,
             "inner dimensions disagree: " + std::to_string(p) + " vs " +
                 std::to_string(b.shape().extents()[0]));
    return Array<int64_t>::from_fn(Shape::matrix_of(m, n), [a, b, p](const Index& iv) {
        const std::size_t i = iv.values()[0];
        const std::size_t j = iv.values()[1];
        // the row-by-column product as a delayed level-1 array, then summed
        const auto t = Array<int64_t>::from_fn(
            Shape::vector_of(p), [a, b, i, j](const Index& kv) {
                const std::size_t k = kv.values()[0];
                return a.at(make_index(a.shape(), {i, k})) *
                       b.at(make_index(b.shape(), {k, j}));
            });
        return sum(t);
    });
}

namespace {

std::pair<std::size_t, std::size_t> pooled_extents(const Array<int64_t>& a) {
    require_matrix(a, "avgp");
    const auto& e = a.shape().extents();
    if (e[0] % 2 != 0 || e[1] % 2 != 0)
        fail(ErrorKind::OddExtent, "pooling needs even extents, got " + std::to_string(e[0]) +
                                       "x" + std::to_string(e[1]));
    return {e[0] / 2, e[1] / 2};
}

} // namespace

Array<int64_t> avgp_direct(const Array<int64_t>& a) {
    const auto [m, n] = pooled_extents(a);
    return Array<int64_t>::from_fn(Shape::matrix_of(m, n), [a](const Index& iv) {
        const std::size_t i = iv.values()[0];
        const std::size_t j = iv.values()[1];
        const auto window = Array<int64_t>::from_fn(
            Shape::matrix_of(2, 2), [a, i, j](const Index& wv) {
                return a.at(make_index(a.shape(),
                                       {2 * i + wv.values()[0], 2 * j + wv.values()[1]}));
            });
        return sum(window) / 4;
    });
}

Array<int64_t> avgp_nested(const Array<int64_t>& a) {
    const auto [m, n] = pooled_extents(a);
    const Shape result_shape = Shape::matrix_of(m, n);
    // An empty input admits no cut (cuts reject zero-extent sides), and has
    // nothing to pool anyway.
    if (prod(a.shape()) == 0) return Array<int64_t>::from_buffer(result_shape, {});
    const Shape blocked = make_shape(3, {{2}, {2, 2}, {m, 2, n, 2}});
    const Array<int64_t> a3 = reshape(a, blocked);
    const Array<Array<int64_t>> nested = nest(a3, slot_cut(blocked, 1, 1));
    const auto averaged =
        map([](const Array<int64_t>& block) { return sum(block) / 4; }, nested);
    return reshape(averaged, result_shape);
}

} // namespace levar
