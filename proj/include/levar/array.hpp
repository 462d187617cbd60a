#pragma once

#include <functional>
#include <memory>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "levar/shape.hpp"

namespace levar {

// A leveled array: a shape plus content. Content is either Delayed (a pure,
// total index->element function, the imap view) or Materialized (a flat
// row-major buffer of length prod(shape)). Arrays are immutable values;
// copies share buffers. Delayed arrays never cache — callers tabulate for
// reuse.
template <typename E>
class Array {
public:
    using DelayedFn = std::function<E(const Index&)>;
    using Buffer = std::shared_ptr<const std::vector<E>>;

    static Array from_fn(Shape shape, DelayedFn fn) {
        return Array(std::move(shape), std::move(fn));
    }

    static Array from_buffer(Shape shape, std::vector<E> buffer) {
        if (buffer.size() != prod(shape))
            fail(ErrorKind::LengthMismatch,
                 "buffer has " + std::to_string(buffer.size()) + " elements, shape has prod " +
                     std::to_string(prod(shape)));
        return Array(std::move(shape),
                     std::make_shared<const std::vector<E>>(std::move(buffer)));
    }

    const Shape& shape() const noexcept { return shape_; }
    bool materialized() const noexcept { return buffer_ != nullptr; }

    const std::vector<E>& buffer() const {
        if (!buffer_) throw std::logic_error("buffer() on a delayed array; tabulate first");
        return *buffer_;
    }

    E at(const Index& iv) const {
        if (iv.shape() != shape_)
            fail(ErrorKind::BoundMismatch, "index shape does not match array shape");
        if (buffer_) return (*buffer_)[index_to_offset(iv).value()];
        return fn_(iv);
    }

private:
    Array(Shape shape, DelayedFn fn) : shape_(std::move(shape)), fn_(std::move(fn)) {}
    Array(Shape shape, Buffer buffer)
        : shape_(std::move(shape)), buffer_(std::move(buffer)) {}

    Shape shape_;
    DelayedFn fn_;     // set iff delayed
    Buffer buffer_;    // set iff materialized
};

template <typename E>
E sel(const Array<E>& a, const Index& iv) {
    return a.at(iv);
}

// Forces a delayed array into its flat row-major representation. Idempotent
// and cheap on materialized input (shares the buffer).
template <typename E>
Array<E> tabulate(const Array<E>& a) {
    if (a.materialized()) return a;
    const std::size_t total = prod(a.shape());
    std::vector<E> buffer;
    buffer.reserve(total);
    for (std::size_t k = 0; k < total; ++k)
        buffer.push_back(a.at(offset_to_index(BoundedNat(k, total), a.shape())));
    return Array<E>::from_buffer(a.shape(), std::move(buffer));
}

template <typename F, typename E>
auto map(F f, const Array<E>& a) -> Array<std::invoke_result_t<F, E>> {
    using R = std::invoke_result_t<F, E>;
    return Array<R>::from_fn(a.shape(), [f, a](const Index& iv) { return f(a.at(iv)); });
}

template <typename F, typename E>
auto zip_with(F f, const Array<E>& a, const Array<E>& b)
    -> Array<std::invoke_result_t<F, E, E>> {
    using R = std::invoke_result_t<F, E, E>;
    if (a.shape() != b.shape())
        fail(ErrorKind::ShapeMismatch, "zip_with arguments have different shapes");
    return Array<R>::from_fn(a.shape(),
                             [f, a, b](const Index& iv) { return f(a.at(iv), b.at(iv)); });
}

// Fold of all elements. `op` must be associative and commutative with
// identity `unit`; the combination order is unspecified. Empty arrays fold
// to `unit`.
template <typename Op, typename E>
E reduce(Op op, E unit, const Array<E>& a) {
    const Array<E> m = tabulate(a);
    E acc = unit;
    for (const E& x : m.buffer()) acc = op(acc, x);
    return acc;
}

// Element-order-preserving shape change between any two levels with equal
// prod. Under row-major linearization the flat buffer is unchanged; only
// the index space is reinterpreted.
template <typename E>
Array<E> reshape(const Array<E>& a, const Shape& target) {
    if (prod(a.shape()) != prod(target))
        fail(ErrorKind::ProdMismatch,
             "cannot reshape prod " + std::to_string(prod(a.shape())) + " to prod " +
                 std::to_string(prod(target)));
    if (a.materialized()) return Array<E>::from_buffer(target, a.buffer());
    const Shape source = a.shape();
    return Array<E>::from_fn(target, [a, source](const Index& jv) {
        return a.at(offset_to_index(index_to_offset(jv), source));
    });
}

// Prepends an element to a level-1 array; the extent grows by one.
template <typename E>
Array<E> cons(E x, const Array<E>& a) {
    if (a.shape().level() != 1)
        fail(ErrorKind::LevelMismatch,
             "cons needs a level-1 array, got level " + std::to_string(a.shape().level()));
    const Shape grown = Shape::vector_of(a.shape().extents()[0] + 1);
    return Array<E>::from_fn(grown, [x, a](const Index& iv) {
        const std::size_t j = iv.values()[0];
        if (j == 0) return x;
        return a.at(make_index(a.shape(), {j - 1}));
    });
}

// Same shape and same elements; forces both sides.
template <typename E>
bool elementwise_equal(const Array<E>& a, const Array<E>& b) {
    return a.shape() == b.shape() && tabulate(a).buffer() == tabulate(b).buffer();
}

} // namespace levar
