#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "levar/error.hpp"

namespace levar {

// A natural number packaged with a strict upper bound. Construction is the
// only place the bound is enforced; a live BoundedNat is trusted everywhere
// downstream.
class BoundedNat {
public:
    BoundedNat(std::size_t value, std::size_t bound);

    std::size_t value() const noexcept { return value_; }
    std::size_t bound() const noexcept { return bound_; }

    friend bool operator==(const BoundedNat&, const BoundedNat&) = default;

private:
    std::size_t value_;
    std::size_t bound_;
};

// Leveled shape: Unit at level 0; above that, a node pairs the shape one
// level down with a flat vector of extents, one entry per position of the
// inner shape's index space (length == prod(inner)). Nesting depth is the
// level. Immutable; copies share the inner spine.
class Shape {
public:
    Shape();                     // unit (level 0)

    static Shape unit();
    // Validates length(extents) == prod(inner); LengthMismatch otherwise.
    static Shape node(Shape inner, std::vector<std::size_t> extents);
    static Shape vector_of(std::size_t n);                  // level 1, [n]
    static Shape matrix_of(std::size_t rows, std::size_t cols);
    static Shape of_axes(std::vector<std::size_t> axes);    // level 2, any rank

    std::size_t level() const noexcept { return level_; }
    bool is_unit() const noexcept { return level_ == 0; }
    const Shape& inner() const;                             // level >= 1 only
    const std::vector<std::size_t>& extents() const noexcept { return extents_; }
    std::size_t rank() const noexcept { return extents_.size(); }

    friend bool operator==(const Shape& a, const Shape& b);
    friend bool operator!=(const Shape& a, const Shape& b) { return !(a == b); }

private:
    Shape(std::shared_ptr<const Shape> inner, std::vector<std::size_t> extents,
          std::size_t level);

    std::shared_ptr<const Shape> inner_;   // null at level 0
    std::vector<std::size_t> extents_;     // empty at level 0
    std::size_t level_;
};

// Total element count: 1 for unit, product of extents otherwise (the empty
// product is 1, any zero extent gives 0).
std::size_t prod(const Shape& s);

// Builds a shape from one extents vector per level, innermost first.
// make_shape(0, {}) is unit; make_shape(2, {{2},{2,2}}) is the 2x2 matrix
// shape. LevelMismatch if the description depth differs from `level`,
// LengthMismatch on any bad extents length.
Shape make_shape(std::size_t level,
                 const std::vector<std::vector<std::size_t>>& extents_per_level);

// An index into a shape's element space. Carries its shape so that indices
// built against one shape cannot address another; component j is bounded by
// extent j. Equality is structural: same shape, same component values.
class Index {
public:
    const Shape& shape() const noexcept { return shape_; }
    const std::vector<std::size_t>& values() const noexcept { return values_; }
    std::size_t rank() const noexcept { return values_.size(); }
    BoundedNat component(std::size_t j) const;

    friend bool operator==(const Index& a, const Index& b) {
        return a.shape_ == b.shape_ && a.values_ == b.values_;
    }
    friend bool operator!=(const Index& a, const Index& b) { return !(a == b); }

private:
    friend Index make_index(const Shape&, const std::vector<std::size_t>&);
    friend Index offset_to_index(const BoundedNat&, const Shape&);

    Index(Shape shape, std::vector<std::size_t> values)
        : shape_(std::move(shape)), values_(std::move(values)) {}

    Shape shape_;
    std::vector<std::size_t> values_;
};

// ArityMismatch on wrong component count, OutOfBounds(j) when components[j]
// is not below extent j.
Index make_index(const Shape& s, const std::vector<std::size_t>& components);

// Bound-checked vector selection; the index's bound must equal the vector
// length, not merely exceed the value.
template <typename E>
const E& lookup_bounded(const std::vector<E>& v, const BoundedNat& i) {
    if (i.bound() != v.size())
        fail(ErrorKind::BoundMismatch,
             "lookup bound " + std::to_string(i.bound()) + " does not match length " +
                 std::to_string(v.size()));
    return v[i.value()];
}

// Row-major linearization: axis 0 is most significant, the last axis varies
// fastest. Unit maps to 0. EmptyShape when prod(shape) == 0 (no index
// exists, so no offset does either).
BoundedNat index_to_offset(const Index& iv);

// Inverse of index_to_offset; o.bound must equal prod(s).
Index offset_to_index(const BoundedNat& o, const Shape& s);

// All valid indices of s in ascending offset order; empty when prod(s) == 0.
std::vector<Index> enumerate_indices(const Shape& s);

} // namespace levar
