#include "levar/shape.hpp"

#include <utility>

namespace levar {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::OutOfBounds: return "OutOfBounds";
        case ErrorKind::ArityMismatch: return "ArityMismatch";
        case ErrorKind::BoundMismatch: return "BoundMismatch";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::LevelMismatch: return "LevelMismatch";
        case ErrorKind::EmptyShape: return "EmptyShape";
        case ErrorKind::ProdMismatch: return "ProdMismatch";
        case ErrorKind::ShapeMismatch: return "ShapeMismatch";
        case ErrorKind::CutMismatch: return "CutMismatch";
        case ErrorKind::DimMismatch: return "DimMismatch";
        case ErrorKind::OddExtent: return "OddExtent";
        case ErrorKind::FormatError: return "FormatError";
    }
    return "UnknownError";
}

BoundedNat::BoundedNat(std::size_t value, std::size_t bound)
    : value_(value), bound_(bound) {
    if (value >= bound)
        fail(ErrorKind::OutOfBounds,
             std::to_string(value) + " is not below bound " + std::to_string(bound));
}

Shape::Shape() : inner_(nullptr), level_(0) {}

Shape::Shape(std::shared_ptr<const Shape> inner, std::vector<std::size_t> extents,
             std::size_t level)
    : inner_(std::move(inner)), extents_(std::move(extents)), level_(level) {}

Shape Shape::unit() { return Shape(); }

Shape Shape::node(Shape inner, std::vector<std::size_t> extents) {
    const std::size_t want = prod(inner);
    if (extents.size() != want)
        fail(ErrorKind::LengthMismatch,
             "level-" + std::to_string(inner.level() + 1) + " shape needs " +
                 std::to_string(want) + " extents, got " + std::to_string(extents.size()));
    const std::size_t level = inner.level() + 1;
    return Shape(std::make_shared<const Shape>(std::move(inner)), std::move(extents), level);
}

Shape Shape::vector_of(std::size_t n) { return node(unit(), {n}); }

Shape Shape::matrix_of(std::size_t rows, std::size_t cols) {
    return of_axes({rows, cols});
}

Shape Shape::of_axes(std::vector<std::size_t> axes) {
    const std::size_t rank = axes.size();
    return node(vector_of(rank), std::move(axes));
}

const Shape& Shape::inner() const {
    if (!inner_) fail(ErrorKind::LevelMismatch, "unit shape has no inner shape");
    return *inner_;
}

bool operator==(const Shape& a, const Shape& b) {
    if (a.level_ != b.level_ || a.extents_ != b.extents_) return false;
    if (a.level_ == 0) return true;
    if (a.inner_ == b.inner_) return true;     // shared spine
    return *a.inner_ == *b.inner_;
}

std::size_t prod(const Shape& s) {
    std::size_t p = 1;
    for (std::size_t e : s.extents()) p *= e;
    return p;
}

Shape make_shape(std::size_t level,
                 const std::vector<std::vector<std::size_t>>& extents_per_level) {
    if (extents_per_level.size() != level)
        fail(ErrorKind::LevelMismatch,
             "description has " + std::to_string(extents_per_level.size()) +
                 " levels, expected " + std::to_string(level));
    Shape s = Shape::unit();
    for (const auto& extents : extents_per_level) s = Shape::node(std::move(s), extents);
    return s;
}

BoundedNat Index::component(std::size_t j) const {
    return BoundedNat(values_[j], shape_.extents()[j]);
}

Index make_index(const Shape& s, const std::vector<std::size_t>& components) {
    if (components.size() != s.rank())
        fail(ErrorKind::ArityMismatch,
             "index has " + std::to_string(components.size()) + " components, shape has rank " +
                 std::to_string(s.rank()));
    for (std::size_t j = 0; j < components.size(); ++j)
        if (components[j] >= s.extents()[j])
            fail(ErrorKind::OutOfBounds,
                 "component " + std::to_string(j) + " is " + std::to_string(components[j]) +
                     " but extent is " + std::to_string(s.extents()[j]));
    return Index(s, components);
}

BoundedNat index_to_offset(const Index& iv) {
    const std::size_t total = prod(iv.shape());
    if (total == 0) fail(ErrorKind::EmptyShape, "empty shape has no offsets");
    std::size_t o = 0;
    const auto& extents = iv.shape().extents();
    for (std::size_t j = 0; j < extents.size(); ++j) o = o * extents[j] + iv.values()[j];
    return BoundedNat(o, total);
}

Index offset_to_index(const BoundedNat& o, const Shape& s) {
    const std::size_t total = prod(s);
    if (total == 0) fail(ErrorKind::EmptyShape, "empty shape has no indices");
    if (o.bound() != total)
        fail(ErrorKind::BoundMismatch,
             "offset bound " + std::to_string(o.bound()) + " does not match prod " +
                 std::to_string(total));
    const auto& extents = s.extents();
    std::vector<std::size_t> values(extents.size());
    std::size_t rest = o.value();
    for (std::size_t j = extents.size(); j-- > 0;) {
        values[j] = rest % extents[j];
        rest /= extents[j];
    }
    return Index(s, std::move(values));
}

std::vector<Index> enumerate_indices(const Shape& s) {
    const std::size_t total = prod(s);
    std::vector<Index> out;
    out.reserve(total);
    for (std::size_t k = 0; k < total; ++k)
        out.push_back(offset_to_index(BoundedNat(k, total), s));
    return out;
}

} // namespace levar
