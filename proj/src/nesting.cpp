#include "levar/nesting.hpp"

#include <algorithm>

namespace levar {

RankedCut RankedCut::of_side(BoundedNat side) {
    if (side.bound() != 2)
        fail(ErrorKind::CutMismatch, "level-1 cut side must be bounded by 2");
    return RankedCut(Kind::Side, side);
}

RankedCut RankedCut::of_slot(BoundedNat slot, BoundedNat split) {
    return RankedCut(Kind::Slot, slot, split);
}

RankedCut trivial_cut() { return RankedCut::trivial(); }

RankedCut side_cut(std::size_t side) {
    if (side >= 2) fail(ErrorKind::CutMismatch, "cut side must be 0 or 1");
    return RankedCut::of_side(BoundedNat(side, 2));
}

RankedCut slot_cut(const Shape& s, std::size_t slot, std::size_t split) {
    if (s.level() < 2)
        fail(ErrorKind::CutMismatch,
             "slot cuts need level >= 2, shape has level " + std::to_string(s.level()));
    const auto& axes = s.inner().extents();
    if (slot >= axes.size())
        fail(ErrorKind::CutMismatch, "cut slot " + std::to_string(slot) +
                                         " out of range for " + std::to_string(axes.size()) +
                                         " shape-of-shape entries");
    if (split > axes[slot])
        fail(ErrorKind::CutMismatch, "cut split " + std::to_string(split) +
                                         " exceeds extent " + std::to_string(axes[slot]));
    return RankedCut::of_slot(BoundedNat(slot, axes.size()), BoundedNat(split, 1 + axes[slot]));
}

std::size_t cut_count(const Shape& s) {
    if (s.level() == 0) return 1;
    if (s.level() == 1) return 2;
    std::size_t count = 0;
    for (std::size_t e : s.inner().extents()) count += 1 + e;
    return count;
}

std::vector<RankedCut> enumerate_cuts(const Shape& s) {
    std::vector<RankedCut> cuts;
    if (s.level() == 0) {
        cuts.push_back(trivial_cut());
    } else if (s.level() == 1) {
        cuts.push_back(side_cut(0));
        cuts.push_back(side_cut(1));
    } else {
        const auto& axes = s.inner().extents();
        for (std::size_t k = 0; k < axes.size(); ++k)
            for (std::size_t p = 0; p <= axes[k]; ++p)
                cuts.push_back(slot_cut(s, k, p));
    }
    return cuts;
}

namespace {

// Resolved geometry of a cut: the two shapes, plus (at level >= 2) which
// axis positions of s feed the right side.
struct CutParts {
    Shape left;
    Shape right;
    std::vector<bool> to_right;   // one flag per axis position of s; Slot kind only
};

void check_nonempty_sides(const CutParts& parts) {
    for (const Shape* side : {&parts.left, &parts.right})
        for (std::size_t e : side->extents())
            if (e == 0)
                fail(ErrorKind::CutMismatch,
                     "cut would produce a side with a zero extent (empty shape)");
}

CutParts resolve_cut(const Shape& s, const RankedCut& c) {
    CutParts parts;
    if (s.level() == 0) {
        if (c.kind() != RankedCut::Kind::Trivial)
            fail(ErrorKind::CutMismatch, "level-0 shapes take the trivial cut");
        parts.left = Shape::unit();
        parts.right = Shape::unit();
        return parts;
    }
    if (s.level() == 1) {
        if (c.kind() != RankedCut::Kind::Side)
            fail(ErrorKind::CutMismatch, "level-1 shapes take a side cut");
        if (c.side().value() == 0) {
            parts.left = Shape::vector_of(1);
            parts.right = s;
        } else {
            parts.left = s;
            parts.right = Shape::vector_of(1);
        }
        check_nonempty_sides(parts);
        return parts;
    }
    if (c.kind() != RankedCut::Kind::Slot)
        fail(ErrorKind::CutMismatch, "shapes of level >= 2 take a slot cut");
    const Shape& inner = s.inner();
    const auto& axes = inner.extents();
    if (c.slot().bound() != axes.size())
        fail(ErrorKind::CutMismatch, "cut slot bound does not match the shape-of-shape");
    const std::size_t slot = c.slot().value();
    if (c.split().bound() != 1 + axes[slot])
        fail(ErrorKind::CutMismatch, "cut split bound does not match the slot extent");
    const std::size_t split = c.split().value();

    auto axes_left = axes;
    axes_left[slot] = split;
    auto axes_right = axes;
    axes_right[slot] = axes[slot] - split;
    const Shape inner_left = Shape::node(inner.inner(), std::move(axes_left));
    const Shape inner_right = Shape::node(inner.inner(), std::move(axes_right));

    // Each extents entry of s sits at a position of inner's index space;
    // its coordinate at `slot` decides the side.
    const std::size_t n = s.rank();
    parts.to_right.resize(n);
    std::vector<std::size_t> left_extents, right_extents;
    for (std::size_t j = 0; j < n; ++j) {
        const Index pos = offset_to_index(BoundedNat(j, n), inner);
        const bool right = pos.values()[slot] >= split;
        parts.to_right[j] = right;
        (right ? right_extents : left_extents).push_back(s.extents()[j]);
    }
    parts.left = Shape::node(inner_left, std::move(left_extents));
    parts.right = Shape::node(inner_right, std::move(right_extents));
    check_nonempty_sides(parts);
    return parts;
}

} // namespace

std::pair<Shape, Shape> ranked_cut(const Shape& s, const RankedCut& c) {
    CutParts parts = resolve_cut(s, c);
    return {std::move(parts.left), std::move(parts.right)};
}

std::pair<Index, Index> split_index(const Index& iv, const RankedCut& c) {
    const Shape& s = iv.shape();
    const CutParts parts = resolve_cut(s, c);
    if (c.kind() == RankedCut::Kind::Trivial)
        return {make_index(parts.left, {}), make_index(parts.right, {})};
    if (c.kind() == RankedCut::Kind::Side) {
        if (c.side().value() == 0)
            return {make_index(parts.left, {0}), make_index(parts.right, iv.values())};
        return {make_index(parts.left, iv.values()), make_index(parts.right, {0})};
    }
    std::vector<std::size_t> left_values, right_values;
    for (std::size_t j = 0; j < iv.rank(); ++j)
        (parts.to_right[j] ? right_values : left_values).push_back(iv.values()[j]);
    return {make_index(parts.left, left_values), make_index(parts.right, right_values)};
}

Index merge_index(const Index& outer, const Index& inner, const RankedCut& c,
                  const Shape& s) {
    const CutParts parts = resolve_cut(s, c);
    if (outer.shape() != parts.left)
        fail(ErrorKind::BoundMismatch, "outer index does not match the cut's left shape");
    if (inner.shape() != parts.right)
        fail(ErrorKind::BoundMismatch, "inner index does not match the cut's right shape");
    if (c.kind() == RankedCut::Kind::Trivial) return make_index(s, {});
    if (c.kind() == RankedCut::Kind::Side)
        return make_index(s, c.side().value() == 0 ? inner.values() : outer.values());
    std::vector<std::size_t> values(s.rank());
    std::size_t li = 0, ri = 0;
    for (std::size_t j = 0; j < s.rank(); ++j)
        values[j] = parts.to_right[j] ? inner.values()[ri++] : outer.values()[li++];
    return make_index(s, values);
}

} // namespace levar
