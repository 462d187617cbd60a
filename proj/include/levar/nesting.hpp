#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "levar/array.hpp"
#include "levar/shape.hpp"

namespace levar {

// Descriptor for cutting a shape into an (outer, inner) pair. The variant
// depends on the level of the shape it is applied to:
//   level 0:  Trivial — the only cut, (unit, unit).
//   level 1:  Side, bound 2 — side 0 puts the singleton outside
//             ([[1,2,3]]), side 1 inside ([[1],[2],[3]]).
//   level >=2: Slot — `slot` picks a coordinate axis of the shape-of-shape's
//             index space (bound prod(inner(inner))), `split` a cut point
//             along it (bound 1 + inner.extents[slot]). Extents entries
//             whose position has slot-coordinate below the split go left,
//             the rest go right, each side keeping relative row-major
//             order.
// The BoundedNat bounds tie a descriptor to the shape family it was built
// for; every consumer re-checks them and reports CutMismatch.
class RankedCut {
public:
    enum class Kind { Trivial, Side, Slot };

    static RankedCut trivial() { return RankedCut(Kind::Trivial); }
    static RankedCut of_side(BoundedNat side);
    static RankedCut of_slot(BoundedNat slot, BoundedNat split);

    Kind kind() const noexcept { return kind_; }
    const BoundedNat& side() const { return *a_; }
    const BoundedNat& slot() const { return *a_; }
    const BoundedNat& split() const { return *b_; }

    friend bool operator==(const RankedCut&, const RankedCut&) = default;

private:
    explicit RankedCut(Kind kind, std::optional<BoundedNat> a = std::nullopt,
                       std::optional<BoundedNat> b = std::nullopt)
        : kind_(kind), a_(a), b_(b) {}

    Kind kind_;
    std::optional<BoundedNat> a_;
    std::optional<BoundedNat> b_;
};

// Raw-number builders. side_cut/slot_cut validate against the intended use
// and report CutMismatch on misfit; slot_cut needs the shape to derive the
// bounds.
RankedCut trivial_cut();
RankedCut side_cut(std::size_t side);
RankedCut slot_cut(const Shape& s, std::size_t slot, std::size_t split);

// Number of distinct descriptor values for s: 1 at level 0, 2 at level 1,
// sum over slots of (1 + extent) above.
std::size_t cut_count(const Shape& s);

// All descriptor values for s, trivially ordered (side ascending; slot
// major, split minor). Size == cut_count(s).
std::vector<RankedCut> enumerate_cuts(const Shape& s);

// Cuts s into (left, right) with prod(left) * prod(right) == prod(s).
// CutMismatch if c does not fit s, or if a side would end up with a zero
// extent (only possible when prod(s) == 0).
std::pair<Shape, Shape> ranked_cut(const Shape& s, const RankedCut& c);

// Routes the components of iv to the cut sides, bounds rebased; inverse of
// merge_index.
std::pair<Index, Index> split_index(const Index& iv, const RankedCut& c);

// The unique index of s whose split is (outer, inner). BoundMismatch when
// the argument indices do not match ranked_cut(s, c).
Index merge_index(const Index& outer, const Index& inner, const RankedCut& c,
                  const Shape& s);

// Element-preserving nesting: an array over the left shape whose elements
// are arrays over the right shape, with
//   sel(sel(nest(a,c), ov), iv) == sel(a, merge_index(ov, iv, c, shape(a))).
template <typename E>
Array<Array<E>> nest(const Array<E>& a, const RankedCut& c) {
    const Shape s = a.shape();
    const std::pair<Shape, Shape> sides = ranked_cut(s, c);
    const Shape right = sides.second;
    return Array<Array<E>>::from_fn(sides.first, [a, c, s, right](const Index& ov) {
        return Array<E>::from_fn(right, [a, c, s, ov](const Index& iv) {
            return a.at(merge_index(ov, iv, c, s));
        });
    });
}

// Inverse of nest. The outer shape is checked up front; inner block shapes
// are checked up front when n is materialized, at element access otherwise.
template <typename E>
Array<E> unnest(const Array<Array<E>>& n, const RankedCut& c, const Shape& s) {
    const std::pair<Shape, Shape> sides = ranked_cut(s, c);
    const Shape right = sides.second;
    if (n.shape() != sides.first)
        fail(ErrorKind::ShapeMismatch, "outer shape does not match the cut's left shape");
    if (n.materialized())
        for (const Array<E>& block : n.buffer())
            if (block.shape() != right)
                fail(ErrorKind::ShapeMismatch,
                     "inner block shape does not match the cut's right shape");
    return Array<E>::from_fn(s, [n, c, right](const Index& iv) {
        const std::pair<Index, Index> parts = split_index(iv, c);
        const Array<E> block = n.at(parts.first);
        if (block.shape() != right)
            fail(ErrorKind::ShapeMismatch,
                 "inner block shape does not match the cut's right shape");
        return block.at(parts.second);
    });
}

} // namespace levar
