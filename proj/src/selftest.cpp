#include "levar/selftest.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <string>

#include "levar/io.hpp"
#include "levar/kernels.hpp"
#include "levar/nesting.hpp"

namespace levar::selftest {

using std::int64_t;
using std::size_t;

namespace {

std::string shape_key(const Shape& s) {
    if (s.is_unit()) return "u";
    std::string k = shape_key(s.inner()) + "|";
    for (size_t e : s.extents()) k += std::to_string(e) + ",";
    return k;
}

// Accumulates check outcomes for one suite; keeps the first few failure
// notes for the report line.
class Checker {
public:
    void require(bool cond, const char* what) {
        ++checks_;
        if (cond) return;
        ++failures_;
        if (notes_.size() < 3) notes_.push_back(what);
    }

    size_t checks() const { return checks_; }
    size_t failures() const { return failures_; }
    const std::vector<std::string>& notes() const { return notes_; }

private:
    size_t checks_ = 0;
    size_t failures_ = 0;
    std::vector<std::string> notes_;
};

std::vector<Shape> level2_family() {
    std::vector<Shape> out;
    for (size_t d = 0; d <= 3; ++d) {
        std::vector<size_t> extents(d, 0);
        while (true) {
            out.push_back(Shape::of_axes(extents));
            size_t j = d;
            while (j > 0 && extents[j - 1] == 3) extents[--j] = 0;
            if (j == 0) break;
            ++extents[j - 1];
        }
    }
    return out;
}

Array<int64_t> random_array(const Shape& s, std::mt19937_64& rng) {
    return generate(s, Rand{rng()});
}

} // namespace

std::vector<Shape> shape_universe(size_t max_prod, std::uint64_t seed,
                                  size_t level3_target) {
    std::vector<Shape> out;
    std::set<std::string> seen;
    auto add = [&](const Shape& s) {
        if (prod(s) <= max_prod && seen.insert(shape_key(s)).second) out.push_back(s);
    };

    add(Shape::unit());
    for (size_t e = 0; e <= 3; ++e) add(Shape::vector_of(e));
    const std::vector<Shape> level2 = level2_family();
    for (const Shape& s : level2) add(s);

    // Level 3: extents vectors can have up to prod(level-2 shape) = 27
    // entries, so enumeration is out; sample mostly-1 vectors instead.
    std::mt19937_64 rng(seed);
    const size_t before = out.size();
    for (size_t attempt = 0; attempt < 20000 && out.size() - before < level3_target;
         ++attempt) {
        const Shape& inner = level2[rng() % level2.size()];
        std::vector<size_t> extents(prod(inner), 1);
        const size_t specials = extents.empty() ? 0 : rng() % 10;
        for (size_t k = 0; k < specials; ++k)
            extents[rng() % extents.size()] = rng() % 8 == 0 ? 0 : 2 + rng() % 2;
        add(Shape::node(inner, std::move(extents)));
    }
    return out;
}

namespace {

void suite_bounded_nat(Checker& ck, std::mt19937_64&, const std::vector<Shape>&) {
    for (size_t bound = 0; bound <= 8; ++bound) {
        for (size_t value = 0; value <= 10; ++value) {
            bool threw = false;
            try {
                BoundedNat probe(value, bound);
                ck.require(probe.value() == value && probe.bound() == bound,
                           "constructed BoundedNat keeps its fields");
            } catch (const Error& e) {
                threw = true;
                ck.require(e.kind() == ErrorKind::OutOfBounds,
                           "BoundedNat failure is OutOfBounds");
            }
            ck.require(threw == (value >= bound), "BoundedNat accepts iff value < bound");
        }
    }
}

void suite_offset_bijection(Checker& ck, std::mt19937_64&, const std::vector<Shape>& shapes) {
    for (const Shape& s : shapes) {
        const size_t total = prod(s);
        if (total == 0) {
            ck.require(enumerate_indices(s).empty(), "empty shape enumerates no indices");
            continue;
        }
        for (size_t o = 0; o < total; ++o) {
            const BoundedNat off(o, total);
            ck.require(index_to_offset(offset_to_index(off, s)) == off,
                       "offset -> index -> offset round trip");
        }
        for (const Index& iv : enumerate_indices(s))
            ck.require(offset_to_index(index_to_offset(iv), s) == iv,
                       "index -> offset -> index round trip");
    }
}

void suite_enumerate_order(Checker& ck, std::mt19937_64&, const std::vector<Shape>& shapes) {
    for (const Shape& s : shapes) {
        const auto indices = enumerate_indices(s);
        ck.require(indices.size() == prod(s), "enumerate_indices has prod(s) entries");
        for (size_t k = 0; k < indices.size(); ++k)
            ck.require(index_to_offset(indices[k]).value() == k,
                       "enumerate_indices is in ascending offset order");
    }
}

void suite_index_equality(Checker& ck, std::mt19937_64&, const std::vector<Shape>& shapes) {
    for (const Shape& s : shapes) {
        if (prod(s) == 0 || prod(s) > 16) continue;
        const auto indices = enumerate_indices(s);
        for (const Index& iv : indices) {
            for (const Index& jv : indices) {
                const bool same_offset =
                    index_to_offset(iv).value() == index_to_offset(jv).value();
                ck.require((iv == jv) == same_offset,
                           "structural equality agrees with offset equality");
                ck.require((iv == jv) == (jv == iv), "index equality is symmetric");
            }
            ck.require(iv == iv, "index equality is reflexive");
        }
    }
}

void suite_sel_tabulate(Checker& ck, std::mt19937_64& rng, const std::vector<Shape>& shapes) {
    for (const Shape& s : shapes) {
        if (prod(s) > 64) continue;
        const Array<int64_t> m = random_array(s, rng);
        const Array<int64_t> a = Array<int64_t>::from_fn(
            s, [m](const Index& iv) { return m.at(iv) * 3 - 1; });
        const Array<int64_t> t = tabulate(a);
        ck.require(t.shape() == a.shape(), "tabulate preserves the shape");
        ck.require(t.materialized(), "tabulate materializes");
        for (const Index& iv : enumerate_indices(s)) {
            ck.require(t.at(iv) == a.at(iv), "tabulated selection matches delayed");
            // an independently built but equal index selects the same element
            const Index jv = make_index(s, iv.values());
            ck.require(iv == jv && t.at(jv) == t.at(iv) && a.at(jv) == a.at(iv),
                       "equal indices select equal elements");
        }
        const Array<int64_t> tt = tabulate(t);
        ck.require(tt.buffer() == t.buffer(), "tabulate is idempotent");
    }
}

void suite_functor_laws(Checker& ck, std::mt19937_64& rng, const std::vector<Shape>& shapes) {
    const auto f = [](int64_t x) { return 3 * x + 1; };
    const auto g = [](int64_t x) { return x - 7; };
    for (const Shape& s : shapes) {
        if (prod(s) > 64) continue;
        const Array<int64_t> a = random_array(s, rng);
        ck.require(elementwise_equal(map([](int64_t x) { return x; }, a), a),
                   "map(id) == id");
        const auto composed = map([&](int64_t x) { return f(g(x)); }, a);
        ck.require(elementwise_equal(composed, map(f, map(g, a))),
                   "map(f.g) == map(f) . map(g)");
        ck.require(map(f, a).shape() == a.shape(), "map preserves the shape");
    }
}

void suite_zip_with_laws(Checker& ck, std::mt19937_64& rng, const std::vector<Shape>& shapes) {
    for (const Shape& s : shapes) {
        if (prod(s) > 64) continue;
        const auto a = random_array(s, rng);
        const auto b = random_array(s, rng);
        const auto c = random_array(s, rng);
        ck.require(elementwise_equal(plus(a, b), plus(b, a)), "plus is commutative");
        ck.require(elementwise_equal(plus(plus(a, b), c), plus(a, plus(b, c))),
                   "plus is associative");
        const auto zeros = generate(s, Const{0});
        ck.require(elementwise_equal(plus(a, zeros), a), "zeros are the unit of plus");
    }
}

void suite_reshape_conservation(Checker& ck, std::mt19937_64& rng,
                                const std::vector<Shape>& shapes) {
    std::map<size_t, std::vector<Shape>> by_prod;
    for (const Shape& s : shapes)
        if (prod(s) <= 64) by_prod[prod(s)].push_back(s);
    for (const auto& [p, group] : by_prod) {
        const size_t limit = std::min<size_t>(group.size(), 12);
        for (size_t i = 0; i < limit; ++i) {
            const Array<int64_t> a = random_array(group[i], rng);
            for (size_t j = 0; j < limit; ++j) {
                const Array<int64_t> r = reshape(a, group[j]);
                ck.require(tabulate(r).buffer() == tabulate(a).buffer(),
                           "reshape preserves the row-major buffer");
                ck.require(elementwise_equal(reshape(r, group[i]), a),
                           "reshape round trip is the identity");
            }
        }
    }
}

void suite_cut_counts(Checker& ck, std::mt19937_64&, const std::vector<Shape>& shapes) {
    ck.require(cut_count(Shape::unit()) == 1, "level-0 shapes have one cut");
    for (const Shape& s : shapes) {
        ck.require(enumerate_cuts(s).size() == cut_count(s),
                   "enumerate_cuts matches cut_count");
        if (s.level() == 1) ck.require(cut_count(s) == 2, "level-1 shapes have two cuts");
        if (s.level() == 2)
            ck.require(cut_count(s) == s.rank() + 1, "level-2 rank-d shapes have d+1 cuts");
        if (s.level() == 3) {
            size_t want = 0;
            for (size_t e : s.inner().extents()) want += 1 + e;
            ck.require(cut_count(s) == want, "level-3 cut count sums (1 + extent) per slot");
        }
    }
}

void suite_cut_multiplicativity(Checker& ck, std::mt19937_64&,
                                const std::vector<Shape>& shapes) {
    for (const Shape& s : shapes) {
        for (const RankedCut& c : enumerate_cuts(s)) {
            if (prod(s) == 0) {
                bool threw = false;
                try {
                    ranked_cut(s, c);
                } catch (const Error& e) {
                    threw = e.kind() == ErrorKind::CutMismatch;
                }
                ck.require(threw, "cutting an empty shape is CutMismatch");
                continue;
            }
            const auto [left, right] = ranked_cut(s, c);
            ck.require(prod(left) * prod(right) == prod(s),
                       "prod(left) * prod(right) == prod(s)");
        }
    }
}

void suite_split_merge(Checker& ck, std::mt19937_64&, const std::vector<Shape>& shapes) {
    for (const Shape& s : shapes) {
        if (s.level() == 0 || prod(s) == 0 || prod(s) > 256) continue;
        for (const RankedCut& c : enumerate_cuts(s)) {
            const auto [left, right] = ranked_cut(s, c);
            for (const Index& iv : enumerate_indices(s)) {
                const auto [ov, riv] = split_index(iv, c);
                ck.require(ov.shape() == left && riv.shape() == right,
                           "split_index lands on the cut shapes");
                ck.require(merge_index(ov, riv, c, s) == iv, "merge after split is identity");
            }
            for (const Index& ov : enumerate_indices(left)) {
                for (const Index& riv : enumerate_indices(right)) {
                    const Index merged = merge_index(ov, riv, c, s);
                    const auto [ov2, riv2] = split_index(merged, c);
                    ck.require(ov2 == ov && riv2 == riv, "split after merge is identity");
                }
            }
        }
    }
}

void suite_nest_preservation(Checker& ck, std::mt19937_64& rng,
                             const std::vector<Shape>& shapes) {
    for (const Shape& s : shapes) {
        if (s.level() == 0 || prod(s) == 0 || prod(s) > 256) continue;
        const Array<int64_t> a = random_array(s, rng);
        for (const RankedCut& c : enumerate_cuts(s)) {
            const auto [left, right] = ranked_cut(s, c);
            const auto nested = nest(a, c);
            ck.require(nested.shape() == left, "nest's outer shape is the left cut");
            for (const Index& ov : enumerate_indices(left)) {
                const Array<int64_t> block = nested.at(ov);
                ck.require(block.shape() == right, "nest's inner shape is the right cut");
                for (const Index& riv : enumerate_indices(right))
                    ck.require(block.at(riv) == a.at(merge_index(ov, riv, c, s)),
                               "nested selection matches merged selection");
            }
            ck.require(elementwise_equal(unnest(nested, c, s), a),
                       "unnest undoes nest");
        }
    }
}

void suite_pooling(Checker& ck, std::mt19937_64& rng, const std::vector<Shape>&) {
    for (size_t m = 0; m <= 4; ++m) {
        for (size_t n = 0; n <= 4; ++n) {
            const Shape s = Shape::matrix_of(2 * m, 2 * n);
            const Array<int64_t> a = random_array(s, rng);
            ck.require(elementwise_equal(avgp_nested(a), avgp_direct(a)),
                       "avgp_nested == avgp_direct (exhaustive small)");
        }
    }
    for (size_t round = 0; round < 200; ++round) {
        const size_t m = 1 + rng() % 8;
        const size_t n = 1 + rng() % 8;
        const Array<int64_t> a = random_array(Shape::matrix_of(2 * m, 2 * n), rng);
        ck.require(elementwise_equal(avgp_nested(a), avgp_direct(a)),
                   "avgp_nested == avgp_direct (random)");
    }
}

void suite_matmul(Checker& ck, std::mt19937_64& rng, const std::vector<Shape>&) {
    const auto small = [](int64_t x) { return x % 1000; };   // keep products in range
    for (size_t round = 0; round < 500; ++round) {
        const size_t m = 1 + rng() % 5;
        const size_t p = 1 + rng() % 5;
        const size_t n = 1 + rng() % 5;
        const Array<int64_t> a = tabulate(map(small, random_array(Shape::matrix_of(m, p), rng)));
        const Array<int64_t> b = tabulate(map(small, random_array(Shape::matrix_of(p, n), rng)));
        const Array<int64_t> got = tabulate(matmul(a, b));
        const Array<int64_t> am = tabulate(a);
        const Array<int64_t> bm = tabulate(b);
        const auto& av = am.buffer();
        const auto& bv = bm.buffer();
        bool same = true;
        for (size_t i = 0; i < m; ++i) {
            for (size_t j = 0; j < n; ++j) {
                int64_t acc = 0;
                for (size_t k = 0; k < p; ++k) acc += av[i * p + k] * bv[k * n + j];
                same = same && got.buffer()[i * n + j] == acc;
            }
        }
        ck.require(same, "matmul agrees with the triple loop");
    }
    for (size_t d = 1; d <= 4; ++d) {
        const Array<int64_t> a = random_array(Shape::matrix_of(d, d), rng);
        Array<int64_t> eye = Array<int64_t>::from_fn(
            Shape::matrix_of(d, d),
            [](const Index& iv) { return iv.values()[0] == iv.values()[1] ? 1 : 0; });
        ck.require(elementwise_equal(matmul(eye, a), a), "matmul(I, A) == A");
        ck.require(elementwise_equal(matmul(a, eye), a), "matmul(A, I) == A");
    }
}

void suite_format_roundtrip(Checker& ck, std::mt19937_64& rng,
                            const std::vector<Shape>& shapes) {
    size_t rounds = 0;
    for (const Shape& s : shapes) {
        if (prod(s) > 64 || rounds >= 100) continue;
        ++rounds;
        const Array<int64_t> a = random_array(s, rng);
        const std::string text = write_array_string(a);
        const Array<int64_t> back = read_array_string(text);
        ck.require(elementwise_equal(back, a), "read after write is the identity");
        ck.require(write_array_string(back) == text, "write after read is byte identical");
        ck.require(back.shape() == s, "read shape passes validation");
    }
    ck.require(elementwise_equal(generate(Shape::of_axes({3, 3}), Rand{17}),
                                 generate(Shape::of_axes({3, 3}), Rand{17})),
               "generate is deterministic per seed");
    for (const char* bad : {
             "not json at all",
             R"({"data":[1],"format":"levar-v2","level":0,"shape":null})",
             R"({"data":[1,2],"format":"levar-v1","level":1,"shape":{"extents":[3],"inner":null}})",
             R"({"data":[1],"format":"levar-v1","level":2,"shape":{"extents":[1],"inner":null}})",
         }) {
        bool threw = false;
        try {
            read_array_string(bad);
        } catch (const Error&) {
            threw = true;
        }
        ck.require(threw, "malformed documents are rejected");
    }
}

} // namespace

Report run_all(std::uint64_t seed, std::ostream& out) {
    struct Suite {
        const char* name;
        void (*body)(Checker&, std::mt19937_64&, const std::vector<Shape>&);
    };
    const Suite suites[] = {
        {"bounded-nat-construction", suite_bounded_nat},
        {"offset-index-bijection", suite_offset_bijection},
        {"enumerate-indices-order", suite_enumerate_order},
        {"index-equality", suite_index_equality},
        {"sel-tabulate-consistency", suite_sel_tabulate},
        {"functor-laws", suite_functor_laws},
        {"zip-with-plus-laws", suite_zip_with_laws},
        {"reshape-conservation", suite_reshape_conservation},
        {"cut-counts", suite_cut_counts},
        {"cut-multiplicativity", suite_cut_multiplicativity},
        {"split-merge-bijection", suite_split_merge},
        {"nest-element-preservation", suite_nest_preservation},
        {"pooling-equivalence", suite_pooling},
        {"matmul-oracle", suite_matmul},
        {"format-roundtrip", suite_format_roundtrip},
    };

    const std::vector<Shape> shapes = shape_universe(1024, seed);
    Report report;
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    for (const Suite& suite : suites) {
        Checker ck;
        suite.body(ck, rng, shapes);
        report.checks_passed += ck.checks() - ck.failures();
        report.checks_failed += ck.failures();
        if (ck.failures() == 0) {
            ++report.suites_passed;
            out << "[PASS] " << suite.name << " (" << ck.checks() << " checks)\n";
        } else {
            ++report.suites_failed;
            out << "[FAIL] " << suite.name << " (" << ck.failures() << " of " << ck.checks()
                << " checks failed)";
            for (const auto& note : ck.notes()) out << "\n       first: " << note;
            out << "\n";
        }
    }
    out << (report.ok() ? "selftest passed" : "selftest FAILED") << ": "
        << report.suites_passed << "/" << (report.suites_passed + report.suites_failed)
        << " suites, " << report.checks_passed << " checks passed, " << report.checks_failed
        << " failed\n";
    return report;
}

} // namespace levar::selftest
