#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "levar/io.hpp"
#include "levar/kernels.hpp"
#include "levar/nesting.hpp"
#include "levar/selftest.hpp"

namespace {

using levar::Array;
using levar::Shape;
using nlohmann::json;
using std::int64_t;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Array<int64_t> load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open file: " + path);
    return levar::read_array(in);
}

// Files get the exact document bytes; stdout gets them plus a newline.
void store(const Array<int64_t>& a, const std::string& path) {
    const std::string text = levar::write_array_string(a);
    if (path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot open file: " + path);
    out << text;
}

json parse_fragment(const std::string& text, const char* what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        levar::fail(levar::ErrorKind::FormatError, std::string(what) + " is not valid JSON");
    return j;
}

levar::Fill parse_fill(const std::string& spec) {
    if (spec == "iota") return levar::Iota{};
    if (spec.rfind("const:", 0) == 0)
        return levar::Const{std::stoll(spec.substr(6))};
    if (spec.rfind("rand:", 0) == 0)
        return levar::Rand{std::stoull(spec.substr(5))};
    throw UsageError("--fill must be iota, const:V, or rand:SEED");
}

std::string preview(const std::vector<int64_t>& data, std::size_t limit = 16) {
    std::ostringstream out;
    out << "[";
    for (std::size_t k = 0; k < data.size() && k < limit; ++k) {
        if (k) out << ",";
        out << data[k];
    }
    if (data.size() > limit) out << ",...";
    out << "]";
    return out.str();
}

std::string index_label(const levar::Index& iv) {
    std::string s = "[";
    for (std::size_t j = 0; j < iv.rank(); ++j) {
        if (j) s += ",";
        s += std::to_string(iv.values()[j]);
    }
    return s + "]";
}

void run_show(const std::string& file) {
    const auto a = load(file);
    std::cout << "format: levar-v1\n"
              << "level: " << a.shape().level() << "\n"
              << "shape: " << levar::shape_to_json(a.shape()).dump() << "\n"
              << "prod: " << prod(a.shape()) << "\n"
              << "data: " << preview(a.buffer()) << "\n";
}

void run_cut(const std::string& file, const std::string& cut_text) {
    const auto a = load(file);
    const auto cut = levar::cut_from_json(a.shape(), parse_fragment(cut_text, "--cut"));
    const auto [left, right] = levar::ranked_cut(a.shape(), cut);
    std::cout << "cut_count: " << levar::cut_count(a.shape()) << "\n"
              << "left: " << levar::shape_to_json(left).dump() << "\n"
              << "right: " << levar::shape_to_json(right).dump() << "\n";
}

void run_nest(const std::string& file, const std::string& cut_text) {
    const auto a = load(file);
    const auto cut = levar::cut_from_json(a.shape(), parse_fragment(cut_text, "--cut"));
    const auto nested = levar::nest(a, cut);
    const auto [left, right] = levar::ranked_cut(a.shape(), cut);
    std::cout << "outer: " << levar::shape_to_json(left).dump() << "\n"
              << "inner: " << levar::shape_to_json(right).dump() << "\n";
    for (const auto& ov : levar::enumerate_indices(left)) {
        const auto block = levar::tabulate(nested.at(ov));
        std::cout << "block " << index_label(ov) << ": " << preview(block.buffer(), 64)
                  << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"arrays with levels: leveled shapes, ranked cuts, pooling kernels"};
    app.require_subcommand(1);

    std::string file_a, file_b, out_path, shape_text, cut_text, fill_spec = "iota";
    bool direct = false;
    std::uint64_t seed = 1;

    auto* show = app.add_subcommand("show", "print level, shape, prod and a data preview");
    show->add_option("file", file_a, "levar-v1 file")->required();

    auto* gen = app.add_subcommand("gen", "generate an array");
    gen->add_option("--shape", shape_text, "shape as a JSON fragment")->required();
    gen->add_option("--fill", fill_spec, "iota | const:V | rand:SEED");
    gen->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* add = app.add_subcommand("add", "elementwise sum of two arrays");
    add->add_option("a", file_a)->required();
    add->add_option("b", file_b)->required();
    add->add_option("-o,--output", out_path);

    auto* sum = app.add_subcommand("sum", "print the sum of all elements");
    sum->add_option("file", file_a)->required();

    auto* reshape_cmd = app.add_subcommand("reshape", "reshape to a prod-equal shape");
    reshape_cmd->add_option("file", file_a)->required();
    reshape_cmd->add_option("--shape", shape_text, "target shape JSON")->required();
    reshape_cmd->add_option("-o,--output", out_path);

    auto* cut = app.add_subcommand("cut", "show a ranked cut of the array's shape");
    cut->add_option("file", file_a)->required();
    cut->add_option("--cut", cut_text, "cut JSON: null | {\"side\":N} | {\"slot\":I,\"split\":K}")
        ->required();

    auto* nest_cmd = app.add_subcommand("nest", "nest the array along a ranked cut");
    nest_cmd->add_option("file", file_a)->required();
    nest_cmd->add_option("--cut", cut_text)->required();

    auto* pool = app.add_subcommand("pool", "2x2 average pooling (nested formulation)");
    pool->add_option("file", file_a)->required();
    pool->add_flag("--direct", direct, "use the index-arithmetic formulation");
    pool->add_option("-o,--output", out_path);

    auto* mm = app.add_subcommand("matmul", "matrix product");
    mm->add_option("a", file_a)->required();
    mm->add_option("b", file_b)->required();
    mm->add_option("-o,--output", out_path);

    auto* selftest = app.add_subcommand("selftest", "run the property suites");
    selftest->add_option("--seed", seed, "seed for the randomized suites");

    try {
        app.parse(argc, argv);

        if (show->parsed()) {
            run_show(file_a);
        } else if (gen->parsed()) {
            const Shape s = levar::shape_from_json(parse_fragment(shape_text, "--shape"));
            store(levar::generate(s, parse_fill(fill_spec)), out_path);
        } else if (add->parsed()) {
            store(levar::plus(load(file_a), load(file_b)), out_path);
        } else if (sum->parsed()) {
            std::cout << levar::reduce(std::plus<int64_t>(), int64_t{0}, load(file_a))
                      << "\n";
        } else if (reshape_cmd->parsed()) {
            const Shape s = levar::shape_from_json(parse_fragment(shape_text, "--shape"));
            store(levar::reshape(load(file_a), s), out_path);
        } else if (cut->parsed()) {
            run_cut(file_a, cut_text);
        } else if (nest_cmd->parsed()) {
            run_nest(file_a, cut_text);
        } else if (pool->parsed()) {
            const auto a = load(file_a);
            store(direct ? levar::avgp_direct(a) : levar::avgp_nested(a), out_path);
        } else if (mm->parsed()) {
            store(levar::matmul(load(file_a), load(file_b)), out_path);
        } else if (selftest->parsed()) {
            return levar::selftest::run_all(seed, std::cout).ok() ? 0 : 1;
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
            app.exit(e);
            return 0;
        }
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const levar::Error& e) {
        std::cerr << e.what() << "\n";
        return e.kind() == levar::ErrorKind::FormatError ? 3 : 2;
    } catch (const UsageError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
