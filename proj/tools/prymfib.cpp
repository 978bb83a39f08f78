// prymfib: discriminants, generality checks and dimension tables for cubic
// fourfolds containing a plane.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "prymfib/cli/commands.hpp"

using namespace prymfib;

namespace {

struct Common {
    std::string input;
    std::string primes;
    std::optional<std::uint64_t> seed;
    std::string format = "human";
    bool timing = false;
};

InputDocument load(const Common& c) {
    std::ifstream in(c.input);
    if (!in) throw InputError(0, 0, "cannot open " + c.input);
    std::stringstream buf;
    buf << in.rdbuf();
    InputDocument doc = parse_input_document(buf.str(), c.input);
    if (!c.primes.empty()) doc.primes = detail::parse_prime_list({c.primes, 0, 1});
    if (c.seed) doc.seed = *c.seed;
    return doc;
}

int emit(const CommandOutput& out, const std::string& format) {
    std::cout << (format == "report" ? out.report.render() : out.human);
    return out.exit_code;
}

void add_format(CLI::App* sub, Common& c) {
    sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"human", "report"}));
}

void add_check_flags(CLI::App* sub, Common& c) {
    sub->add_option("--primes", c.primes, "comma-separated probe primes (overrides the input)");
    sub->add_option("--seed", c.seed, "seed for random coordinate changes (default 0)");
    sub->add_flag("--timing", c.timing, "include per-check wall-clock seconds");
    add_format(sub, c);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cubic fourfolds containing a plane: discriminant curves and fibration invariants"};
    app.require_subcommand(1);
    Common c;
    std::int64_t k = 5, pa = 0, delta = 0;
    std::string example_id, first_curve, second_curve;
    bool list = false, show_input = false;

    auto* disc = app.add_subcommand("discriminant", "print D6 and, with a hyperplane, D_H");
    disc->add_option("--input", c.input, "input document")->required();
    add_format(disc, c);

    auto* check = app.add_subcommand("check", "generality conditions (i)-(iv)");
    check->add_option("--input", c.input, "input document")->required();
    add_check_flags(check, c);

    auto* example = app.add_subcommand("example", "run a built-in worked example");
    example->add_option("id", example_id, "example id");
    example->add_flag("--list", list, "list built-in examples");
    example->add_flag("--show-input", show_input, "print the input document instead of running it");
    add_check_flags(example, c);

    auto* dims = app.add_subcommand("dimensions", "dimension tower over |kH|");
    dims->add_option("--k", k, "multiple of the polarization")->required();
    add_format(dims, c);

    auto* strata = app.add_subcommand("strata", "orbit strata of a compactified Jacobian");
    strata->add_option("--pa", pa, "arithmetic genus")->required();
    strata->add_option("--delta", delta, "number of nodes")->required();
    add_format(strata, c);

    auto* analyze = app.add_subcommand("analyze-curve", "smoothness and intersection profile of two plane curves");
    analyze->add_option("first", first_curve, "first curve")->required();
    analyze->add_option("second", second_curve, "second curve")->required();
    analyze->add_option("--seed", c.seed, "seed (default 0)");
    add_format(analyze, c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitInputError;
    }

    try {
        if (disc->parsed()) return emit(run_discriminant(load(c)), c.format);
        if (check->parsed()) {
            RunSettings s;
            s.timing = c.timing;
            return emit(run_check(load(c), s), c.format);
        }
        if (example->parsed()) {
            if (list || example_id.empty()) {
                for (const auto& e : builtin_examples()) std::cout << e.id << "  " << e.summary << "\n";
                return list ? kExitOk : kExitInputError;
            }
            if (show_input) {
                std::cout << find_builtin(example_id).document;
                return kExitOk;
            }
            RunSettings s;
            s.timing = c.timing;
            const auto primes = c.primes.empty() ? std::vector<std::uint64_t>{} : detail::parse_prime_list({c.primes, 0, 1});
            return emit(run_example(example_id, s, primes, c.seed), c.format);
        }
        if (dims->parsed()) return emit(run_dimensions(k), c.format);
        if (strata->parsed()) return emit(run_strata(pa, delta), c.format);
        if (analyze->parsed()) return emit(run_analyze_curves(first_curve, second_curve, c.seed.value_or(0)), c.format);
    } catch (const InputError& e) {
        std::cerr << "input error: " << (c.input.empty() ? "" : c.input + ": ") << e.what() << "\n";
        return kExitInputError;
    } catch (const BadPrimeError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const DegenerateError& e) {
        std::cerr << "degenerate bundle: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitInputError;
}
