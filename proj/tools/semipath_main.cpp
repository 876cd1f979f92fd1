// Command-line front-end: semigroup reports, square-diagram rendering,
// path decoding, and census sweeps against the path-counting bounds.
//
// Exit codes: 0 ok, 1 bound/verification failure, 2 usage or parse error,
// 3 invalid semigroup spec, 4 path not the image of any semigroup.

#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "semipath/dyck.hpp"
#include "semipath/enumeration.hpp"
#include "semipath/render.hpp"
#include "semipath/semigroup.hpp"

namespace {

using semipath::DyckPath;
using semipath::NumericalSemigroup;

constexpr int kExitBoundFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBadSemigroup = 3;
constexpr int kExitNotInImage = 4;

struct SemigroupSpec {
    std::vector<int> gaps;
    std::vector<long long> gens;

    NumericalSemigroup build() const {
        if (!gens.empty()) return NumericalSemigroup::from_generators(gens);
        return NumericalSemigroup::from_gaps(gaps);
    }
};

template <typename T>
std::string join(const std::vector<T>& values) {
    std::ostringstream os;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) os << ",";
        os << values[i];
    }
    return os.str();
}

nlohmann::ordered_json report_json(const NumericalSemigroup& s) {
    // Field set and order are frozen; see README.
    nlohmann::ordered_json j;
    j["genus"] = s.genus();
    j["conductor"] = s.conductor();
    j["symmetric"] = s.is_symmetric();
    j["weight"] = s.profile().weight;
    j["path"] = semipath::tau(s).to_string();
    j["gaps"] = s.gaps();
    return j;
}

void print_text_report(const NumericalSemigroup& s, const std::vector<long long>* gens) {
    const semipath::DerivedProfile prof = s.profile();
    std::cout << "gaps:       " << join(s.gaps()) << "\n";
    if (gens != nullptr) std::cout << "generators: " << join(*gens) << "\n";
    std::cout << "genus:      " << s.genus() << "\n";
    std::cout << "conductor:  " << s.conductor() << "\n";
    std::cout << "symmetric:  " << (s.is_symmetric() ? "yes" : "no") << "\n";
    std::cout << "weight:     " << prof.weight << "\n";
    std::cout << "path:       " << semipath::tau(s).to_string() << "\n";
    std::cout << "profile:\n";
    std::cout << std::setw(7) << "i" << std::setw(8) << "lambda" << std::setw(6) << "g(i)"
              << "\n";
    for (std::size_t i = 0; i < prof.lambda.size(); ++i) {
        std::cout << std::setw(7) << i << std::setw(8) << prof.lambda[i] << std::setw(6)
                  << prof.partial_genus[i] << "\n";
    }
}

void print_report(const NumericalSemigroup& s, const std::string& format,
                  const std::vector<long long>* gens) {
    if (format == "json")
        std::cout << report_json(s).dump() << "\n";
    else
        print_text_report(s, gens);
}

int run_info(const SemigroupSpec& spec, const std::string& format) {
    const NumericalSemigroup s = spec.build();
    print_report(s, format, spec.gens.empty() ? nullptr : &spec.gens);
    return 0;
}

int run_path(const SemigroupSpec& spec) {
    std::cout << semipath::tau(spec.build()).to_string() << "\n";
    return 0;
}

int run_render(const SemigroupSpec& spec, bool antidiagonal) {
    std::cout << semipath::render_square_diagram(spec.build(), antidiagonal);
    return 0;
}

int run_decode(const std::string& text, const std::string& format) {
    const DyckPath path = DyckPath::from_string(text);
    const semipath::PathDecodeOutcome outcome = semipath::decode(path);
    if (outcome.rejected_for_closure()) {
        const auto [a, b] = outcome.closure_witness();
        std::cerr << "path rejected: " << a << " + " << b << " = " << a + b
                  << " is missing from the candidate set\n";
        return kExitNotInImage;
    }
    if (outcome.rejected_structurally()) {
        std::cerr << "path rejected: cannot be a genus-" << path.order()
                  << " image (prefix length " << outcome.structural_witness().prefix_index
                  << ")\n";
        return kExitNotInImage;
    }
    print_report(outcome.semigroup(), format, nullptr);
    return 0;
}

int run_census(int genus_max, bool verify_oracle) {
    const char* header_fmt = "genus       total   symmetric    catalan_bound  central_bound"
                             "  bound1  bound2";
    std::cout << header_fmt;
    if (verify_oracle) std::cout << "      oracle  oracle_match";
    std::cout << "\n";

    bool any_fail = false;
    for (int g = 1; g <= genus_max; ++g) {
        const semipath::BoundsRecord rec = semipath::census(g);
        const bool ok1 = rec.total_within_bound();
        const bool ok2 = rec.symmetric_within_bound();
        any_fail = any_fail || !ok1 || !ok2;
        std::cout << std::setw(5) << rec.genus << std::setw(12) << rec.total_count
                  << std::setw(12) << rec.symmetric_count << std::setw(17) << rec.catalan_bound
                  << std::setw(15) << rec.central_binomial_bound << std::setw(8)
                  << (ok1 ? "PASS" : "FAIL") << std::setw(8) << (ok2 ? "PASS" : "FAIL");
        if (verify_oracle) {
            if (g <= semipath::kMaxOracleGenus) {
                const std::uint64_t oracle = semipath::brute_force_oracle(g);
                const bool match = oracle == rec.total_count;
                any_fail = any_fail || !match;
                std::cout << std::setw(12) << oracle << std::setw(14)
                          << (match ? "PASS" : "FAIL");
            } else {
                std::cout << std::setw(12) << "-" << std::setw(14) << "-";
            }
        }
        std::cout << "\n";
    }
    return any_fail ? kExitBoundFailure : 0;
}

void add_spec_options(CLI::App* cmd, SemigroupSpec& spec) {
    CLI::Option_group* group = cmd->add_option_group("semigroup spec");
    group->add_option("--gaps", spec.gaps, "comma-separated gap values")->delimiter(',');
    group->add_option("--gens", spec.gens, "comma-separated generators")->delimiter(',');
    group->require_option(1);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical semigroups and their square-diagram Dyck paths"};
    app.require_subcommand(1);

    SemigroupSpec spec;
    std::string format = "text";
    std::string path_text;
    bool antidiagonal = false;
    bool verify_oracle = false;
    int genus_max = 0;

    CLI::App* info = app.add_subcommand("info", "report on one semigroup");
    add_spec_options(info, spec);
    info->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* path_cmd = app.add_subcommand("path", "print only the path string");
    add_spec_options(path_cmd, spec);

    CLI::App* render = app.add_subcommand("render", "draw the square diagram");
    add_spec_options(render, spec);
    render->add_flag("--antidiagonal", antidiagonal, "overlay the reflection axis");

    CLI::App* decode = app.add_subcommand("decode", "invert a 'U'/'R' path string");
    decode->add_option("path", path_text, "path string over {U, R}")->required();
    decode->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* census = app.add_subcommand("census", "count semigroups per genus vs bounds");
    census->add_option("--genus-max", genus_max, "largest genus to count")
        ->required()
        ->check(CLI::Range(1, semipath::kMaxGenus));
    census->add_flag("--verify-oracle", verify_oracle,
                     "cross-check totals against the subset oracle (genus <= 8)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (info->parsed()) return run_info(spec, format);
        if (path_cmd->parsed()) return run_path(spec);
        if (render->parsed()) return run_render(spec, antidiagonal);
        if (decode->parsed()) return run_decode(path_text, format);
        if (census->parsed()) return run_census(genus_max, verify_oracle);
    } catch (const semipath::PathParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const semipath::InvalidPathError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const semipath::Error& e) {
        // NotClosed / NotCofinite / GenusOutOfRange: bad semigroup spec.
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadSemigroup;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadSemigroup;
    }
    return 0;
}
