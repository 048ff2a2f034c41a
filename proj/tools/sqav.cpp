#include "sqav/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

int emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "sqav: cannot write " << out_path << "\n";
        return 2;
    }
    out << text;
    return 0;
}

sqav::FormSpec load(const std::string& input) {
    const std::string prefix = "preset:";
    if (input.rfind(prefix, 0) == 0) return sqav::preset_spec(input.substr(prefix.size()));
    return sqav::load_form_spec(input);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Delaunay decompositions, degenerate abelian varieties and their invariants"};
    std::string command, input, out_path;
    bool verify = false;
    long long depth = 0;
    app.add_option("command", command, "star | verify | theta | svg | classify")
        ->required()
        ->check(CLI::IsMember({"star", "verify", "theta", "svg", "classify"}));
    app.add_option("input", input, "form description (JSON file, or preset:NAME)")->required();
    app.add_flag("--verify", verify, "cross-check the star against the lifted-hull construction");
    app.add_option("--depth", depth, "largest degree d for verify (default 3); theta degree (default 2)");
    app.add_option("--out", out_path, "write the report here instead of stdout");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        const sqav::FormSpec spec = load(input);
        if (command == "star") return emit(sqav::star_report(spec, verify), out_path);
        if (command == "theta") return emit(sqav::theta_report(spec, depth ? depth : 2), out_path);
        if (command == "classify") return emit(sqav::classify_report(spec), out_path);
        if (command == "svg") {
            if (out_path.empty()) throw sqav::InvalidArgument("svg needs --out PATH");
            return emit(sqav::tiling_svg(spec), out_path);
        }
        const auto result = sqav::verify_report(spec, depth ? depth : 3);
        if (int rc = emit(result.json, out_path)) return rc;
        return result.passed ? 0 : 1;
    } catch (const sqav::InvariantViolation& e) {
        std::cerr << "sqav: invariant violated: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "sqav: invalid input: " << e.what() << "\n";
        return 2;
    }
}
