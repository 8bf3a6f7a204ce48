#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "hlnum/hl_table.hpp"
#include "hlnum/table_io.hpp"
#include "hlnum/variety.hpp"
#include "hlnum/verify.hpp"

namespace {

using hlnum::HLTable;
using hlnum::HodgeDiamond;

nlohmann::json load_json(const std::string& path) {
    std::ifstream f(path);
    if (!f)
        throw std::invalid_argument("cannot open file: " + path);
    return nlohmann::json::parse(f);
}

void emit(const std::string& text, const std::string& out_file) {
    if (out_file.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_file, std::ios::binary);
    if (!f)
        throw std::invalid_argument("cannot write file: " + out_file);
    f << text;
}

std::string render_table(const HLTable& t, const std::string& format) {
    if (format == "json")
        return hlnum::table_to_json(t).dump(2) + "\n";
    if (format == "csv")
        return hlnum::render_table_csv(t);
    return hlnum::render_table_pretty(t);
}

std::string render_diamond(const HodgeDiamond& d, const std::string& format) {
    if (format == "json")
        return hlnum::diamond_to_json(d).dump(2) + "\n";
    if (format == "csv")
        return hlnum::render_diamond_csv(d);
    return hlnum::render_diamond_pretty(d);
}

bool table_checks_pass(const HLTable& t) {
    return hlnum::check_euler(t).pass && hlnum::check_duality(t).pass &&
           hlnum::check_support(t).empty();
}

bool print_oracles(const hlnum::VarietySpec& spec) {
    bool all = true;
    for (const auto& line : hlnum::verify_spec(spec)) {
        std::cout << "verify: " << line.name << ": " << (line.pass ? "pass" : "FAIL")
                  << " (" << line.detail << ")\n";
        all = all && line.pass;
    }
    return all;
}

int run_diamond(const std::string& input, const std::string& format,
                const std::string& out_file, bool verify) {
    hlnum::VarietySpec spec = hlnum::parse_variety(load_json(input));
    HodgeDiamond d = hlnum::diamond_of(spec);
    for (const auto& msg : hlnum::validate_diamond(d))
        std::cerr << "warning: " << msg << "\n";
    emit(render_diamond(d, format), out_file);
    if (verify && !print_oracles(spec))
        return 2;
    return 0;
}

int run_cone(const std::string& input, const std::string& format,
             const std::string& out_file, bool verify) {
    hlnum::VarietySpec spec = hlnum::parse_variety(load_json(input));
    HLTable t = hlnum::hl_cone(hlnum::diamond_of(spec));
    emit(render_table(t, format), out_file);
    bool ok = table_checks_pass(t);
    if (verify)
        ok = print_oracles(spec) && ok;
    return ok ? 0 : 2;
}

int run_link(const std::string& input, const std::string& format,
             const std::string& out_file) {
    hlnum::LinkCohomology link = hlnum::parse_link_file(load_json(input));
    for (const auto& msg : link.validate())
        std::cerr << "warning: " << msg << "\n";
    std::vector<std::string> ignored;
    HLTable t = hlnum::hl_from_link(link, &ignored);
    for (const auto& msg : ignored)
        std::cerr << "note: " << msg << "\n";
    emit(render_table(t, format), out_file);
    return table_checks_pass(t) ? 0 : 2;
}

int run_check(const std::string& input, const std::string& format,
              const std::string& out_file) {
    HLTable t = hlnum::parse_table_json(load_json(input));
    emit(render_table(t, format), out_file);
    return table_checks_pass(t) ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hodge-Lyubeznik numbers of isolated cone singularities"};
    app.require_subcommand(1);

    std::string input, format = "pretty", out_file;
    bool verify = false;
    int rc = 0;

    auto add_output_opts = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"pretty", "json", "csv"}))
            ->default_str("pretty");
        sub->add_option("--out", out_file, "write output to a file instead of stdout");
    };

    CLI::App* diamond =
        app.add_subcommand("diamond", "Hodge diamond of a variety spec");
    diamond->add_option("spec", input, "variety spec (JSON file)")->required();
    add_output_opts(diamond);
    diamond->add_flag("--verify", verify, "run the independent cross-checks");
    diamond->callback([&] { rc = run_diamond(input, format, out_file, verify); });

    CLI::App* cone = app.add_subcommand(
        "cone", "refined table of the cone singularity over a variety");
    cone->add_option("spec", input, "variety spec (JSON file)")->required();
    add_output_opts(cone);
    cone->add_flag("--verify", verify, "run the independent cross-checks");
    cone->callback([&] { rc = run_cone(input, format, out_file, verify); });

    CLI::App* link = app.add_subcommand(
        "link", "refined table from a punctual local-cohomology file");
    link->add_option("link", input, "local cohomology (JSON file)")->required();
    add_output_opts(link);
    link->callback([&] { rc = run_link(input, format, out_file); });

    CLI::App* check =
        app.add_subcommand("check", "re-run the identity checkers on a table file");
    check->add_option("table", input, "table (JSON file)")->required();
    add_output_opts(check);
    check->callback([&] { rc = run_check(input, format, out_file); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const nlohmann::json::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
