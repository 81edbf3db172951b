#include <fstream>
#include <iomanip>
#include <iostream>

#include <CLI11.hpp>

#include "fockalg/suites.hpp"

using namespace fockalg;

namespace {

void print_table(const SuiteReport& rep) {
    std::cout << "suite " << rep.suite << "  seed " << rep.seed << "\n";
    std::cout << "t1=" << to_string(rep.params.t1) << " t2=" << to_string(rep.params.t2)
              << " q=" << to_string(rep.params.q) << "\n";
    for (const auto& c : rep.checks)
        std::cout << (c.pass ? "  pass  " : "  FAIL  ") << c.name << "\n";
    std::cout << (rep.passed() ? "PASS" : "FAIL") << "  (" << std::fixed << std::setprecision(1)
              << rep.duration_ms << " ms)\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of Fock-space vertex operator identities"};
    std::string suite;
    SuiteOptions opts;
    std::string q_text, params_file;
    bool as_json = false, as_table = false;
    app.add_option("--suite", suite, "suite to run")->required();
    app.add_option("--seed", opts.seed, "parameter seed");
    app.add_option("--degree-cap", opts.degree_cap, "maximum Fock degree")->check(CLI::Range(1, 12));
    app.add_option("--rank", opts.rank, "number of Fock factors")->check(CLI::Range(1, 3));
    app.add_option("--q", q_text, "quantum parameter as num/den");
    app.add_option("--params-file", params_file, "JSON parameter pack")->check(CLI::ExistingFile);
    auto* j = app.add_flag("--json", as_json, "JSON report");
    app.add_flag("--table", as_table, "table report")->excludes(j);
    app.add_option("--golden", opts.golden_dir, "golden directory");
    app.add_flag("--record", opts.record, "write golden files instead of comparing");
    app.add_flag("--modified-sign", opts.modified_sign, "use (-1)^n q");
    try {
        app.parse(argc, argv);
        if (!is_suite(suite)) throw CLI::ValidationError("--suite", "unknown suite '" + suite + "'");
        if (!q_text.empty()) opts.q = parse_rational(q_text);
        if (!params_file.empty()) {
            std::ifstream in(params_file);
            opts.params = params_from_json(nlohmann::json::parse(in));
        }
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    try {
        SuiteReport rep = run_suite(suite, opts);
        if (as_json)
            std::cout << rep.to_json().dump(2) << "\n";
        else
            print_table(rep);
        return rep.passed() ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
