#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "yforge/geom.hpp"
#include "yforge/report.hpp"

using namespace yforge;

namespace {

void print_report(const SuiteReport& rep, bool verbose) {
    for (auto& c : rep.checks) {
        const char* tag = c.status == CheckResult::Status::pass
                              ? "PASS"
                              : (c.status == CheckResult::Status::fail ? "FAIL" : "SKIP");
        if (!verbose && c.status == CheckResult::Status::pass) continue;
        std::cout << "[" << tag << "] " << c.id;
        if (!c.params.empty()) std::cout << "  (" << c.params << ")";
        if (c.status != CheckResult::Status::pass || verbose)
            std::cout << "  -- " << c.residual;
        std::cout << "  [" << static_cast<long>(c.wall_ms) << " ms]\n";
    }
    std::cout << rep.summary_line() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification engine for the shuffle/Yangian/W-algebra formula layer"};
    app.require_subcommand(1);

    std::string suite = "all";
    SuiteParams params;
    std::string quiver_path, json_path;
    bool verbose = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--y1-max", params.y1_max, "largest (Y1) index");
        cmd->add_option("--serre-max", params.serre_max, "largest (Y6) index");
        cmd->add_option("--comm-max", params.comm_max, "largest closed-form commutator power");
        cmd->add_option("--order", params.order, "series order for z-expansions");
        cmd->add_option("--level", params.level, "Fock truncation level");
        cmd->add_option("--mode-max", params.mode_max, "largest Virasoro mode");
        cmd->add_option("--lmax", params.lmax, "largest generator index");
        cmd->add_option("--config", params.config, "W-algebra configuration r1,r2,r3");
        cmd->add_option("--mode", params.mode, "boson normalization: standard|paper")
            ->check(CLI::IsMember({"standard", "paper"}));
        cmd->add_option("--workers", params.workers, "worker threads (default: env/hardware)");
        cmd->add_option("--quiver-json", quiver_path, "extra framed-quiver instance (JSON file)");
    };

    CLI::App* check = app.add_subcommand("check", "run a verification suite");
    check->add_option("suite", suite, "one of: shuffle yangian fock walgebra shc geom all")
        ->required()
        ->check(CLI::IsMember(suite_names()));
    check->add_flag("-v,--verbose", verbose, "also print passing checks");
    add_common(check);

    CLI::App* calib = app.add_subcommand("calibrate", "normalization and screening offsets");
    calib->add_flag("-v,--verbose", verbose, "also print passing checks");

    CLI::App* report = app.add_subcommand("report", "write a deterministic JSON report");
    report->add_option("--json", json_path, "output path")->required();
    report->add_option("--suite", suite, "suite to run (default all)")
        ->check(CLI::IsMember(suite_names()));
    add_common(report);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (!quiver_path.empty()) {
            std::ifstream in(quiver_path);
            if (!in) {
                std::cerr << "cannot read " << quiver_path << "\n";
                return 2;
            }
            std::stringstream ss;
            ss << in.rdbuf();
            params.quiver_json = ss.str();
        }
        if (check->parsed()) {
            SuiteReport rep = run_suite(suite, params);
            print_report(rep, verbose);
            return rep.passed() ? 0 : 1;
        }
        if (calib->parsed()) {
            SuiteReport rep = calibrate_report();
            print_report(rep, true);
            return rep.passed() ? 0 : 1;
        }
        if (report->parsed()) {
            SuiteReport rep = run_suite(suite, params);
            std::ofstream out(json_path);
            if (!out) {
                std::cerr << "cannot write " << json_path << "\n";
                return 2;
            }
            out << rep.to_json() << "\n";
            std::cout << rep.summary_line() << " -> " << json_path << "\n";
            return rep.passed() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
