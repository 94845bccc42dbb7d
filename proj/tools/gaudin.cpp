// Batch front end over the C API: parse an instance file, run one command,
// print the JSON report to stdout and a short summary to stderr.
#include <gaudin/gaudin.h>

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

namespace {

struct Freed {
    char* p = nullptr;
    ~Freed() { gaudin_free_string(p); }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"gaudin: exact Gaudin Hamiltonians, Bethe vectors and eigenvalue checks"};
    app.set_version_flag("--version", std::string(gaudin_version()));

    std::string command, instance_path, mode, report_path;
    bool timings = false;
    app.add_option("command", command,
                   "bae-solve | bethe-build | verify | screen-check | gr | hc-image")
        ->required();
    app.add_option("--instance", instance_path, "instance JSON file")->required();
    app.add_option("--mode", mode, "override mode: exact | float");
    app.add_option("--report", report_path, "also write the JSON report to this file");
    app.add_flag("--timings", timings, "include wall-clock timings in the report");
    CLI11_PARSE(app, argc, argv);

    gaudin_instance* inst = nullptr;
    Freed err;
    gaudin_status st = gaudin_instance_parse_file(instance_path.c_str(), &inst, &err.p);
    if (st != GAUDIN_OK) {
        std::cerr << "input error: " << (err.p ? err.p : "unreadable instance") << "\n";
        return 2;
    }

    Freed report, summary;
    st = gaudin_run(inst, command.c_str(), mode.empty() ? nullptr : mode.c_str(), timings ? 1 : 0,
                    &report.p, &summary.p);
    gaudin_instance_free(inst);

    if (report.p) {
        std::cout << report.p << "\n";
        if (!report_path.empty()) {
            std::ofstream out(report_path);
            out << report.p << "\n";
        }
    }
    if (summary.p && summary.p[0]) std::cerr << summary.p;

    switch (st) {
        case GAUDIN_OK: return 0;
        case GAUDIN_VERIFY_FAIL: return 1;
        case GAUDIN_INPUT_ERROR: return 2;
        default:
            std::cerr << "internal error\n";
            return 3;
    }
}
