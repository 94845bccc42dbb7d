#pragma once

#include "oracle.hpp"

#include <string>
#include <vector>

namespace gaudin {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

struct OperatorRequest {
    OpKind kind = OpKind::Rdet;
    int m = 0;
    bool has_m = false;
};

struct RootEntry {
    std::string w; // "p/q" (exact) or decimal string (float mode)
    int color = 1;
};

// Parsed instance file. Fields beyond the family/rank pair are optional at
// parse time; each command validates what it needs.
struct InstanceFile {
    Family family = Family::A;
    int rank = 1; // N for type A, n for B/C/D
    std::vector<std::vector<std::string>> weights;
    std::vector<std::string> z;
    std::vector<std::string> chi;
    std::vector<RootEntry> bethe;
    std::vector<OperatorRequest> operators;
    bool mode_exact = true;
    std::vector<std::string> checks;
    // bridge commands
    std::string bridge_element = "lambda_sum";
    std::string bridge_a = "0";
    std::string hc_kind;
    int hc_m = 1;

    LieSpec spec() const { return LieSpec::make(family, rank); }
    GaudinInstance instance() const;          // needs weights/z/chi
    BetheConfig config() const;               // + bethe roots (no solving)
    std::vector<int> colors() const;
    std::vector<BigFloat> seed_floats() const;
};

InstanceFile parse_instance_text(const std::string& json_text);
InstanceFile parse_instance_file(const std::string& path);
std::string serialize_instance(const InstanceFile& f);

struct RunResult {
    int exit_code = 0; // 0 pass, 1 verification failure, 2 input error
    std::string report_json;
    std::string human_summary;
};

// command: bae-solve | bethe-build | verify | screen-check | gr | hc-image
RunResult run_command(const InstanceFile& f, const std::string& command, bool with_timings = false);

// convenience wrapper used by the C API: parses, runs, catches input errors
// into exit code 2 reports
RunResult run_on_text(const std::string& instance_json, const std::string& command,
                      bool with_timings = false);

} // namespace gaudin
