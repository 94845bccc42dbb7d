#include "gaudin/gaudin.h"

#include "instance.hpp"

#include <cstring>

using namespace gaudin;

struct gaudin_instance {
    InstanceFile file;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_err(char** err, const std::string& msg) {
    if (err) *err = dup_string(msg);
}

} // namespace

extern "C" {

gaudin_status gaudin_instance_parse(const char* json_text, gaudin_instance** out, char** err) {
    if (!json_text || !out) return GAUDIN_INPUT_ERROR;
    *out = nullptr;
    try {
        auto inst = new gaudin_instance{parse_instance_text(json_text)};
        *out = inst;
        return GAUDIN_OK;
    } catch (const InputError& e) {
        set_err(err, e.what());
        return GAUDIN_INPUT_ERROR;
    } catch (const std::exception& e) {
        set_err(err, e.what());
        return GAUDIN_INTERNAL_ERROR;
    }
}

gaudin_status gaudin_instance_parse_file(const char* path, gaudin_instance** out, char** err) {
    if (!path || !out) return GAUDIN_INPUT_ERROR;
    *out = nullptr;
    try {
        auto inst = new gaudin_instance{parse_instance_file(path)};
        *out = inst;
        return GAUDIN_OK;
    } catch (const InputError& e) {
        set_err(err, e.what());
        return GAUDIN_INPUT_ERROR;
    } catch (const std::exception& e) {
        set_err(err, e.what());
        return GAUDIN_INTERNAL_ERROR;
    }
}

void gaudin_instance_free(gaudin_instance* inst) { delete inst; }

gaudin_status gaudin_instance_to_json(const gaudin_instance* inst, char** json_out) {
    if (!inst || !json_out) return GAUDIN_INPUT_ERROR;
    try {
        *json_out = dup_string(serialize_instance(inst->file));
        return GAUDIN_OK;
    } catch (const std::exception&) {
        return GAUDIN_INTERNAL_ERROR;
    }
}

gaudin_status gaudin_run(const gaudin_instance* inst, const char* command,
                         const char* mode_override, int with_timings, char** report_json,
                         char** summary) {
    if (!inst || !command) return GAUDIN_INPUT_ERROR;
    try {
        InstanceFile f = inst->file;
        if (mode_override) {
            std::string mode(mode_override);
            if (mode == "exact")
                f.mode_exact = true;
            else if (mode == "float")
                f.mode_exact = false;
            else {
                if (report_json) *report_json = nullptr;
                set_err(summary, "mode must be 'exact' or 'float'");
                return GAUDIN_INPUT_ERROR;
            }
        }
        RunResult rr = run_on_text(serialize_instance(f), command, with_timings != 0);
        if (report_json) *report_json = dup_string(rr.report_json);
        if (summary) *summary = dup_string(rr.human_summary);
        switch (rr.exit_code) {
            case 0: return GAUDIN_OK;
            case 1: return GAUDIN_VERIFY_FAIL;
            default: return GAUDIN_INPUT_ERROR;
        }
    } catch (const std::exception& e) {
        set_err(summary, e.what());
        return GAUDIN_INTERNAL_ERROR;
    }
}

void gaudin_free_string(char* s) { std::free(s); }

const char* gaudin_version(void) { return kVersion; }

} // extern "C"
