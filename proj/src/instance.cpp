#include "instance.hpp"

#include "walgebra.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

namespace gaudin {

using Json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& reason) {
    throw InputError(path + ": " + reason);
}

std::string get_string(const Json& j, const std::string& path) {
    if (!j.is_string()) fail(path, "expected a string");
    return j.get<std::string>();
}

int get_int(const Json& j, const std::string& path) {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<int>();
}

Rational parse_rat_at(const std::string& text, const std::string& path) {
    try {
        return parse_rational(text);
    } catch (const InputError& e) {
        fail(path, e.what());
    }
}

bool looks_decimal(const std::string& s) {
    return s.find('.') != std::string::npos || s.find('e') != std::string::npos ||
           s.find('E') != std::string::npos;
}

BigFloat parse_float_at(const std::string& text, const std::string& path) {
    try {
        if (looks_decimal(text)) return BigFloat(text);
        return to_big_float(parse_rational(text));
    } catch (const std::exception&) {
        fail(path, "malformed numeric literal '" + text + "'");
    }
}

} // namespace

GaudinInstance InstanceFile::instance() const {
    GaudinInstance inst;
    inst.spec = spec();
    if (weights.empty()) fail("weights", "required for this command");
    if (z.empty()) fail("z", "required for this command");
    if (weights.size() != z.size()) fail("weights", "length differs from z");
    for (size_t a = 0; a < weights.size(); ++a) {
        WeightVec w;
        if (static_cast<int>(weights[a].size()) != inst.spec.diag_size)
            fail("weights[" + std::to_string(a) + "]",
                 "expected " + std::to_string(inst.spec.diag_size) + " entries for " +
                     inst.spec.name());
        for (size_t d = 0; d < weights[a].size(); ++d)
            w.push_back(parse_rat_at(weights[a][d],
                                     "weights[" + std::to_string(a) + "][" + std::to_string(d) + "]"));
        inst.weights.push_back(std::move(w));
    }
    for (size_t a = 0; a < z.size(); ++a)
        inst.z.push_back(parse_rat_at(z[a], "z[" + std::to_string(a) + "]"));
    if (chi.empty()) {
        inst.chi.assign(static_cast<size_t>(inst.spec.diag_size), Rational(0));
    } else {
        if (static_cast<int>(chi.size()) != inst.spec.diag_size)
            fail("chi", "expected " + std::to_string(inst.spec.diag_size) + " entries");
        for (size_t d = 0; d < chi.size(); ++d)
            inst.chi.push_back(parse_rat_at(chi[d], "chi[" + std::to_string(d) + "]"));
    }
    for (size_t a = 0; a < inst.z.size(); ++a)
        for (size_t b = a + 1; b < inst.z.size(); ++b)
            if (inst.z[a] == inst.z[b]) fail("z", "evalPoints not distinct");
    return inst;
}

std::vector<int> InstanceFile::colors() const {
    std::vector<int> c;
    for (const RootEntry& r : bethe) c.push_back(r.color);
    return c;
}

std::vector<BigFloat> InstanceFile::seed_floats() const {
    std::vector<BigFloat> s;
    for (size_t j = 0; j < bethe.size(); ++j)
        s.push_back(parse_float_at(bethe[j].w, "bethe[" + std::to_string(j) + "].w"));
    return s;
}

BetheConfig InstanceFile::config() const {
    BetheConfig cfg;
    cfg.inst = instance();
    cfg.colors = colors();
    cfg.exact = mode_exact;
    for (size_t j = 0; j < bethe.size(); ++j) {
        const std::string path = "bethe[" + std::to_string(j) + "].w";
        if (mode_exact) {
            if (looks_decimal(bethe[j].w)) fail(path, "decimal root not allowed in exact mode");
            cfg.w_exact.push_back(parse_rat_at(bethe[j].w, path));
        } else {
            cfg.w_float.push_back(parse_float_at(bethe[j].w, path));
        }
    }
    try {
        cfg.validate();
    } catch (const InputError& e) {
        fail("bethe", e.what());
    }
    return cfg;
}

InstanceFile parse_instance_text(const std::string& json_text) {
    Json j;
    try {
        j = Json::parse(json_text);
    } catch (const std::exception& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw InputError("instance must be a JSON object");
    InstanceFile f;
    if (!j.contains("family")) fail("family", "missing");
    f.family = family_from_name(get_string(j["family"], "family"));
    if (j.contains("n") && j.contains("N")) fail("n", "give either n or N, not both");
    if (j.contains("n")) {
        f.rank = get_int(j["n"], "n");
    } else if (j.contains("N")) {
        if (f.family != Family::A) fail("N", "only type A uses the N key");
        f.rank = get_int(j["N"], "N");
    } else {
        fail("n", "missing rank (n for B/C/D, N or n for type A)");
    }
    if (f.rank < 1) fail("n", "rank must be positive");

    auto read_string_array = [&](const char* key) {
        std::vector<std::string> out;
        if (!j.contains(key)) return out;
        const Json& arr = j[key];
        if (!arr.is_array()) fail(key, "expected an array");
        for (size_t k = 0; k < arr.size(); ++k)
            out.push_back(get_string(arr[k], std::string(key) + "[" + std::to_string(k) + "]"));
        return out;
    };
    if (j.contains("weights")) {
        const Json& w = j["weights"];
        if (!w.is_array()) fail("weights", "expected an array of arrays");
        for (size_t a = 0; a < w.size(); ++a) {
            if (!w[a].is_array()) fail("weights[" + std::to_string(a) + "]", "expected an array");
            std::vector<std::string> row;
            for (size_t d = 0; d < w[a].size(); ++d)
                row.push_back(get_string(w[a][d], "weights[" + std::to_string(a) + "][" +
                                                      std::to_string(d) + "]"));
            f.weights.push_back(std::move(row));
        }
    }
    f.z = read_string_array("z");
    f.chi = read_string_array("chi");
    if (j.contains("ell")) {
        int ell = get_int(j["ell"], "ell");
        if (ell != static_cast<int>(f.z.size())) fail("ell", "does not match the length of z");
    }
    if (j.contains("bethe")) {
        const Json& b = j["bethe"];
        if (!b.is_array()) fail("bethe", "expected an array");
        for (size_t k = 0; k < b.size(); ++k) {
            const std::string path = "bethe[" + std::to_string(k) + "]";
            if (!b[k].is_object()) fail(path, "expected an object {w, color}");
            if (!b[k].contains("w") || !b[k].contains("color")) fail(path, "needs w and color");
            RootEntry r;
            r.w = get_string(b[k]["w"], path + ".w");
            r.color = get_int(b[k]["color"], path + ".color");
            f.bethe.push_back(std::move(r));
        }
    }
    if (j.contains("operators")) {
        const Json& ops = j["operators"];
        if (!ops.is_array()) fail("operators", "expected an array");
        for (size_t k = 0; k < ops.size(); ++k) {
            const std::string path = "operators[" + std::to_string(k) + "]";
            if (!ops[k].is_object()) fail(path, "expected an object {kind, m?}");
            OperatorRequest req;
            req.kind = op_kind_from_name(get_string(ops[k]["kind"], path + ".kind"));
            if (ops[k].contains("m")) {
                req.m = get_int(ops[k]["m"], path + ".m");
                req.has_m = true;
            }
            if (op_kind_needs_degree(req.kind) && !req.has_m) fail(path, "kind needs m");
            f.operators.push_back(req);
        }
    }
    if (j.contains("mode")) {
        std::string mode = get_string(j["mode"], "mode");
        if (mode == "exact")
            f.mode_exact = true;
        else if (mode == "float")
            f.mode_exact = false;
        else
            fail("mode", "expected 'exact' or 'float'");
    }
    f.checks = read_string_array("checks");
    for (const std::string& c : f.checks)
        if (c != "eigen" && c != "masterfn" && c != "sigma-stability")
            fail("checks", "unknown check '" + c + "'");
    if (j.contains("bridge")) {
        const Json& b = j["bridge"];
        if (!b.is_object()) fail("bridge", "expected an object");
        if (b.contains("element")) f.bridge_element = get_string(b["element"], "bridge.element");
        if (b.contains("a")) f.bridge_a = get_string(b["a"], "bridge.a");
    }
    if (j.contains("hc")) {
        const Json& h = j["hc"];
        if (!h.is_object()) fail("hc", "expected an object");
        if (h.contains("kind")) f.hc_kind = get_string(h["kind"], "hc.kind");
        if (h.contains("m")) f.hc_m = get_int(h["m"], "hc.m");
    }
    // early distinctness diagnostics with exact values where possible
    if (!f.z.empty() && f.mode_exact) {
        std::vector<Rational> zs;
        for (size_t a = 0; a < f.z.size(); ++a)
            zs.push_back(parse_rat_at(f.z[a], "z[" + std::to_string(a) + "]"));
        for (size_t a = 0; a < zs.size(); ++a)
            for (size_t b = a + 1; b < zs.size(); ++b)
                if (zs[a] == zs[b]) fail("z", "evalPoints not distinct");
        for (size_t k = 0; k < f.bethe.size(); ++k) {
            if (looks_decimal(f.bethe[k].w)) continue;
            Rational w = parse_rat_at(f.bethe[k].w, "bethe[" + std::to_string(k) + "].w");
            for (const Rational& zz : zs)
                if (w == zz)
                    fail("bethe[" + std::to_string(k) + "].w", "root collides with evaluation point");
        }
    }
    return f;
}

InstanceFile parse_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open instance file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_instance_text(ss.str());
}

std::string serialize_instance(const InstanceFile& f) {
    Json j;
    j["family"] = family_name(f.family);
    j["n"] = f.rank;
    if (!f.z.empty()) j["ell"] = static_cast<int>(f.z.size());
    if (!f.weights.empty()) j["weights"] = f.weights;
    if (!f.z.empty()) j["z"] = f.z;
    if (!f.chi.empty()) j["chi"] = f.chi;
    if (!f.bethe.empty()) {
        Json arr = Json::array();
        for (const RootEntry& r : f.bethe) arr.push_back(Json{{"w", r.w}, {"color", r.color}});
        j["bethe"] = arr;
    }
    if (!f.operators.empty()) {
        Json arr = Json::array();
        for (const OperatorRequest& r : f.operators) {
            Json o{{"kind", op_kind_name(r.kind)}};
            if (r.has_m) o["m"] = r.m;
            arr.push_back(o);
        }
        j["operators"] = arr;
    }
    j["mode"] = f.mode_exact ? "exact" : "float";
    if (!f.checks.empty()) j["checks"] = f.checks;
    if (f.bridge_element != "lambda_sum" || f.bridge_a != "0")
        j["bridge"] = Json{{"element", f.bridge_element}, {"a", f.bridge_a}};
    if (!f.hc_kind.empty()) j["hc"] = Json{{"kind", f.hc_kind}, {"m", f.hc_m}};
    return j.dump(2);
}

namespace {

std::string mono_tuple_to_string(const LieSpec& spec, const MonoTuple& t) {
    std::ostringstream os;
    for (size_t k = 0; k < t.size(); ++k) {
        if (k) os << " (x) ";
        if (t[k].empty()) {
            os << "1";
            continue;
        }
        for (int b : t[k]) {
            const BasisPair& p = spec.neg_basis()[static_cast<size_t>(b)];
            os << "F(" << p.first << "," << p.second << ")";
        }
    }
    return os.str();
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

Json verify_report_json(const VerifyReport& rep) {
    Json out;
    out["baeResiduals"] = rep.bae_residuals;
    out["baeSatisfied"] = rep.bae_ok;
    out["vectorNonzero"] = rep.vector_nonzero;
    if (!rep.refusal.empty()) out["refusal"] = rep.refusal;
    Json slices = Json::array();
    for (const SliceCheck& s : rep.slices)
        slices.push_back(Json{{"k", s.k}, {"status", s.pass ? "pass" : "fail"},
                              {"residual", s.deviation}});
    out["slices"] = slices;
    out["status"] = rep.pass ? "pass" : "fail";
    return out;
}

HcKind hc_kind_from_string(const std::string& s) {
    if (s == "cdet") return HcKind::CdetChain;
    if (s == "e") return HcKind::Elementary;
    if (s == "h") return HcKind::Complete;
    if (s == "trace") return HcKind::BcdTrace;
    if (s == "pfaffian") return HcKind::Pfaffian;
    throw InputError("hc.kind: unknown kind '" + s + "' (cdet|e|h|trace|pfaffian)");
}

LFrac bridge_element(const LambdaRing& ring, const std::string& name, const Rational& a) {
    if (name == "lambda_sum") return ring.lambda_sum(a, true);
    if (name == "lambda_sum_raw") return ring.lambda_sum(a, false);
    if (name == "lambda_first") return ring.lambda(1, a);
    throw InputError("bridge.element: unknown built-in '" + name + "'");
}

} // namespace

RunResult run_command(const InstanceFile& f, const std::string& command, bool with_timings) {
    Json report;
    report["schemaVersion"] = kReportSchemaVersion;
    report["versionHash"] = std::string("gaudin-") + kVersion;
    report["command"] = command;
    report["family"] = family_name(f.family);
    report["rank"] = f.rank;
    report["mode"] = f.mode_exact ? "exact" : "float";
    Timer timer;

    RunResult rr;
    std::ostringstream human;
    bool pass = true;

    if (command == "bae-solve") {
        GaudinInstance inst = f.instance();
        BetheConfig cfg = bae_solve(inst, f.colors(), f.seed_floats());
        Json roots = Json::array();
        for (int jj = 0; jj < cfg.m(); ++jj) {
            Json r;
            r["color"] = cfg.colors[static_cast<size_t>(jj)];
            r["w"] = cfg.exact ? rational_to_string(cfg.w_exact[static_cast<size_t>(jj)])
                               : big_float_to_string(cfg.root_float(jj), 45);
            roots.push_back(r);
        }
        report["roots"] = roots;
        report["rootsExact"] = cfg.exact;
        Json res = Json::array();
        if (cfg.exact)
            for (const Rational& r : bae_residual_exact(cfg)) res.push_back(rational_to_string(r));
        else
            for (const BigFloat& r : bae_residual_float(cfg)) res.push_back(big_float_to_string(r, 10));
        report["residuals"] = res;
        human << "bae-solve: " << cfg.m() << " root(s), " << (cfg.exact ? "exact" : "float")
              << " solution\n";
    } else if (command == "bethe-build") {
        BetheConfig cfg = f.config();
        Json out;
        if (cfg.exact) {
            ExactState phi = bethe_vector_exact(cfg);
            out["terms"] = static_cast<int>(phi.terms().size());
            out["nonzero"] = !phi.is_zero();
            if (!phi.is_zero()) {
                WeightVec w = weight_of(phi);
                Json jw = Json::array();
                for (const Rational& v : w) jw.push_back(rational_to_string(v));
                out["weight"] = jw;
                if (phi.terms().size() <= 50) {
                    Json terms = Json::array();
                    for (const auto& [t, c] : phi.terms())
                        terms.push_back(Json{{"monomial", mono_tuple_to_string(cfg.inst.spec, t)},
                                             {"coeff", rational_to_string(c)}});
                    out["vector"] = terms;
                }
            }
            pass = !phi.is_zero();
        } else {
            FloatState phi = bethe_vector_float(cfg);
            out["terms"] = static_cast<int>(phi.terms().size());
            out["nonzero"] = !phi.is_zero();
            pass = !phi.is_zero();
        }
        report["betheVector"] = out;
        human << "bethe-build: " << (pass ? "nonzero vector" : "ZERO vector") << "\n";
    } else if (command == "verify") {
        BetheConfig cfg = f.config();
        if (f.operators.empty()) throw InputError("operators: required for verify");
        Json ops = Json::array();
        bool do_eigen = f.checks.empty() ||
                        std::find(f.checks.begin(), f.checks.end(), "eigen") != f.checks.end();
        if (do_eigen) {
            for (const OperatorRequest& req : f.operators) {
                VerifyReport rep = verify_eigen(cfg, req.kind, req.m, /*force=*/true);
                Json o = verify_report_json(rep);
                o["kind"] = op_kind_name(req.kind);
                if (req.has_m) o["m"] = req.m;
                ops.push_back(o);
                if (!rep.pass) pass = false;
                human << "verify " << op_kind_name(req.kind);
                if (req.has_m) human << "(m=" << req.m << ")";
                human << ": " << (rep.pass ? "pass" : "FAIL") << "\n";
            }
        }
        report["operators"] = ops;
        if (std::find(f.checks.begin(), f.checks.end(), "masterfn") != f.checks.end()) {
            MasterFnReport mrep = masterfn_crosscheck(cfg);
            Json m;
            m["supported"] = mrep.supported;
            if (!mrep.reason.empty()) m["reason"] = mrep.reason;
            m["status"] = mrep.pass ? "pass" : "fail";
            report["masterfn"] = m;
            if (!mrep.pass) pass = false;
            human << "masterfn: " << (mrep.pass ? "pass" : "FAIL") << "\n";
        }
        if (std::find(f.checks.begin(), f.checks.end(), "sigma-stability") != f.checks.end()) {
            GaudinInstance inst = f.instance();
            std::vector<ExactState> states = random_states(inst.ctx(), 20, 2, 12345);
            bool ok = true;
            for (int m = 1; m <= 2; ++m)
                if (!sigma_stability_check(inst, m, states)) ok = false;
            if (inst.spec.family == Family::D && !pfaffian_sign_check(inst, states)) ok = false;
            report["sigmaStability"] = ok ? "pass" : "fail";
            if (!ok) pass = false;
            human << "sigma-stability: " << (ok ? "pass" : "FAIL") << "\n";
        }
    } else if (command == "screen-check") {
        LambdaRing ring(f.family, f.rank);
        Rational a = parse_rational(f.bridge_a);
        LFrac A = bridge_element(ring, f.bridge_element, a);
        bool is_char = ring.is_character(A);
        report["element"] = f.bridge_element;
        report["isCharacter"] = is_char;
        Json per = Json::array();
        for (int i = 1; i <= ring.colors(); ++i) {
            SigmaElement s = ring.screening(i, A);
            per.push_back(Json{{"color", i}, {"kernel", s.empty()}});
        }
        report["screenings"] = per;
        pass = is_char;
        human << "screen-check " << f.bridge_element << ": "
              << (is_char ? "character" : "NOT a character") << "\n";
    } else if (command == "gr") {
        LambdaRing ring(f.family, f.rank);
        Rational a = parse_rational(f.bridge_a);
        LFrac A = bridge_element(ring, f.bridge_element, a);
        GrResult g = gr_map(A);
        report["element"] = f.bridge_element;
        report["degree"] = g.degree;
        report["image"] = g.top.to_string();
        Family dual = langlands_dual(f.family);
        bool in_w = is_W_element(g.top, dual, f.rank);
        report["dualFamily"] = family_name(dual);
        report["inDualWAlgebra"] = in_w;
        pass = in_w;
        human << "gr " << f.bridge_element << " -> " << g.top.to_string() << "\n";
    } else if (command == "hc-image") {
        if (f.hc_kind.empty()) throw InputError("hc.kind: required for hc-image");
        HcKind kind = hc_kind_from_string(f.hc_kind);
        WDiffElement el = hc_image(f.family, kind, f.hc_m, f.rank);
        Json coeffs = Json::array();
        Family dual = langlands_dual(f.family);
        bool all_in_w = true;
        for (const auto& [k, p] : el.coeffs()) {
            bool in_w = is_W_element(p, dual, f.rank);
            if (!in_w) all_in_w = false;
            coeffs.push_back(Json{{"tauPower", k}, {"coefficient", p.to_string()},
                                  {"inDualWAlgebra", in_w}});
        }
        report["kind"] = f.hc_kind;
        report["m"] = f.hc_m;
        report["coefficients"] = coeffs;
        report["dualFamily"] = family_name(dual);
        pass = all_in_w;
        human << "hc-image " << f.hc_kind << "(m=" << f.hc_m << "): "
              << (all_in_w ? "all tau-coefficients in the dual W-algebra" : "W-membership FAILED")
              << "\n";
    } else {
        throw InputError("unknown command '" + command + "'");
    }

    report["status"] = pass ? "pass" : "fail";
    if (with_timings) report["timings"] = Json{{"totalMs", timer.ms()}};
    rr.exit_code = pass ? 0 : 1;
    rr.report_json = report.dump(2);
    rr.human_summary = human.str();
    return rr;
}

RunResult run_on_text(const std::string& instance_json, const std::string& command,
                      bool with_timings) {
    try {
        InstanceFile f = parse_instance_text(instance_json);
        return run_command(f, command, with_timings);
    } catch (const InputError& e) {
        Json report;
        report["schemaVersion"] = kReportSchemaVersion;
        report["versionHash"] = std::string("gaudin-") + kVersion;
        report["command"] = command;
        report["status"] = "error";
        report["error"] = e.what();
        return RunResult{2, report.dump(2), std::string("input error: ") + e.what() + "\n"};
    } catch (const SolveError& e) {
        Json report;
        report["schemaVersion"] = kReportSchemaVersion;
        report["versionHash"] = std::string("gaudin-") + kVersion;
        report["command"] = command;
        report["status"] = "error";
        report["error"] = std::string("solver: ") + e.what();
        return RunResult{1, report.dump(2), std::string("solver error: ") + e.what() + "\n"};
    }
}

} // namespace gaudin
