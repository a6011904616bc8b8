// okflow — command line driver: flow runs, inequality verification sweeps,
// criticality reports, and single-shape energy breakdowns.  All output files
// are byte-deterministic for a fixed configuration (17-significant-digit
// floats, fixed key order, config hash in every header).

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "okflow/criticality.hpp"
#include "okflow/curve_json.hpp"
#include "okflow/flow.hpp"
#include "okflow/inequalities.hpp"
#include "okflow/shapes.hpp"

using namespace okflow;

namespace {

constexpr const char* kVersion = "0.1.0";

// ---------------------------------------------------------------------------
// deterministic JSON emission (NaN/inf -> null, which nlohmann also does,
// but with our fixed float format and key order)

std::string jnum(double v) { return std::isfinite(v) ? fmt17(v) : "null"; }

std::string jstr(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += ch;
        }
    }
    out += '"';
    return out;
}

// ordered key/value config record; canonical string feeds the hash
struct ConfigRecord {
    std::string command;
    std::vector<std::pair<std::string, std::string>> kv;

    void add(const std::string& k, const std::string& v) { kv.emplace_back(k, v); }
    void add(const std::string& k, double v) { kv.emplace_back(k, fmt17(v)); }
    void add(const std::string& k, int v) { kv.emplace_back(k, std::to_string(v)); }
    void add(const std::string& k, long long v) { kv.emplace_back(k, std::to_string(v)); }

    std::string canonical() const {
        std::string s = command;
        for (const auto& [k, v] : kv) s += "|" + k + "=" + v;
        return s;
    }
    std::string hash() const { return hex64(fnv1a64(canonical())); }
    std::string json_meta() const {
        std::string s = "\"version\":" + jstr(kVersion) + ",\"config_hash\":" + jstr(hash()) +
                        ",\"config\":{";
        for (std::size_t i = 0; i < kv.size(); ++i) {
            if (i) s += ",";
            s += jstr(kv[i].first) + ":" + jstr(kv[i].second);
        }
        s += "}";
        return s;
    }
    std::string csv_header() const {
        std::string s = "# okflow " + std::string(kVersion) + "\n# config " + hash() + "\n# " +
                        canonical() + "\n";
        return s;
    }
};

void write_file(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw validation_error("cannot open output file: " + path);
    f << text;
}

// ---------------------------------------------------------------------------
// shared options

struct Common {
    std::string shape;
    std::string kernel = "log";
    double gamma = 1.0;
    int n = 512;
    int grid = 512;
    bool serial = false;
    std::string out;
    std::string config_path;

    ParallelMode mode() const { return serial ? ParallelMode::serial : ParallelMode::omp; }
    Kernel resolve_kernel(Ambient amb) const {
        if (amb == Ambient::torus) {
            Kernel k = Kernel::parse(kernel);
            return k.type == Kernel::Type::torus ? k : Kernel::Torus(grid);
        }
        return Kernel::parse(kernel);
    }
};

void add_common(CLI::App* sub, Common& c, bool with_shape = true) {
    if (with_shape)
        sub->add_option("--shape", c.shape,
                        "shape spec: disk:R | ellipse:a,b | annulus:r,R | pdisk:eps,k | "
                        "polar:r0,k:amp[:phase],... | random:seed[,K] | stripe:w[,n] | "
                        "pstripe:w,eps[,k] | tdisk:area[,cx,cy] | file:path");
    sub->add_option("--kernel", c.kernel, "kernel: log | riesz:alpha | torus:grid");
    sub->add_option("--gamma", c.gamma, "nonlocal coefficient");
    sub->add_option("--n", c.n, "curve resolution (vertices per component)");
    sub->add_option("--grid", c.grid, "torus solver grid (power of two >= 128)");
    sub->add_flag("--serial", c.serial, "disable the parallel kernels");
    sub->add_option("--out", c.out, "output path (default stdout)");
    sub->add_option("--config", c.config_path, "JSON file with defaults for these options");
}

// --config JSON supplies defaults; explicit flags win
void apply_config(CLI::App* sub, Common& c, double* extra_d = nullptr,
                  const char* extra_key = nullptr) {
    if (c.config_path.empty()) return;
    std::ifstream f(c.config_path);
    if (!f) throw validation_error("cannot read config file: " + c.config_path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(f);
    } catch (const std::exception& e) {
        throw validation_error("config file " + c.config_path + ": " + e.what());
    }
    auto unset = [&](const char* name) {
        auto* o = sub->get_option_no_throw(std::string("--") + name);
        return o && o->count() == 0;
    };
    // numeric values may arrive as strings (the reports' own config blocks print them so)
    auto as_num = [&](const char* key) -> double {
        const nlohmann::json& v = j[key];
        if (v.is_number()) return v.get<double>();
        if (v.is_string()) {
            try {
                std::size_t used = 0;
                double d = std::stod(v.get<std::string>(), &used);
                if (used == v.get<std::string>().size()) return d;
            } catch (const std::exception&) {}
        }
        throw validation_error(std::string("config file: '") + key + "' must be a number");
    };
    if (j.contains("shape") && unset("shape")) c.shape = j["shape"].get<std::string>();
    if (j.contains("kernel") && unset("kernel")) c.kernel = j["kernel"].get<std::string>();
    if (j.contains("gamma") && unset("gamma")) c.gamma = as_num("gamma");
    if (j.contains("n") && unset("n")) c.n = static_cast<int>(as_num("n"));
    if (j.contains("grid") && unset("grid")) c.grid = static_cast<int>(as_num("grid"));
    if (j.contains("out") && unset("out")) c.out = j["out"].get<std::string>();
    if (extra_d && extra_key && j.contains(extra_key) &&
        unset(extra_key))
        *extra_d = as_num(extra_key);
}

// ---------------------------------------------------------------------------
// report serialization

std::string inequality_json(const InequalityReport& r) {
    std::string s = "{";
    s += "\"id\":" + jstr(r.id);
    s += ",\"lhs\":" + jnum(r.lhs);
    s += ",\"rhs\":" + jnum(r.rhs);
    s += ",\"constant_used\":" + jnum(r.constant_used);
    s += ",\"margin\":" + jnum(r.margin);
    s += std::string(",\"holds\":") + (r.holds ? "true" : "false");
    s += ",\"shape\":" + jstr(r.shape);
    s += ",\"kernel\":" + jstr(r.kernel);
    s += ",\"ratio\":" + jnum(r.ratio);
    s += ",\"calibration\":" + jnum(r.calibration);
    s += "}";
    return s;
}

std::string criticality_json(const CriticalityReport& r) {
    std::string s = "{";
    s += "\"lambda_hat\":" + jnum(r.lambda_hat);
    s += ",\"residual_sup\":" + jnum(r.residual_sup);
    s += ",\"residual_mean\":" + jnum(r.residual_mean);
    s += ",\"eta_bar\":" + jnum(r.eta_bar);
    s += ",\"eta_bar_noL2\":" + jnum(r.eta_bar_noL2);
    s += ",\"gamma_bar\":" + jnum(r.gamma_bar);
    s += ",\"mass\":" + jnum(r.mass);
    s += ",\"length\":" + jnum(r.length);
    s += ",\"winding\":[";
    for (std::size_t i = 0; i < r.winding.size(); ++i)
        s += (i ? "," : "") + std::to_string(r.winding[i]);
    s += "]";
    s += std::string(",\"convex\":") + (r.convex ? "true" : "false");
    s += "}";
    return s;
}

// ---------------------------------------------------------------------------
// flow

int cmd_flow(const Common& c, const std::string& stop_spec, double c_stab,
             long long energy_stride, bool no_energy, const std::string& trace_path,
             const std::string& snapshot_prefix, long long snapshot_every) {
    if (c.shape.empty()) throw validation_error("flow: --shape is required");
    Curve init = shapes::from_spec(c.shape, c.n);

    FlowParams p;
    p.c_stab = c_stab;
    p.gamma = c.gamma;
    p.kernel = c.resolve_kernel(init.ambient);
    p.track_energy = !no_energy;
    p.energy_stride = energy_stride;
    p.mode = c.mode();

    StopRule stop;
    auto colon = stop_spec.find(':');
    std::string kind = stop_spec.substr(0, colon);
    double val = colon == std::string::npos
                     ? 0
                     : std::strtod(stop_spec.c_str() + colon + 1, nullptr);
    if (kind == "deficit")
        stop.deficit = val;
    else if (kind == "time")
        stop.max_time = val;
    else if (kind == "steps")
        stop.max_steps = static_cast<long long>(val);
    else
        throw validation_error("flow: --stop must be deficit:X, time:X, or steps:X");

    ConfigRecord cfg;
    cfg.command = "flow";
    cfg.add("shape", c.shape);
    cfg.add("kernel", p.kernel.name());
    cfg.add("gamma", c.gamma);
    cfg.add("n", c.n);
    cfg.add("c_stab", c_stab);
    cfg.add("stop", stop_spec);
    cfg.add("energy_stride", energy_stride);
    cfg.add("track_energy", no_energy ? 0 : 1);

    long long last_snapshot = -1;
    auto write_snapshot = [&](const FlowState& s) {
        char name[64];
        std::snprintf(name, sizeof name, "_%08lld.json", static_cast<long long>(s.steps));
        std::string body = "{" + cfg.json_meta() + ",\"t\":" + jnum(s.t) +
                           ",\"step\":" + std::to_string(s.steps) +
                           ",\"curve\":" + dump_curve_json(s.curve) + "}\n";
        write_file(snapshot_prefix + name, body);
        last_snapshot = s.steps;
    };
    std::function<void(const FlowState&)> observer;
    if (!snapshot_prefix.empty()) {
        observer = [&](const FlowState& s) {
            // snapshot_every == 0 keeps only the initial and final curves
            if (snapshot_every > 0 ? s.steps % snapshot_every != 0 : s.steps != 0) return;
            write_snapshot(s);
        };
    }

    FlowState s = flow_run(std::move(init), p, stop, observer);
    if (!snapshot_prefix.empty() && s.steps != last_snapshot) write_snapshot(s);

    std::string csv = cfg.csv_header();
    csv += "t,L,A,E_total,E_perim,E_nonlocal,dEdt_analytic,dissipation,deficit,el_residual_"
           "sup\n";
    for (const auto& r : s.history) {
        csv += fmt17(r.t) + "," + fmt17(r.L) + "," + fmt17(r.A) + "," + fmt17(r.E_total) + "," +
               fmt17(r.E_perim) + "," + fmt17(r.E_nonlocal) + "," + fmt17(r.dEdt_analytic) +
               "," + fmt17(r.dissipation) + "," + fmt17(r.deficit) + "," +
               fmt17(r.el_residual_sup) + "\n";
    }
    write_file(trace_path.empty() ? c.out : trace_path, csv);

    if (s.halted) {
        std::cerr << "{\"error\":\"numerical\",\"message\":" << jstr("flow halted: " + s.halt_reason)
                  << "}\n";
        return 3;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// verify

struct NamedShape {
    std::string name;
    Curve curve;
    Curve symmetric; // origin-symmetric twin for the Gage check (may be empty)
};

const char* const kReportIds[] = {"BONNESEN", "GAGE", "ISO_DEFICIT", "POT_DEFICIT",
                                  "MAIN_R2",  "WEAK"};

bool id_enabled(const std::vector<std::string>& only, const char* id) {
    if (only.empty()) return true;
    for (const auto& s : only) {
        std::string t = s;
        std::transform(t.begin(), t.end(), t.begin(), ::toupper);
        if (t == id) return true;
    }
    return false;
}

void check_only_ids(const std::vector<std::string>& only) {
    for (const auto& s : only) {
        std::string t = s;
        std::transform(t.begin(), t.end(), t.begin(), ::toupper);
        bool known = false;
        for (const char* id : kReportIds) known = known || t == id;
        if (!known)
            throw validation_error(
                "--only: unknown report id '" + s +
                "' (valid: bonnesen gage iso_deficit pot_deficit main_r2 weak)");
    }
}

int cmd_verify(const Common& c, int seeds, double area, const std::vector<std::string>& only,
               bool strip_mode, double strip_w, bool strict) {
    check_only_ids(only);
    ConfigRecord cfg;
    cfg.command = "verify";
    cfg.add("shape", c.shape.empty() ? "corpus" : c.shape);
    cfg.add("kernel", c.kernel);
    cfg.add("gamma", c.gamma);
    cfg.add("n", c.n);
    cfg.add("grid", c.grid);
    cfg.add("seeds", seeds);
    cfg.add("area", area);
    cfg.add("strip", strip_mode ? 1 : 0);
    cfg.add("strip_w", strip_w);
    {
        std::string ids;
        for (const auto& s : only) ids += (ids.empty() ? "" : ",") + s;
        cfg.add("only", ids.empty() ? "all" : ids);
    }

    std::vector<std::string> reports;
    int held = 0, failed = 0, errors = 0;
    double worst_margin = std::numeric_limits<double>::infinity();
    double max_ratio = 0;

    auto push = [&](const char* name, const InequalityReport& r) {
        reports.push_back("{\"shape_name\":" + jstr(name) + "," + inequality_json(r).substr(1));
        (r.holds ? held : failed)++;
        worst_margin = std::min(worst_margin, r.margin);
        if (std::isfinite(r.ratio)) max_ratio = std::max(max_ratio, r.ratio);
    };
    auto push_error = [&](const char* name, const char* id, const std::exception& e) {
        reports.push_back("{\"shape_name\":" + jstr(name) + ",\"id\":" + jstr(id) +
                          ",\"error\":" + jstr(e.what()) + "}");
        ++errors;
    };

    if (strip_mode) {
        // ratio sweep over sinusoidally perturbed stripes; C0 calibrated as
        // the max MAIN_T2 ratio, then the calibrated report re-evaluated
        const double eps_sweep[] = {0.0, 0.02, 0.05, 0.1};
        std::vector<std::pair<std::string, Curve>> family;
        for (double e : eps_sweep) {
            std::string nm = e == 0 ? "stripe:" + fmt17(strip_w)
                                    : "pstripe:" + fmt17(strip_w) + "," + fmt17(e);
            family.emplace_back(nm, e == 0 ? shapes::stripe(strip_w, 1, c.n)
                                           : shapes::perturbed_stripe(strip_w, e, 1, c.n));
        }
        double C0 = 0;
        std::vector<StripReports> pass1;
        for (auto& [nm, sh] : family) {
            pass1.push_back(check_strip(sh, c.grid));
            if (std::isfinite(pass1.back().main_t2.ratio))
                C0 = std::max(C0, pass1.back().main_t2.ratio);
        }
        for (std::size_t i = 0; i < family.size(); ++i) {
            const char* nm = family[i].first.c_str();
            try {
                StripReports sr = check_strip(family[i].second, c.grid, C0);
                push(nm, sr.iso);
                push(nm, sr.pot);
                push(nm, sr.main_t2);
            } catch (const std::exception& e) {
                push_error(nm, "STRIP", e);
            }
        }
        cfg.add("calibrated_C0", C0);
    } else {
        std::vector<NamedShape> corpus;
        if (!c.shape.empty()) {
            NamedShape ns;
            ns.name = c.shape;
            ns.curve = shapes::from_spec(c.shape, c.n);
            ns.symmetric = ns.curve;
            corpus.push_back(std::move(ns));
        } else {
            for (int s = 1; s <= seeds; ++s) {
                NamedShape ns;
                ns.name = "random:" + std::to_string(s);
                ns.curve = shapes::scale_to_area(shapes::random_convex(s, 6, c.n), area);
                ns.symmetric =
                    shapes::scale_to_area(shapes::random_convex(s, 6, c.n, true), area);
                corpus.push_back(std::move(ns));
            }
        }
        Kernel k = Kernel::parse(c.kernel);
        for (const auto& ns : corpus) {
            const char* nm = ns.name.c_str();
            if (id_enabled(only, "BONNESEN")) {
                try {
                    push(nm, check_bonnesen(ns.curve));
                } catch (const std::exception& e) {
                    push_error(nm, "BONNESEN", e);
                }
            }
            if (id_enabled(only, "GAGE")) {
                try {
                    push(nm, check_gage(ns.symmetric));
                } catch (const std::exception& e) {
                    push_error(nm, "GAGE", e);
                }
            }
            if (id_enabled(only, "ISO_DEFICIT")) {
                try {
                    push(nm, check_iso_deficit(ns.curve));
                } catch (const std::exception& e) {
                    push_error(nm, "ISO_DEFICIT", e);
                }
            }
            if (id_enabled(only, "POT_DEFICIT")) {
                try {
                    push(nm, check_pot_deficit(ns.curve, k, c.mode()));
                } catch (const std::exception& e) {
                    push_error(nm, "POT_DEFICIT", e);
                }
            }
            if (id_enabled(only, "MAIN_R2")) {
                try {
                    push(nm, check_main_r2(ns.curve, k, c.mode()));
                } catch (const std::exception& e) {
                    push_error(nm, "MAIN_R2", e);
                }
            }
            if (id_enabled(only, "WEAK")) {
                try {
                    push(nm, check_weak(ns.curve, k, c.mode()));
                } catch (const std::exception& e) {
                    push_error(nm, "WEAK", e);
                }
            }
        }
    }

    std::string body = "{" + cfg.json_meta() + ",\"reports\":[";
    for (std::size_t i = 0; i < reports.size(); ++i) body += (i ? ",\n" : "\n") + reports[i];
    body += "\n],\"summary\":{";
    body += "\"total\":" + std::to_string(reports.size());
    body += ",\"held\":" + std::to_string(held);
    body += ",\"failed\":" + std::to_string(failed);
    body += ",\"errors\":" + std::to_string(errors);
    body += ",\"worst_margin\":" + jnum(worst_margin);
    body += ",\"max_ratio\":" + jnum(max_ratio);
    body += "}}\n";
    write_file(c.out, body);

    if (strict && (failed > 0 || errors > 0)) return 4;
    return 0;
}

// ---------------------------------------------------------------------------
// critical

int cmd_critical(const Common& c, const std::string& counterexample_spec, double tol) {
    ConfigRecord cfg;
    cfg.command = "critical";
    cfg.add("shape", c.shape.empty() ? "-" : c.shape);
    cfg.add("counterexample", counterexample_spec.empty() ? "-" : counterexample_spec);
    cfg.add("kernel", c.kernel);
    cfg.add("gamma", c.gamma);
    cfg.add("n", c.n);
    cfg.add("grid", c.grid);
    cfg.add("tol", tol);

    std::string body;
    if (!counterexample_spec.empty()) {
        AnnulusRoot root = counterexample(Kernel::parse(counterexample_spec), c.n, c.mode());
        body = "{" + cfg.json_meta();
        body += ",\"r\":" + jnum(root.r);
        body += ",\"R\":" + jnum(2.0 * root.r);
        body += ",\"identity_radius\":" + jnum(root.identity_radius);
        body += ",\"identity_gap\":" + jnum(root.identity_gap);
        body += ",\"identity_residual_sup\":" + jnum(root.identity_residual_sup);
        body += ",\"report\":" + criticality_json(root.report);
        body += "}\n";
    } else if (!c.shape.empty()) {
        Curve sh = shapes::from_spec(c.shape, c.n);
        Kernel k = c.resolve_kernel(sh.ambient);
        CriticalityReport r = el_residual(sh, k, c.gamma, c.mode());
        ClassifyResult cl = classify(sh, k, c.gamma, tol, c.mode());
        body = "{" + cfg.json_meta();
        body += ",\"report\":" + criticality_json(r);
        body += ",\"classification\":" +
                jstr(cl.cls == Classification::critical_like ? "critical_like" : "not_critical");
        body += ",\"derivative\":{\"perimeter_term\":" + jnum(cl.derivative.perimeter_term) +
                ",\"nonlocal_term\":" + jnum(cl.derivative.nonlocal_term) +
                ",\"total\":" + jnum(cl.derivative.total) + "}";
        body += "}\n";
    } else {
        throw validation_error("critical: provide --shape or --counterexample");
    }
    write_file(c.out, body);
    return 0;
}

// ---------------------------------------------------------------------------
// energy

int cmd_energy(const Common& c) {
    if (c.shape.empty()) throw validation_error("energy: --shape is required");
    Curve sh = shapes::from_spec(c.shape, c.n);
    Kernel k = c.resolve_kernel(sh.ambient);
    EnergyBreakdown e = total_energy(sh, k, c.gamma, c.mode());
    ShapeMeasures m = measures(sh);

    ConfigRecord cfg;
    cfg.command = "energy";
    cfg.add("shape", c.shape);
    cfg.add("kernel", k.name());
    cfg.add("gamma", c.gamma);
    cfg.add("n", c.n);
    cfg.add("grid", c.grid);

    std::string body = "{" + cfg.json_meta();
    body += ",\"perimeter\":" + jnum(e.perimeter);
    body += ",\"nonlocal\":" + jnum(e.nonlocal);
    body += ",\"total\":" + jnum(e.total);
    body += ",\"L\":" + jnum(m.L);
    body += ",\"A\":" + jnum(m.A);
    body += "}\n";
    write_file(c.out, body);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"okflow: nonlocal isoperimetric energies and area-preserving "
                 "curve shortening flow on R^2 and T^2"};
    app.require_subcommand(1);

    // flow
    Common fc;
    std::string stop_spec = "deficit:1e-6";
    double c_stab = 0.25;
    long long energy_stride = 2048, snapshot_every = 0;
    bool no_energy = false;
    std::string trace_path, snapshot_prefix;
    auto* sub_flow = app.add_subcommand("flow", "run area-preserving curve shortening flow");
    add_common(sub_flow, fc);
    sub_flow->add_option("--stop", stop_spec, "stop rule: deficit:X | time:X | steps:X");
    sub_flow->add_option("--c-stab", c_stab, "dt = c_stab (L/N)^2");
    sub_flow->add_option("--energy-stride", energy_stride,
                         "steps between energy-column evaluations");
    sub_flow->add_flag("--no-energy", no_energy, "skip all potential work along the run");
    sub_flow->add_option("--trace", trace_path, "trace CSV path (default --out/stdout)");
    sub_flow->add_option("--snapshots", snapshot_prefix, "curve snapshot path prefix");
    sub_flow->add_option("--snapshot-every", snapshot_every,
                         "steps between snapshots (0: init and final only)");

    // verify
    Common vc;
    int seeds = 20;
    double area = 0.2, strip_w = 0.5;
    std::vector<std::string> only;
    bool strip_mode = false, strict = false;
    auto* sub_verify = app.add_subcommand("verify", "inequality suite over a shape or corpus");
    add_common(sub_verify, vc);
    sub_verify->add_option("--seeds", seeds, "number of corpus shapes");
    sub_verify->add_option("--area", area, "corpus shapes rescaled to this area");
    sub_verify->add_option("--only", only, "restrict to these report ids")->delimiter(',');
    sub_verify->add_flag("--strip", strip_mode, "torus strip ratio sweep instead of the plane corpus");
    sub_verify->add_option("--strip-w", strip_w, "strip width for --strip");
    sub_verify->add_flag("--strict", strict, "exit 4 if any check fails or errors");

    // critical
    Common cc;
    std::string counterexample_spec;
    double tol = 1e-3;
    auto* sub_critical = app.add_subcommand("critical", "Euler-Lagrange residual reports");
    add_common(sub_critical, cc);
    sub_critical->add_option("--counterexample", counterexample_spec,
                             "derive the critical annulus (R = 2r) for this kernel");
    sub_critical->add_option("--tol", tol, "critical-like residual threshold");

    // energy
    Common ec;
    auto* sub_energy = app.add_subcommand("energy", "single-shape energy breakdown");
    add_common(sub_energy, ec);

    CLI11_PARSE(app, argc, argv);

    try {
        if (sub_flow->parsed()) {
            apply_config(sub_flow, fc);
            return cmd_flow(fc, stop_spec, c_stab, energy_stride, no_energy, trace_path,
                            snapshot_prefix, snapshot_every);
        }
        if (sub_verify->parsed()) {
            apply_config(sub_verify, vc);
            return cmd_verify(vc, seeds, area, only, strip_mode, strip_w, strict);
        }
        if (sub_critical->parsed()) {
            apply_config(sub_critical, cc, &tol, "tol");
            return cmd_critical(cc, counterexample_spec, tol);
        }
        if (sub_energy->parsed()) {
            apply_config(sub_energy, ec);
            return cmd_energy(ec);
        }
    } catch (const validation_error& e) {
        std::cerr << "{\"error\":\"validation\",\"message\":" << jstr(e.what()) << "}\n";
        return 2;
    } catch (const numerical_error& e) {
        std::cerr << "{\"error\":\"numerical\",\"message\":" << jstr(e.what()) << "}\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "{\"error\":\"internal\",\"message\":" << jstr(e.what()) << "}\n";
        return 2;
    }
    return 0;
}
