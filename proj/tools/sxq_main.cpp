#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sxq/builtins.hpp"
#include "sxq/channel.hpp"
#include "sxq/conditions.hpp"
#include "sxq/parse.hpp"
#include "sxq/sweep.hpp"
#include "sxq/verify.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitVerify = 3;

double round12(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::stod(buf);
}

std::string fmt12(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string load_state_text(const std::string& name) {
    if (std::filesystem::exists(name)) {
        std::ifstream in(name);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    return sxq::builtin_state_text(name);  // throws for unknown names
}

sxq::ParamEnv env_from_sets(const std::vector<std::string>& sets) {
    sxq::ParamEnv env;
    for (const auto& kv : sets) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("--set expects name=value, got '" + kv + "'");
        env.set(kv.substr(0, eq), std::stod(kv.substr(eq + 1)));
    }
    return env;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot write '" + out_path + "'");
        out << text;
    }
}

json bound_report_json(const sxq::BoundReport& b) {
    json j;
    j["state_id"] = b.state_id;
    for (const auto& [k, v] : {std::pair<const char*, double>{"u1", b.u1}, {"u2", b.u2},
                               {"l1", b.l1}, {"l2", b.l2}, {"l3", b.l3}, {"l4", b.l4},
                               {"u_min", b.u_min}, {"l_best", b.l_best}})
        j[k] = round12(v);
    j["u_min_label"] = b.u_min_label;
    j["l_best_label"] = b.l_best_label;
    if (b.exact_cost) {
        j["exact_cost"] = round12(*b.exact_cost);
        j["certificate"] = b.exact_certificate;
    }
    return j;
}

json condition_report_json(const sxq::ConditionReport& rep) {
    json j;
    for (int i = 0; i < 4; ++i) {
        const auto& key = sxq::ConditionReport::qcmi_keys()[i];
        j["qcmi"][key] = round12(rep.qcmi[i]);
        j["qcmi_raw"][key] = round12(rep.qcmi_raw[i]);
        j["holds"][key] = rep.holds[i];
    }
    j["r_trivial"] = rep.r_trivial;
    if (rep.exact_cost) {
        j["exact_cost"] = round12(*rep.exact_cost);
        j["certificate"] = sxq::certificate_name(*rep.certificate);
    }
    j["consistency"] = rep.consistency;
    return j;
}

int cmd_bounds(const std::string& state, const std::vector<std::string>& sets,
               const std::string& format, const std::string& out, double tol,
               bool conditions_only) {
    const sxq::LabeledPureState s = sxq::parse_state(load_state_text(state), env_from_sets(sets));
    const sxq::ConditionReport cond = sxq::check_conditions(s, tol > 0 ? tol : 1e-9);
    sxq::BoundReport b = sxq::compute_bounds(s, state);
    if (cond.exact_cost) {
        b.exact_cost = cond.exact_cost;
        b.exact_certificate = sxq::certificate_name(*cond.certificate);
    }

    std::ostringstream text;
    if (format == "json") {
        json j;
        if (!conditions_only) j["bounds"] = bound_report_json(b);
        j["conditions"] = condition_report_json(cond);
        text << j.dump(2) << '\n';
    } else if (format == "csv") {
        if (conditions_only) {
            text << "key,value\n";
            for (int i = 0; i < 4; ++i)
                text << "qcmi" << sxq::ConditionReport::qcmi_keys()[i] << ','
                     << fmt12(cond.qcmi[i]) << '\n';
            if (cond.exact_cost) text << "exact_cost," << fmt12(*cond.exact_cost) << '\n';
        } else {
            text << "u1,u2,l1,l2,l3,l4,u_min,l_best,exact_cost\n"
                 << fmt12(b.u1) << ',' << fmt12(b.u2) << ',' << fmt12(b.l1) << ',' << fmt12(b.l2)
                 << ',' << fmt12(b.l3) << ',' << fmt12(b.l4) << ',' << fmt12(b.u_min) << ','
                 << fmt12(b.l_best) << ',' << (b.exact_cost ? fmt12(*b.exact_cost) : "") << '\n';
        }
    } else {
        if (!conditions_only) {
            text << "state: " << state << '\n';
            text << "  u1 = " << fmt12(b.u1) << "    u2 = " << fmt12(b.u2) << '\n';
            text << "  l1 = " << fmt12(b.l1) << "    l2 = " << fmt12(b.l2) << '\n';
            text << "  l3 = " << fmt12(b.l3) << "    l4 = " << fmt12(b.l4) << '\n';
            text << "  min upper = " << fmt12(b.u_min) << " (" << b.u_min_label << ")"
                 << "    best lower = " << fmt12(b.l_best) << " (" << b.l_best_label << ")\n";
        }
        text << "conditions:\n";
        for (int i = 0; i < 4; ++i)
            text << "  I" << sxq::ConditionReport::qcmi_keys()[i] << " = " << fmt12(cond.qcmi[i])
                 << (cond.holds[i] ? "  [holds]" : "") << '\n';
        if (cond.exact_cost)
            text << "exact cost = " << fmt12(*cond.exact_cost) << " certified by "
                 << sxq::certificate_name(*cond.certificate) << '\n';
        else
            text << "no exact-cost certificate applies\n";
    }
    emit(text.str(), out);
    return kExitOk;
}

int cmd_sweep(const std::string& state, const std::vector<std::string>& sets,
              const std::string& param, double from, double to, double step,
              const std::string& emit_list, bool weak, const std::string& out) {
    sxq::SweepOptions opts;
    opts.include_weak = weak;
    const sxq::SweepResult res =
        sxq::run_sweep(load_state_text(state), env_from_sets(sets), param, from, to, step, opts);

    bool want_csv = emit_list.find("csv") != std::string::npos;
    const bool want_svg = emit_list.find("svg") != std::string::npos;
    if (!want_csv && !want_svg) want_csv = true;

    const std::string base = out.empty() ? "sweep" : out;
    if (want_csv) {
        if (out.empty())
            std::cout << sxq::sweep_csv(res);
        else
            emit(sxq::sweep_csv(res), base + ".csv");
    }
    if (want_svg) emit(sxq::sweep_svg(res, param), (out.empty() ? "sweep" : base) + ".svg");
    if (res.u1_crossing)
        std::cerr << "u1 zero crossing at " << param << " = " << fmt12(*res.u1_crossing) << '\n';
    return kExitOk;
}

int cmd_converse(const std::string& state, const std::vector<std::string>& sets,
                 const sxq::OptimizeConfig& cfg, const std::string& format,
                 const std::string& out) {
    const sxq::LabeledPureState s = sxq::parse_state(load_state_text(state), env_from_sets(sets));
    const sxq::ConverseResult res = sxq::optimize_converse(s, cfg);

    std::ostringstream text;
    if (format == "json") {
        json j;
        j["value"] = round12(res.value);
        j["best_channel"] = res.best_label;
        j["best_split"] = round12(res.best_split);
        if (res.continuous_ran) j["best_continuous"] = round12(res.best_continuous);
        j["iterations"] = res.iterations;
        j["restarts"] = res.restarts;
        j["seed"] = res.seed;
        j["caveat"] = "value is a heuristic lower bound on the channel-converse maximum l(psi)";
        for (const auto& c : res.per_candidate)
            j["candidates"].push_back({{"channel", c.label}, {"value", round12(c.value)}});
        text << j.dump(2) << '\n';
    } else if (format == "csv") {
        text << "channel,value\n";
        for (const auto& c : res.per_candidate) text << c.label << ',' << fmt12(c.value) << '\n';
    } else {
        text << "converse value = " << fmt12(res.value) << " via " << res.best_label << '\n';
        text << "(lower bound on l(psi); search: " << res.restarts << " restarts, seed "
             << res.seed << ")\n";
        text << "candidates:\n";
        for (const auto& c : res.per_candidate)
            text << "  " << c.label << " -> " << fmt12(c.value) << '\n';
    }
    emit(text.str(), out);
    return kExitOk;
}

int cmd_parse(const std::string& state, const std::vector<std::string>& sets,
              const std::string& format, const std::string& out) {
    const sxq::LabeledPureState s = sxq::parse_state(load_state_text(state), env_from_sets(sets));
    if (format == "json") {
        json j;
        for (const auto& f : s.layout.factors)
            j["systems"].push_back({{"label", f.label}, {"dim", f.dim}});
        for (sxq::Role r : sxq::kAllRoles)
            j["roles"][sxq::role_name(r)] = s.layout.role_labels(r);
        for (const auto& a : s.amps) j["amplitudes"].push_back({a.real(), a.imag()});
        emit(j.dump(2) + "\n", out);
    } else {
        emit(sxq::serialize_state(s), out);
    }
    return kExitOk;
}

int cmd_verify_paper(const std::string& inject, const std::string& format,
                     const std::string& out) {
    sxq::Fault fault = sxq::Fault::None;
    if (inject == "nat-log")
        fault = sxq::Fault::NatLog;
    else if (inject == "role-order")
        fault = sxq::Fault::RoleOrder;
    else if (!inject.empty())
        throw std::invalid_argument("unknown fault '" + inject +
                                    "' (expected nat-log or role-order)");

    const auto results = sxq::run_paper_checks(fault);
    std::ostringstream text;
    std::vector<std::string> failed;
    for (const auto& r : results) {
        if (!r.pass) failed.push_back(r.name);
        if (format != "json")
            text << (r.pass ? "PASS" : "FAIL") << "  " << r.name
                 << (r.detail.empty() ? "" : ": " + r.detail) << '\n';
    }
    if (format == "json") {
        json j;
        j["ok"] = failed.empty();
        for (const auto& r : results)
            j["checks"].push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        text << j.dump(2) << '\n';
    } else if (failed.empty()) {
        text << "all " << results.size() << " checks passed\n";
    } else {
        text << failed.size() << " check(s) failed:";
        for (const auto& name : failed) text << ' ' << name << ';';
        text << '\n';
    }
    emit(text.str(), out);
    return failed.empty() ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Entanglement-cost bounds for state exchange with quantum side information"};
    app.require_subcommand(1);

    std::string state, format = "text", out, param, emit_list = "csv", inject;
    std::vector<std::string> sets;
    double from = 0, to = 1, step = 0.01, tol = 1e-9;
    bool weak = false;
    sxq::OptimizeConfig cfg;

    auto add_common = [&](CLI::App* sub, bool needs_state) {
        if (needs_state)
            sub->add_option("--state", state, "state file or builtin name")->required();
        sub->add_option("--set", sets, "parameter override name=value")->take_all();
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--out", out, "output path (default stdout)");
        sub->add_option("--seed", cfg.seed, "random seed");
        sub->add_option("--tol", tol, "condition tolerance");
    };

    auto* sb = app.add_subcommand("bounds", "compute all bounds and condition checks");
    add_common(sb, true);
    auto* sc = app.add_subcommand("conditions", "exact-cost condition checks only");
    add_common(sc, true);
    auto* sp = app.add_subcommand("parse", "parse a state file and echo it back");
    add_common(sp, true);

    auto* sw = app.add_subcommand("sweep", "sweep a parameter and emit CSV/SVG");
    add_common(sw, true);
    sw->add_option("--param", param, "parameter to sweep")->required();
    sw->add_option("--from", from)->required();
    sw->add_option("--to", to)->required();
    sw->add_option("--step", step)->required();
    sw->add_option("--emit", emit_list, "comma list of csv,svg");
    sw->add_flag("--weak", weak, "include l3/l4 columns");

    auto* sv = app.add_subcommand("converse", "optimize the channel converse bound");
    add_common(sv, true);
    sv->add_option("--dim-v", cfg.dim_v, "V dimension (default dim R)");
    sv->add_option("--dim-e", cfg.dim_e, "E dimension (default dim R)");
    sv->add_option("--restarts", cfg.restarts);
    sv->add_option("--iters", cfg.max_iters);
    sv->add_flag("--splits-only", cfg.splits_only, "skip the continuous isometry search");

    auto* sy = app.add_subcommand("verify-paper", "run the built-in verification suite");
    add_common(sy, false);
    sy->add_option("--inject-fault", inject, "deliberate tampering: nat-log or role-order");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);  // prints the message or help text
        return rc == 0 ? kExitOk : kExitInput;
    }

    try {
        if (sb->parsed()) return cmd_bounds(state, sets, format, out, tol, false);
        if (sc->parsed()) return cmd_bounds(state, sets, format, out, tol, true);
        if (sp->parsed()) return cmd_parse(state, sets, format, out);
        if (sw->parsed()) return cmd_sweep(state, sets, param, from, to, step, emit_list, weak, out);
        if (sv->parsed()) return cmd_converse(state, sets, cfg, format, out);
        if (sy->parsed()) return cmd_verify_paper(inject, format, out);
    } catch (const sxq::NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}
