#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sxq/channel.hpp"
#include "sxq/parse.hpp"

namespace sxq {

struct SweepRow {
    double param_value = 0;
    double u1 = 0, u2 = 0, l1 = 0, l2 = 0;
    std::optional<double> l3, l4, converse;
};

struct SweepOptions {
    bool include_weak = false;
    bool include_converse = false;
    OptimizeConfig converse_cfg{.restarts = 0, .splits_only = true};
    bool parallel = true;  // serial path kept as reference
};

struct SweepResult {
    std::vector<SweepRow> rows;
    int u1_sign_changes = 0;
    std::optional<double> u1_crossing;  // bisection-refined, |u1| <= 1e-6
};

// Evaluates the bounds of the state in `text` over a strictly increasing grid
// of `param` values. Grid points are independent; with `parallel` they run
// under OpenMP, rows ordered by grid index either way.
SweepResult run_sweep(const std::string& text, const ParamEnv& env, const std::string& param,
                      double from, double to, double step, const SweepOptions& opts = {});

// Header `param,u1,u2,l1,l2[,l3,l4,converse]`, 12 significant digits.
std::string sweep_csv(const SweepResult& r);

// Self-contained 800x600 line chart, one polyline per bound series.
std::string sweep_svg(const SweepResult& r, const std::string& param_name);

}  // namespace sxq
