// Compares the OpenMP sweep/optimizer kernels against the serial reference path.
#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "sxq/builtins.hpp"
#include "sxq/channel.hpp"
#include "sxq/parse.hpp"
#include "sxq/sweep.hpp"

namespace {

double seconds(void (*fn)()) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void sweep_once(bool parallel) {
    sxq::SweepOptions opts;
    opts.include_weak = true;
    opts.parallel = parallel;
    sxq::run_sweep(sxq::builtin_state_text("eq8.sx"), {}, "lambda", 0.0, 1.0, 0.002, opts);
}

void converse_once() {
    const auto s = sxq::parse_state(sxq::builtin_state_text("eq5.sx"));
    sxq::OptimizeConfig cfg;
    cfg.restarts = 1;
    cfg.max_iters = 30;
    cfg.dim_v = 4;
    cfg.dim_e = 4;
    sxq::optimize_converse(s, cfg);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP\n");
#endif
    const double t_serial = seconds([] { sweep_once(false); });
    const double t_par = seconds([] { sweep_once(true); });
    std::printf("sweep 501 pts  serial %.3fs  parallel %.3fs  speedup %.2fx\n", t_serial, t_par,
                t_serial / t_par);
    const double t_conv = seconds(converse_once);
    std::printf("converse (1 restart, 30 iters, dim 4x4): %.3fs\n", t_conv);
    return 0;
}
