// Acceptance harness: one pass/fail line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <sys/wait.h>

#include "oracle_eig.hpp"
#include "sxq/bounds.hpp"
#include "sxq/builtins.hpp"
#include "sxq/channel.hpp"
#include "sxq/conditions.hpp"
#include "sxq/entropy.hpp"
#include "sxq/parse.hpp"
#include "sxq/sweep.hpp"
#include "sxq/verify.hpp"

namespace {

int g_failures = 0;

void report(int idx, const char* name, bool pass, const std::string& detail, double secs) {
    std::printf("criterion %d [%s]: %s (%.2fs)%s%s\n", idx, name, pass ? "PASS" : "FAIL", secs,
                detail.empty() ? "" : " — ", detail.c_str());
    if (!pass) ++g_failures;
}

void timed(int idx, const char* name, const std::function<std::string()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool pass = true;
    try {
        detail = body();  // empty or informational on success
    } catch (const std::exception& e) {
        pass = false;
        detail = e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(idx, name, pass, detail, secs);
}

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::runtime_error(msg);
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// 1. Entropy/QCMI regression on the built-in five-qubit benchmark state.
std::string crit1() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto s = sxq::appendixc_state();
    const struct {
        std::vector<std::string> labels;
        double want;
    } rows[] = {
        {{"r", "a"}, 0.918296}, {{"a"}, 0.918296},        {{"b"}, 0.918296},
        {{"r", "ca", "b"}, 0.918296}, {{"cb", "b"}, 1.58496}, {{"r", "cb", "b"}, 1.58496},
        {{"r", "b"}, 1.58496},  {{"ca", "b"}, 0.550048},
    };
    for (const auto& row : rows) {
        const double got = sxq::entropy_of(s, row.labels);
        require(std::abs(got - row.want) <= 1e-4,
                "entropy " + num(got) + " != " + num(row.want));
    }
    const auto rep = sxq::check_conditions(s);
    require(rep.qcmi[0] <= 1e-9, "I(R;C_A|A) = " + num(rep.qcmi[0]));
    int held = 0;
    for (int i = 0; i < 4; ++i) {
        if (rep.holds[i]) ++held;
        if (i > 0) require(rep.qcmi[i] > 0.05, "QCMI " + num(rep.qcmi[i]) + " not > 0.05");
    }
    require(held == 1, "expected exactly one condition, got " + std::to_string(held));
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    require(secs < 1.0, "runtime " + num(secs) + "s >= 1s");
    return "8 entropies within 1e-4, unique exact-cost condition";
}

// 2. Lambda sweep: one sign change of u1 in (0.60, 0.70); endpoint u1 = l1 = -1.
std::string crit2() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto res =
        sxq::run_sweep(sxq::builtin_state_text("eq8.sx"), {}, "lambda", 0.0, 1.0, 0.01, {});
    require(res.u1_sign_changes == 1,
            "u1 sign changes = " + std::to_string(res.u1_sign_changes));
    require(res.u1_crossing && *res.u1_crossing > 0.60 && *res.u1_crossing < 0.70,
            "crossing outside (0.60, 0.70)");
    const auto& last = res.rows.back();
    require(std::abs(last.u1 + 1.0) <= 1e-7, "u1(1) = " + num(last.u1));
    require(std::abs(last.l1 + 1.0) <= 1e-7, "l1(1) = " + num(last.l1));
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    require(secs < 5.0, "runtime " + num(secs) + "s >= 5s");
    return "101 points, crossing at lambda = " + num(*res.u1_crossing);
}

// 3. GHZ padding identity on 50 random five-qubit states for d in {2,3}.
std::string crit3() {
    std::mt19937_64 rng(20240817);
    const auto layout = sxq::five_qubit_layout();
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const auto s = sxq::random_state(layout, rng());
        for (int d : {2, 3}) {
            const auto [lhs, rhs] = sxq::ghz_gap_check(s, d);
            worst = std::max(worst, std::abs(lhs - rhs));
        }
    }
    require(worst <= 1e-7, "max deviation " + num(worst));
    return "100 comparisons, max deviation " + num(worst);
}

// 4. Converse gap on the four-Bell-pair state, split + continuous optimizer.
std::string crit4() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto s = sxq::parse_state(sxq::builtin_state_text("eq5.sx"));
    const auto [l1, l2] = sxq::lower_bounds(s);
    require(std::abs(l1) <= 1e-9 && std::abs(l2) <= 1e-9, "l1/l2 not 0");
    const double split =
        sxq::converse_value(s, sxq::ChannelSpec::split({"ra", "rca"}));
    require(std::abs(split - 2.0) <= 1e-9, "split value " + num(split));
    sxq::OptimizeConfig cfg;
    cfg.dim_v = 4;
    cfg.dim_e = 4;
    cfg.restarts = 8;
    cfg.seed = 7;
    cfg.max_iters = 40;
    const auto res = sxq::optimize_converse(s, cfg);
    require(res.best_continuous >= 1.95,
            "continuous optimizer reached " + num(res.best_continuous));
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    require(secs < 60.0, "runtime " + num(secs) + "s >= 60s");
    return "split 2.0, continuous " + num(res.best_continuous);
}

// 5. Sandwich/antisymmetry/SSA/duality suite on 200 random states.
std::string crit5() {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(424242);
    const auto layout = sxq::five_qubit_layout();
    for (int trial = 0; trial < 200; ++trial) {
        const auto s = sxq::random_state(layout, rng());
        const auto [u1, u2] = sxq::upper_bounds(s);
        const auto [l1, l2] = sxq::lower_bounds(s);
        const auto [l3, l4] = sxq::weak_lower_bounds(s);
        require(std::min(u1, u2) >= std::max(l1, l2) - 1e-7, "sandwich violated");
        require(l3 <= l1 + 1e-7 && l4 <= l2 + 1e-7, "weak bounds not dominated");
        const auto [x1, x2] = sxq::lower_bounds(sxq::exchanged_state(s));
        require(std::abs(x1 + l1) <= 1e-9, "exchange antisymmetry violated");
        require(sxq::qcmi(s, {"R"}, {"C_A"}, {"A"}) >= -1e-7, "SSA violated");
        const double d = sxq::cond_entropy(s, {"a"}, {"ca", "b"}) +
                         sxq::cond_entropy(s, {"a"}, {"cb", "r"});
        require(std::abs(d) <= 1e-7, "conditional-entropy duality violated");
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    require(secs < 30.0, "runtime " + num(secs) + "s >= 30s");
    return "200 states";
}

// 6. Trivial splits: discard-all == l1, forward-all == l2, within 1e-9.
std::string crit6() {
    std::mt19937_64 rng(86421);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto s = sxq::random_state(sxq::five_qubit_layout(), rng());
        const auto [l1, l2] = sxq::lower_bounds(s);
        const double v0 = sxq::converse_value(s, sxq::ChannelSpec::split({}));
        const double v1 = sxq::converse_value(s, sxq::ChannelSpec::split({"r"}));
        worst = std::max({worst, std::abs(v0 - l1), std::abs(v1 - l2)});
    }
    require(worst <= 1e-9, "max deviation " + num(worst));
    return "100 states, max deviation " + num(worst);
}

// 7. Main eigensolver path vs an independent dense solver, all dims <= 16.
std::string crit7() {
    std::mt19937_64 rng(777);
    std::normal_distribution<double> g;
    double worst = 0.0;
    for (int dim = 2; dim <= 16; ++dim) {
        for (int rep = 0; rep < 4; ++rep) {
            // random density matrix rho = G G^dag / tr
            sxq::CMat m(dim);
            std::vector<std::complex<double>> gm(static_cast<size_t>(dim) * dim);
            for (auto& z : gm) z = {g(rng), g(rng)};
            double tr = 0.0;
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < dim; ++j) {
                    std::complex<double> sum = 0.0;
                    for (int k = 0; k < dim; ++k)
                        sum += gm[i * dim + k] * std::conj(gm[j * dim + k]);
                    m(i, j) = sum;
                    if (i == j) tr += sum.real();
                }
            for (auto& z : m.a) z /= tr;

            auto h_of = [](const std::vector<double>& ev) {
                double h = 0.0;
                for (double p : ev)
                    if (p > 1e-15) h -= p * std::log2(p);
                return h;
            };
            const double main_h = h_of(sxq::jacobi_eigenvalues(m));
            const double oracle_h = h_of(oracle::hermitian_eigenvalues(m));
            worst = std::max(worst, std::abs(main_h - oracle_h));
        }
    }
    require(worst <= 1e-8, "max entropy deviation " + num(worst));
    return "dims 2..16, max deviation " + num(worst);
}

// 8. The CLI's verify-paper subcommand: exit 0 clean, 3 under either fault.
std::string crit8() {
    auto run = [](const std::string& args) {
        const std::string cmd = std::string(SXQ_CLI_PATH) + " verify-paper " + args +
                                " > /dev/null 2>&1";
        return WEXITSTATUS(std::system(cmd.c_str()));
    };
    const int clean = run("");
    require(clean == 0, "clean run exited " + std::to_string(clean));
    const int nat = run("--inject-fault nat-log");
    require(nat == 3, "nat-log fault exited " + std::to_string(nat));
    const int role = run("--inject-fault role-order");
    require(role == 3, "role-order fault exited " + std::to_string(role));
    return "exit codes 0/3/3";
}

}  // namespace

int main() {
    timed(1, "benchmark-state regression", crit1);
    timed(2, "lambda-sweep sign change", crit2);
    timed(3, "ghz padding identity", crit3);
    timed(4, "converse gap", crit4);
    timed(5, "property suite", crit5);
    timed(6, "trivial-split consistency", crit6);
    timed(7, "eigensolver oracle equivalence", crit7);
    timed(8, "verify-paper exit codes", crit8);
    if (g_failures) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all 8 criteria passed\n");
    return 0;
}
