#include "sxq/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "sxq/bounds.hpp"

namespace sxq {

namespace {

SweepRow eval_point(const std::string& text, const ParamEnv& env, const std::string& param,
                    double value, const SweepOptions& opts) {
    ParamEnv pe = env;
    pe.bindings[param] = value;
    const LabeledPureState s = parse_state(text, pe);
    SweepRow row;
    row.param_value = value;
    std::tie(row.u1, row.u2) = upper_bounds(s);
    std::tie(row.l1, row.l2) = lower_bounds(s);
    if (opts.include_weak) {
        const auto [l3, l4] = weak_lower_bounds(s);
        row.l3 = l3;
        row.l4 = l4;
    }
    if (opts.include_converse) row.converse = optimize_converse(s, opts.converse_cfg).value;
    return row;
}

}  // namespace

SweepResult run_sweep(const std::string& text, const ParamEnv& env, const std::string& param,
                      double from, double to, double step, const SweepOptions& opts) {
    if (!(from < to)) throw std::invalid_argument("sweep: need from < to");
    if (!(step > 0)) throw std::invalid_argument("sweep: need step > 0");
    const int n = static_cast<int>(std::floor((to - from) / step + 1e-9)) + 1;

    SweepResult res;
    res.rows.resize(n);
    if (opts.parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < n; ++i)
            res.rows[i] = eval_point(text, env, param, from + i * step, opts);
    } else {
        for (int i = 0; i < n; ++i)
            res.rows[i] = eval_point(text, env, param, from + i * step, opts);
    }

    auto u1_at = [&](double v) { return eval_point(text, env, param, v, SweepOptions{}).u1; };
    for (int i = 0; i + 1 < n; ++i) {
        double fa = res.rows[i].u1, fb = res.rows[i + 1].u1;
        if ((fa < 0) == (fb < 0) || fa == 0.0) continue;
        ++res.u1_sign_changes;
        if (res.u1_crossing) continue;  // refine the first crossing only
        double a = res.rows[i].param_value, b = res.rows[i + 1].param_value;
        double mid = 0.5 * (a + b), fm = u1_at(mid);
        for (int it = 0; it < 100 && std::abs(fm) > 1e-6 && b - a > 1e-13; ++it) {
            if ((fm < 0) == (fb < 0)) {
                b = mid;
                fb = fm;
            } else {
                a = mid;
                fa = fm;
            }
            mid = 0.5 * (a + b);
            fm = u1_at(mid);
        }
        res.u1_crossing = mid;
    }
    return res;
}

namespace {

std::string fmt12(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace

std::string sweep_csv(const SweepResult& r) {
    const bool weak = !r.rows.empty() && r.rows.front().l3.has_value();
    const bool conv = !r.rows.empty() && r.rows.front().converse.has_value();
    std::ostringstream out;
    out << "param,u1,u2,l1,l2";
    if (weak) out << ",l3,l4";
    if (conv) out << ",converse";
    out << '\n';
    for (const auto& row : r.rows) {
        out << fmt12(row.param_value) << ',' << fmt12(row.u1) << ',' << fmt12(row.u2) << ','
            << fmt12(row.l1) << ',' << fmt12(row.l2);
        if (weak) out << ',' << fmt12(*row.l3) << ',' << fmt12(*row.l4);
        if (conv) out << ',' << fmt12(*row.converse);
        out << '\n';
    }
    return out.str();
}

std::string sweep_svg(const SweepResult& r, const std::string& param_name) {
    const int W = 800, H = 600, ML = 70, MR = 150, MT = 30, MB = 50;
    struct Series {
        const char* name;
        const char* color;
        std::vector<double> ys;
    };
    std::vector<Series> series = {{"u1", "#d62728", {}},
                                  {"u2", "#ff7f0e", {}},
                                  {"l1", "#1f77b4", {}},
                                  {"l2", "#2ca02c", {}}};
    const bool weak = !r.rows.empty() && r.rows.front().l3.has_value();
    const bool conv = !r.rows.empty() && r.rows.front().converse.has_value();
    if (weak) {
        series.push_back({"l3", "#9467bd", {}});
        series.push_back({"l4", "#8c564b", {}});
    }
    if (conv) series.push_back({"converse", "#17becf", {}});
    std::vector<double> xs;
    for (const auto& row : r.rows) {
        xs.push_back(row.param_value);
        series[0].ys.push_back(row.u1);
        series[1].ys.push_back(row.u2);
        series[2].ys.push_back(row.l1);
        series[3].ys.push_back(row.l2);
        size_t k = 4;
        if (weak) {
            series[k++].ys.push_back(*row.l3);
            series[k++].ys.push_back(*row.l4);
        }
        if (conv) series[k].ys.push_back(*row.converse);
    }
    double xmin = xs.front(), xmax = xs.back();
    double ymin = 0, ymax = 0;
    for (const auto& s : series)
        for (double y : s.ys) {
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    // Tick grid at 0.1 intervals.
    ymin = std::floor(ymin * 10.0 - 0.5) / 10.0;
    ymax = std::ceil(ymax * 10.0 + 0.5) / 10.0;
    auto px = [&](double x) { return ML + (x - xmin) / (xmax - xmin) * (W - ML - MR); };
    auto py = [&](double y) { return H - MB - (y - ymin) / (ymax - ymin) * (H - MT - MB); };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
        << "\" viewBox=\"0 0 " << W << " " << H << "\">\n"
        << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
    // Axes and 0.1-spaced ticks.
    out << "<g stroke=\"#333\" stroke-width=\"1\" font-family=\"sans-serif\" font-size=\"11\">\n";
    out << "<line x1=\"" << ML << "\" y1=\"" << H - MB << "\" x2=\"" << W - MR << "\" y2=\""
        << H - MB << "\"/>\n";
    out << "<line x1=\"" << ML << "\" y1=\"" << MT << "\" x2=\"" << ML << "\" y2=\"" << H - MB
        << "\"/>\n";
    for (double x = std::ceil(xmin * 10) / 10; x <= xmax + 1e-12; x += 0.1) {
        out << "<line x1=\"" << px(x) << "\" y1=\"" << H - MB << "\" x2=\"" << px(x) << "\" y2=\""
            << H - MB + 5 << "\"/><text x=\"" << px(x) << "\" y=\"" << H - MB + 18
            << "\" text-anchor=\"middle\" stroke=\"none\" fill=\"#333\">" << fmt12(x)
            << "</text>\n";
    }
    for (double y = ymin; y <= ymax + 1e-12; y += 0.1) {
        out << "<line x1=\"" << ML - 5 << "\" y1=\"" << py(y) << "\" x2=\"" << ML << "\" y2=\""
            << py(y) << "\"/><text x=\"" << ML - 8 << "\" y=\"" << py(y) + 4
            << "\" text-anchor=\"end\" stroke=\"none\" fill=\"#333\">" << fmt12(y) << "</text>\n";
    }
    out << "<text x=\"" << (ML + W - MR) / 2 << "\" y=\"" << H - 10
        << "\" text-anchor=\"middle\" stroke=\"none\" fill=\"#333\">" << param_name
        << "</text>\n</g>\n";
    for (const auto& s : series) {
        out << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"";
        for (size_t i = 0; i < xs.size(); ++i)
            out << px(xs[i]) << ',' << py(s.ys[i]) << (i + 1 < xs.size() ? " " : "");
        out << "\"/>\n";
    }
    // Legend.
    out << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
    for (size_t i = 0; i < series.size(); ++i) {
        const double y = MT + 15 + 18.0 * i;
        out << "<line x1=\"" << W - MR + 15 << "\" y1=\"" << y << "\" x2=\"" << W - MR + 40
            << "\" y2=\"" << y << "\" stroke=\"" << series[i].color
            << "\" stroke-width=\"2\"/><text x=\"" << W - MR + 46 << "\" y=\"" << y + 4
            << "\" fill=\"#333\">" << series[i].name << "</text>\n";
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

}  // namespace sxq
