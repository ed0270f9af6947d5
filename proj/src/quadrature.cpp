#include "greensum/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace greensum::quadrature {

namespace {

// Gauss 7 / Kronrod 15 nodes and weights on [-1, 1] (QUADPACK dqk15).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Panel {
    double a, b;
    double value;
    double error;
    double resabs;
    long seq;
};

struct PanelOrder {
    bool operator()(const Panel& lhs, const Panel& rhs) const {
        if (lhs.error != rhs.error) return lhs.error < rhs.error;
        return lhs.seq > rhs.seq;  // older panel first on ties, deterministic
    }
};

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b, long seq,
                     long& evaluations) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double fv[15];
    double resk = 0.0, resg = 0.0, resabs = 0.0;
    const double fc = f(center);
    fv[7] = fc;
    resk = kWgk[7] * fc;
    resg = kWg[3] * fc;
    resabs = std::abs(resk);
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kXgk[i];
        const double f1 = f(center - dx);
        const double f2 = f(center + dx);
        fv[i] = f1;
        fv[14 - i] = f2;
        resk += kWgk[i] * (f1 + f2);
        if (i % 2 == 1) resg += kWg[i / 2] * (f1 + f2);
        resabs += kWgk[i] * (std::abs(f1) + std::abs(f2));
    }
    evaluations += 15;
    const double mean = 0.5 * resk;
    double resasc = kWgk[7] * std::abs(fc - mean);
    for (int i = 0; i < 7; ++i)
        resasc += kWgk[i] * (std::abs(fv[i] - mean) + std::abs(fv[14 - i] - mean));
    resasc *= half;
    resabs *= half;
    double err = std::abs((resk - resg) * half);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    err = std::max(err, 50.0 * 2.2204460492503131e-16 * resabs);  // rounding floor
    return Panel{a, b, resk * half, err, resabs, seq};
}

QuadratureResult adaptive(const std::function<double(double)>& f, double a, double b,
                          const std::vector<double>& hints, double tol, long max_evaluations) {
    if (!(a < b)) throw std::invalid_argument("integrate: requires a < b");
    if (!(tol > 0.0)) throw std::invalid_argument("integrate: requires tol > 0");

    std::vector<double> cuts;
    cuts.push_back(a);
    for (double s : hints)
        if (s > a && s < b) cuts.push_back(s);
    cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    long evaluations = 0;
    long seq = 0;
    std::priority_queue<Panel, std::vector<Panel>, PanelOrder> queue;
    double total = 0.0, total_err = 0.0, total_resabs = 0.0;
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        Panel p = evaluate_panel(f, cuts[i], cuts[i + 1], seq++, evaluations);
        total += p.value;
        total_err += p.error;
        total_resabs += p.resabs;
        queue.push(p);
    }

    // The summed rounding floor bounds what refinement can achieve.
    constexpr double eps = 2.2204460492503131e-16;
    const double width_floor = 1e-15 * (std::abs(a) + std::abs(b) + (b - a));
    double frozen = 0.0, frozen_err = 0.0;  // panels too narrow to split further
    while (total_err + frozen_err > std::max(tol, 100.0 * eps * total_resabs) &&
           !queue.empty()) {
        if (evaluations >= max_evaluations)
            throw QuadratureError("integrate: evaluation budget exhausted before tolerance");
        const Panel worst = queue.top();
        queue.pop();
        if (worst.b - worst.a <= width_floor) {
            total -= worst.value;
            total_err -= worst.error;
            frozen += worst.value;
            frozen_err += worst.error;
            continue;
        }
        const double mid = 0.5 * (worst.a + worst.b);
        Panel left = evaluate_panel(f, worst.a, mid, seq++, evaluations);
        Panel right = evaluate_panel(f, mid, worst.b, seq++, evaluations);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        total_resabs += left.resabs + right.resabs - worst.resabs;
        queue.push(left);
        queue.push(right);
    }
    return QuadratureResult{total + frozen, total_err + frozen_err, evaluations};
}

}  // namespace

QuadratureResult integrate_finite(const Integrand& f, double a, double b, double tol,
                                  long max_evaluations) {
    return adaptive(f.f, a, b, f.singularities, tol, max_evaluations);
}

QuadratureResult integrate_semi_infinite(const Integrand& f, double a, double tol,
                                         long max_evaluations) {
    const auto& g = f.f;
    auto mapped = [&g, a](double t) {
        const double u = 1.0 - t;
        const double x = a + t / u;
        return g(x) / (u * u);
    };
    std::vector<double> hints;
    for (double s : f.singularities) {
        if (s > a) hints.push_back((s - a) / (1.0 + s - a));
    }
    return adaptive(mapped, 0.0, 1.0, hints, tol, max_evaluations);
}

double separable_double_integral(const std::function<double(double)>& f,
                                 const std::function<double(double)>& g, double a, double b,
                                 double tol) {
    const double inner_tol = tol / (8.0 * (b - a));
    auto outer = [&](double x) {
        if (x <= a) return 0.0;
        const double inner = adaptive(f, a, x, {}, inner_tol, 400000).value;
        return g(x) * inner;
    };
    return 2.0 * adaptive(outer, a, b, {}, 0.5 * tol, 2000000).value;
}

}  // namespace greensum::quadrature
