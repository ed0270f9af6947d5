#include "greensum/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace greensum::eigensolve {

namespace {
constexpr double kRescale = 1e-250;
constexpr double kRescaleLimit = 1e250;
}  // namespace

EigenProblem half_line(std::function<double(double)> U, Parity parity, double x_max, double h) {
    EigenProblem prob;
    prob.U = std::move(U);
    prob.a = 0.0;
    prob.b = x_max;
    prob.left = (parity == Parity::even) ? Bc::neumann : Bc::dirichlet;
    prob.right = Bc::dirichlet;
    prob.h = h;
    return prob;
}

ShootingSolver::ShootingSolver(EigenProblem prob) : prob_(std::move(prob)) {
    if (!(prob_.b > prob_.a)) throw std::invalid_argument("ShootingSolver: requires a < b");
    if (!(prob_.h > 0.0)) throw std::invalid_argument("ShootingSolver: requires h > 0");
    n_ = static_cast<int>(std::ceil((prob_.b - prob_.a) / prob_.h)) + 1;
    const double h = (prob_.b - prob_.a) / (n_ - 1);
    prob_.h = h;
    xs_.resize(n_);
    pot_.resize(n_);
    for (int i = 0; i < n_; ++i) {
        xs_[i] = prob_.a + i * h;
        pot_[i] = prob_.U(xs_[i]);
        if (!std::isfinite(pot_[i]))
            throw std::invalid_argument("ShootingSolver: potential not finite on the grid");
    }
    e_floor_ = *std::min_element(pot_.begin(), pot_.end()) - 1.0;
}

ShootingSolver::Shot ShootingSolver::shoot(double energy, std::vector<double>* keep) const {
    const double h = prob_.h;
    const double h2 = h * h;
    auto t = [&](int i) { return h2 * (pot_[i] - energy) / 12.0; };

    double psi_prev, psi;
    if (prob_.left == Bc::dirichlet) {
        psi_prev = 0.0;
        psi = h * (1.0 + h2 * (pot_[0] - energy) / 6.0);
    } else {
        // Taylor start with psi'(a) = 0; U'' from the cached grid.
        const double u0 = pot_[0] - energy;
        const double upp =
            n_ >= 4 ? (2.0 * pot_[0] - 5.0 * pot_[1] + 4.0 * pot_[2] - pot_[3]) / h2 : 0.0;
        psi_prev = 1.0;
        psi = 1.0 + 0.5 * h2 * u0 + h2 * h2 * (u0 * u0 + upp) / 24.0;
    }
    if (keep) {
        keep->assign(n_, 0.0);
        (*keep)[0] = psi_prev;
        (*keep)[1] = psi;
    }

    int nodes = 0;
    double last_sign = psi > 0.0 ? 1.0 : (psi < 0.0 ? -1.0 : 0.0);
    double tm = t(0), t0 = t(1);
    double psi_prev2 = 0.0;
    for (int i = 1; i + 1 < n_; ++i) {
        const double tp = t(i + 1);
        double next = ((2.0 + 10.0 * t0) * psi - (1.0 - tm) * psi_prev) / (1.0 - tp);
        if (std::abs(next) > kRescaleLimit) {
            next *= kRescale;
            psi *= kRescale;
            psi_prev *= kRescale;
            if (keep)
                for (double& v : *keep) v *= kRescale;
        }
        const double sign = next > 0.0 ? 1.0 : (next < 0.0 ? -1.0 : 0.0);
        if (sign != 0.0 && last_sign != 0.0 && sign != last_sign) ++nodes;
        if (sign != 0.0) last_sign = sign;
        psi_prev2 = psi_prev;
        psi_prev = psi;
        psi = next;
        tm = t0;
        t0 = tp;
        if (keep) (*keep)[i + 1] = psi;
    }

    double end_value;
    if (prob_.right == Bc::dirichlet) {
        end_value = psi;
    } else {
        end_value = (3.0 * psi - 4.0 * psi_prev + psi_prev2) / (2.0 * h);
    }
    return Shot{nodes, end_value};
}

double ShootingSolver::node_transition(int k) {
    if (k < static_cast<int>(transition_cache_.size())) return transition_cache_[k];
    for (int kk = static_cast<int>(transition_cache_.size()); kk <= k; ++kk) {
        double lo = kk == 0 ? e_floor_ : transition_cache_[kk - 1];
        double step = 1.0;
        double hi = lo + step;
        int guard = 0;
        while (shoot(hi).nodes <= kk) {
            step *= 2.0;
            hi = lo + step;
            if (++guard > 70)
                throw std::runtime_error(
                    "eigensolve: node bracket failed; raise x_max or refine the grid");
        }
        for (int iter = 0; iter < 200; ++iter) {
            const double mid = 0.5 * (lo + hi);
            if (shoot(mid).nodes > kk)
                hi = mid;
            else
                lo = mid;
            if (hi - lo < 1e-13 * std::max(1.0, std::abs(hi))) break;
        }
        transition_cache_.push_back(0.5 * (lo + hi));
    }
    return transition_cache_[k];
}

double ShootingSolver::bracketed_eigenvalue(int k) {
    if (prob_.right == Bc::dirichlet) return node_transition(k);
    // Neumann right: the k-th eigenvalue sits strictly inside the plateau of
    // node count k; bisect on the endpoint derivative.
    double lo = k == 0 ? e_floor_ : node_transition(k - 1);
    double hi = node_transition(k);
    auto end_deriv = [&](double e) { return shoot(e).end_value; };
    double flo = end_deriv(lo), fhi = end_deriv(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0) == (fhi > 0))
        throw std::runtime_error("eigensolve: endpoint-derivative bracket failed");
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double fm = end_deriv(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
        if (hi - lo < 1e-13 * std::max(1.0, std::abs(hi))) break;
    }
    return 0.5 * (lo + hi);
}

std::vector<EigenState> ShootingSolver::solve(int count) {
    if (count < 1) throw std::invalid_argument("solve: count must be >= 1");
    for (int k = static_cast<int>(cache_.size()); k < count; ++k)
        cache_.push_back(EigenState{bracketed_eigenvalue(k), k});
    return std::vector<EigenState>(cache_.begin(), cache_.begin() + count);
}

ShootingSolver::Wavefunction ShootingSolver::eigenfunction(int index) {
    solve(index + 1);
    Wavefunction w;
    w.energy = cache_[index].energy;
    w.nodes = index;
    w.x = xs_;
    shoot(w.energy, &w.psi);

    // Beyond the outer turning point the residual growing mode eventually
    // dominates; clamp the tail to zero once |psi| grows persistently.
    int turn = n_ - 1;
    for (int i = n_ - 1; i >= 0; --i) {
        if (pot_[i] <= w.energy) {
            turn = i;
            break;
        }
    }
    double peak = 0.0;
    for (int i = 0; i <= turn; ++i) peak = std::max(peak, std::abs(w.psi[i]));
    int clamp = n_;
    int rising = 0;
    for (int i = turn + 1; i < n_; ++i) {
        if (std::abs(w.psi[i]) > std::abs(w.psi[i - 1]) && std::abs(w.psi[i - 1]) < 1e-3 * peak)
            ++rising;
        else
            rising = 0;
        if (rising >= 3) {
            clamp = i - 3;
            break;
        }
    }
    for (int i = clamp; i < n_; ++i) w.psi[i] = 0.0;

    // Simpson norm on the uniform grid.
    const double h = prob_.h;
    double norm2 = 0.0;
    for (int i = 0; i + 2 < n_; i += 2)
        norm2 += h / 3.0 *
                 (w.psi[i] * w.psi[i] + 4.0 * w.psi[i + 1] * w.psi[i + 1] +
                  w.psi[i + 2] * w.psi[i + 2]);
    if (n_ % 2 == 0)
        norm2 += 0.5 * h * (w.psi[n_ - 2] * w.psi[n_ - 2] + w.psi[n_ - 1] * w.psi[n_ - 1]);
    const double scale = 1.0 / std::sqrt(norm2);
    for (double& v : w.psi) v *= scale;
    return w;
}

double ShootingSolver::Wavefunction::operator()(double xq) const {
    const int n = static_cast<int>(x.size());
    if (xq <= x.front()) return psi.front();
    if (xq >= x.back()) return psi.back();
    const double h = x[1] - x[0];
    int i = static_cast<int>((xq - x.front()) / h);
    i = std::clamp(i, 1, n - 3);
    // 4-point Lagrange on x[i-1..i+2]
    const double t = (xq - x[i]) / h;
    const double c0 = -t * (t - 1.0) * (t - 2.0) / 6.0;
    const double c1 = (t * t - 1.0) * (t - 2.0) / 2.0;
    const double c2 = -t * (t + 1.0) * (t - 2.0) / 2.0;
    const double c3 = t * (t * t - 1.0) / 6.0;
    return c0 * psi[i - 1] + c1 * psi[i] + c2 * psi[i + 1] + c3 * psi[i + 2];
}

double ShootingSolver::rayleigh_quotient(const Wavefunction& w) const {
    const double h = prob_.h;
    const int n = n_;
    std::vector<double> dpsi(n);
    for (int i = 2; i + 2 < n; ++i)
        dpsi[i] = (-w.psi[i + 2] + 8.0 * w.psi[i + 1] - 8.0 * w.psi[i - 1] + w.psi[i - 2]) /
                  (12.0 * h);
    const auto& p = w.psi;
    dpsi[0] = (-25.0 * p[0] + 48.0 * p[1] - 36.0 * p[2] + 16.0 * p[3] - 3.0 * p[4]) / (12.0 * h);
    dpsi[1] = (-3.0 * p[0] - 10.0 * p[1] + 18.0 * p[2] - 6.0 * p[3] + p[4]) / (12.0 * h);
    dpsi[n - 1] = (25.0 * p[n - 1] - 48.0 * p[n - 2] + 36.0 * p[n - 3] - 16.0 * p[n - 4] +
                   3.0 * p[n - 5]) /
                  (12.0 * h);
    dpsi[n - 2] =
        (3.0 * p[n - 1] + 10.0 * p[n - 2] - 18.0 * p[n - 3] + 6.0 * p[n - 4] - p[n - 5]) /
        (12.0 * h);
    auto simpson = [&](auto f) {
        double s = 0.0;
        for (int i = 0; i + 2 < n; i += 2) s += h / 3.0 * (f(i) + 4.0 * f(i + 1) + f(i + 2));
        if (n % 2 == 0) s += 0.5 * h * (f(n - 2) + f(n - 1));
        return s;
    };
    const double kinetic = simpson([&](int i) { return dpsi[i] * dpsi[i]; });
    const double potential = simpson([&](int i) { return pot_[i] * w.psi[i] * w.psi[i]; });
    const double norm = simpson([&](int i) { return w.psi[i] * w.psi[i]; });
    return (kinetic + potential) / norm;
}

std::vector<EigenState> solve_spectrum(const EigenProblem& prob, int count) {
    ShootingSolver solver(prob);
    return solver.solve(count);
}

}  // namespace greensum::eigensolve
