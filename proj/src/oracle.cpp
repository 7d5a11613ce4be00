#include "sbm/oracle.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "sbm/spectral.hpp"

namespace sbm {
namespace {

using cdbl = std::complex<double>;
constexpr cdbl I{0.0, 1.0};

// Exact J' integrals over a bin [u, v], u >= 0, written against log1p and
// common denominators: the naive antiderivative difference loses every digit
// once v - u << u + a, which is exactly the log-scheme regime.
//   dF = int_u^v J'          = 2 a^2 alpha [log1p(d/(u+a)) - a d/((u+a)(v+a))]
//   dG = int_u^v w J'        = 2 a^2 alpha [d - 2a log1p(d/(u+a)) + a^2 d/((u+a)(v+a))]
void bin_moments(double alpha, double a, double u, double v, double& dF, double& dG) {
    const double d = v - u;
    const double pref = 2.0 * alpha * a * a;
    const double lg = std::log1p(d / (u + a));
    const double rat = d / ((u + a) * (v + a));
    dF = pref * (lg - a * rat);
    dG = pref * (d - 2.0 * a * lg + a * a * rat);
}

struct ArrowHamiltonian {
    // One-excitation block in the basis {|up, vac>, |down, 1_k>}: diagonal
    // d[0] = +a/2, d[k] = -a/2 + w_k, with couplings nu_k on the first row
    // and column only.
    std::vector<double> diag;
    std::vector<double> nu;

    void matvec(const std::vector<double>& x, std::vector<double>& y) const {
        const std::size_t m = nu.size();
        double acc = diag[0] * x[0];
        for (std::size_t k = 0; k < m; ++k) acc += nu[k] * x[k + 1];
        y[0] = acc;
        for (std::size_t k = 0; k < m; ++k) y[k + 1] = diag[k + 1] * x[k + 1] + nu[k] * x[0];
    }
};

ArrowHamiltonian make_arrow(const ModelParams& p, double eta, const DiscretizedBath& bath) {
    const double a = eta * p.delta;
    const std::size_t m = bath.frequency.size();
    ArrowHamiltonian h;
    h.diag.resize(m + 1);
    h.nu.resize(m);
    h.diag[0] = 0.5 * a;
    for (std::size_t k = 0; k < m; ++k) {
        h.diag[k + 1] = -0.5 * a + bath.frequency[k];
        h.nu[k] = std::sqrt(std::max(bath.coupling_sq[k], 0.0));
    }
    return h;
}

}  // namespace

DiscretizedBath discretize(const ModelParams& p, double eta, int n_modes, Scheme scheme) {
    p.validate();
    check_eta(eta);
    if (n_modes < 1) throw domain_error("discretize: need at least one mode");

    const double W = p.omega_c;
    const double a = eta * p.delta;
    std::vector<double> edges(static_cast<std::size_t>(n_modes) + 1);
    if (scheme == Scheme::linear) {
        for (int i = 0; i <= n_modes; ++i) edges[i] = W * static_cast<double>(i) / n_modes;
    } else {
        // Geometric bins resolve the 1/(w+a)^2 knee however small a is; the
        // strip [0, w_min) carries J' weight of order alpha*w_min^2 and is
        // dropped.
        const double w_min = 1e-8 * W;
        for (int i = 0; i <= n_modes; ++i)
            edges[i] = w_min * std::pow(W / w_min, static_cast<double>(i) / n_modes);
    }

    DiscretizedBath bath;
    bath.scheme = scheme;
    bath.frequency.resize(n_modes);
    bath.coupling_sq.resize(n_modes);
    for (int k = 0; k < n_modes; ++k) {
        const double u = edges[k], v = edges[k + 1];
        double dF, dG;
        bin_moments(p.alpha, a, u, v, dF, dG);
        if (dF > 0.0) {
            bath.frequency[k] = std::clamp(dG / dF, u, v);
            bath.coupling_sq[k] = dF;
        } else {  // zero coupling (alpha = 0): the centroid degenerates, midpoint stands in
            bath.frequency[k] = 0.5 * (u + v);
            bath.coupling_sq[k] = 0.0;
        }
    }
    return bath;
}

SingleExcitationResult diag_single_excitation(const ModelParams& p, double eta,
                                              const DiscretizedBath& bath) {
    p.validate();
    check_eta(eta);
    const ArrowHamiltonian h = make_arrow(p, eta, bath);
    const std::size_t dim = h.diag.size();
    const int max_iter = static_cast<int>(std::min<std::size_t>(dim, 600));

    // Lanczos with full reorthogonalization (two classical Gram-Schmidt
    // passes — one is not enough once the basis exceeds ~50 vectors).
    std::vector<std::vector<double>> Q;
    std::vector<double> alpha_c, beta_c;  // tridiagonal coefficients
    std::vector<double> q(dim, 1.0 / std::sqrt(static_cast<double>(dim)));
    std::vector<double> w(dim), q_prev(dim, 0.0);
    Q.push_back(q);

    double scale = 0.0;
    for (double d : h.diag) scale = std::max(scale, std::abs(d));
    for (double v : h.nu) scale = std::max(scale, std::abs(v));

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    auto tridiag_solve = [&](bool vectors) {
        const int k = static_cast<int>(alpha_c.size());
        Eigen::VectorXd d(k), e(std::max(k - 1, 0));
        for (int i = 0; i < k; ++i) d(i) = alpha_c[i];
        for (int i = 0; i + 1 < k; ++i) e(i) = beta_c[i];
        es.computeFromTridiagonal(d, e,
                                  vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
        if (es.info() != Eigen::Success)
            throw numerical_error("diag_single_excitation: tridiagonal eigensolve failed");
    };

    int it = 0;
    bool converged = false;
    for (; it < max_iter; ++it) {
        h.matvec(q, w);
        double a_it = 0.0;
        for (std::size_t i = 0; i < dim; ++i) a_it += w[i] * q[i];
        alpha_c.push_back(a_it);
        for (std::size_t i = 0; i < dim; ++i)
            w[i] -= a_it * q[i] + (it > 0 ? beta_c[it - 1] * q_prev[i] : 0.0);
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& qi : Q) {
                double proj = 0.0;
                for (std::size_t i = 0; i < dim; ++i) proj += w[i] * qi[i];
                for (std::size_t i = 0; i < dim; ++i) w[i] -= proj * qi[i];
            }
        }
        double b_next = 0.0;
        for (double x : w) b_next += x * x;
        b_next = std::sqrt(b_next);

        const bool exhausted = b_next <= 1e-13 * std::max(scale, 1.0);  // invariant subspace
        const bool check_now = exhausted || ((it + 1) % 10 == 0) || it + 1 == max_iter ||
                               static_cast<std::size_t>(it) + 1 == dim;
        if (check_now) {
            tridiag_solve(true);
            const double theta = es.eigenvalues()(0);
            const double s_last = es.eigenvectors()(it, 0);
            if (exhausted || std::abs(b_next * s_last) <= 1e-11 * std::max(1.0, std::abs(theta))) {
                converged = true;
                ++it;
                break;
            }
        }
        if (static_cast<std::size_t>(it) + 1 == dim) { ++it; break; }  // exact Krylov space

        beta_c.push_back(b_next);
        q_prev = q;
        for (std::size_t i = 0; i < dim; ++i) q[i] = w[i] / b_next;
        Q.push_back(q);
    }
    if (!converged) {
        tridiag_solve(true);
        const double theta = es.eigenvalues()(0);
        const double resid = beta_c.size() >= alpha_c.size()
                                 ? std::abs(beta_c[alpha_c.size() - 1] * es.eigenvectors()(it - 1, 0))
                                 : 0.0;
        if (resid > 1e-8 * std::max(1.0, std::abs(theta)))
            throw numerical_error(
                "diag_single_excitation: Lanczos residual " + std::to_string(resid) +
                    " after " + std::to_string(it) + " iterations",
                theta);
    }

    SingleExcitationResult out;
    out.energy = es.eigenvalues()(0);
    out.iterations = it;
    // Ground vector component on |up, vac> from the stored basis.
    double v0 = 0.0;
    const int k = static_cast<int>(alpha_c.size());
    for (int j = 0; j < k; ++j) v0 += Q[j][0] * es.eigenvectors()(j, 0);
    out.spin_weight = v0 * v0;
    return out;
}

double diag_two_excitation(const ModelParams& p, double eta, const DiscretizedBath& bath) {
    p.validate();
    check_eta(eta);
    const int m = static_cast<int>(bath.frequency.size());
    if (m > 60)
        throw domain_error("diag_two_excitation: dense dimension grows as n^2/2;"
                           " n_modes is capped at 60");
    const double a = eta * p.delta;
    const int dim = m + m * (m + 1) / 2;
    // Pair state |down, 1_k 1_l>, k <= l, packed after the m |up, 1_k> states.
    auto pair_index = [m](int k, int l) { return m + k * m - k * (k - 1) / 2 + (l - k); };

    Eigen::MatrixXd H = Eigen::MatrixXd::Zero(dim, dim);
    const double sqrt2 = std::sqrt(2.0);
    for (int k = 0; k < m; ++k) H(k, k) = 0.5 * a + bath.frequency[k];
    for (int k = 0; k < m; ++k) {
        const double nu_k = std::sqrt(std::max(bath.coupling_sq[k], 0.0));
        for (int l = k; l < m; ++l) {
            const int idx = pair_index(k, l);
            H(idx, idx) = -0.5 * a + bath.frequency[k] + bath.frequency[l];
            if (k == l) {
                // b_k^dag |1_k> = sqrt(2) |2_k>
                H(k, idx) = H(idx, k) = sqrt2 * nu_k;
            } else {
                const double nu_l = std::sqrt(std::max(bath.coupling_sq[l], 0.0));
                H(l, idx) = H(idx, l) = nu_k;
                H(k, idx) = H(idx, k) = nu_l;
            }
        }
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw numerical_error("diag_two_excitation: dense eigensolve failed");
    return es.eigenvalues()(0);
}

std::vector<cdbl> unitary_dynamics(const ModelParams& p, double eta,
                                   const DiscretizedBath& bath, double t_max, double dt) {
    p.validate();
    check_eta(eta);
    if (!(dt > 0.0)) throw domain_error("unitary_dynamics: dt must be positive");
    if (!(t_max >= dt)) throw domain_error("unitary_dynamics: t_max must be at least dt");

    const ArrowHamiltonian h = make_arrow(p, eta, bath);
    const std::size_t m = h.nu.size();
    const std::size_t n_steps = static_cast<std::size_t>(std::ceil(t_max / dt - 1e-9));

    // Crank-Nicolson: (1 + i theta H) x' = (1 - i theta H) x, theta = dt/2.
    // The Cayley transform is exactly unitary for Hermitian H, so any norm
    // drift measures pure roundoff. The left solve reduces to one complex
    // scalar equation for x'_0 by eliminating the bath entries (arrowhead
    // Schur complement), all precomputable.
    const double theta = 0.5 * dt;
    std::vector<cdbl> inv_den(m);
    cdbl schur{0.0, 0.0};
    for (std::size_t k = 0; k < m; ++k) {
        inv_den[k] = 1.0 / (1.0 + I * theta * h.diag[k + 1]);
        schur += h.nu[k] * h.nu[k] * inv_den[k];
    }
    const cdbl a00 = 1.0 + I * theta * h.diag[0] + theta * theta * schur;

    std::vector<cdbl> x(m + 1, cdbl{0.0, 0.0}), r(m + 1);
    x[0] = 1.0;
    std::vector<cdbl> out(n_steps + 1);
    out[0] = x[0];

    for (std::size_t step = 1; step <= n_steps; ++step) {
        // r = (1 - i theta H) x
        cdbl acc = h.diag[0] * x[0];
        for (std::size_t k = 0; k < m; ++k) acc += h.nu[k] * x[k + 1];
        r[0] = x[0] - I * theta * acc;
        for (std::size_t k = 0; k < m; ++k)
            r[k + 1] = x[k + 1] - I * theta * (h.diag[k + 1] * x[k + 1] + h.nu[k] * x[0]);

        cdbl rhs0 = r[0];
        for (std::size_t k = 0; k < m; ++k) rhs0 -= I * theta * h.nu[k] * (r[k + 1] * inv_den[k]);
        x[0] = rhs0 / a00;
        for (std::size_t k = 0; k < m; ++k)
            x[k + 1] = (r[k + 1] - I * theta * h.nu[k] * x[0]) * inv_den[k];

        double norm2 = 0.0;
        for (const cdbl& v : x) norm2 += std::norm(v);
        if (std::abs(norm2 - 1.0) > 1e-8)
            throw numerical_error("unitary_dynamics: norm drift " +
                                      std::to_string(norm2 - 1.0) + " at step " +
                                      std::to_string(step),
                                  norm2);
        out[step] = x[0];
    }
    return out;
}

double riemann_integral(const std::function<double(double)>& f, double lo, double hi,
                        long n) {
    if (n < 1) throw domain_error("riemann_integral: need at least one panel");
    const double h = (hi - lo) / static_cast<double>(n);
    double sum = 0.0, comp = 0.0;  // Kahan compensation
    for (long i = 0; i < n; ++i) {
        const double x = lo + (static_cast<double>(i) + 0.5) * h;
        const double y = f(x) - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum * h;
}

}  // namespace sbm
