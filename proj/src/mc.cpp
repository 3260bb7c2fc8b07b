#include "negaspec/mc.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "negaspec/rng.hpp"

namespace negaspec {

namespace {

struct ChainResult {
    std::vector<double> e;  // energy sum per sweep
    std::vector<double> m;  // magnetization per sweep (when recorded)
};

ChainResult run_chain(const StatMechModel &model, int sweeps, int therm, CounterRng &rng,
                      bool record_m) {
    const int n = model.n_spins;
    const std::size_t nt = model.terms.size();

    std::vector<std::vector<int>> terms_of_spin(n);
    for (std::size_t t = 0; t < nt; ++t)
        for (int s : model.terms[t].spins) terms_of_spin[s].push_back(static_cast<int>(t));

    std::vector<int8_t> spin(n, 1);
    std::vector<double> prod(nt);
    double energy = 0.0;
    for (std::size_t t = 0; t < nt; ++t) {
        prod[t] = model.terms[t].coeff;
        energy += prod[t];
    }
    double mag = n;

    ChainResult out;
    out.e.reserve(sweeps);
    if (record_m) out.m.reserve(sweeps);

    for (int sweep = 0; sweep < therm + sweeps; ++sweep) {
        for (int a = 0; a < n; ++a) {
            int i = static_cast<int>(rng.below(n));
            double delta = 0.0;
            for (int t : terms_of_spin[i]) delta -= 2.0 * prod[t];
            if (delta >= 0.0 || rng.uniform() < std::exp(model.beta * delta)) {
                for (int t : terms_of_spin[i]) prod[t] = -prod[t];
                spin[i] = -spin[i];
                energy += delta;
                mag += 2.0 * spin[i];
            }
        }
        if (sweep >= therm) {
            out.e.push_back(energy);
            if (record_m) out.m.push_back(mag / n);
        }
    }
    return out;
}

struct BlockStats {
    double mean = 0.0;
    double error = 0.0;
};

BlockStats blocked_mean(const std::vector<double> &x, int n_blocks = 32) {
    BlockStats r;
    const std::size_t n = x.size();
    if (n == 0) return r;
    n_blocks = std::min<int>(n_blocks, static_cast<int>(n));
    const std::size_t bs = n / n_blocks;
    std::vector<double> bm;
    for (int b = 0; b < n_blocks; ++b) {
        double acc = 0.0;
        for (std::size_t k = b * bs; k < (b + 1) * bs; ++k) acc += x[k];
        bm.push_back(acc / bs);
    }
    for (double v : bm) r.mean += v;
    r.mean /= bm.size();
    if (bm.size() > 1) {
        double s2 = 0.0;
        for (double v : bm) s2 += (v - r.mean) * (v - r.mean);
        r.error = std::sqrt(s2 / (bm.size() * (bm.size() - 1.0)));
    }
    return r;
}

McSample combine_chains(const std::vector<BlockStats> &stats) {
    McSample out;
    double var = 0.0;
    for (const auto &s : stats) {
        out.mean += s.mean;
        var += s.error * s.error;
    }
    out.mean /= stats.size();
    out.error = std::sqrt(var) / stats.size();
    for (std::size_t a = 0; a < stats.size(); ++a)
        for (std::size_t b = a + 1; b < stats.size(); ++b) {
            double sig = std::sqrt(stats[a].error * stats[a].error +
                                   stats[b].error * stats[b].error);
            if (sig > 0.0 && std::fabs(stats[a].mean - stats[b].mean) > 5.0 * sig)
                out.converged = false;
        }
    return out;
}

// jackknife over blocks for a nonlinear statistic of block-mean vectors
template <typename F>
BlockStats jackknife(const std::vector<std::vector<double>> &block_means, F &&f) {
    const std::size_t nb = block_means[0].size();
    std::vector<double> loo(nb);
    std::vector<double> totals(block_means.size(), 0.0);
    for (std::size_t c = 0; c < block_means.size(); ++c)
        for (double v : block_means[c]) totals[c] += v;
    std::vector<double> args(block_means.size());
    for (std::size_t k = 0; k < nb; ++k) {
        for (std::size_t c = 0; c < block_means.size(); ++c)
            args[c] = (totals[c] - block_means[c][k]) / (nb - 1);
        loo[k] = f(args);
    }
    BlockStats r;
    for (double v : loo) r.mean += v;
    r.mean /= nb;
    double s2 = 0.0;
    for (double v : loo) s2 += (v - r.mean) * (v - r.mean);
    r.error = std::sqrt((nb - 1.0) / nb * s2);
    return r;
}

std::vector<double> block_means_of(const std::vector<double> &x, int n_blocks = 32) {
    n_blocks = std::min<int>(n_blocks, static_cast<int>(x.size()));
    const std::size_t bs = x.size() / n_blocks;
    std::vector<double> bm;
    for (int b = 0; b < n_blocks; ++b) {
        double acc = 0.0;
        for (std::size_t k = b * bs; k < (b + 1) * bs; ++k) acc += x[k];
        bm.push_back(acc / bs);
    }
    return bm;
}

} // namespace

StatMechModel ising_cubic(int length, double beta) {
    if (length < 2) throw std::invalid_argument("length must be >= 2");
    StatMechModel m{length * length * length, {}, beta};
    auto id = [length](int x, int y, int z) {
        auto w = [length](int v) { return (v % length + length) % length; };
        return (w(x) * length + w(y)) * length + w(z);
    };
    for (int x = 0; x < length; ++x)
        for (int y = 0; y < length; ++y)
            for (int z = 0; z < length; ++z) {
                m.terms.push_back({{id(x, y, z), id(x + 1, y, z)}, 1.0});
                m.terms.push_back({{id(x, y, z), id(x, y + 1, z)}, 1.0});
                m.terms.push_back({{id(x, y, z), id(x, y, z + 1)}, 1.0});
            }
    return m;
}

McSample mc_mean_energy(const StatMechModel &m, const McSchedule &sched, std::uint64_t stream) {
    std::vector<BlockStats> stats;
    for (int c = 0; c < sched.chains; ++c) {
        CounterRng rng(sched.seed, stream * 64 + c);
        auto chain = run_chain(m, sched.sweeps, sched.thermalization, rng, false);
        stats.push_back(blocked_mean(chain.e));
    }
    return combine_chains(stats);
}

McSample mc_binder(const StatMechModel &m, const McSchedule &sched, std::uint64_t stream) {
    std::vector<BlockStats> stats;
    for (int c = 0; c < sched.chains; ++c) {
        CounterRng rng(sched.seed, stream * 64 + c);
        auto chain = run_chain(m, sched.sweeps, sched.thermalization, rng, true);
        std::vector<double> m2(chain.m.size()), m4(chain.m.size());
        for (std::size_t k = 0; k < chain.m.size(); ++k) {
            m2[k] = chain.m[k] * chain.m[k];
            m4[k] = m2[k] * m2[k];
        }
        stats.push_back(jackknife(
            std::vector<std::vector<double>>{block_means_of(m2), block_means_of(m4)},
            [](const std::vector<double> &a) { return 1.0 - a[1] / (3.0 * a[0] * a[0]); }));
    }
    return combine_chains(stats);
}

PartitionResult logZ_mc(StatMechModel (*build)(int, double), int length, double beta,
                        const McSchedule &sched) {
    if (beta < 0.0) throw std::invalid_argument("beta must be >= 0");
    PartitionResult r;
    r.method = Method::monte_carlo;
    r.seed = sched.seed;

    StatMechModel at_beta = build(length, beta);
    r.log_sector_count = restricted_log_sector_count(at_beta);
    r.log_z_restricted = restricted_logZ(at_beta);

    if (beta == 0.0) {
        r.log_z = at_beta.n_spins * std::log(2.0);
        return r;
    }

    const int np = std::max(sched.n_beta, 2);
    std::vector<double> grid(np), mean(np), err(np);
    for (int k = 0; k < np; ++k) grid[k] = beta * k / (np - 1);
    mean[0] = 0.0; // <E> = 0 at beta = 0 for these pair/plaquette models
    err[0] = 0.0;
    bool converged = true;
    for (int k = 1; k < np; ++k) {
        auto s = mc_mean_energy(build(length, grid[k]), sched, static_cast<std::uint64_t>(k));
        mean[k] = s.mean;
        err[k] = s.error;
        converged = converged && s.converged;
    }

    double integral = 0.0, var = 0.0;
    const double h = beta / (np - 1);
    for (int k = 0; k < np; ++k) {
        double w = (k == 0 || k == np - 1) ? 0.5 * h : h;
        integral += w * mean[k];
        var += w * w * err[k] * err[k];
    }
    r.log_z = at_beta.n_spins * std::log(2.0) + integral;
    r.stat_error = std::sqrt(var);
    r.converged = converged;
    return r;
}

PartitionResult logZ_gauge3d_mc(double beta, int length, const McSchedule &sched) {
    if (length > 16) throw std::invalid_argument("logZ_gauge3d_mc: length exceeds desk scale");
    return logZ_mc(&gauge_cubic, length, beta, sched);
}

namespace {

// quadratic interpolation of the peak through three points
double peak_refine(double x0, double h, double ym, double y0, double yp) {
    double denom = ym - 2.0 * y0 + yp;
    if (denom >= 0.0) return x0;
    return x0 + 0.5 * h * (ym - yp) / denom;
}

double exact_specific_heat_peak(int length, double lo, double hi, double step) {
    std::vector<double> betas, lz;
    for (double b = lo; b <= hi + 1e-12; b += step) {
        betas.push_back(b);
        lz.push_back(logZ_ising2d(b, length).log_z);
    }
    int best = 1;
    double best_c = -1.0;
    for (std::size_t k = 1; k + 1 < lz.size(); ++k) {
        double c = lz[k - 1] - 2.0 * lz[k] + lz[k + 1]; // d2 logZ / dbeta2 > 0 at the peak
        if (c > best_c) { best_c = c; best = static_cast<int>(k); }
    }
    auto c_at = [&](int k) { return lz[k - 1] - 2.0 * lz[k] + lz[k + 1]; };
    if (best >= 2 && best + 2 < static_cast<int>(lz.size()))
        return peak_refine(betas[best], step, c_at(best - 1), c_at(best), c_at(best + 1));
    return betas[best];
}

} // namespace

CriticalEstimate locate_beta_c(ModelFamily family, const std::vector<int> &sizes,
                               CriticalMethod method, const McSchedule &sched) {
    if (sizes.size() < 2) throw std::invalid_argument("locate_beta_c: need at least two sizes");
    std::vector<int> ls = sizes;
    std::sort(ls.begin(), ls.end());

    CriticalEstimate est;
    est.seed = sched.seed;

    if (family == ModelFamily::ising2d) {
        if (method != CriticalMethod::specific_heat)
            throw std::invalid_argument("locate_beta_c: 2d Ising path is specific-heat only");
        for (int length : ls)
            est.per_size.push_back(exact_specific_heat_peak(length, 0.30, 0.60, 0.002));
        est.beta_c = est.per_size.back();
        est.error = std::max(0.002, std::fabs(est.per_size.back() - est.per_size.front()));
        est.method = Method::kaufman;
        return est;
    }

    if (family == ModelFamily::ising3d) {
        if (method != CriticalMethod::binder)
            throw std::invalid_argument("locate_beta_c: 3d Ising path is Binder only");
        const double lo = 0.19, hi = 0.25, step = 0.005;
        std::vector<double> grid;
        for (double b = lo; b <= hi + 1e-12; b += step) grid.push_back(b);

        std::vector<std::vector<double>> u(ls.size()), ue(ls.size());
        for (std::size_t si = 0; si < ls.size(); ++si)
            for (std::size_t k = 0; k < grid.size(); ++k) {
                auto s = mc_binder(ising_cubic(ls[si], grid[k]), sched,
                                   (si + 1) * 1000 + k);
                u[si].push_back(s.mean);
                ue[si].push_back(s.error);
            }

        // pairwise crossings of U_L(beta) by linear interpolation
        std::vector<double> crossings, cross_err;
        for (std::size_t a = 0; a < ls.size(); ++a)
            for (std::size_t b = a + 1; b < ls.size(); ++b) {
                for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
                    double d0 = u[a][k] - u[b][k], d1 = u[a][k + 1] - u[b][k + 1];
                    if (d0 == d1 || (d0 > 0) == (d1 > 0)) continue;
                    double t = d0 / (d0 - d1);
                    crossings.push_back(grid[k] + t * step);
                    double slope = std::fabs(d1 - d0) / step;
                    double sig = std::sqrt(ue[a][k] * ue[a][k] + ue[b][k] * ue[b][k]);
                    cross_err.push_back(slope > 0 ? sig / slope : step);
                    break;
                }
            }
        if (crossings.empty())
            throw std::runtime_error("locate_beta_c: no Binder crossing inside the beta window");
        double mean = 0.0;
        for (double c : crossings) mean += c;
        mean /= crossings.size();
        double spread = 0.0, stat = 0.0;
        for (double c : crossings) spread += (c - mean) * (c - mean);
        spread = crossings.size() > 1 ? std::sqrt(spread / (crossings.size() - 1)) : 0.0;
        for (double e : cross_err) stat += e * e;
        stat = std::sqrt(stat) / crossings.size();
        est.per_size = crossings;
        est.beta_c = mean;
        est.error = std::max({spread, stat, 0.5 * step});
        return est;
    }

    // 3d gauge: energy-variance peak per size
    if (method != CriticalMethod::specific_heat)
        throw std::invalid_argument("locate_beta_c: 3d gauge path is specific-heat only");
    const double lo = 0.70, hi = 0.82, step = 0.005;
    std::vector<double> grid;
    for (double b = lo; b <= hi + 1e-12; b += step) grid.push_back(b);

    for (std::size_t si = 0; si < ls.size(); ++si) {
        std::vector<double> var(grid.size());
        for (std::size_t k = 0; k < grid.size(); ++k) {
            auto model = gauge_cubic(ls[si], grid[k]);
            std::vector<BlockStats> stats;
            for (int c = 0; c < sched.chains; ++c) {
                CounterRng rng(sched.seed, ((si + 1) * 1000 + k) * 64 + c);
                auto chain = run_chain(model, sched.sweeps, sched.thermalization, rng, false);
                std::vector<double> e2(chain.e.size());
                for (std::size_t q = 0; q < chain.e.size(); ++q) e2[q] = chain.e[q] * chain.e[q];
                stats.push_back(jackknife(
                    std::vector<std::vector<double>>{block_means_of(chain.e),
                                                     block_means_of(e2)},
                    [](const std::vector<double> &a) { return a[1] - a[0] * a[0]; }));
            }
            var[k] = combine_chains(stats).mean;
        }
        std::size_t best = 1;
        for (std::size_t k = 1; k + 1 < grid.size(); ++k)
            if (var[k] > var[best]) best = k;
        est.per_size.push_back(
            peak_refine(grid[best], step, var[best - 1], var[best], var[best + 1]));
    }
    est.beta_c = est.per_size.back();
    double spread = 0.0;
    for (double p : est.per_size)
        spread = std::max(spread, std::fabs(p - est.beta_c));
    est.error = std::max(spread, step);
    return est;
}

} // namespace negaspec
