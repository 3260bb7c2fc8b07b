#include "negaspec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <stdexcept>

#include <json.hpp>

namespace negaspec {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void fill_descriptor(NegativitySpectrum &s, const BoundaryLayout &layout) {
    const auto &cx = *layout.code->complex;
    s.d = cx.dim();
    for (int a = 0; a < cx.dim(); ++a)
        if (a != layout.cut.axis) {
            s.boundary_l = cx.extents()[a];
            break;
        }
}

void sort_entries(std::vector<SpectrumEntry> &entries) {
    std::sort(entries.begin(), entries.end(),
              [](const SpectrumEntry &a, const SpectrumEntry &b) { return a.lambda > b.lambda; });
}

gf2::BitVec xor_span(const std::vector<gf2::BitVec> &basis, std::size_t coeffs, std::size_t n) {
    gf2::BitVec v(n);
    for (std::size_t j = 0; j < basis.size(); ++j)
        if ((coeffs >> j) & 1) v.xor_with(basis[j]);
    return v;
}

// Shared core of spectrum_z / spectrum_x. Enumerates one admissible sector
// (weights w = |R| - 2 popcount) with the other sector resolved in closed
// form: for a fixed config the chi signs over the dual sector are all +1
// when the coupling vector u vanishes, and split evenly otherwise.
struct SectorPlan {
    const std::vector<gf2::BitVec> *weight_basis;   // spans the weighted sector
    const std::vector<gf2::BitVec> *coupling_rows;  // u = XOR of rows selected by coeffs
    std::size_t weight_bits;                        // |R_A| or |R_B|
    bool weighted_is_a;                             // true: weights on R_A (Z noise)
};

NegativitySpectrum spectrum_sector(const BoundaryLayout &layout, const SectorPlan &plan,
                                   double beta) {
    ChiSolver solver(layout);
    const auto &basis = solver.admissible_basis();
    const std::size_t r = basis.rank;
    if (r > 24) throw std::invalid_argument("spectrum: admissible rank exceeds guard");

    NegativitySpectrum s;
    fill_descriptor(s, layout);

    const std::size_t na = layout.r_a.size(), nb = layout.r_b.size();
    auto make_config = [&](const gf2::BitVec &w_cfg, int neg_bit) {
        BoundaryConfig cfg = BoundaryConfig::all_plus(layout);
        gf2::BitVec dual;
        if (neg_bit >= 0)
            dual = plan.weighted_is_a ? basis.y_basis[neg_bit] : basis.x_basis[neg_bit];
        else
            dual = gf2::BitVec(plan.weighted_is_a ? nb : na);
        if (plan.weighted_is_a) { cfg.x = w_cfg; cfg.y = dual; }
        else { cfg.x = dual; cfg.y = w_cfg; }
        return cfg;
    };

    if (std::isinf(beta)) {
        // p = 1/2: all weight collapses onto the all-(+1) weighted sector.
        SpectrumEntry e;
        e.lambda = std::ldexp(1.0, -static_cast<int>(r));
        e.multiplicity = std::uint64_t(1) << r;
        e.config = make_config(gf2::BitVec(plan.weight_bits), -1);
        s.log_z = kInf;
        s.entries.push_back(std::move(e));
        return s;
    }

    struct Bucket {
        std::uint64_t pos = 0, neg = 0;
        std::optional<BoundaryConfig> pos_cfg, neg_cfg;
    };
    std::map<int, Bucket> buckets; // keyed by integer weight, exact merge
    std::map<int, std::uint64_t> z_counts;

    gf2::BitVec w_cfg(plan.weight_bits), u(r);
    const std::uint64_t total = std::uint64_t(1) << r;
    const std::uint64_t half = total >> 1;
    for (std::uint64_t c = 0; c < total; ++c) {
        if (c) {
            int j = __builtin_ctzll(c); // Gray-code flip position
            w_cfg.xor_with((*plan.weight_basis)[j]);
            u.xor_with((*plan.coupling_rows)[j]);
        }
        int w = static_cast<int>(plan.weight_bits) - 2 * static_cast<int>(w_cfg.popcount());
        auto &b = buckets[w];
        if (!u.any()) {
            b.pos += total;
            z_counts[w] += 1;
            if (!b.pos_cfg) b.pos_cfg = make_config(w_cfg, -1);
        } else {
            b.pos += half;
            b.neg += half;
            if (!b.pos_cfg) b.pos_cfg = make_config(w_cfg, -1);
            if (!b.neg_cfg) {
                int k = 0;
                while (!u.get(k)) ++k;
                b.neg_cfg = make_config(w_cfg, k);
            }
        }
    }

    double wmax = z_counts.rbegin()->first;
    double acc = 0.0;
    for (auto &[w, n] : z_counts) acc += n * std::exp(beta * (w - wmax));
    s.log_z = r * std::log(2.0) + beta * wmax + std::log(acc);

    for (auto &[w, b] : buckets) {
        double mag = std::exp(beta * w - s.log_z);
        if (b.pos) s.entries.push_back({mag, b.pos, b.pos_cfg});
        if (b.neg) s.entries.push_back({-mag, b.neg, b.neg_cfg});
    }
    sort_entries(s.entries);
    return s;
}

} // namespace

double NegativitySpectrum::trace_sum() const {
    double acc = 0.0;
    for (const auto &e : entries) acc += e.lambda * static_cast<double>(e.multiplicity);
    return acc;
}

double NegativitySpectrum::abs_sum() const {
    double acc = 0.0;
    for (const auto &e : entries) acc += std::fabs(e.lambda) * static_cast<double>(e.multiplicity);
    return acc;
}

double NegativitySpectrum::log_abs_sum() const {
    double mx = -kInf;
    for (const auto &e : entries) mx = std::max(mx, std::log(std::fabs(e.lambda)));
    double acc = 0.0;
    for (const auto &e : entries)
        acc += static_cast<double>(e.multiplicity) * std::exp(std::log(std::fabs(e.lambda)) - mx);
    return mx + std::log(acc);
}

NegativitySpectrum spectrum_z(const BoundaryLayout &layout, const NoiseModel &noise) {
    ChiSolver solver(layout);
    SectorPlan plan{&solver.admissible_basis().x_basis, &solver.sign_table(),
                    layout.r_a.size(), true};
    auto s = spectrum_sector(layout, plan, noise.beta_z());
    s.kind = NoiseKind::Z;
    s.p_z = noise.p_z;
    return s;
}

NegativitySpectrum spectrum_x(const BoundaryLayout &layout, const NoiseModel &noise) {
    ChiSolver solver(layout);
    const auto &q = solver.sign_table();
    const std::size_t r = solver.admissible_basis().rank;
    // columns of Q: coupling of the k-th y basis vector back to the x sector
    std::vector<gf2::BitVec> q_cols(r, gf2::BitVec(r));
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t k = 0; k < r; ++k)
            if (q[j].get(k)) q_cols[k].set(j, true);

    SectorPlan plan{&solver.admissible_basis().y_basis, &q_cols, layout.r_b.size(), false};
    auto s = spectrum_sector(layout, plan, noise.beta_x());
    s.kind = NoiseKind::X;
    s.p_x = noise.p_x;
    return s;
}

NegativitySpectrum spectrum_xz_2d(const BoundaryLayout &layout, const NoiseModel &noise) {
    if (layout.code->complex->dim() != 2)
        throw std::invalid_argument("spectrum_xz_2d: d = 2 only");
    if (noise.p_x == 0.0) {
        NoiseModel nz{NoiseKind::Z, noise.p_z, 0.0};
        auto s = spectrum_z(layout, nz);
        s.kind = NoiseKind::XZ;
        return s;
    }
    if (noise.p_z >= 0.5)
        throw std::invalid_argument("spectrum_xz_2d: p_z = 1/2 only supported at p_x = 0");

    const double beta_z = noise.beta_z();
    const double k_x = noise.k_x();

    ChiSolver solver(layout);
    const auto &basis = solver.admissible_basis();
    const std::size_t r = basis.rank;
    if (2 * r > 20) throw std::invalid_argument("spectrum_xz_2d: admissible rank exceeds guard");

    // Reconstruct the boundary cycle from M: each A-row couples exactly two
    // B-sites; walk bonds until the cycle closes.
    const auto &m = layout.m;
    const std::size_t na = layout.r_a.size(), nb = layout.r_b.size();
    std::vector<std::array<int, 2>> bond_sites(na);
    std::vector<std::vector<int>> bonds_at(nb);
    for (std::size_t i = 0; i < na; ++i) {
        int s0 = -1, s1 = -1;
        for (std::size_t j = 0; j < nb; ++j)
            if (m.get(i, j)) { if (s0 < 0) s0 = static_cast<int>(j); else s1 = static_cast<int>(j); }
        if (s0 < 0 || s1 < 0 || m.row(i).popcount() != 2)
            throw std::logic_error("spectrum_xz_2d: boundary adjacency is not a cycle");
        bond_sites[i] = {s0, s1};
        bonds_at[s0].push_back(static_cast<int>(i));
        bonds_at[s1].push_back(static_cast<int>(i));
    }
    std::vector<int> site_order, bond_order;
    std::vector<bool> bond_used(na, false);
    int cur = 0;
    for (std::size_t step = 0; step < na; ++step) {
        int next_bond = -1;
        for (int bnd : bonds_at[cur])
            if (!bond_used[bnd]) { next_bond = bnd; break; }
        if (next_bond < 0) throw std::logic_error("spectrum_xz_2d: boundary adjacency is not a cycle");
        bond_used[next_bond] = true;
        cur = bond_sites[next_bond][0] == cur ? bond_sites[next_bond][1] : bond_sites[next_bond][0];
        bond_order.push_back(next_bond);
        site_order.push_back(cur);
    }
    if (cur != 0) throw std::logic_error("spectrum_xz_2d: boundary adjacency is not a cycle");

    // inner tau sum for one (x, y) configuration; returns (log|v|, sign)
    auto tau_sum = [&](const gf2::BitVec &x, const gf2::BitVec &y) {
        double t[2][2] = {{1.0, 0.0}, {0.0, 1.0}};
        double log_scale = 0.0;
        for (std::size_t mstep = 0; mstep < na; ++mstep) {
            double a = x.get(bond_order[mstep]) ? -1.0 : 1.0;
            int yj = y.get(site_order[mstep]) ? 1 : 0;
            double step[2][2];
            for (int p = 0; p < 2; ++p)
                for (int c = 0; c < 2; ++c) {
                    double sp = p ? -1.0 : 1.0, sc = c ? -1.0 : 1.0;
                    // e^{K_x(s_c - 1)} keeps entries bounded as K_x grows
                    step[p][c] = std::exp(beta_z * a * sp * sc + k_x * (sc - 1.0));
                    if (yj && c) step[p][c] = -step[p][c];
                }
            log_scale += k_x;
            double next[2][2];
            double mx = 0.0;
            for (int p = 0; p < 2; ++p)
                for (int c = 0; c < 2; ++c) {
                    next[p][c] = t[p][0] * step[0][c] + t[p][1] * step[1][c];
                    mx = std::max(mx, std::fabs(next[p][c]));
                }
            if (mx == 0.0) return std::pair<double, int>(-kInf, 0);
            log_scale += std::log(mx);
            for (int p = 0; p < 2; ++p)
                for (int c = 0; c < 2; ++c) t[p][c] = next[p][c] / mx;
        }
        double tr = t[0][0] + t[1][1];
        if (tr == 0.0) return std::pair<double, int>(-kInf, 0);
        return std::pair<double, int>(log_scale + std::log(std::fabs(tr)), tr < 0.0 ? -1 : 1);
    };

    struct Raw {
        double log_mag;
        int sign;
        BoundaryConfig cfg;
    };
    std::vector<Raw> raw;
    raw.reserve(std::size_t(1) << (2 * r));

    const std::uint64_t total = std::uint64_t(1) << r;
    gf2::BitVec y(nb);
    for (std::uint64_t cy = 0; cy < total; ++cy) {
        if (cy) y.xor_with(basis.y_basis[__builtin_ctzll(cy)]);
        gf2::BitVec cy_bits(r);
        std::uint64_t gray_y = cy ^ (cy >> 1);
        for (std::size_t k = 0; k < r; ++k) cy_bits.set(k, (gray_y >> k) & 1);

        gf2::BitVec x(na), u(r);
        for (std::uint64_t cxc = 0; cxc < total; ++cxc) {
            if (cxc) {
                int j = __builtin_ctzll(cxc);
                x.xor_with(basis.x_basis[j]);
                u.xor_with(solver.sign_table()[j]);
            }
            int chi = u.dot(cy_bits) ? -1 : 1;
            auto [lm, sg] = tau_sum(x, y);
            if (sg == 0) continue;
            raw.push_back({lm, chi * sg, {x, y}});
        }
    }

    // normalization by signed log-sum-exp
    double mx = -kInf;
    for (const auto &e : raw) mx = std::max(mx, e.log_mag);
    double acc = 0.0;
    for (const auto &e : raw) acc += e.sign * std::exp(e.log_mag - mx);
    if (!(acc > 0.0)) throw std::logic_error("spectrum_xz_2d: nonpositive normalization");
    const double log_z = mx + std::log(acc);

    NegativitySpectrum s;
    fill_descriptor(s, layout);
    s.kind = NoiseKind::XZ;
    s.p_z = noise.p_z;
    s.p_x = noise.p_x;
    s.log_z = log_z;

    std::vector<std::pair<double, const Raw *>> vals;
    vals.reserve(raw.size());
    for (const auto &e : raw) vals.emplace_back(e.sign * std::exp(e.log_mag - log_z), &e);
    std::sort(vals.begin(), vals.end(),
              [](const auto &a, const auto &b) { return a.first > b.first; });
    for (const auto &[lam, ep] : vals) {
        if (!s.entries.empty()) {
            double prev = s.entries.back().lambda;
            if (std::fabs(lam - prev) <= 1e-12 * std::max(std::fabs(lam), std::fabs(prev))) {
                s.entries.back().multiplicity += 1;
                continue;
            }
        }
        s.entries.push_back({lam, 1, ep->cfg});
    }
    return s;
}

std::string spectrum_csv(const NegativitySpectrum &s) {
    std::string out = "lambda,multiplicity,config\n";
    char buf[64];
    for (const auto &e : s.entries) {
        std::snprintf(buf, sizeof buf, "%.17g", e.lambda);
        out += buf;
        out += ',';
        out += std::to_string(e.multiplicity);
        out += ',';
        if (e.config) {
            out += e.config->x.to_hex();
            out += ':';
            out += e.config->y.to_hex();
        }
        out += '\n';
    }
    return out;
}

std::string spectrum_json_header(const NegativitySpectrum &s) {
    nlohmann::json j;
    j["schema"] = "negaspec/1";
    j["d"] = s.d;
    j["L"] = s.boundary_l;
    j["p_x"] = s.p_x;
    j["p_z"] = s.p_z;
    j["log_Z"] = std::isfinite(s.log_z) ? nlohmann::json(s.log_z) : nlohmann::json("inf");
    if (std::isfinite(s.log_z)) j["Z"] = std::exp(s.log_z);
    return j.dump();
}

} // namespace negaspec
