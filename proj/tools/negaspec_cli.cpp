#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "negaspec/mc.hpp"
#include "negaspec/negativity.hpp"
#include "negaspec/oracle.hpp"
#include "negaspec/spectrum.hpp"
#include "negaspec/trotter.hpp"

using nlohmann::json;
using namespace negaspec;

namespace {

std::vector<int> parse_int_list(const std::string &s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

// "start:stop:step" inclusive of endpoints within half a step, or a comma list
std::vector<double> parse_grid(const std::string &s) {
    if (s.find(':') != std::string::npos) {
        double start, stop, step;
        char c1, c2;
        std::stringstream ss(s);
        ss >> start >> c1 >> stop >> c2 >> step;
        if (!ss || c1 != ':' || c2 != ':' || step <= 0)
            throw CLI::ValidationError("grid", "expected start:stop:step");
        std::vector<double> out;
        for (double v = start; v <= stop + 0.5 * step; v += step)
            out.push_back(std::min(v, stop));
        return out;
    }
    std::vector<double> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
    return out;
}

std::uint64_t fnv1a(const std::string &s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

json header(const std::string &config_repr, std::uint64_t seed) {
    json h;
    h["schema"] = "negaspec/1";
    h["config_hash"] = fnv1a(config_repr);
    h["seed"] = seed;
    return h;
}

void write_file(const std::string &path, const std::string &content) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << content;
}

BoundaryLayout make_layout(int d, int length) {
    std::vector<int> extents(d, length);
    std::vector<Bc> bcs(d, Bc::periodic);
    extents[d - 1] = 3; // cut axis: open, 3 layers, cut between 1 and 2
    bcs[d - 1] = Bc::open;
    auto cx = std::make_shared<CellComplex>(build_complex(d, extents, bcs));
    auto code = std::make_shared<StabilizerCode>(build_toric_code(cx));
    return boundary_layout(code, Cut{d - 1, 1});
}

void fail(const std::string &msg) {
    json err;
    err["schema"] = "negaspec/1";
    err["error"] = msg;
    std::cerr << err.dump() << "\n";
    std::exit(1);
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"negativity spectra of boundary-decohered toric codes"};
    app.set_config("--config", "", "key = value config file; flags override");
    app.require_subcommand(1);

    std::string out = "negaspec_out";
    app.add_option("--out", out, "output path prefix")->capture_default_str();

    // scan
    auto *sc_scan = app.add_subcommand("scan", "negativity scan over a noise grid");
    int scan_d = 2;
    std::string scan_noise = "z", scan_l = "4,8,16", scan_p = "0:0.5:0.01";
    std::uint64_t scan_seed = 12345;
    sc_scan->add_option("--d", scan_d);
    sc_scan->add_option("--noise", scan_noise)->check(CLI::IsMember({"z", "x"}));
    sc_scan->add_option("--L", scan_l);
    sc_scan->add_option("--p", scan_p);
    sc_scan->add_option("--seed", scan_seed);

    // spectrum
    auto *sc_spec = app.add_subcommand("spectrum", "exact negativity spectrum dump");
    int sp_d = 2, sp_l = 4;
    double sp_pz = 0.0, sp_px = 0.0;
    sc_spec->add_option("--d", sp_d);
    sc_spec->add_option("--L", sp_l);
    sc_spec->add_option("--pz", sp_pz);
    sc_spec->add_option("--px", sp_px);

    // oracle
    auto *sc_orc = app.add_subcommand("oracle", "dense-matrix cross-check on the frozen fixture");
    std::string orc_fixture = "smallest-2d";
    double orc_pz = 0.0, orc_px = 0.0;
    sc_orc->add_option("--fixture", orc_fixture)->check(CLI::IsMember({"smallest-2d"}));
    sc_orc->add_option("--pz", orc_pz);
    sc_orc->add_option("--px", orc_px);

    // mc
    auto *sc_mc = app.add_subcommand("mc", "Monte Carlo logZ / critical-point runs");
    std::string mc_model = "gauge3d";
    int mc_l = 4;
    double mc_beta = 0.5;
    bool mc_locate = false;
    McSchedule sched;
    sc_mc->add_option("--model", mc_model)->check(CLI::IsMember({"gauge3d", "ising3d", "ising2d"}));
    sc_mc->add_option("--L", mc_l);
    sc_mc->add_option("--beta", mc_beta);
    sc_mc->add_flag("--locate-critical", mc_locate);
    sc_mc->add_option("--sweeps", sched.sweeps);
    sc_mc->add_option("--therm", sched.thermalization);
    sc_mc->add_option("--chains", sched.chains);
    sc_mc->add_option("--n-beta", sched.n_beta);
    sc_mc->add_option("--seed", sched.seed);

    // qcmap
    auto *sc_qc = app.add_subcommand("qcmap", "Trotterized quantum-classical mapping check");
    double qc_gamma = 1.0, qc_bt = 2.0;
    std::string qc_m = "1,2,4,8";
    sc_qc->add_option("--gamma", qc_gamma);
    sc_qc->add_option("--beta-tilde", qc_bt);
    sc_qc->add_option("--M", qc_m);

    // critical
    auto *sc_cr = app.add_subcommand("critical", "critical-point location with duality cross-check");
    std::string cr_family = "gauge3d", cr_l = "4,6,8";
    sc_cr->add_option("--family", cr_family)
        ->check(CLI::IsMember({"gauge3d", "ising3d", "ising2d"}));
    sc_cr->add_option("--L", cr_l);
    sc_cr->add_option("--sweeps", sched.sweeps);
    sc_cr->add_option("--seed", sched.seed);

    CLI11_PARSE(app, argc, argv);

    std::string config_repr;
    for (int i = 1; i < argc; ++i) {
        config_repr += argv[i];
        config_repr += ' ';
    }

    try {
        if (*sc_scan) {
            auto lengths = parse_int_list(scan_l);
            auto grid = parse_grid(scan_p);
            NoiseKind kind = scan_noise == "z" ? NoiseKind::Z : NoiseKind::X;
            McSchedule s4;
            s4.seed = scan_seed;
            auto res = scan(kind, scan_d, lengths, grid, scan_d == 4 ? &s4 : nullptr);
            write_file(out + ".csv", reports_csv(res.reports));
            json j = header(config_repr, scan_seed);
            if (res.p_c_half_height) j["p_c_half_height"] = *res.p_c_half_height;
            if (res.p_c_from_beta_c) j["p_c_from_beta_c"] = *res.p_c_from_beta_c;
            j["rows"] = res.reports.size();
            write_file(out + ".json", j.dump(2) + "\n");
        } else if (*sc_spec) {
            auto layout = make_layout(sp_d, sp_l);
            NegativitySpectrum s;
            if (sp_px == 0.0) s = spectrum_z(layout, NoiseModel{NoiseKind::Z, sp_pz, 0.0});
            else if (sp_pz == 0.0) s = spectrum_x(layout, NoiseModel{NoiseKind::X, 0.0, sp_px});
            else s = spectrum_xz_2d(layout, NoiseModel{NoiseKind::XZ, sp_pz, sp_px});
            write_file(out + ".csv", spectrum_csv(s));
            json j = header(config_repr, 0);
            j.update(json::parse(spectrum_json_header(s)));
            j["trace_sum"] = s.trace_sum();
            j["E_N"] = s.log_abs_sum();
            write_file(out + ".json", j.dump(2) + "\n");
        } else if (*sc_orc) {
            auto fx = smallest_cylinder_fixture();
            auto rho = ground_space_density(*fx.code);
            NoiseModel noise{orc_px > 0 ? NoiseKind::XZ : NoiseKind::Z, orc_pz, orc_px};
            std::vector<int> zq, xq;
            for (std::size_t q = 0; q < fx.code->n_qubits; ++q) {
                if (fx.layout.set_m.get(q)) zq.push_back(static_cast<int>(q));
                if (fx.layout.set_k.get(q)) xq.push_back(static_cast<int>(q));
            }
            auto st = apply_channel(rho, NoiseModel{NoiseKind::Z, orc_pz, 0.0}, zq);
            st = apply_channel(st, NoiseModel{NoiseKind::X, 0.0, orc_px}, xq);
            auto dense = negativity_dense(st, fx.layout.region_a);
            double analytic;
            if (orc_px == 0.0) analytic = negativity_2d_z(orc_pz, 2).e_n;
            else
                analytic = spectrum_xz_2d(fx.layout, NoiseModel{NoiseKind::XZ, orc_pz, orc_px})
                               .log_abs_sum();
            json j = header(config_repr, 0);
            j["fixture"] = orc_fixture;
            j["p_z"] = orc_pz;
            j["p_x"] = orc_px;
            j["E_N_dense"] = dense.e_n;
            j["E_N_analytic"] = analytic;
            j["delta"] = std::fabs(dense.e_n - analytic);
            write_file(out + ".json", j.dump(2) + "\n");
        } else if (*sc_mc || *sc_cr) {
            std::string family = *sc_mc ? mc_model : cr_family;
            bool locate = *sc_cr || mc_locate;
            json j = header(config_repr, sched.seed);
            if (locate) {
                ModelFamily fam = family == "gauge3d"  ? ModelFamily::gauge3d
                                  : family == "ising3d" ? ModelFamily::ising3d
                                                        : ModelFamily::ising2d;
                CriticalMethod method =
                    fam == ModelFamily::ising3d ? CriticalMethod::binder
                                                : CriticalMethod::specific_heat;
                auto sizes = parse_int_list(*sc_cr ? cr_l : std::to_string(mc_l) + ",4");
                auto est = locate_beta_c(fam, sizes, method, sched);
                j["beta_c"] = est.beta_c;
                j["error"] = est.error;
                j["per_size"] = est.per_size;
                if (fam == ModelFamily::gauge3d) {
                    auto ising = locate_beta_c(ModelFamily::ising3d, {4, 6, 8},
                                               CriticalMethod::binder, sched);
                    j["duality_beta_c"] = duality_transform(ising.beta_c);
                    j["duality_error"] =
                        ising.error / std::sinh(2.0 * ising.beta_c); // |d beta*/d beta|
                    j["p_c"] = p_from_beta(est.beta_c);
                }
            } else {
                PartitionResult r;
                if (family == "gauge3d") r = logZ_gauge3d_mc(mc_beta, mc_l, sched);
                else if (family == "ising3d") r = logZ_mc(&ising_cubic, mc_l, mc_beta, sched);
                else r = logZ_mc(&ising_square, mc_l, mc_beta, sched);
                j["log_z"] = r.log_z;
                j["log_z_restricted"] = r.log_z_restricted;
                j["stat_error"] = r.stat_error;
                j["converged"] = r.converged;
            }
            write_file(out + ".json", j.dump(2) + "\n");
        } else if (*sc_qc) {
            json j = header(config_repr, 0);
            json rows = json::array();
            for (int m : parse_int_list(qc_m)) {
                auto r = trotter_check(qc_gamma, qc_bt, m, 2);
                rows.push_back({{"M", m},
                                {"quantum", r.quantum},
                                {"classical", r.classical},
                                {"gap", r.gap},
                                {"K_space", r.k_space},
                                {"K_time", r.k_time}});
            }
            j["results"] = rows;
            write_file(out + ".json", j.dump(2) + "\n");
        }
    } catch (const std::exception &e) {
        fail(e.what());
    }
    return 0;
}
