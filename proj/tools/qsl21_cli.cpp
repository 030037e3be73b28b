// command-line surface: verification suites, operator export, spectra
#include "qsl21/suites.hpp"
#include "qsl21/linalg.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

using namespace qsl21;
using nlohmann::json;

namespace {

// parse "a", "a+bi", "a-bi" (also accepts "i"/"-i" suffix forms like "0.5i")
cplx parse_complex(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw CLI::ValidationError("empty complex literal");
    if (t.back() == 'i' || t.back() == 'j') {
        t.pop_back();
        // split at the last +/- that is not an exponent sign or leading
        for (size_t k = t.size(); k-- > 1;) {
            if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
                double re = std::stod(t.substr(0, k));
                std::string ims = t.substr(k);
                double im = ims == "+" ? 1.0 : ims == "-" ? -1.0 : std::stod(ims);
                return {re, im};
            }
        }
        double im = t.empty() || t == "+" ? 1.0 : t == "-" ? -1.0 : std::stod(t);
        return {0.0, im};
    }
    return {std::stod(t), 0.0};
}

json check_to_json(const CheckReport& c) {
    json j;
    j["name"] = c.name;
    j["residual"] = c.residual;
    j["tolerance"] = c.tolerance;
    j["pass"] = c.pass;
    if (c.informative) j["informative"] = true;
    if (!c.note.empty()) j["note"] = c.note;
    return j;
}

json report_to_json(const Report& r) {
    json meta;
    meta["suite"] = r.suite;
    meta["q"] = {r.q.real(), r.q.imag()};
    meta["mu"] = {r.mu.real(), r.mu.imag()};
    meta["omega"] = r.omega;
    meta["seed"] = r.seed;
    meta["version"] = r.version;
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back(check_to_json(c));
    json out;
    out["metadata"] = meta;
    out["checks"] = checks;
    out["overall_pass"] = r.overall_pass;
    return out;
}

json matrix_to_json(const Mat& m, int sites, const RunConfig& cfg) {
    json j;
    j["dim"] = m.rows();
    if (sites > 0)
        j["sites"] = sites;
    else
        j["sites"] = nullptr;
    j["format"] = "dense-complex-rowmajor";
    json params;
    params["q"] = {cfg.q.real(), cfg.q.imag()};
    params["mu"] = {cfg.mu.real(), cfg.mu.imag()};
    params["omega"] = cfg.omega;
    j["params"] = params;
    json data = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index k = 0; k < m.cols(); ++k)
            data.push_back({m(i, k).real(), m(i, k).imag()});
    j["data"] = data;
    return j;
}

void write_output(const json& j, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream f(path);
    if (!f) throw Error("cannot open output file: " + path);
    f << j.dump(2) << "\n";
}

KFamily parse_family(const std::string& s) {
    if (s == "trivial") return KFamily::trivial;
    if (s == "a") return KFamily::a;
    if (s == "b") return KFamily::b;
    throw CLI::ValidationError("family must be trivial|a|b");
}

int run_verify(const RunConfig& cfg, const std::string& out, const std::string& format) {
    Report rep = run_suite(cfg);
    if (format == "json") {
        write_output(report_to_json(rep), out);
    } else {
        std::ostream* os = &std::cout;
        std::ofstream f;
        if (!out.empty() && out != "-") {
            f.open(out);
            os = &f;
        }
        for (const auto& c : rep.checks) {
            *os << (c.informative ? "INFO" : c.pass ? "PASS" : "FAIL") << "  " << c.name
                << "  residual=" << c.residual;
            if (!c.informative) *os << " tol=" << c.tolerance;
            if (!c.note.empty()) *os << "  (" << c.note << ")";
            *os << "\n";
        }
        *os << (rep.overall_pass ? "OVERALL PASS" : "OVERALL FAIL") << "\n";
    }
    return rep.overall_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"U_q(sl(2|1)) pair-hopping chains: operators and integrability checks"};
    app.require_subcommand(1);

    std::string q_s = "1.2", mu_s = "0.3";
    int omega = 1;
    int sites = 3;
    unsigned seed = 7;
    double identity_tol = 1e-10, fd_tol = 1e-5, spectrum_tol = 1e-8, genericity_tol = 1e-6;
    std::string out, format = "json";

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--q", q_s, "deformation parameter, e.g. 1.2 or 0.7+0.2i");
        cmd->add_option("--mu", mu_s, "representation parameter");
        cmd->add_option("--omega", omega, "+1 or -1")->check(CLI::IsMember({1, -1}));
        cmd->add_option("--seed", seed, "seed for the sampling grids");
        cmd->add_option("--sites", sites, "chain length");
        cmd->add_option("--identity-tol", identity_tol);
        cmd->add_option("--fd-tol", fd_tol);
        cmd->add_option("--spectrum-tol", spectrum_tol);
        cmd->add_option("--genericity-tol", genericity_tol);
        cmd->add_option("--out", out, "output path (default stdout)");
        cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    };

    auto* verify = app.add_subcommand("verify", "run verification suites");
    std::string suite = "all";
    verify->add_option("--suite", suite)->check(CLI::IsMember(suite_names()));
    add_common(verify);

    auto* build = app.add_subcommand("build", "export an operator as JSON");
    std::string object;
    build->add_option("--object", object,
                      "b|binv|rcheck|kminus|kplus|h-dist|h-ferm|h-open|h-periodic|h-tl|casimir")
        ->required();
    std::string u_s = "0.0";
    std::string family_s = "trivial", c_s = "0.5";
    std::string model_s = "dist";
    long casimir_p = 0;
    build->add_option("--u", u_s, "spectral parameter for rcheck/kminus/kplus");
    build->add_option("--family", family_s, "K-matrix family trivial|a|b");
    build->add_option("--c", c_s, "K-matrix parameter C");
    build->add_option("--model", model_s, "dist|ferm|tl for h-open");
    build->add_option("--p", casimir_p, "casimir index");
    add_common(build);

    auto* spect = app.add_subcommand("spectrum", "sorted eigenvalues with degeneracies");
    std::string smodel = "dist";
    spect->add_option("--model", smodel)->check(CLI::IsMember({"dist", "ferm", "tl"}));
    add_common(spect);

    CLI11_PARSE(app, argc, argv);

    RunConfig cfg;
    try {
        cfg.q = parse_complex(q_s);
        cfg.mu = parse_complex(mu_s);
        cfg.omega = omega;
        cfg.sites = sites;
        cfg.suite = suite;
        cfg.tol.identity_tol = identity_tol;
        cfg.tol.fd_tol = fd_tol;
        cfg.tol.spectrum_tol = spectrum_tol;
        cfg.tol.genericity_tol = genericity_tol;
        cfg.tol.seed = seed;

        if (app.got_subcommand(verify)) return run_verify(cfg, out, format);

        if (app.got_subcommand(build)) {
            DeformParams p = derive_params(cfg.q, cfg.mu, cfg.omega, cfg.tol);
            cplx u = parse_complex(u_s);
            cplx c = parse_complex(c_s);
            KFamily fam = parse_family(family_s);
            Mat m;
            int out_sites = 0;
            if (object == "b" || object == "binv" || object == "rcheck") {
                BraidPair pair = p.tl_mode ? braid_pair_explicit(p)
                                           : braid_pair(build_rep(p), p, cfg.tol);
                m = object == "b" ? pair.b
                  : object == "binv" ? pair.binv
                                     : rcheck(u, pair, p);
                out_sites = 2;
            } else if (object == "kminus") {
                m = k_minus({KSide::minus, fam, c}, u, p);
            } else if (object == "kplus") {
                m = k_plus({KSide::plus, fam, c}, u, p, make_crossing_data(p));
            } else if (object == "h-dist") {
                m = h_two_site(ChainModel::dist, p);
                out_sites = 2;
            } else if (object == "h-ferm") {
                m = h_two_site(ChainModel::ferm, p);
                out_sites = 2;
            } else if (object == "h-tl") {
                DeformParams ptl = p.tl_mode ? p : derive_params(cfg.q, -0.5, +1, cfg.tol);
                m = h_tl(ptl);
                out_sites = 2;
            } else if (object == "h-open") {
                ChainModel model = model_s == "ferm" ? ChainModel::ferm
                                 : model_s == "tl" ? ChainModel::tl
                                                   : ChainModel::dist;
                ChainSpec spec{cfg.sites, model, KFamily::trivial, 0.0, KFamily::trivial, 0.0};
                DeformParams pp = model == ChainModel::tl && !p.tl_mode
                                ? derive_params(cfg.q, -0.5, +1, cfg.tol) : p;
                m = h_open(spec, pp).mat;
                out_sites = cfg.sites;
            } else if (object == "h-periodic") {
                BraidPair pair = braid_pair(build_rep(p), p, cfg.tol);
                m = h_periodic(cfg.sites, pair, p).mat;
                out_sites = cfg.sites;
            } else if (object == "casimir") {
                m = casimir_c(casimir_p, build_rep(p), p, cfg.tol);
            } else {
                std::cerr << "unknown object: " << object << "\n";
                return 2;
            }
            write_output(matrix_to_json(m, out_sites, cfg), out);
            return 0;
        }

        if (app.got_subcommand(spect)) {
            if (cfg.sites > max_spectrum_sites()) {
                std::cerr << "SizeLimit: spectra limited to " << max_spectrum_sites()
                          << " sites\n";
                return 2;
            }
            ChainModel model = smodel == "ferm" ? ChainModel::ferm
                             : smodel == "tl" ? ChainModel::tl
                                              : ChainModel::dist;
            DeformParams p = model == ChainModel::tl
                           ? derive_params(cfg.q, -0.5, +1, cfg.tol)
                           : derive_params(cfg.q, cfg.mu, cfg.omega, cfg.tol);
            ChainSpec spec{cfg.sites, model, KFamily::trivial, 0.0, KFamily::trivial, 0.0};
            SpectrumResult s = spectrum(h_open(spec, p), cfg.tol);
            json j;
            j["sites"] = cfg.sites;
            j["model"] = smodel;
            json evs = json::array(), groups = json::array();
            for (const cplx& e : s.eigenvalues) evs.push_back({e.real(), e.imag()});
            for (const auto& [e, mult] : s.groups)
                groups.push_back({{"value", {e.real(), e.imag()}}, {"multiplicity", mult}});
            j["eigenvalues"] = evs;
            j["degeneracy_groups"] = groups;
            write_output(j, out);
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
