// elbound: exact coverage bounds, hull tests, empirical likelihood ratio
// evaluation, circle analytics, and Monte Carlo experiments, from one binary.
//
// Exit codes: 0 success, 1 usage/domain error, 2 numerical failure.
// Machine-readable payload goes to stdout, diagnostics to stderr.
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "elbound/bounds.hpp"
#include "elbound/circle.hpp"
#include "elbound/el.hpp"
#include "elbound/errors.hpp"
#include "elbound/geometry.hpp"
#include "elbound/samplers.hpp"
#include "elbound/simulation.hpp"

using json = nlohmann::ordered_json;
using namespace elbound;

namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json bound_to_json(const bounds::ExactProbability& b) {
    json j;
    if (b.tail_numerator.fits_u64())
        j["tail_numerator"] = b.tail_numerator.to_u64();
    else
        j["tail_numerator"] = b.tail_numerator.to_decimal();
    j["log2_denominator"] = b.log2_denominator;
    j["value"] = b.value;
    return j;
}

json report_to_json(const sim::MCReport& r) {
    json j;
    j["replicates"] = r.replicates;
    j["hits"] = r.hits;
    j["estimate"] = r.estimate;
    j["std_error"] = r.std_error;
    j["wilson_lo"] = r.wilson_lo;
    j["wilson_hi"] = r.wilson_hi;
    j["seed"] = r.seed;
    return j;
}

std::string report_csv_fields(const sim::MCReport& r) {
    return std::to_string(r.replicates) + "," + std::to_string(r.hits) + "," +
           fmt_double(r.estimate) + "," + fmt_double(r.std_error) + "," + fmt_double(r.wilson_lo) +
           "," + fmt_double(r.wilson_hi) + "," + std::to_string(r.seed);
}

// Sampler options shared by the Monte Carlo subcommands.
struct SamplerOptions {
    std::string name = "uniform-sphere";
    int k = 2;
    double p = 0.5;
    double kappa = 1.0;
    double mu = 0.0;
    double a = 1.0;
    std::vector<double> shift;

    void attach(CLI::App* cmd, bool dimension_flag = true) {
        cmd->add_option("--sampler", name,
                        "uniform-sphere | sign-bernoulli | von-mises | cardioid | shifted-gaussian")
            ->capture_default_str();
        if (dimension_flag)
            cmd->add_option("--k", k, "dimension (uniform-sphere)")->capture_default_str();
        cmd->add_option("--p", p, "P{X = +1} (sign-bernoulli)")->capture_default_str();
        cmd->add_option("--kappa", kappa, "concentration (von-mises)")->capture_default_str();
        cmd->add_option("--mu", mu, "location (von-mises)")->capture_default_str();
        cmd->add_option("--a", a, "cosine amplitude (cardioid)")->capture_default_str();
        cmd->add_option("--shift", shift, "shift vector (shifted-gaussian)")->delimiter(',');
    }

    geom::SamplerSpec build() const {
        if (name == "uniform-sphere") return geom::SamplerSpec::uniform_sphere(k);
        if (name == "sign-bernoulli") return geom::SamplerSpec::sign_bernoulli(p);
        if (name == "von-mises") return geom::SamplerSpec::von_mises(kappa, mu);
        if (name == "cardioid") return geom::SamplerSpec::cardioid(a);
        if (name == "shifted-gaussian") {
            if (shift.empty())
                throw std::invalid_argument("shifted-gaussian requires --shift v1,v2,...");
            return geom::SamplerSpec::shifted_gaussian(shift);
        }
        throw std::invalid_argument("unknown sampler '" + name + "'");
    }
};

double parse_radius(const std::string& text) {
    if (text == "inf" || text == "infinity") return sim::kInfiniteRadius;
    try {
        std::size_t used = 0;
        const double r = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument("");
        return r;
    } catch (const std::exception&) {
        throw std::invalid_argument("bad radius '" + text + "' (number or 'inf')");
    }
}

// Plain key=value experiment configuration ('#' comments, blank lines ok).
// Command-line flags take precedence; config fills in what was not given.
class KeyValueConfig {
public:
    static KeyValueConfig load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open config '" + path + "'");
        KeyValueConfig cfg;
        std::string line;
        while (std::getline(in, line)) {
            const auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            const auto eq = line.find('=');
            if (eq == std::string::npos) continue;
            auto trim = [](std::string s) {
                const auto a = s.find_first_not_of(" \t\r");
                const auto b = s.find_last_not_of(" \t\r");
                return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
            };
            const std::string key = trim(line.substr(0, eq));
            const std::string value = trim(line.substr(eq + 1));
            if (!key.empty()) cfg.kv_[key] = value;
        }
        return cfg;
    }

    // Each setter fires only when the flag was absent from the command line.
    void apply(const CLI::App* cmd, const char* flag, const char* key,
               const std::function<void(const std::string&)>& set) const {
        const auto it = kv_.find(key);
        if (it == kv_.end() || cmd->count(flag) > 0) return;
        try {
            set(it->second);
        } catch (const std::exception&) {
            throw std::invalid_argument("config: bad value for '" + std::string(key) + "'");
        }
    }

private:
    std::map<std::string, std::string> kv_;
};

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(std::stod(cell));
    return out;
}

void apply_sampler_config(const KeyValueConfig& cfg, const CLI::App* cmd, SamplerOptions& s) {
    cfg.apply(cmd, "--sampler", "sampler", [&](const std::string& v) { s.name = v; });
    cfg.apply(cmd, "--k", "k", [&](const std::string& v) { s.k = std::stoi(v); });
    cfg.apply(cmd, "--p", "p", [&](const std::string& v) { s.p = std::stod(v); });
    cfg.apply(cmd, "--kappa", "kappa", [&](const std::string& v) { s.kappa = std::stod(v); });
    cfg.apply(cmd, "--mu", "mu", [&](const std::string& v) { s.mu = std::stod(v); });
    cfg.apply(cmd, "--a", "a", [&](const std::string& v) { s.a = std::stod(v); });
    cfg.apply(cmd, "--shift", "shift", [&](const std::string& v) { s.shift = parse_double_list(v); });
}

} // namespace

// Builds a circular density from CLI flags.
static circle::CircularDensity make_density(const std::string& name, double kappa, double mu,
                                            double a, const std::string& table_path) {
    if (name == "uniform") return circle::CircularDensity::uniform();
    if (name == "von-mises") return circle::CircularDensity::von_mises(kappa, mu);
    if (name == "cardioid") return circle::CircularDensity::cardioid(a);
    if (name == "tabulated") {
        if (table_path.empty()) throw std::invalid_argument("tabulated density requires --table");
        return circle::CircularDensity::load_csv(table_path);
    }
    throw std::invalid_argument("unknown density '" + name + "'");
}

int main(int argc, char** argv) {
    CLI::App app{"coverage bounds and empirical likelihood diagnostics"};
    app.require_subcommand(1);

    std::string format = "json";
    app.add_option("--format", format, "payload shape: json | csv")->capture_default_str();

    // ---- bound ----------------------------------------------------------
    auto* cmd_bound = app.add_subcommand("bound", "exact coverage bound b(k, n)");
    long bk = 1, bn = 2;
    cmd_bound->add_option("--k", bk, "estimating function dimension")->required();
    cmd_bound->add_option("--n", bn, "sample size")->required();

    // ---- table ----------------------------------------------------------
    auto* cmd_table = app.add_subcommand("table", "bound table over k and r = n/k");
    std::vector<long> table_k = {1, 2, 5};
    std::vector<double> table_r = {2, 3, 4, 5, 6, 7, 8};
    cmd_table->add_option("--k", table_k, "k values")->delimiter(',');
    cmd_table->add_option("--ratios", table_r, "n/k ratios")->delimiter(',');

    // ---- check-level ----------------------------------------------------
    auto* cmd_level = app.add_subcommand("check-level", "is a confidence level achievable?");
    long lk = 1, ln = 2;
    double level = 0.95;
    cmd_level->add_option("--k", lk)->required();
    cmd_level->add_option("--n", ln)->required();
    cmd_level->add_option("--level", level, "requested confidence level")->required();

    // ---- hull -----------------------------------------------------------
    auto* cmd_hull = app.add_subcommand("hull", "origin-in-hull-interior test on a CSV cloud");
    std::string hull_input;
    double hull_tol = 1e-9;
    cmd_hull->add_option("--input", hull_input, "CSV, one point per row")->required();
    cmd_hull->add_option("--tol", hull_tol, "boundary tolerance")->capture_default_str();

    // ---- el -------------------------------------------------------------
    auto* cmd_el = app.add_subcommand("el", "empirical likelihood log ratio on a CSV of m-values");
    std::string el_input;
    std::string el_radius;
    double el_level = 0.0;
    cmd_el->add_option("--input", el_input, "CSV of m(Y_i, theta) rows")->required();
    cmd_el->add_option("--radius", el_radius, "region radius r (tests l < r)");
    cmd_el->add_option("--level", el_level, "derive radius as the chi-square level quantile");

    // ---- circle ---------------------------------------------------------
    auto* cmd_circle = app.add_subcommand("circle", "analytic k=2 hull probabilities");
    std::string density_name = "uniform";
    double cir_kappa = 1.0, cir_mu = 0.0, cir_a = 1.0;
    std::string cir_table;
    long cir_n = 0;
    double cir_gx = 0.0;
    bool has_gx = false;
    cmd_circle->add_option("--density", density_name, "uniform | von-mises | cardioid | tabulated")
        ->capture_default_str();
    cmd_circle->add_option("--kappa", cir_kappa)->capture_default_str();
    cmd_circle->add_option("--mu", cir_mu)->capture_default_str();
    cmd_circle->add_option("--a", cir_a)->capture_default_str();
    cmd_circle->add_option("--table", cir_table, "CSV of angle,value rows");
    cmd_circle->add_option("--n", cir_n, "evaluate P{origin not in hull of n points}");
    cmd_circle->add_option("--gx", cir_gx, "evaluate the half-circle mass G at this angle")
        ->each([&](const std::string&) { has_gx = true; });

    // ---- mc-hull --------------------------------------------------------
    auto* cmd_mc_hull = app.add_subcommand("mc-hull", "Monte Carlo hull-containment probability");
    std::string mh_config;
    cmd_mc_hull->add_option("--config", mh_config, "plain-text key=value configuration file");
    SamplerOptions mh_sampler;
    mh_sampler.attach(cmd_mc_hull);
    std::size_t mh_n = 0;
    std::uint64_t mh_reps = 200000, mh_seed = 1;
    double mh_tol = 1e-9;
    unsigned mh_threads = 0;
    cmd_mc_hull->add_option("--n", mh_n, "points per replicate");
    cmd_mc_hull->add_option("--replicates", mh_reps)->capture_default_str();
    cmd_mc_hull->add_option("--seed", mh_seed)->capture_default_str();
    cmd_mc_hull->add_option("--tol", mh_tol)->capture_default_str();
    cmd_mc_hull->add_option("--threads", mh_threads, "0 = auto")->capture_default_str();

    // ---- mc-coverage ----------------------------------------------------
    auto* cmd_mc_cov = app.add_subcommand("mc-coverage", "Monte Carlo coverage of the EL region");
    std::string mc_config;
    cmd_mc_cov->add_option("--config", mc_config, "plain-text key=value configuration file");
    SamplerOptions mc_sampler;
    mc_sampler.attach(cmd_mc_cov);
    std::vector<double> mc_theta;
    std::size_t mc_n = 0;
    std::string mc_radius = "inf";
    std::vector<double> mc_radii;
    std::uint64_t mc_reps = 100000, mc_seed = 1;
    unsigned mc_threads = 0;
    cmd_mc_cov->add_option("--theta", mc_theta, "true parameter (defaults to the sampler mean)")
        ->delimiter(',');
    cmd_mc_cov->add_option("--n", mc_n, "observations per replicate");
    cmd_mc_cov->add_option("--radius", mc_radius, "region radius, or 'inf' for the hull limit")
        ->capture_default_str();
    cmd_mc_cov->add_option("--radii", mc_radii, "sweep of radii; emits one report per radius")
        ->delimiter(',');
    cmd_mc_cov->add_option("--replicates", mc_reps)->capture_default_str();
    cmd_mc_cov->add_option("--seed", mc_seed)->capture_default_str();
    cmd_mc_cov->add_option("--threads", mc_threads)->capture_default_str();

    // ---- lemma1 ---------------------------------------------------------
    auto* cmd_lemma = app.add_subcommand("lemma1", "projection-invariance mismatch count");
    std::string lm_config;
    cmd_lemma->add_option("--config", lm_config, "plain-text key=value configuration file");
    SamplerOptions lm_sampler;
    lm_sampler.attach(cmd_lemma);
    std::size_t lm_n = 0;
    std::uint64_t lm_reps = 10000, lm_seed = 1;
    unsigned lm_threads = 0;
    cmd_lemma->add_option("--n", lm_n);
    cmd_lemma->add_option("--replicates", lm_reps)->capture_default_str();
    cmd_lemma->add_option("--seed", lm_seed)->capture_default_str();
    cmd_lemma->add_option("--threads", lm_threads)->capture_default_str();

    // ---- conjecture -----------------------------------------------------
    auto* cmd_conj = app.add_subcommand("conjecture", "scan samplers against the k >= 3 bound");
    std::string cj_config;
    cmd_conj->add_option("--config", cj_config, "plain-text key=value configuration file");
    int cj_k = 3;
    std::size_t cj_n = 8;
    std::uint64_t cj_reps = 200000, cj_seed = 1;
    unsigned cj_threads = 0;
    std::string cj_shifts = "1,0,0;0.5,0.5,0;0.3,0.3,0.3";
    cmd_conj->add_option("--k", cj_k)->capture_default_str();
    cmd_conj->add_option("--n", cj_n)->capture_default_str();
    cmd_conj->add_option("--replicates", cj_reps)->capture_default_str();
    cmd_conj->add_option("--seed", cj_seed)->capture_default_str();
    cmd_conj->add_option("--threads", cj_threads)->capture_default_str();
    cmd_conj->add_option("--shifts", cj_shifts,
                         "semicolon-separated shift vectors for the asymmetric entries")
        ->capture_default_str();

    // let global flags like --format appear after the subcommand name too
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1; // malformed flags are a usage error
    }

    try {
        if (format != "json" && format != "csv")
            throw std::invalid_argument("unknown --format '" + format + "'");
        const bool csv = format == "csv";

        if (*cmd_bound) {
            const auto b = bounds::exact_bound({bk, bn});
            if (csv) {
                std::cout << "k,n,tail_numerator,log2_denominator,value\n"
                          << bk << ',' << bn << ',' << b.tail_numerator.to_decimal() << ','
                          << b.log2_denominator << ',' << fmt_double(b.value) << '\n';
            } else {
                json j;
                j["k"] = bk;
                j["n"] = bn;
                j.update(bound_to_json(b));
                std::cout << j.dump(2) << '\n';
            }
            return 0;
        }

        if (*cmd_table) {
            const auto t = bounds::bound_table(table_k, table_r);
            // the table defaults to its canonical CSV form; JSON on request
            if (app.count("--format") > 0 && !csv) {
                json rows = json::array();
                for (std::size_t i = 0; i < t.k_values.size(); ++i)
                    for (std::size_t j = 0; j < t.ratios.size(); ++j)
                        rows.push_back(json{{"k", t.k_values[i]},
                                            {"r", t.ratios[j]},
                                            {"n", t.n_values[i][j]},
                                            {"bound", t.values[i][j]}});
                std::cout << rows.dump(2) << '\n';
            } else {
                std::cout << t.to_csv();
            }
            return 0;
        }

        if (*cmd_level) {
            const auto v = bounds::check_level({lk, ln}, level);
            if (csv) {
                std::cout << "k,n,requested_level,achievable,bound\n"
                          << lk << ',' << ln << ',' << fmt_double(v.requested_level) << ','
                          << (v.achievable ? "true" : "false") << ',' << fmt_double(v.bound.value)
                          << '\n';
            } else {
                json j;
                j["k"] = lk;
                j["n"] = ln;
                j["requested_level"] = v.requested_level;
                j["achievable"] = v.achievable;
                j["bound"] = bound_to_json(v.bound);
                std::cout << j.dump(2) << '\n';
            }
            return 0;
        }

        if (*cmd_hull) {
            const auto cloud = geom::PointCloud::load_csv(hull_input);
            const auto v = geom::contains_origin(cloud, hull_tol);
            json j;
            j["status"] = v.interior() ? "Interior" : "NotInterior";
            if (v.interior())
                j["weights"] = v.weights;
            else
                j["direction"] = v.direction;
            j["margin"] = v.margin;
            std::cout << j.dump(2) << '\n';
            return 0;
        }

        if (*cmd_el) {
            const auto cloud = geom::PointCloud::load_csv(el_input);
            std::optional<double> radius;
            std::optional<double> level_used;
            if (!el_radius.empty()) radius = parse_radius(el_radius);
            if (el_level > 0.0) {
                radius = el::chisq_radius(static_cast<long>(cloud.k()), el_level);
                level_used = el_level;
            }
            const auto ev = el::el_logratio({cloud});
            json j;
            j["status"] = ev.interior() ? "Interior" : "OutsideHull";
            j["lambda"] = ev.lambda;
            if (std::isinf(ev.log_ratio))
                j["log_ratio"] = nullptr; // +infinity: outside the hull
            else
                j["log_ratio"] = ev.log_ratio;
            j["iterations"] = ev.iterations;
            j["weights"] = ev.weights;
            if (radius) {
                j["radius"] = *radius;
                if (level_used) j["level"] = *level_used;
                j["in_region"] = std::isfinite(ev.log_ratio) && ev.log_ratio < *radius;
            }
            std::cout << j.dump(2) << '\n';
            return 0;
        }

        if (*cmd_circle) {
            const auto d = make_density(density_name, cir_kappa, cir_mu, cir_a, cir_table);
            json j;
            j["density"] = d.descriptor();
            if (has_gx) {
                j["x"] = cir_gx;
                j["half_circle_mass"] = d.half_circle_mass(cir_gx);
            }
            if (cir_n > 0) {
                const auto forms = circle::circle_outside_prob_forms(d, cir_n);
                const double outside = circle::circle_outside_prob(d, cir_n);
                j["n"] = cir_n;
                j["outside_prob"] = outside;
                j["inside_prob"] = 1.0 - outside;
                j["symmetric_inside"] = circle::symmetric_prob(cir_n);
                j["forms"] = forms;
            }
            if (!has_gx && cir_n <= 0)
                throw std::invalid_argument("circle: provide --n and/or --gx");
            std::cout << j.dump(2) << '\n';
            return 0;
        }

        if (*cmd_mc_hull) {
            if (!mh_config.empty()) {
                const auto cfg = KeyValueConfig::load(mh_config);
                apply_sampler_config(cfg, cmd_mc_hull, mh_sampler);
                cfg.apply(cmd_mc_hull, "--n", "n", [&](const std::string& v) { mh_n = std::stoul(v); });
                cfg.apply(cmd_mc_hull, "--replicates", "replicates",
                          [&](const std::string& v) { mh_reps = std::stoull(v); });
                cfg.apply(cmd_mc_hull, "--seed", "seed",
                          [&](const std::string& v) { mh_seed = std::stoull(v); });
                cfg.apply(cmd_mc_hull, "--tol", "tol",
                          [&](const std::string& v) { mh_tol = std::stod(v); });
                cfg.apply(cmd_mc_hull, "--threads", "threads",
                          [&](const std::string& v) { mh_threads = std::stoul(v); });
            }
            if (mh_n < 1) throw std::invalid_argument("mc-hull: provide --n (flag or config)");
            const auto spec = mh_sampler.build();
            const auto r = sim::estimate_hull_prob(spec, mh_n, mh_reps, mh_seed, mh_tol, mh_threads);
            if (csv) {
                std::cout << "sampler,n,replicates,hits,estimate,std_error,wilson_lo,wilson_hi,seed\n"
                          << spec.describe() << ',' << mh_n << ',' << report_csv_fields(r) << '\n';
            } else {
                json j;
                j["sampler"] = spec.describe();
                j["n"] = mh_n;
                j.update(report_to_json(r));
                std::cout << j.dump(2) << '\n';
            }
            return 0;
        }

        if (*cmd_mc_cov) {
            if (!mc_config.empty()) {
                const auto cfg = KeyValueConfig::load(mc_config);
                apply_sampler_config(cfg, cmd_mc_cov, mc_sampler);
                cfg.apply(cmd_mc_cov, "--theta", "theta",
                          [&](const std::string& v) { mc_theta = parse_double_list(v); });
                cfg.apply(cmd_mc_cov, "--n", "n", [&](const std::string& v) { mc_n = std::stoul(v); });
                cfg.apply(cmd_mc_cov, "--radius", "radius",
                          [&](const std::string& v) { mc_radius = v; });
                cfg.apply(cmd_mc_cov, "--radii", "radii",
                          [&](const std::string& v) { mc_radii = parse_double_list(v); });
                cfg.apply(cmd_mc_cov, "--replicates", "replicates",
                          [&](const std::string& v) { mc_reps = std::stoull(v); });
                cfg.apply(cmd_mc_cov, "--seed", "seed",
                          [&](const std::string& v) { mc_seed = std::stoull(v); });
                cfg.apply(cmd_mc_cov, "--threads", "threads",
                          [&](const std::string& v) { mc_threads = std::stoul(v); });
            }
            if (mc_n < 1) throw std::invalid_argument("mc-coverage: provide --n (flag or config)");
            sim::CoverageProblem prob;
            prob.sampler = mc_sampler.build();
            prob.true_theta = mc_theta.empty() ? prob.sampler.mean() : mc_theta;
            prob.n = mc_n;

            std::vector<double> radii = mc_radii;
            if (radii.empty()) radii.push_back(parse_radius(mc_radius));
            std::vector<sim::MCReport> reports;
            for (double radius : radii)
                reports.push_back(sim::estimate_coverage(prob, radius, mc_reps, mc_seed, mc_threads));

            if (csv) {
                std::cout
                    << "sampler,n,radius,replicates,hits,estimate,std_error,wilson_lo,wilson_hi,seed\n";
                for (std::size_t i = 0; i < radii.size(); ++i)
                    std::cout << prob.sampler.describe() << ',' << mc_n << ','
                              << fmt_double(radii[i]) << ',' << report_csv_fields(reports[i])
                              << '\n';
            } else if (radii.size() == 1) {
                json j;
                j["sampler"] = prob.sampler.describe();
                j["theta"] = prob.true_theta;
                j["n"] = mc_n;
                if (std::isinf(radii[0]))
                    j["radius"] = "inf";
                else
                    j["radius"] = radii[0];
                j.update(report_to_json(reports[0]));
                std::cout << j.dump(2) << '\n';
            } else {
                json arr = json::array();
                for (std::size_t i = 0; i < radii.size(); ++i) {
                    json j;
                    j["sampler"] = prob.sampler.describe();
                    j["theta"] = prob.true_theta;
                    j["n"] = mc_n;
                    if (std::isinf(radii[i]))
                        j["radius"] = "inf";
                    else
                        j["radius"] = radii[i];
                    j.update(report_to_json(reports[i]));
                    arr.push_back(j);
                }
                std::cout << arr.dump(2) << '\n';
            }
            return 0;
        }

        if (*cmd_lemma) {
            if (!lm_config.empty()) {
                const auto cfg = KeyValueConfig::load(lm_config);
                apply_sampler_config(cfg, cmd_lemma, lm_sampler);
                cfg.apply(cmd_lemma, "--n", "n", [&](const std::string& v) { lm_n = std::stoul(v); });
                cfg.apply(cmd_lemma, "--replicates", "replicates",
                          [&](const std::string& v) { lm_reps = std::stoull(v); });
                cfg.apply(cmd_lemma, "--seed", "seed",
                          [&](const std::string& v) { lm_seed = std::stoull(v); });
                cfg.apply(cmd_lemma, "--threads", "threads",
                          [&](const std::string& v) { lm_threads = std::stoul(v); });
            }
            if (lm_n < 1) throw std::invalid_argument("lemma1: provide --n (flag or config)");
            const auto spec = lm_sampler.build();
            const auto mismatches =
                sim::verify_projection_invariance(spec, lm_n, lm_reps, lm_seed, lm_threads);
            json j;
            j["sampler"] = spec.describe();
            j["n"] = lm_n;
            j["replicates"] = lm_reps;
            j["mismatches"] = mismatches;
            std::cout << j.dump(2) << '\n';
            return mismatches == 0 ? 0 : 2;
        }

        if (*cmd_conj) {
            if (!cj_config.empty()) {
                const auto cfg = KeyValueConfig::load(cj_config);
                cfg.apply(cmd_conj, "--k", "k", [&](const std::string& v) { cj_k = std::stoi(v); });
                cfg.apply(cmd_conj, "--n", "n", [&](const std::string& v) { cj_n = std::stoul(v); });
                cfg.apply(cmd_conj, "--replicates", "replicates",
                          [&](const std::string& v) { cj_reps = std::stoull(v); });
                cfg.apply(cmd_conj, "--seed", "seed",
                          [&](const std::string& v) { cj_seed = std::stoull(v); });
                cfg.apply(cmd_conj, "--threads", "threads",
                          [&](const std::string& v) { cj_threads = std::stoul(v); });
                cfg.apply(cmd_conj, "--shifts", "shifts",
                          [&](const std::string& v) { cj_shifts = v; });
            }
            std::vector<geom::SamplerSpec> specs = {
                geom::SamplerSpec::uniform_sphere(cj_k),
                geom::SamplerSpec::shifted_gaussian(std::vector<double>(cj_k, 0.0)),
            };
            std::stringstream groups(cj_shifts);
            std::string group;
            while (std::getline(groups, group, ';')) {
                if (group.empty()) continue;
                std::vector<double> shift;
                std::stringstream cells(group);
                std::string cell;
                while (std::getline(cells, cell, ',')) shift.push_back(std::stod(cell));
                specs.push_back(geom::SamplerSpec::shifted_gaussian(shift));
            }
            const auto entries = sim::conjecture_scan(cj_k, cj_n, specs, cj_reps, cj_seed, cj_threads);
            if (csv) {
                std::cout << "sampler,estimate,std_error,bound,gap,gap_sigmas\n";
                for (const auto& e : entries) {
                    const double sig = e.report.std_error > 0 ? e.gap / e.report.std_error : 0.0;
                    std::cout << e.spec.describe() << ',' << fmt_double(e.report.estimate) << ','
                              << fmt_double(e.report.std_error) << ',' << fmt_double(e.bound) << ','
                              << fmt_double(e.gap) << ',' << fmt_double(sig) << '\n';
                }
            } else {
                json j;
                j["k"] = cj_k;
                j["n"] = cj_n;
                j["bound"] = entries.empty() ? 0.0 : entries.front().bound;
                j["bound_is_conjectural"] = cj_k >= 3;
                json arr = json::array();
                for (const auto& e : entries) {
                    json row;
                    row["sampler"] = e.spec.describe();
                    row["report"] = report_to_json(e.report);
                    row["bound"] = e.bound;
                    row["gap"] = e.gap;
                    row["gap_sigmas"] = e.report.std_error > 0 ? e.gap / e.report.std_error : 0.0;
                    arr.push_back(row);
                }
                j["entries"] = arr;
                std::cout << j.dump(2) << '\n';
            }
            return 0;
        }

        std::cerr << "error: no subcommand selected\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << '\n';
        return 2;
    }
}
