#include "cli.hpp"

#include "svt/io/json.hpp"
#include "svt/verify/random_objects.hpp"
#include "svt/verify/suites.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

namespace svt::cli {

namespace {

using io::json;
using num::RealBall;

struct Global {
    long prec = 128;
    std::uint64_t seed = 1;
    std::string out;
};

// Raised for failures that should exit with 1 after the report is written.
struct Failed {
    std::string what;
};

void emit(const Global& g, const std::string& text, std::ostream& out) {
    if (g.out.empty())
        out << text;
    else
        io::write_atomic(g.out, text);
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw MalformedInput(path + ": cannot open");
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

json parse_json(const std::string& text, const std::string& where) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // byte offset to line:column
        size_t line = 1, col = 1;
        for (size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw MalformedInput(where + ":" + std::to_string(line) + ":" + std::to_string(col) + ": invalid JSON");
    }
}

// Comma-separated exact rationals.
std::vector<mpq_class> rational_list(const std::string& text, const std::string& what) {
    std::vector<mpq_class> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(num::parse_rational(item));
        } catch (const std::exception&) {
            throw MalformedInput(what + ": cannot read '" + item + "' as a rational");
        }
    }
    if (out.empty()) throw MalformedInput(what + ": empty list");
    return out;
}

struct ParamFlags {
    std::string xi = "0", eta = "1", r = "1", s = "2", file;

    void attach(CLI::App* app) {
        app->add_option("--xi", xi, "xi as an exact rational");
        app->add_option("--eta", eta, "eta as an exact rational");
        app->add_option("--r", r, "translation step r");
        app->add_option("--s", s, "scaling factor s");
        app->add_option("--params", file, "JSON file {xi, eta, r, s[, m]}; overrides the scalar flags");
    }
    poly::TranslationParams get() const {
        if (!file.empty()) return io::params_from_json(parse_json(read_file(file), file), file);
        json j{{"xi", xi}, {"eta", eta}, {"r", r}, {"s", s}};
        return io::params_from_json(j, "flags");
    }
};

std::vector<long> degree_list(const json& j, const std::string& path) {
    std::vector<long> out;
    if (j.is_array()) {
        for (size_t i = 0; i < j.size(); ++i) out.push_back(io::read_integer(j[i], path + "[" + std::to_string(i) + "]"));
    } else if (j.is_object() && j.contains("from") && j.contains("to")) {
        long a = io::read_integer(j["from"], path + ".from"), b = io::read_integer(j["to"], path + ".to");
        if (b < a || b - a > 1000) throw MalformedInput(path + ": bad range");
        for (long d = a; d <= b; ++d) out.push_back(d);
    } else {
        out.push_back(io::read_integer(j, path));
    }
    if (out.empty()) throw MalformedInput(path + ": empty");
    return out;
}

const json& need(const json& cfg, const std::string& key) {
    auto it = cfg.find(key);
    if (it == cfg.end()) throw MalformedInput("config." + key + ": missing");
    return *it;
}

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

struct Tables {
    std::string csv;
    json report;
};

Tables aux_experiment(const json& cfg, long prec) {
    auto params = io::params_from_json(need(cfg, "params"), "config.params");
    auto ds = degree_list(need(cfg, "D"), "config.D");
    mpq_class sigma = io::read_rational(need(cfg, "sigma"), "config.sigma");
    mpq_class beta = io::read_rational(need(cfg, "beta"), "config.beta");
    mpq_class nu = io::read_rational(need(cfg, "nu"), "config.nu");
    for (long d : ds)
        if (d < 1 || d > 40) throw MalformedInput("config.D: degree " + std::to_string(d) + " outside 1..40");
    Tables t;
    t.csv = "D,status,norm_margin,value_margin,note\n";
    json rows = json::array();
    for (long d : ds) {
        auto r = cons::dirichlet_search(static_cast<int>(d), sigma, beta, nu, params, prec);
        std::string nm, vm;
        if (r.status == cons::SearchStatus::found) {
            nm = r.certificate.norm_margin.lower().to_decimal(10, MPFR_RNDD);
            vm = r.certificate.exact_zero ? "exact" : r.certificate.value_margin.lower().to_decimal(10, MPFR_RNDD);
        }
        t.csv += std::to_string(d) + "," + cons::status_name(r.status) + "," + nm + "," + vm + "," + csv_cell(r.note) + "\n";
        rows.push_back(io::aux_json(r));
    }
    t.report = json{{"command", "aux-search"},
                    {"params", io::params_json(params)},
                    {"sigma", io::rational_json(sigma)},
                    {"beta", io::rational_json(beta)},
                    {"nu", io::rational_json(nu)},
                    {"region", cons::region_name(cons::parameter_region(sigma, beta, nu).classification)},
                    {"results", rows}};
    return t;
}

var::ZeroDimVariety variety_from_json(const json& j, const std::string& path, long prec) {
    if (!j.is_object()) throw MalformedInput(path + ": expected an object");
    if (!j.contains("minpoly") || !j.contains("coords")) throw MalformedInput(path + ": needs minpoly and coords");
    std::vector<mpz_class> c;
    for (size_t i = 0; i < j["minpoly"].size(); ++i) {
        mpq_class q = io::read_rational(j["minpoly"][i], path + ".minpoly[" + std::to_string(i) + "]");
        if (q.get_den() != 1) throw MalformedInput(path + ".minpoly[" + std::to_string(i) + "]: not an integer");
        c.push_back(q.get_num());
    }
    const json& co = j["coords"];
    if (!co.is_array() || co.size() != 3) throw MalformedInput(path + ".coords: expected three coordinate polynomials");
    std::array<num::QPoly, 3> coords;
    for (int k = 0; k < 3; ++k) {
        std::vector<mpq_class> v;
        std::string p = path + ".coords[" + std::to_string(k) + "]";
        if (!co[k].is_array()) throw MalformedInput(p + ": expected a coefficient list");
        for (size_t i = 0; i < co[k].size(); ++i) v.push_back(io::read_rational(co[k][i], p + "[" + std::to_string(i) + "]"));
        coords[k] = num::QPoly(v);
    }
    return var::variety_from_point(num::ZPoly(c), coords, prec);
}

Tables heights_experiment(const json& cfg, long prec, std::uint64_t seed) {
    std::vector<var::ZeroDimVariety> zs;
    if (cfg.contains("varieties")) {
        const json& vs = cfg["varieties"];
        if (!vs.is_array() || vs.empty()) throw MalformedInput("config.varieties: expected a nonempty list");
        for (size_t i = 0; i < vs.size(); ++i) zs.push_back(variety_from_json(vs[i], "config.varieties[" + std::to_string(i) + "]", prec));
    } else {
        const json& rnd = need(cfg, "random");
        long count = io::read_integer(need(rnd, "count"), "config.random.count");
        long maxd = rnd.contains("max_degree") ? io::read_integer(rnd["max_degree"], "config.random.max_degree") : 4;
        if (count < 1 || count > 100000) throw MalformedInput("config.random.count: outside 1..100000");
        if (maxd < 1 || maxd > 8) throw MalformedInput("config.random.max_degree: outside 1..8");
        for (long i = 0; i < count; ++i) {
            std::mt19937_64 rng(gen::trial_seed(seed, static_cast<std::uint64_t>(i)));
            zs.push_back(gen::variety(rng, static_cast<int>(maxd), prec));
        }
    }
    Tables t;
    t.csv = "index,n,h_inf,h_sup,h_abs_inf,h_abs_sup,gelfond_gap_sup\n";
    json rows = json::array();
    for (size_t i = 0; i < zs.size(); ++i) {
        auto w = var::weil_height(zs[i], prec);
        t.csv += std::to_string(i) + "," + std::to_string(zs[i].degree) + "," + zs[i].height.lower().to_decimal(15, MPFR_RNDD) +
                 "," + zs[i].height.upper().to_decimal(15, MPFR_RNDU) + "," + w.h_abs.lower().to_decimal(15, MPFR_RNDD) + "," +
                 w.h_abs.upper().to_decimal(15, MPFR_RNDU) + "," + w.gap.upper().to_decimal(15, MPFR_RNDU) + "\n";
        json v = io::variety_json(zs[i], prec);
        v["gelfond_gap"] = io::ball_json(w.gap);
        v["gap_ok"] = w.height_gap_ok;
        rows.push_back(v);
    }
    t.report = json{{"command", "heights"}, {"varieties", rows}};
    return t;
}

Tables interpolation_experiment(const json& cfg, long prec) {
    auto params = io::params_from_json(need(cfg, "params"), "config.params");
    auto ls = degree_list(need(cfg, "L"), "config.L");
    for (long l : ls)
        if (l < 0 || l > 16) throw MalformedInput("config.L: " + std::to_string(l) + " outside 0..16");
    long lmax = *std::max_element(ls.begin(), ls.end());
    long c2 = interp::derive_c2(params, static_cast<int>(std::max(1L, lmax)), prec);
    Tables t;
    t.csv = "L,M,max_length_sup,bound_sup,c2_power,kronecker,ok\n";
    json rows = json::array();
    for (long l : ls) {
        int L = static_cast<int>(l);
        auto b = L <= 8 || !params.rational() ? interp::dual_basis(L, params, prec) : interp::dual_basis_falling(L, params, prec);
        RealBall longest(0);
        for (const auto& len : b.lengths) longest = num::max(longest, len);
        mpz_class cap = interp::c2_power(c2, L);
        bool kron = interp::kronecker_holds(b, params, prec);
        bool ok = kron && num::certainly_le(longest, b.bound) && num::certainly_le(longest, RealBall::from_mpz(cap, prec));
        t.csv += std::to_string(L) + "," + std::to_string(b.M) + "," + longest.upper().to_decimal(12, MPFR_RNDU) + "," +
                 b.bound.upper().to_decimal(12, MPFR_RNDU) + "," + cap.get_str() + "," + (kron ? "true" : "false") + "," +
                 (ok ? "true" : "false") + "\n";
        rows.push_back(json{{"L", L}, {"M", b.M}, {"max_length", io::ball_json(longest)}, {"bound", io::ball_json(b.bound)},
                            {"c2_power", cap.get_str()}, {"kronecker", kron}, {"ok", ok}});
    }
    t.report = json{{"command", "interpolation"}, {"params", io::params_json(params)}, {"c2", c2}, {"levels", rows}};
    return t;
}

int run_experiment(const std::string& path, Global g, std::ostream& out) {
    std::string text = read_file(path);
    if (text.find_first_not_of(" \t\r\n") == std::string::npos) throw MalformedInput(path + ": empty config");
    json cfg = parse_json(text, path);
    if (!cfg.is_object()) throw MalformedInput(path + ": expected a JSON object");
    std::string command = need(cfg, "command").is_string() ? cfg["command"].get<std::string>() : "";
    if (cfg.contains("prec")) g.prec = io::read_integer(cfg["prec"], "config.prec");
    if (cfg.contains("seed")) g.seed = static_cast<std::uint64_t>(io::read_integer(cfg["seed"], "config.seed"));
    if (g.prec < 64) throw MalformedInput("config.prec: precision cap must be at least 64");
    std::string base = g.out;
    if (base.empty() && cfg.contains("output")) {
        if (!cfg["output"].is_string()) throw MalformedInput("config.output: expected a path string");
        base = cfg["output"].get<std::string>();
    }
    if (base.empty()) base = (std::filesystem::path(path).parent_path() / std::filesystem::path(path).stem()).string() + ".out";

    if (std::filesystem::weakly_canonical(base + ".json") == std::filesystem::weakly_canonical(path))
        throw MalformedInput("config.output: the report would overwrite the config file");
    Tables t;
    if (command == "aux-search")
        t = aux_experiment(cfg, g.prec);
    else if (command == "heights")
        t = heights_experiment(cfg, g.prec, g.seed);
    else if (command == "interpolation")
        t = interpolation_experiment(cfg, g.prec);
    else
        throw MalformedInput("config.command: expected aux-search, heights or interpolation");
    t.report["prec"] = g.prec;
    t.report["seed"] = g.seed;
    io::write_atomic(base + ".csv", t.csv);
    io::write_atomic(base + ".json", io::dump(t.report));
    out << base << ".csv\n" << base << ".json\n";
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Certified experiments for small value estimates along translation orbits", "svt"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the verb
    Global g;
    app.add_option("--prec", g.prec, "working precision in bits (at least 64)")->check(CLI::Range(64L, 1L << 20));
    app.add_option("--seed", g.seed, "base seed");
    app.add_option("--out", g.out, "output file (stdout when absent); a path prefix for experiment");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    long trials = -1;
    verify->add_option("suite", suite, "suite id")->required();
    verify->add_option("--trials", trials, "number of random trials")->check(CLI::NonNegativeNumber);

    auto* experiment = app.add_subcommand("experiment", "run a JSON-configured experiment");
    std::string config;
    experiment->add_option("config", config, "config file")->required();

    auto* gamma = app.add_subcommand("gamma", "orbit points gamma_i");
    ParamFlags gp;
    gp.attach(gamma);
    long gi = 0, gcount = 1;
    gamma->add_option("-i,--index", gi, "first index");
    gamma->add_option("--count", gcount, "number of points")->check(CLI::Range(1L, 100000L));

    auto* dual = app.add_subcommand("dual-basis", "interpolation basis Q_0..Q_{M-1}");
    ParamFlags dp;
    dp.attach(dual);
    int dl = 1;
    dual->add_option("-L,--level", dl, "degree L")->check(CLI::Range(0, 16));

    auto* aux = app.add_subcommand("aux-search", "auxiliary polynomial search");
    ParamFlags ap;
    ap.attach(aux);
    int ad = 5;
    std::string sigma = "1", beta = "2", nu = "12/5";
    aux->add_option("-D,--degree", ad, "degree bound D")->check(CLI::Range(1, 40));
    aux->add_option("--sigma", sigma, "orbit length exponent");
    aux->add_option("--beta", beta, "norm exponent");
    aux->add_option("--nu", nu, "value exponent");

    auto* chow = app.add_subcommand("chow", "Chow form and heights of a 0-dimensional variety");
    std::string minpoly = "0,1", x0 = "1", x1 = "0", x2 = "0", vfile;
    chow->add_option("--minpoly", minpoly, "integer coefficients of the minimal polynomial of theta, constant first");
    chow->add_option("--x0", x0, "X0 coordinate as rational coefficients in theta");
    chow->add_option("--x1", x1, "X1 coordinate");
    chow->add_option("--x2", x2, "X2 coordinate");
    chow->add_option("--variety", vfile, "JSON file {minpoly, coords}; overrides the flags");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*verify) {
            if (!verify::has_suite(suite)) {
                err << "error: unknown suite '" << suite << "'; known:";
                for (const auto& n : verify::suite_names()) err << " " << n;
                err << "\n";
                return 2;
            }
            verify::SuiteReport rep = verify::run_suite(suite, {trials, g.seed, g.prec});
            emit(g, io::dump(rep.to_json()), out);
            if (!rep.ok()) {
                err << suite << ": " << rep.failures.size() << " failures\n";
                return 1;
            }
            return 0;
        }
        if (*experiment) return run_experiment(config, g, out);
        if (*gamma) {
            auto params = gp.get();
            json pts = json::array();
            for (long i = gi; i < gi + gcount; ++i) {
                auto p = proj::gamma(params, i, g.prec);
                json e{{"i", i}};
                if (p.is_exact()) {
                    json c = json::array();
                    for (const auto& v : p.exact_coords()) c.push_back(io::rational_json(v));
                    e["coords"] = c;
                } else {
                    json c = json::array();
                    for (const auto& v : p.balls(g.prec)) c.push_back(io::complex_json(v));
                    e["balls"] = c;
                }
                pts.push_back(e);
            }
            emit(g, io::dump(json{{"params", io::params_json(params)}, {"points", pts}}), out);
            return 0;
        }
        if (*dual) {
            auto params = dp.get();
            auto b = interp::dual_basis(dl, params, g.prec);
            json polys = json::array();
            for (int j = 0; j < b.M; ++j) {
                json e{{"j", j}, {"length", io::ball_json(b.lengths[j])}};
                e["poly"] = b.exact ? io::form_json(b.exact_polys[j]) : io::ball_form_json(b.ball_polys[j]);
                polys.push_back(e);
            }
            bool kron = interp::kronecker_holds(b, params, g.prec);
            emit(g, io::dump(json{{"params", io::params_json(params)}, {"L", b.L}, {"M", b.M}, {"exact", b.exact},
                                  {"bound", io::ball_json(b.bound)}, {"kronecker", kron}, {"basis", polys}}),
                 out);
            return kron ? 0 : 1;
        }
        if (*aux) {
            auto params = ap.get();
            auto rd = [](const std::string& s, const std::string& what) {
                return io::read_rational(json(s), what);
            };
            auto r = cons::dirichlet_search(ad, rd(sigma, "--sigma"), rd(beta, "--beta"), rd(nu, "--nu"), params, g.prec);
            json j = io::aux_json(r);
            j["params"] = io::params_json(params);
            emit(g, io::dump(j), out);
            return r.status == cons::SearchStatus::found ? 0 : 1;
        }
        if (*chow) {
            var::ZeroDimVariety z;
            if (!vfile.empty()) {
                z = variety_from_json(parse_json(read_file(vfile), vfile), vfile, g.prec);
            } else {
                std::vector<mpz_class> c;
                for (const auto& q : rational_list(minpoly, "--minpoly")) {
                    if (q.get_den() != 1) throw MalformedInput("--minpoly: coefficients must be integers");
                    c.push_back(q.get_num());
                }
                z = var::variety_from_point(num::ZPoly(c),
                                            {num::QPoly(rational_list(x0, "--x0")), num::QPoly(rational_list(x1, "--x1")),
                                             num::QPoly(rational_list(x2, "--x2"))},
                                            g.prec);
            }
            json j = io::variety_json(z, g.prec);
            auto w = var::weil_height(z, g.prec);
            j["gelfond_gap"] = io::ball_json(w.gap);
            emit(g, io::dump(j), out);
            return 0;
        }
    } catch (const MalformedInput& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionFailed& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace svt::cli
