#include "capax_cli.hpp"

#include "capax/json_io.hpp"
#include "capax/optimize.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

namespace capax::cli {

namespace {

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> parts;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) parts.push_back(token);
    return parts;
}

Ellipsoid parse_ellipsoid_arg(const std::string& text) {
    std::vector<ExtRational> params;
    for (const std::string& tok : split_commas(text)) params.push_back(parse_ext_rational(tok));
    return Ellipsoid(std::move(params));
}

std::pair<Rational, Rational> parse_pair_arg(const std::string& text, const char* what) {
    auto parts = split_commas(text);
    if (parts.size() != 2) throw std::domain_error(std::string(what) + ": expected two comma-separated values");
    return {parse_rational(parts[0]), parse_rational(parts[1])};
}

ToricProfile load_profile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::domain_error("cannot open profile file: " + path);
    Json j = Json::parse(in, nullptr, true);
    return profile_from_json(j);
}

GridSpec parse_grid_arg(const std::string& text) {
    GridSpec grid;
    if (text == "default") return grid;
    for (const std::string& tok : split_commas(text)) {
        if (tok == "unbalanced") {
            grid.balanced = false;
        } else if (tok.size() > 1 && (tok[0] == 'r' || tok[0] == 's' || tok[0] == 't')) {
            std::int64_t v = std::stoll(tok.substr(1));
            if (tok[0] == 'r')
                grid.r_denom_bound = v;
            else if (tok[0] == 's')
                grid.s_steps = v;
            else
                grid.t_steps = v;
        } else {
            throw std::domain_error("bad --grid token: " + tok + " (want default or rN,sN,tN,unbalanced)");
        }
    }
    return grid;
}

// CSV fallback: flatten one JSON document to key,value lines; arrays of
// objects become one row block with a header.
void write_csv(const Json& j, std::ostream& out, const std::string& prefix = "") {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            std::string path = prefix.empty() ? key : prefix + "." + key;
            if (value.is_object() || (value.is_array() && !value.empty() && value.front().is_object())) {
                write_csv(value, out, path);
            } else if (value.is_array()) {
                out << path << ",";
                for (std::size_t i = 0; i < value.size(); ++i)
                    out << (i ? ";" : "") << (value[i].is_string() ? value[i].get<std::string>() : value[i].dump());
                out << "\n";
            } else {
                out << path << "," << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
            }
        }
    } else if (j.is_array() && !j.empty() && j.front().is_object()) {
        bool header = false;
        for (const Json& row : j) {
            if (!header) {
                out << prefix;
                for (const auto& [key, value] : row.items()) out << "," << key;
                out << "\n";
                header = true;
            }
            out << prefix;
            for (const auto& [key, value] : row.items())
                out << "," << (value.is_string() ? value.get<std::string>() : value.dump());
            out << "\n";
        }
    } else {
        out << prefix << "," << j.dump() << "\n";
    }
}

// Raised when a verify claim evaluates to false: the report still goes to
// stdout, the exit code becomes 1.
struct ClaimFailed {};

struct Options {
    std::string format = "json";
    int jobs = 0;  // 0: resolve from CAPAX_JOBS, else 1
};

int resolve_jobs(int jobs_flag) {
    if (jobs_flag > 0) return jobs_flag;
    if (const char* env = std::getenv("CAPAX_JOBS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

void emit(const Json& doc, const Options& opts, std::ostream& out) {
    if (opts.format == "csv")
        write_csv(doc, out);
    else
        out << doc.dump(2) << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact capacity calculator for ellipsoids and 4d toric domains"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opts;
    app.add_option("--format", opts.format, "output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--jobs", opts.jobs, "worker threads for sweeps (default $CAPAX_JOBS or 1)");

    std::string ellipsoid_arg, polydisk_arg, profile_arg, support_arg, grid_arg = "default";
    std::string claim;
    std::int64_t k = 0, count = 0, max_m = 0, k_max = 0, denom_bound = 30;
    std::int64_t gen_count = 1000, max_vertices = 6, coord_denom = 10, cover_k_max = 50;
    std::uint64_t seed = 20240601;
    int n_half = 2;
    bool kappa_mode = false;

    Json doc;
    std::function<void()> action;

    auto* cmd_capacity = app.add_subcommand("capacity", "c_k of an ellipsoid");
    cmd_capacity->add_option("--ellipsoid", ellipsoid_arg, "comma-separated p/q or inf")->required();
    cmd_capacity->add_option("--k", k, "capacity index")->required()->check(CLI::PositiveNumber);
    cmd_capacity->callback([&] {
        action = [&] {
            Ellipsoid e = parse_ellipsoid_arg(ellipsoid_arg);
            doc = Json{{"c_k", to_string(capacity(e, k))}};
        };
    });

    auto* cmd_spectrum = app.add_subcommand("spectrum", "first entries of the multiple sequence");
    cmd_spectrum->add_option("--ellipsoid", ellipsoid_arg)->required();
    cmd_spectrum->add_option("--count", count, "number of entries")->required()->check(CLI::PositiveNumber);
    cmd_spectrum->callback([&] {
        action = [&] {
            Ellipsoid e = parse_ellipsoid_arg(ellipsoid_arg);
            Json entries = Json::array();
            for (const SpectrumEntry& entry : spectrum(e, count)) entries.push_back(to_json(entry));
            doc = Json{{"ellipsoid", to_json(e)}, {"entries", entries}};
        };
    });

    auto* cmd_kset = app.add_subcommand("kset", "k_m indices of a rational ellipsoid");
    cmd_kset->add_option("--ellipsoid", ellipsoid_arg)->required();
    cmd_kset->add_option("--max-m", max_m, "compute k_1..k_max_m")->required()->check(CLI::PositiveNumber);
    cmd_kset->callback([&] {
        action = [&] {
            Ellipsoid e = parse_ellipsoid_arg(ellipsoid_arg);
            doc = Json{{"ellipsoid", to_json(e)},
                       {"tau", to_string(e.common_period())},
                       {"k_set", k_set(e, max_m)}};
        };
    });

    auto* cmd_ratio = app.add_subcommand("ratio", "capacity ratio via its n-th power");
    cmd_ratio->add_option("--ellipsoid", ellipsoid_arg);
    cmd_ratio->add_option("--polydisk", polydisk_arg, "a,b");
    cmd_ratio->add_option("--profile", profile_arg, "profile JSON file");
    cmd_ratio->add_option("--k", k)->required()->check(CLI::PositiveNumber);
    cmd_ratio->callback([&] {
        action = [&] {
            int sources = !ellipsoid_arg.empty() + !polydisk_arg.empty() + !profile_arg.empty();
            if (sources != 1)
                throw std::domain_error("ratio: give exactly one of --ellipsoid, --polydisk, --profile");
            RatioValue r;
            if (!ellipsoid_arg.empty())
                r = ratio_ellipsoid(parse_ellipsoid_arg(ellipsoid_arg), k);
            else if (!polydisk_arg.empty()) {
                auto [a, b] = parse_pair_arg(polydisk_arg, "--polydisk");
                r = ratio_polydisk_closed_form(a, b, k);
            } else {
                r = ratio_toric(load_profile(profile_arg), k);
            }
            doc = to_json(r);
        };
    });

    auto* cmd_toric = app.add_subcommand("toric", "profile quantities: volume, c_k, supports");
    cmd_toric->add_option("--profile", profile_arg)->required();
    cmd_toric->add_option("--k", k)->check(CLI::PositiveNumber);
    cmd_toric->add_option("--support", support_arg, "lattice vector v1,v2");
    cmd_toric->callback([&] {
        action = [&] {
            ToricProfile p = load_profile(profile_arg);
            doc = Json{{"profile", to_json(p)}, {"volume", to_string(volume(p))}};
            if (k > 0) doc["c_k"] = to_string(capacity_toric(p, k));
            if (!support_arg.empty()) {
                auto [v1, v2] = parse_pair_arg(support_arg, "--support");
                if (den(v1) != 1 || den(v2) != 1)
                    throw std::domain_error("--support: lattice vector must be integral");
                LatticeVector v{num(v1).convert_to<std::int64_t>(), num(v2).convert_to<std::int64_t>()};
                doc["support_max"] = to_string(support_max(p, v));
                doc["support_min_on_graph"] = to_string(support_min_on_graph(p, v));
            }
        };
    });

    auto* cmd_search = app.add_subcommand("search", "maximizers over ellipsoids");
    cmd_search->add_option("--n", n_half, "half-dimension")->check(CLI::Range(2, 16));
    cmd_search->add_option("--k", k)->check(CLI::PositiveNumber);
    cmd_search->add_option("--denom-bound", denom_bound)->check(CLI::PositiveNumber);
    cmd_search->add_flag("--kappa", kappa_mode, "compute the polydisk/ellipsoid crossover index");
    cmd_search->callback([&] {
        action = [&] {
            if (kappa_mode) {
                doc = Json{{"n", n_half}, {"kappa", kappa(n_half)}};
                return;
            }
            if (k < 1) throw std::domain_error("search: --k is required");
            EllipsoidMax closed = global_ellipsoid_max(n_half, k);
            doc = Json{{"n", n_half},
                       {"k", k},
                       {"ellipsoid", to_json(closed.ellipsoid)},
                       {"ratio", to_json(closed.ratio)}};
            if (n_half == 2) {
                GridSearchResult grid = global_ellipsoid_search(k, denom_bound, resolve_jobs(opts.jobs));
                Json argmax = Json::array();
                for (const Rational& a : grid.argmax) argmax.push_back(to_string(a));
                doc["grid"] = Json{{"denom_bound", denom_bound},
                                   {"max_nth_power", to_string(grid.max_nth_power)},
                                   {"argmax", argmax},
                                   {"matches_closed_form", grid.matches_closed_form}};
            }
        };
    });

    auto* cmd_verify = app.add_subcommand("verify", "check a paper claim on a grid");
    cmd_verify->add_option("claim", claim, "one of crossover, thresholds, prop-ellipsoid-global, prop-ellipsoid-local, prop-concave, prop-toric-convex")
        ->required();
    cmd_verify->add_option("--k", k)->check(CLI::PositiveNumber);
    cmd_verify->add_option("--k-max", k_max)->check(CLI::PositiveNumber);
    cmd_verify->add_option("--ellipsoid", ellipsoid_arg);
    cmd_verify->add_option("--denom-bound", denom_bound)->check(CLI::PositiveNumber);
    cmd_verify->add_option("--grid", grid_arg, "default or rN,sN,tN,unbalanced");
    cmd_verify->add_option("--count", gen_count)->check(CLI::PositiveNumber);
    cmd_verify->add_option("--max-vertices", max_vertices)->check(CLI::Range(2, 64));
    cmd_verify->add_option("--coord-denom", coord_denom)->check(CLI::PositiveNumber);
    cmd_verify->add_option("--seed", seed);
    cmd_verify->add_option("--cover-k-max", cover_k_max)->check(CLI::PositiveNumber);
    cmd_verify->callback([&] {
        action = [&] {
            bool verdict = false;
            if (claim == "crossover") {
                std::int64_t upto = k_max > 0 ? k_max : 100;
                verdict = crossover_check(1) == Ordering::Less && crossover_check(2) == Ordering::Equal;
                std::int64_t first_bad = 0;
                for (std::int64_t kk = 3; kk <= upto; ++kk)
                    if (crossover_check(kk) != Ordering::Greater) {
                        verdict = false;
                        first_bad = kk;
                        break;
                    }
                doc = Json{{"claim", claim}, {"k_max", upto}, {"verdict", verdict}};
                if (first_bad) doc["first_failure"] = first_bad;
            } else if (claim == "thresholds") {
                std::int64_t upto = k_max > 0 ? k_max : 200;
                verdict = true;
                for (std::int64_t kk = 2; kk <= upto; ++kk) {
                    Thresholds th = thresholds(kk);
                    bool eq_expected = kk == 2;
                    bool ok = eq_expected ? (th.l_km1 == th.u_km1 && th.l0 == th.u0)
                                          : (th.l_km1 < th.u_km1 && th.l0 < th.u0);
                    if (!ok) verdict = false;
                }
                Json covers = Json::array();
                for (std::int64_t kk = 2; kk <= cover_k_max; ++kk) {
                    CoverReport cover = sufficient_condition_cover(kk);
                    bool ok = kk == 2 ? cover.gaps.size() == 2 : cover.covered;
                    if (!ok) {
                        verdict = false;
                        covers.push_back(Json{{"k", kk}, {"gaps", cover.gaps.size()}});
                    }
                }
                doc = Json{{"claim", claim},
                           {"k_max", upto},
                           {"cover_k_max", cover_k_max},
                           {"verdict", verdict}};
                if (!covers.empty()) doc["cover_failures"] = covers;
            } else if (claim == "prop-ellipsoid-global") {
                std::int64_t upto = k_max > 0 ? k_max : (k > 0 ? k : 20);
                std::int64_t from = k_max > 0 || k == 0 ? 1 : k;
                verdict = true;
                Json rows = Json::array();
                for (std::int64_t kk = from; kk <= upto; ++kk) {
                    bool ok = verify_global_ellipsoid_max(2, kk, denom_bound);
                    verdict = verdict && ok;
                    rows.push_back(Json{{"k", kk}, {"ok", ok}});
                }
                doc = Json{{"claim", claim},
                           {"denom_bound", denom_bound},
                           {"verdict", verdict},
                           {"results", rows}};
            } else if (claim == "prop-ellipsoid-local") {
                if (ellipsoid_arg.empty())
                    throw std::domain_error("prop-ellipsoid-local: --ellipsoid is required");
                Ellipsoid e = parse_ellipsoid_arg(ellipsoid_arg);
                std::int64_t upto = k_max > 0 ? k_max : 12;
                std::vector<std::int64_t> ks;
                for (std::int64_t m = 1;; ++m) {
                    std::int64_t km = k_m(e, m);
                    if (km > upto) break;
                    ks.push_back(km);
                }
                verdict = true;
                Json rows = Json::array();
                for (std::int64_t kk = 1; kk <= upto; ++kk) {
                    MaximizerReport report = verify_local_ellipsoid_max(e, kk);
                    bool in_kset = std::find(ks.begin(), ks.end(), kk) != ks.end();
                    bool ok = (report.verdict == Verdict::ConfirmedMax) == in_kset;
                    verdict = verdict && ok;
                    Json row{{"k", kk},
                             {"in_k_set", in_kset},
                             {"verdict", report.verdict == Verdict::ConfirmedMax ? "confirmed_max"
                                                                                 : "witness_found"},
                             {"ok", ok}};
                    if (report.witness)
                        row["witness"] = Json{{"ellipsoid", to_json(report.witness->ellipsoid)},
                                              {"ratio", to_json(report.witness->ratio)},
                                              {"eps", to_string(report.witness->eps)},
                                              {"direction", report.witness->direction}};
                    rows.push_back(std::move(row));
                }
                doc = Json{{"claim", claim},
                           {"ellipsoid", to_json(e)},
                           {"k_set_le_k_max", ks},
                           {"verdict", verdict},
                           {"results", rows}};
            } else if (claim == "prop-concave") {
                std::int64_t upto = k_max > 0 ? k_max : (k > 0 ? k : 10);
                std::int64_t from = k_max > 0 || k == 0 ? 1 : k;
                auto profiles = random_concave_profiles(static_cast<std::size_t>(gen_count),
                                                        static_cast<std::size_t>(max_vertices),
                                                        coord_denom, seed);
                verdict = true;
                for (std::int64_t kk = from; kk <= upto; ++kk)
                    verdict = verdict && verify_concave_max(kk, profiles);
                doc = Json{{"claim", claim},
                           {"count", gen_count},
                           {"max_vertices", max_vertices},
                           {"coord_denom", coord_denom},
                           {"seed", seed},
                           {"verdict", verdict}};
            } else if (claim == "prop-toric-convex") {
                GridSpec grid = parse_grid_arg(grid_arg);
                std::int64_t from = k > 0 ? k : 2;
                std::int64_t upto = k_max > 0 ? k_max : from;
                verdict = true;
                Json reports = Json::array();
                for (std::int64_t kk = from; kk <= upto; ++kk) {
                    ConvexSweepReport report = verify_convex_toric_max(kk, grid, resolve_jobs(opts.jobs));
                    verdict = verdict && report.holds;
                    reports.push_back(to_json(report));
                }
                doc = Json{{"claim", claim}, {"grid", to_json(grid)}, {"verdict", verdict},
                           {"reports", reports}};
            } else {
                throw std::domain_error("unknown claim: " + claim);
            }
            if (!verdict) throw ClaimFailed{};
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help() << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        action();
        emit(doc, opts, out);
        return 0;
    } catch (const ClaimFailed&) {
        emit(doc, opts, out);
        return 1;
    } catch (const std::exception& e) {
        Json error{{"error", Json{{"kind", "domain"}, {"message", e.what()}}}};
        emit(error, opts, out);
        return 1;
    }
}

}  // namespace capax::cli
