#pragma once

#include "verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdlib>
#include <deque>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace klab::cli {

using json = nlohmann::ordered_json;

struct run_config {
    std::string side = "classical";
    std::string type = "a";
    std::string pair;
    std::string lambda;
    bool lambda_given = false;
    int ell = 1;
    std::optional<int> m;
    int k = 1;
    std::optional<int> k_max;
    int depth = 4;
    int vars = 4;
    int size = 3;
    int samples = 500;
    std::uint64_t seed = 1;
    std::string format = "json";
    std::string output;
    int threads = 0;
    bool timing = false;
};

// usage errors map to exit status 2
struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// JSON forms

inline json weight_json(const weight& mu) {
    json coords = json::object();
    for (const auto& [r, v] : mu.coords()) coords[r.str()] = v;
    return {{"coords", coords}, {"level", to_string(mu.level())}};
}

inline json terms_json(const series& s) {
    json terms = json::array();
    for (const auto& [m, c] : s.sorted_terms()) terms.push_back({{"m", monomial_json(m)}, {"c", c.str()}});
    return terms;
}

inline json series_json(const series& s) {
    json j;
    j["exponent_unit"] = "1/2";
    j["truncation"] = {{"vars", s.trunc().vars}, {"depth", s.trunc().depth}};
    j["terms"] = terms_json(s);
    return j;
}

// ---------------------------------------------------------------------------
// table forms

inline std::string series_table(const series& s) {
    std::ostringstream os;
    os << "# vars " << s.trunc().vars << ", depth " << s.trunc().depth << ", " << s.size() << " terms\n";
    for (const auto& [m, c] : s.sorted_terms()) os << c.str() << "\t" << m.str() << "\n";
    return os.str();
}

inline std::string report_table(const character_report& r) {
    std::ostringstream os;
    os << r.identity << ": " << (r.pass ? "PASS" : "FAIL") << "\n";
    for (const auto& [k, v] : r.params.items()) os << "  " << k << " = " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    if (r.first)
        os << "  first discrepancy at " << r.first->where.str() << ": lhs " << r.first->lhs.str() << ", rhs "
           << r.first->rhs.str() << "\n";
    if (r.extra.contains("note")) os << "  note: " << r.extra["note"].get<std::string>() << "\n";
    if (r.extra.contains("failure")) os << "  failure: " << r.extra["failure"].get<std::string>() << "\n";
    if (r.timing_ms) os << "  timing_ms = " << *r.timing_ms << "\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// config resolution

inline int thread_count(const run_config& cfg) {
    if (const char* env = std::getenv("KLAB_THREADS")) {
        try {
            int n = std::stoi(env);
            if (n > 0) return n;
        } catch (const std::exception&) {
        }
        throw usage_error("KLAB_THREADS must be a positive integer");
    }
    return cfg.threads > 0 ? cfg.threads : default_threads();
}

inline dual_pair resolve_pair(const run_config& cfg) {
    try {
        if (!cfg.pair.empty()) {
            dual_pair p = dual_pair::parse(cfg.pair, 1);
            if (p.kind == pair_kind::d_even || p.kind == pair_kind::d_odd) {
                if (cfg.m) {
                    if ((*cfg.m % 2 == 1) != (p.kind == pair_kind::d_odd))
                        throw usage_error("--m does not match the parity of " + cfg.pair);
                    p.ell = *cfg.m / 2;
                } else {
                    p.ell = cfg.ell;
                }
            } else {
                p.ell = cfg.ell;
            }
            if (p.ell < 1) throw usage_error("the pair needs at least one copy of the Fock space");
            return p;
        }
        const side s = parse_side(cfg.side);
        const lie_type t = parse_type(cfg.type);
        if (t == lie_type::d && !cfg.m) throw usage_error("type d needs --m");
        return dual_pair::for_type(s, t, t == lie_type::d ? *cfg.m : cfg.ell);
    } catch (const usage_error&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw usage_error(e.what());
    }
}

inline label resolve_label(const dual_pair& p, const std::string& text) {
    try {
        if (p.kind == pair_kind::a) return generalized_partition::parse(text, p.ell).parts();
        partition la = partition::parse(text);
        if (p.kind == pair_kind::d_even || p.kind == pair_kind::d_odd) {
            if (!in_orthogonal_range(la, p.size()))
                throw usage_error("lambda = (" + la.str() + ") is not in P(O(" + std::to_string(p.size()) + "))");
        } else if (la.length() > p.ell) {
            throw usage_error("lambda = (" + la.str() + ") is longer than ell = " + std::to_string(p.ell));
        }
        return la.parts();
    } catch (const usage_error&) {
        throw;
    } catch (const std::exception& e) {
        throw usage_error(std::string("bad --lambda '") + text + "': " + e.what());
    }
}

inline truncation resolve_truncation(const run_config& cfg) {
    if (cfg.vars < 1) throw usage_error("--vars must be >= 1");
    if (cfg.depth < 0) throw usage_error("--depth must be >= 0");
    return {cfg.vars, cfg.depth};
}

// ---------------------------------------------------------------------------
// commands; each returns the text to emit and the exit status

struct outcome {
    std::string text;
    int status = 0;
};

inline outcome emit_report(const run_config& cfg, const character_report& r) {
    if (cfg.format == "table") return {report_table(r), r.pass ? 0 : 1};
    return {to_json(r).dump(2) + "\n", r.pass ? 0 : 1};
}

inline outcome emit_series(const run_config& cfg, const series& s, json header) {
    if (cfg.format == "table") {
        std::string head;
        for (const auto& [k, v] : header.items()) head += "# " + k + " " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
        return {head + series_table(s), 0};
    }
    json j = std::move(header);
    const json body = series_json(s);
    for (const auto& [k, v] : body.items()) j[k] = v;
    return {j.dump(2) + "\n", 0};
}

inline outcome cmd_enumerate(const run_config& cfg) {
    const lie_type t = parse_type(cfg.type);
    const int k_max = cfg.k_max.value_or(cfg.k);
    if (k_max < 0) throw usage_error("--k must be >= 0");
    std::optional<weight> top;
    if (cfg.lambda_given) {
        run_config c = cfg;
        c.side = "classical";
        const dual_pair p = resolve_pair(c);
        top = classical_highest_weight(p, resolve_label(p, cfg.lambda));
    }
    const auto levels = enumerate_w0(t, k_max);
    json j;
    j["type"] = to_string(t);
    j["k_max"] = k_max;
    json counts = json::array();
    for (const auto& l : levels) counts.push_back(l.size());
    j["counts"] = counts;
    if (top) j["highest_weight"] = weight_json(*top);
    json reps = json::array();
    std::ostringstream table;
    table << "# type " << to_string(t) << ", counts";
    for (const auto& l : levels) table << " " << l.size();
    table << "\n";
    for (const auto& l : levels) {
        for (const auto& w : l) {
            json e;
            e["word"] = w.word;
            e["length"] = w.length();
            table << w.length() << "\t";
            for (std::size_t i = 0; i < w.word.size(); ++i) table << (i ? " " : "") << "s" << w.word[i];
            if (w.word.empty()) table << "e";
            if (top) {
                const weight mu = dot_action(w, *top);
                const auto pp = extract_partitions(mu);
                e["weight"] = weight_json(mu);
                e["blocks"] = {{"plus", pp.plus.str()}, {"minus", pp.minus.str()}};
                table << "\t" << mu.str();
            }
            table << "\n";
            reps.push_back(e);
        }
    }
    j["cosets"] = reps;
    if (cfg.format == "table") return {table.str(), 0};
    return {j.dump(2) + "\n", 0};
}

inline json pair_header(const dual_pair& p) {
    json h;
    h["pair"] = p.name();
    h[p.kind == pair_kind::d_even || p.kind == pair_kind::d_odd ? "m" : "ell"] = p.size();
    return h;
}

inline outcome cmd_fock(const run_config& cfg) {
    const dual_pair p = resolve_pair(cfg);
    return emit_series(cfg, fock_char(p, resolve_truncation(cfg)), pair_header(p));
}

inline outcome cmd_character(const run_config& cfg) {
    const dual_pair p = resolve_pair(cfg);
    const label lab = resolve_label(p, cfg.lambda);
    json h = pair_header(p);
    h["lambda"] = label_str(lab);
    return emit_series(cfg, irr_char_via_duality(p, lab, resolve_truncation(cfg)), h);
}

inline outcome cmd_homology(const run_config& cfg) {
    const dual_pair p = resolve_pair(cfg);
    const label lab = resolve_label(p, cfg.lambda);
    if (cfg.k < 0) throw usage_error("--k must be >= 0");
    json h = pair_header(p);
    h["lambda"] = label_str(lab);
    h["k"] = cfg.k;
    return emit_series(cfg, homology_char(p, lab, cfg.k, resolve_truncation(cfg)), h);
}

inline outcome cmd_decompose(const run_config& cfg) {
    const dual_pair p = resolve_pair(cfg);
    const truncation t = resolve_truncation(cfg);
    const character_table& table = cached_decomposition(p, t);
    if (cfg.format == "table") {
        std::ostringstream os;
        os << "# pair " << p.name() << ", size " << p.size() << ", " << table.entries.size() << " labels\n";
        for (const auto& [lab, s] : table.entries) os << "## lambda (" << label_str(lab) << ")\n" << series_table(s);
        return {os.str(), 0};
    }
    json j = pair_header(p);
    j["exponent_unit"] = "1/2";
    j["truncation"] = {{"vars", t.vars}, {"depth", t.depth}};
    json entries = json::array();
    for (const auto& [lab, s] : table.entries) entries.push_back({{"lambda", label_str(lab)}, {"terms", terms_json(s)}});
    j["entries"] = entries;
    return {j.dump(2) + "\n", 0};
}

inline outcome cmd_verify_ep(const run_config& cfg, bool force_negative) {
    run_config c = cfg;
    if (force_negative) {
        c.side = "negative";
        c.type = "a";
        c.pair.clear();
    }
    const dual_pair p = resolve_pair(c);
    ep_options opt;
    opt.k_max = cfg.k_max;
    opt.timing = cfg.timing;
    return emit_report(cfg, verify_euler_poincare(p, resolve_label(p, cfg.lambda), resolve_truncation(cfg), opt));
}

inline outcome cmd_verify_casimir(const run_config& cfg) {
    dual_pair p = resolve_pair(cfg);
    p.s = side::classical;
    return emit_report(cfg, verify_casimir(p, resolve_label(p, cfg.lambda), cfg.k_max.value_or(4), cfg.timing));
}

inline outcome cmd_verify_resolution(const run_config& cfg) {
    const dual_pair p = resolve_pair(cfg);
    if (p.s == side::classical) throw usage_error("resolution is checked on the super side or at negative level");
    return emit_report(cfg, verify_resolution(p, resolve_label(p, cfg.lambda), resolve_truncation(cfg), cfg.timing));
}

inline character_report combine(const std::string& identity, json params, std::vector<character_report> parts,
                                 std::optional<double> ms) {
    character_report r;
    r.identity = identity;
    r.params = std::move(params);
    r.pass = true;
    json comps = json::array();
    for (auto& p : parts) {
        if (!p.pass && r.pass && p.first) r.first = p.first;
        r.pass = r.pass && p.pass;
        comps.push_back(to_json(p));
    }
    r.extra["components"] = comps;
    r.timing_ms = ms;
    return r;
}

inline character_report theta_suite(const run_config& cfg) {
    stopwatch clock;
    std::vector<character_report> parts;
    parts.push_back(verify_theta_forms(cfg.size, cfg.timing));
    parts.push_back(verify_conjugation_forms(cfg.size, cfg.timing));
    parts.push_back(verify_aux111(std::min(cfg.size, 10), 3, cfg.timing));
    parts.push_back(verify_theta_highest_weights(std::min(cfg.size, 8)));
    parts.push_back(verify_casimir_transfer(cfg.seed, cfg.samples, cfg.timing));
    std::optional<double> ms;
    if (cfg.timing) ms = clock.ms();
    return combine("theta", {{"max_size", cfg.size}, {"seed", cfg.seed}, {"samples", cfg.samples}}, std::move(parts), ms);
}

// the full verification suite at the standard parameters
inline outcome cmd_verify_all(const run_config& cfg) {
    const int threads = thread_count(cfg);
    stopwatch clock;
    grid_options g;
    g.threads = threads;
    g.timing = cfg.timing;
    std::vector<character_report> reports;
    reports.push_back(verify_theta_forms(12, cfg.timing));
    reports.push_back(verify_conjugation_forms(12, cfg.timing));
    reports.push_back(verify_aux111(10, 3, cfg.timing));
    reports.push_back(verify_hook_duality(8, 3, cfg.timing, threads));
    reports.push_back(verify_super_cauchy(2, {4, 6}, cfg.timing));
    reports.push_back(verify_casimir_transfer(cfg.seed, 500, cfg.timing));
    reports.push_back(verify_theta_highest_weights(8));
    reports.push_back(verify_casimir_grid(g));
    reports.push_back(verify_ep_grid(side::classical, g));
    reports.push_back(verify_ep_grid(side::super, g));
    reports.push_back(verify_ep_grid(side::negative, g));
    reports.push_back(verify_resolution_grid({4, 3}, threads, cfg.timing));
    bool pass = true;
    for (const auto& r : reports) pass = pass && r.pass;
    if (cfg.format == "table") {
        std::string text;
        for (const auto& r : reports) text += report_table(r);
        text += std::string("suite: ") + (pass ? "PASS" : "FAIL") + "\n";
        return {text, pass ? 0 : 1};
    }
    json j;
    j["pass"] = pass;
    j["seed"] = cfg.seed;
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    j["reports"] = arr;
    if (cfg.timing) j["timing_ms"] = clock.ms();
    else j["timing_ms"] = nullptr;
    return {j.dump(2) + "\n", pass ? 0 : 1};
}

// ---------------------------------------------------------------------------

enum opt_set : unsigned {
    o_pair = 1u << 0,
    o_lambda = 1u << 1,
    o_trunc = 1u << 2,
    o_k = 1u << 3,
    o_kmax = 1u << 4,
    o_size = 1u << 5,
    o_seed = 1u << 6,
};

inline void add_options(CLI::App* sub, run_config& c, unsigned which) {
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "table"}))->capture_default_str();
    sub->add_option("--output,-o", c.output, "Write output to this file instead of stdout");
    sub->add_option("--threads", c.threads, "Worker threads (KLAB_THREADS overrides)");
    sub->add_flag("--timing", c.timing, "Report wall-clock timings");
    if (which & o_pair) {
        sub->add_option("--side", c.side, "classical | super | negative")->capture_default_str();
        sub->add_option("--type", c.type, "a | b | c | d")->capture_default_str();
        sub->add_option("--pair", c.pair, "Dual pair name, e.g. a-super, d-odd (overrides --side/--type)");
        sub->add_option("--ell", c.ell, "Number of Fock space copies")->capture_default_str();
        sub->add_option("--m", c.m, "m for the orthogonal groups O(m) (type d)");
    }
    if (which & o_lambda) {
        sub->add_option("--lambda", c.lambda, "Comma separated parts; \"\" is the empty partition")
            ->allow_extra_args(false)
            ->each([&c](const std::string&) { c.lambda_given = true; });
    }
    if (which & o_trunc) {
        sub->add_option("--depth", c.depth, "Maximal x-depth D")->capture_default_str();
        sub->add_option("--vars", c.vars, "x-variables kept per alphabet N")->capture_default_str();
    }
    if (which & o_k) sub->add_option("--k", c.k, "Homological degree")->capture_default_str();
    if (which & o_kmax) sub->add_option("--k-max", c.k_max, "Largest coset length to include");
    if (which & o_size) sub->add_option("--size", c.size, "Largest |lambda|")->capture_default_str();
    if (which & o_seed) {
        sub->add_option("--seed", c.seed, "Seed for randomized checks")->capture_default_str();
        sub->add_option("--samples", c.samples, "Random samples per type")->capture_default_str();
    }
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"klab: u_- homology characters of infinite rank Lie (super)algebras"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Expand all help");

    std::deque<run_config> configs;
    std::function<outcome()> action;
    auto command = [&](CLI::App* parent, const std::string& name, const std::string& desc, unsigned which,
                       std::function<outcome(const run_config&)> f, std::function<void(run_config&)> defaults = {}) {
        CLI::App* sub = parent->add_subcommand(name, desc);
        run_config& c = configs.emplace_back();
        if (defaults) defaults(c);
        add_options(sub, c, which);
        sub->callback([&action, &c, f] { action = [&c, f] { return f(c); }; });
        return sub;
    };

    command(&app, "enumerate", "Minimal length coset representatives by length", o_pair | o_lambda | o_k | o_kmax,
            cmd_enumerate, [](run_config& c) { c.k = 3; });
    command(&app, "fock", "Fock space character", o_pair | o_trunc, cmd_fock);
    command(&app, "character", "Irreducible character extracted from the Fock space", o_pair | o_lambda | o_trunc,
            cmd_character);
    command(&app, "homology", "Character of H_k", o_pair | o_lambda | o_trunc | o_k, cmd_homology);
    command(&app, "decompose", "Fock space character as a sum over the dual group", o_pair | o_trunc, cmd_decompose);

    CLI::App* verify = app.add_subcommand("verify", "Run a verifier and print a report");
    verify->require_subcommand(1);
    command(verify, "ep", "Euler-Poincare character identity", o_pair | o_lambda | o_trunc | o_kmax,
            [](const run_config& c) { return cmd_verify_ep(c, false); });
    command(verify, "negative", "Euler-Poincare identity at negative level (type a)", o_pair | o_lambda | o_trunc | o_kmax,
            [](const run_config& c) { return cmd_verify_ep(c, true); });
    command(verify, "casimir", "Casimir eigenvalues along the dot orbit", o_pair | o_lambda | o_kmax, cmd_verify_casimir);
    command(verify, "resolution", "Euler characteristic of the Verma flag", o_pair | o_lambda | o_trunc,
            cmd_verify_resolution, [](run_config& c) { c.side = "super"; c.depth = 3; });
    command(verify, "hooksym", "Hook Schur duality under conjugation", o_size,
            [](const run_config& c) {
                return emit_report(c, verify_hook_duality(c.size, c.vars, c.timing, thread_count(c)));
            },
            [](run_config& c) { c.size = 8; c.vars = 3; })
        ->add_option("--vars", configs.back().vars, "Variables per alphabet")
        ->capture_default_str();
    command(verify, "cauchy", "Supersymmetric Cauchy identity", o_trunc | o_pair,
            [](const run_config& c) { return emit_report(c, verify_super_cauchy(c.ell, resolve_truncation(c), c.timing)); },
            [](run_config& c) { c.ell = 2; c.depth = 6; });
    command(verify, "theta", "Quadratic forms under theta, theta on highest weights, Casimir transfer", o_size | o_seed,
            [](const run_config& c) { return emit_report(c, theta_suite(c)); }, [](run_config& c) { c.size = 12; });
    command(verify, "all", "The full verification suite", o_seed, cmd_verify_all);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        // help for the innermost subcommand that was named
        const CLI::App* target = &app;
        while (true) {
            auto subs = target->get_subcommands();
            if (subs.empty()) break;
            target = subs.front();
        }
        err << target->help();
        return 2;
    }
    if (!action) {
        err << app.help();
        return 2;
    }

    outcome o;
    try {
        o = action();
    } catch (const usage_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "failure: " << e.what() << "\n";
        return 1;
    }

    const run_config* used = nullptr;
    for (const auto& c : configs)
        if (!c.output.empty()) used = &c;
    if (used) {
        std::ofstream f(used->output, std::ios::binary);
        if (!f) {
            err << "error: cannot write " << used->output << "\n";
            return 2;
        }
        f << o.text;
    } else {
        out << o.text;
    }
    return o.status;
}

}  // namespace klab::cli
