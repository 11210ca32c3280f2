#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "symcanon/io.hpp"

namespace symcanon::cli {

namespace {

struct Flags {
    std::optional<std::string> field;
    std::optional<std::uint64_t> seed;
    std::optional<int> degree_budget;
    std::optional<long> pair_budget;
    std::optional<int> parallelism;
    int verbose = 0;
    std::string config_path;
    std::string format = "text";
};

long parse_long(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        long v = std::stol(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw ContractError(what + ": expected an integer, got \"" + text + "\"");
    }
}

void apply_json_config(Config& c, const Json& j, const std::string& src) {
    if (!j.is_object()) throw ContractError(src + ": config must be a JSON object");
    auto integer = [&](const char* key) {
        const Json& v = j.at(key);
        if (!v.is_number_integer()) throw ContractError(src + ": \"" + key + "\" must be an integer");
        return v.get<long long>();
    };
    for (const auto& [key, value] : j.items()) {
        if (key == "field") {
            if (!value.is_string()) throw ContractError(src + ": \"field\" must be a string");
            c.field = FieldSpec::parse(value.get<std::string>());
        } else if (key == "seed") {
            c.seed = static_cast<std::uint64_t>(integer("seed"));
        } else if (key == "degree_budget") {
            c.degree_budget = static_cast<int>(integer("degree_budget"));
        } else if (key == "pair_budget") {
            c.pair_budget = static_cast<long>(integer("pair_budget"));
        } else if (key == "parallelism") {
            c.parallelism = static_cast<int>(integer("parallelism"));
        } else if (key == "verbosity") {
            c.verbosity = static_cast<int>(integer("verbosity"));
        } else {
            throw ContractError(src + ": unknown key \"" + key + "\"");
        }
    }
}

std::optional<std::string> config_file_path(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* e = std::getenv("SYMCANON_CONFIG")) return std::string(e);
    std::filesystem::path p;
    if (const char* x = std::getenv("XDG_CONFIG_HOME"); x && *x) p = std::filesystem::path(x) / "symcanon" / "config.json";
    else if (const char* h = std::getenv("HOME"); h && *h) p = std::filesystem::path(h) / ".config" / "symcanon" / "config.json";
    if (!p.empty() && std::filesystem::exists(p)) return p.string();
    return std::nullopt;
}

Config resolve_config(const Flags& f) {
    Config c;
    if (auto path = config_file_path(f.config_path)) apply_json_config(c, parse_json(read_text(*path), *path), *path);
    auto env = [](const char* name) -> std::optional<std::string> {
        const char* v = std::getenv(name);
        if (!v || !*v) return std::nullopt;
        return std::string(v);
    };
    if (auto v = env("SYMCANON_FIELD")) c.field = FieldSpec::parse(*v);
    if (auto v = env("SYMCANON_SEED")) c.seed = static_cast<std::uint64_t>(parse_long(*v, "SYMCANON_SEED"));
    if (auto v = env("SYMCANON_DEGREE_BUDGET")) c.degree_budget = static_cast<int>(parse_long(*v, "SYMCANON_DEGREE_BUDGET"));
    if (auto v = env("SYMCANON_PAIR_BUDGET")) c.pair_budget = parse_long(*v, "SYMCANON_PAIR_BUDGET");
    if (auto v = env("SYMCANON_PARALLELISM")) c.parallelism = static_cast<int>(parse_long(*v, "SYMCANON_PARALLELISM"));
    if (auto v = env("SYMCANON_VERBOSITY")) c.verbosity = static_cast<int>(parse_long(*v, "SYMCANON_VERBOSITY"));
    if (f.field) c.field = FieldSpec::parse(*f.field);
    if (f.seed) c.seed = *f.seed;
    if (f.degree_budget) c.degree_budget = *f.degree_budget;
    if (f.pair_budget) c.pair_budget = *f.pair_budget;
    if (f.parallelism) c.parallelism = *f.parallelism;
    if (f.verbose > 0) c.verbosity = f.verbose;
    if (c.degree_budget <= 0 || c.pair_budget <= 0) throw ContractError("budgets must be positive");
    if (c.parallelism <= 0) throw ContractError("parallelism must be positive");
    if (c.field.is_prime_field() && c.field.characteristic() == 2) throw ContractError("characteristic 2 is not supported");
    return c;
}

ReportFormat report_format(const std::string& s) {
    if (s == "text") return ReportFormat::text;
    if (s == "json") return ReportFormat::json;
    throw ContractError("unknown format \"" + s + "\" (text or json)");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

/// Reads a tableau; an explicit field flag reduces rational input modulo p.
SymmetricTableau load_tableau(const std::string& path, const Flags& flags, const Config& cfg) {
    SymmetricTableau T = tableau_from_json(parse_json(read_text(path), path == "-" ? "stdin" : path));
    if (!flags.field || cfg.field == T.ring()->field()) return T;
    if (T.ring()->field().is_prime_field())
        throw ContractError("input is over " + T.ring()->field().to_string() + ", cannot change it to " + cfg.field.to_string());
    RingPtr R = PolyRing::make(T.ring()->variables(), cfg.field);
    auto conv = [&](const PolyMatrix& m) {
        PolyMatrix out = m;
        for (auto& row : out)
            for (auto& p : row) p = p.to_ring(R);
        return out;
    };
    return SymmetricTableau(R, conv(T.alpha()), conv(T.beta()), T.relaxed());
}

class Timer {
public:
    Timer(const Config& c, std::string what) : on_(c.verbosity > 0), what_(std::move(what)), t0_(std::chrono::steady_clock::now()) {}
    ~Timer() {
        if (!on_) return;
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
        std::cerr << what_ << ": " << s << " s\n";
    }

private:
    bool on_;
    std::string what_;
    std::chrono::steady_clock::time_point t0_;
};

int cmd_generate(const Flags& flags, const Config& cfg, int k2, const std::string& out, const std::string& params) {
    Timer t(cfg, "generate");
    if (k2 == 11) {
        ParameterPoint p = sample(cfg.seed, cfg.field);
        SymmetricTableau T = realize(p);
        if (!params.empty()) write_text(params, dump(params_to_json(p)));
        write_text(out, dump(tableau_to_json(T)));
        return 0;
    }
    if (k2 == 10) {
        if (!params.empty()) throw ContractError("--params is only defined for --k2 11");
        write_text(out, dump(tableau_to_json(sample_k10(cfg.seed, cfg.field))));
        return 0;
    }
    (void)flags;
    throw ContractError("generate supports --k2 10 and --k2 11");
}

int cmd_verify(const Flags& flags, const Config& cfg, const std::string& in, const std::string& report) {
    SymmetricTableau T = load_tableau(in, flags, cfg);
    Timer t(cfg, "verify");
    VerificationReport r = verify_instance(T, VerifyOptions{cfg.parallelism});
    if (!report.empty()) write_text(report, render_report(r, ReportFormat::json));
    std::cout << render_report(r, report_format(flags.format));
    return r.overall ? 0 : 1;
}

int cmd_reduce(const Flags& flags, const Config& cfg, int k2, const std::string& in, const std::string& out,
               const std::string& witness) {
    if (k2 != 11) throw ContractError("normal forms are only available for --k2 11");
    SymmetricTableau T = load_tableau(in, flags, cfg);
    Timer t(cfg, "reduce");
    NormalFormK11 nf = reduce_k11(T);
    if (!witness.empty()) {
        Json rows = Json::array();
        for (const auto& c : nf.generalized_rows) {
            Json r = Json::array();
            for (const auto& x : c) r.push_back(T.ring()->field().printable(x).get_str());
            rows.push_back(r);
        }
        write_text(witness, dump(Json{{"moves", moves_to_json(nf.witness_moves)}, {"generalized_rows", rows}}));
    }
    write_text(out, dump(tableau_to_json(nf.tableau)));
    return verify_normal_shape(nf.tableau).ok ? 0 : 1;
}

int cmd_koszul(const Flags& flags, const Config& cfg, const std::string& in, const std::string& out, const std::string& cert_path,
               int budget) {
    SymmetricTableau T = load_tableau(in, flags, cfg);
    Timer t(cfg, "koszul-type");
    BaseChangeCert cert = make_koszul_type(T, cfg.seed, budget);
    std::string why;
    bool ok = verify_certificate(T, cert, &why);
    if (!ok) std::cerr << "certificate does not verify: " << why << "\n";
    if (!cert_path.empty()) write_text(cert_path, dump(cert_to_json(cert)));
    write_text(out, dump(tableau_to_json(cert.output)));
    return ok ? 0 : 1;
}

int cmd_fitting(const Flags& flags, const Config& cfg, const std::string& in, const std::string& out, int k,
                const std::string& which, bool sat) {
    SymmetricTableau T = load_tableau(in, flags, cfg);
    Timer t(cfg, "fitting");
    PolyMatrix M;
    if (which == "A") M = T.matrix();
    else if (which == "A'" || which == "Aprime") M = erase_first_row(T);
    else throw ContractError("--matrix must be A or Aprime");
    if (k <= 0) k = static_cast<int>(M.size());
    Ideal I = fitting_ideal(M, k, T.ring());
    if (sat) I = saturate(I);
    Json j{{"matrix", which}, {"k", k}, {"saturated", sat}, {"ideal", ideal_to_json(I)}, {"codim", codim(I)}};
    if (sat && dimension(I) == 1) j["degree"] = multiplicity(I);
    write_text(out, dump(j));
    return 0;
}

int cmd_invariants(const Flags& flags, const Config& cfg, const std::string& in, int n) {
    SurfaceInvariants s;
    if (!in.empty()) s = invariants(build_resolution(load_tableau(in, flags, cfg)));
    else if (n >= 1) s = invariants(GradedShifts::canonical(n));
    else throw ContractError("invariants needs an input tableau or --n");
    if (flags.format == "json") {
        std::cout << dump(invariants_to_json(s));
    } else {
        std::cout << "n = " << s.n << "\np_g = " << s.p_g << "\nq = " << s.q << "\nK^2 = " << s.K2 << "\nchi = " << s.chi
                  << "\ndelta = " << s.delta << "\n";
    }
    return 0;
}

int cmd_multiply(const Flags& flags, const Config& cfg, const std::string& in, const std::string& out, int skip, bool agree) {
    SymmetricTableau T = load_tableau(in, flags, cfg);
    Timer t(cfg, "multiply");
    MultiplicationTable tab = multiplication_table(T, skip);
    bool assoc = check_associativity(tab);
    Json j = table_to_json(tab);
    j["associative"] = assoc;
    bool ok = assoc;
    if (agree) {
        bool same = tables_agree(tab, multiplication_table(T, skip + 1));
        j["submatrix_independent"] = same;
        ok = ok && same;
    }
    write_text(out, dump(j));
    return ok ? 0 : 1;
}

int cmd_ledger(const Flags& flags, const Config& cfg) {
    DimensionLedger l = ledger(cfg.seed, cfg.field.is_prime_field() ? cfg.field : FieldSpec::prime(32003));
    if (flags.format == "json") {
        std::cout << dump(ledger_to_json(l));
    } else {
        std::cout << "dim P                 " << l.dim_P << "\n"
                  << "- dim ker(d1)_4       " << l.ker_d1 << "\n"
                  << "- dim ker(d1')_4      " << l.ker_d1_prime << "\n"
                  << "- dim ker(D1)_3       " << l.ker_D1 << "\n"
                  << "- dim ker(D1')_3      " << l.ker_D1_prime << "\n"
                  << "- dim G               " << l.dim_G << "\n"
                  << "- dim H               " << l.dim_H << "\n"
                  << "- dim L               " << l.dim_L << "\n"
                  << "= " << l.result << "\n";
    }
    return l.result == 38 ? 0 : 1;
}

int cmd_check_generic(const Flags& flags, const Config& cfg, long p, int D, bool flip) {
    if (p <= 0) p = cfg.field.is_prime_field() ? cfg.field.characteristic() : 32003;
    Timer t(cfg, "check-generic");
    ReflexivityReport r = generic_reflexivity_check(static_cast<std::uint32_t>(p), D, flip);
    if (flags.format == "json") {
        std::cout << dump(reflexivity_to_json(r));
    } else {
        for (const auto& d : r.degrees)
            std::cout << "degree " << d.degree << ": kernel " << d.kernel_dim << ", image " << d.image_dim
                      << (d.exact ? ", exact" : ", NOT exact") << "\n";
        std::cout << "composite zero: " << (r.composite_zero ? "yes" : "no") << "\n"
                  << "OVERALL: " << (r.ok ? "PASS" : "FAIL") << "\n";
    }
    return r.ok ? 0 : 1;
}

}  // namespace

int run(int argc, char** argv) {
    CLI::App app{"Symmetric tableaux and canonical surfaces in P^4"};
    app.require_subcommand(1);
    Flags flags;
    std::string field;
    long long seed = 0;
    int degree_budget = 0, parallelism = 0;
    long pair_budget = 0;
    auto* o_field = app.add_option("--field", field, "q or p:<prime>");
    auto* o_seed = app.add_option("--seed", seed, "random seed");
    auto* o_deg = app.add_option("--degree-budget", degree_budget, "largest S-polynomial degree");
    auto* o_pair = app.add_option("--pair-budget", pair_budget, "largest number of critical pairs");
    auto* o_par = app.add_option("-j,--parallelism", parallelism, "worker count");
    app.add_flag("-v,--verbose", flags.verbose, "timings on standard error");
    app.add_option("--config", flags.config_path, "JSON config file");
    app.add_option("--format", flags.format, "text or json")->check(CLI::IsMember({"text", "json"}));

    std::string in, out = "-", report, witness, cert, params, which = "A";
    int k2 = 11, budget = 64, k = 0, n = 0, skip = 0, degree = 3;
    long p = 0;
    bool sat = false, agree = false, flip = false;

    auto* gen = app.add_subcommand("generate", "sample a tableau");
    gen->add_option("--k2", k2, "10 or 11");
    gen->add_option("-o,--output", out);
    gen->add_option("--params", params, "write the parameter point");

    auto* ver = app.add_subcommand("verify", "check the hypotheses on a tableau");
    ver->add_option("input", in)->required();
    ver->add_option("--report", report, "write the JSON report");

    auto* red = app.add_subcommand("reduce", "normal form of a K^2 = 11 tableau");
    red->add_option("input", in)->required();
    red->add_option("--k2", k2);
    red->add_option("-o,--output", out);
    red->add_option("--witness", witness, "write the moves");

    auto* kos = app.add_subcommand("koszul-type", "base change to Koszul module type");
    kos->add_option("input", in)->required();
    kos->add_option("-o,--output", out);
    kos->add_option("--cert", cert, "write the certificate");
    kos->add_option("--budget", budget, "trials per phase");

    auto* fit = app.add_subcommand("fitting", "Fitting ideal of A or A'");
    fit->add_option("input", in)->required();
    fit->add_option("-o,--output", out);
    fit->add_option("--k", k, "minor size, default the row count");
    fit->add_option("--matrix", which, "A or Aprime");
    fit->add_flag("--saturate", sat);

    auto* inv = app.add_subcommand("invariants", "numerical invariants");
    inv->add_option("input", in);
    inv->add_option("--n", n);

    auto* mul = app.add_subcommand("multiply", "multiplication table of the canonical ring");
    mul->add_option("input", in)->required();
    mul->add_option("-o,--output", out);
    mul->add_option("--skip", skip, "use a later invertible column block");
    mul->add_flag("--check-agree", agree, "compare with the next column block");

    app.add_subcommand("ledger", "moduli dimension count");

    auto* gen_check = app.add_subcommand("check-generic", "exactness of the generic reflexivity complex");
    gen_check->add_option("--p", p, "prime");
    gen_check->add_option("--degree", degree);
    gen_check->add_flag("--flip-sign", flip, "negative control");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (o_field->count()) flags.field = field;
        if (o_seed->count()) {
            if (seed < 0) throw ContractError("--seed must be nonnegative");
            flags.seed = static_cast<std::uint64_t>(seed);
        }
        if (o_deg->count()) flags.degree_budget = degree_budget;
        if (o_pair->count()) flags.pair_budget = pair_budget;
        if (o_par->count()) flags.parallelism = parallelism;
        Config cfg = resolve_config(flags);
        set_default_budget(GroebnerBudget{cfg.degree_budget, static_cast<std::size_t>(cfg.pair_budget)});
        report_format(flags.format);

        if (*gen) return cmd_generate(flags, cfg, k2, out, params);
        if (*ver) return cmd_verify(flags, cfg, in, report);
        if (*red) return cmd_reduce(flags, cfg, k2, in, out, witness);
        if (*kos) return cmd_koszul(flags, cfg, in, out, cert, budget);
        if (*fit) return cmd_fitting(flags, cfg, in, out, k, which, sat);
        if (*inv) return cmd_invariants(flags, cfg, in, n);
        if (*mul) return cmd_multiply(flags, cfg, in, out, skip, agree);
        if (app.got_subcommand("ledger")) return cmd_ledger(flags, cfg);
        if (*gen_check) return cmd_check_generic(flags, cfg, p, degree, flip);
        return 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return 3;
    } catch (const ContractError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace symcanon::cli
