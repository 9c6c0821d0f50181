#include "secint/cli.hpp"

#include "secint/bn_core.hpp"
#include "secint/counting.hpp"
#include "secint/errors.hpp"
#include "secint/lls.hpp"
#include "secint/secant_oracle.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

namespace secint::cli {

using json_io::Json;

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        auto pos = text.find(sep, start);
        parts.emplace_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos)
            return parts;
        start = pos + 1;
    }
}

std::string trim(std::string s) {
    auto not_space = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
    return s;
}

// "r,d"
std::pair<Integer, Integer> parse_rd(const std::string& text, const char* what) {
    auto parts = split(text, ',');
    if (parts.size() != 2)
        throw InvalidArgument(std::string(what) + " must be given as R,D, got '" + text + "'");
    return {parse_integer(trim(parts[0])), parse_integer(trim(parts[1]))};
}

// "c0,c1,...;c0,c1,..." with coefficients in increasing degree.
std::vector<Polynomial> parse_basis(const std::string& text) {
    std::vector<Polynomial> basis;
    for (const auto& poly : split(text, ';')) {
        std::vector<Rational> coeffs;
        for (const auto& c : split(poly, ','))
            coeffs.push_back(parse_rational(trim(c)));
        basis.emplace_back(std::move(coeffs));
    }
    return basis;
}

// "p:m,p:m"; a bare point has multiplicity 1.
MultiDivisor parse_divisor(const std::string& text) {
    std::vector<Rational> points;
    std::vector<unsigned long> mults;
    for (const auto& item : split(text, ',')) {
        auto pm = split(item, ':');
        if (pm.size() > 2)
            throw InvalidArgument("divisor entries look like POINT[:MULT], got '" + item + "'");
        points.push_back(parse_rational(trim(pm[0])));
        mults.push_back(pm.size() == 2 ? to_ulong(parse_integer(trim(pm[1])), "multiplicity") : 1UL);
    }
    return MultiDivisor::make(std::move(points), std::move(mults));
}

Json rational_row(const std::vector<Rational>& row) {
    Json out = Json::array();
    for (const auto& x : row)
        out.push_back(json_io::rational(x));
    return out;
}

Json series_params_json(const SeriesParams& l) {
    return Json{{"g", json_io::integer(l.g())}, {"r", json_io::integer(l.r())}, {"d", json_io::integer(l.d())}};
}

ConstraintFlags parse_flags(const std::vector<std::string>& ids) {
    ConstraintFlags flags = ConstraintFlags::none();
    for (const auto& id : ids) {
        auto c = parse_constraint_id(trim(id));
        if (!c)
            throw InvalidArgument("unknown constraint id '" + id + "'");
        flags = flags.with(*c);
    }
    return flags;
}

IntRange parse_range(const Json& doc, const char* key) {
    if (!doc.contains(key))
        throw InvalidArgument(std::string("sweep config is missing '") + key + "'");
    const Json& v = doc.at(key);
    auto as_integer = [&](const Json& x) -> Integer {
        if (!x.is_number_integer())
            throw InvalidArgument(std::string("sweep range '") + key + "' must hold integers");
        return x.is_number_unsigned() ? Integer(x.get<std::uint64_t>()) : Integer(x.get<std::int64_t>());
    };
    IntRange r;
    if (v.is_array() && v.size() == 2) {
        r.lo = as_integer(v[0]);
        r.hi = as_integer(v[1]);
    } else if (v.is_number_integer()) {
        r.lo = r.hi = as_integer(v);
    } else {
        throw InvalidArgument(std::string("sweep range '") + key + "' must be [lo, hi] or a single integer");
    }
    if (sgn(r.lo) < 0)
        throw InvalidArgument(std::string("sweep range '") + key + "' must be nonnegative");
    if (r.lo > r.hi)
        throw InvalidArgument(std::string("sweep range '") + key + "' is empty");
    return r;
}

void emit(const std::string& text, const std::optional<std::string>& out_path, std::ostream& out) {
    if (!out_path) {
        out << text << '\n';
        return;
    }
    std::ofstream file(*out_path, std::ios::binary);
    if (!file)
        throw InvalidArgument("cannot open output file '" + *out_path + "'");
    file << text << '\n';
}

} // namespace

std::string csv_escape(std::string_view field) {
    if (field.find_first_of(",\"\r\n") == std::string_view::npos)
        return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::uint64_t search_cap_from_env() {
    const char* raw = std::getenv("CERTIFIER_SEARCH_CAP");
    if (raw == nullptr || *raw == '\0')
        return kDefaultSearchCap;
    Integer cap = parse_integer(trim(raw));
    if (sgn(cap) <= 0 || !cap.fits_ulong_p())
        throw InvalidArgument(std::string("CERTIFIER_SEARCH_CAP must be a positive integer, got '") + raw + "'");
    return cap.get_ui();
}

SweepConfig parse_sweep_config(const Json& doc) {
    if (!doc.is_object())
        throw InvalidArgument("sweep config must be a JSON object");
    static const std::vector<std::string> known = {"g", "r1", "d1", "e", "f", "constraints", "format", "out", "threads"};
    for (const auto& [key, value] : doc.items())
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw InvalidArgument("unknown sweep config key '" + key + "'");
    SweepConfig c;
    c.g = parse_range(doc, "g");
    c.r1 = parse_range(doc, "r1");
    c.d1 = parse_range(doc, "d1");
    c.e = parse_range(doc, "e");
    c.f = parse_range(doc, "f");
    if (doc.contains("constraints")) {
        if (!doc["constraints"].is_array())
            throw InvalidArgument("'constraints' must be an array of constraint ids");
        std::vector<std::string> ids;
        for (const auto& id : doc["constraints"]) {
            if (!id.is_string() || !parse_constraint_id(id.get<std::string>()))
                throw InvalidArgument("unknown constraint id in sweep config: " + id.dump());
            ids.push_back(id.get<std::string>());
        }
        c.constraints = std::move(ids);
    }
    if (doc.contains("format")) {
        if (!doc["format"].is_string())
            throw InvalidArgument("'format' must be \"json\" or \"csv\"");
        c.format = doc["format"].get<std::string>();
    }
    if (c.format != "json" && c.format != "csv")
        throw InvalidArgument("'format' must be \"json\" or \"csv\", got '" + c.format + "'");
    if (doc.contains("out")) {
        if (!doc["out"].is_string())
            throw InvalidArgument("'out' must be a path string");
        c.out = doc["out"].get<std::string>();
    }
    if (doc.contains("threads")) {
        if (!doc["threads"].is_number_unsigned())
            throw InvalidArgument("'threads' must be a nonnegative integer");
        c.threads = doc["threads"].get<unsigned>();
    }
    return c;
}

SweepOutcome run_sweep(const SweepConfig& config, std::uint64_t search_cap) {
    std::vector<CertifierInstance> instances;
    SweepOutcome outcome;
    for (Integer g = config.g.lo; g <= config.g.hi; ++g)
        for (Integer r1 = config.r1.lo; r1 <= config.r1.hi; ++r1)
            for (Integer d1 = config.d1.lo; d1 <= config.d1.hi; ++d1)
                for (Integer e = config.e.lo; e <= config.e.hi; ++e)
                    for (Integer f = config.f.lo; f <= config.f.hi; ++f) {
                        try {
                            instances.push_back(CertifierInstance::make(g, r1, d1, e, f));
                        } catch (const PreconditionError&) {
                            ++outcome.skipped_invalid;
                        } catch (const InvalidArgument&) {
                            ++outcome.skipped_invalid;
                        }
                    }

    CertifyOptions options;
    options.search_cap = search_cap;
    if (config.constraints)
        options.constraints = parse_flags(*config.constraints);

    outcome.records.resize(instances.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> internal_error{false};
    auto worker = [&] {
        for (std::size_t i = next++; i < instances.size(); i = next++) {
            const auto& inst = instances[i];
            Json inputs{{"g", json_io::integer(inst.g())},
                        {"r1", json_io::integer(inst.r1())},
                        {"d1", json_io::integer(inst.d1())},
                        {"e", json_io::integer(inst.e())},
                        {"f", json_io::integer(inst.f())}};
            Json result;
            try {
                result = json_io::to_json(certify_empty(inst, options));
            } catch (const InternalError& ex) {
                internal_error = true;
                result = Json{{"error", ex.what()}, {"error_kind", "internal"}};
            } catch (const std::exception& ex) {
                result = Json{{"error", ex.what()}, {"error_kind", "runtime"}};
            }
            outcome.records[i] = json_io::record(std::move(inputs), std::move(result));
        }
    };
    unsigned threads = config.threads != 0 ? config.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, instances.size())));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < threads; ++t)
            pool.emplace_back(worker);
        worker();
    }
    outcome.internal_error = internal_error;
    return outcome;
}

std::string render_sweep(const SweepOutcome& outcome, std::string_view format) {
    if (format == "json")
        return json_io::dump(Json(outcome.records));
    std::ostringstream csv;
    csv << "g,r1,d1,e,f,status,reasons,constraints_used,survivor_count,witness_count,error\r\n";
    auto join = [](const Json& list) {
        std::string s;
        for (const auto& item : list) {
            if (!s.empty())
                s += ';';
            s += item.get<std::string>();
        }
        return s;
    };
    for (const auto& rec : outcome.records) {
        const Json& in = rec["inputs"];
        const Json& res = rec["result"];
        for (const char* key : {"g", "r1", "d1", "e", "f"})
            csv << json_io::dump(in[key], -1) << ',';
        if (res.contains("error")) {
            csv << ",,,,," << csv_escape(res["error"].get<std::string>()) << "\r\n";
            continue;
        }
        csv << csv_escape(res["status"].get<std::string>()) << ',' << csv_escape(join(res["reasons"])) << ','
            << csv_escape(join(res["constraints_used"])) << ',' << res["survivor_count"].dump() << ','
            << res["witnesses"].size() << ",\r\n";
    }
    return csv.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Enumerative counts and emptiness certificates for incidence and secant varieties on curves",
                 "secint"};
    app.require_subcommand(1);
    std::optional<std::string> out_path;
    app.add_option("--out", out_path, "Write the JSON/CSV document to FILE instead of standard output");

    std::string s1, s2, s3, s4, s5;

    auto* rho_cmd = app.add_subcommand("rho", "Brill-Noether number of a g^r_d");
    rho_cmd->fallthrough();
    rho_cmd->add_option("g", s1)->required();
    rho_cmd->add_option("r", s2)->required();
    rho_cmd->add_option("d", s3)->required();

    auto* residual_cmd = app.add_subcommand("residual", "Type of the residual series K - g^r_d");
    residual_cmd->fallthrough();
    residual_cmd->add_option("g", s1)->required();
    residual_cmd->add_option("r", s2)->required();
    residual_cmd->add_option("d", s3)->required();

    auto* expdim_cmd = app.add_subcommand("expdim", "Expected dimension of V_e^{e-f} for a series of dimension r");
    expdim_cmd->fallthrough();
    expdim_cmd->add_option("e", s1)->required();
    expdim_cmd->add_option("f", s2)->required();
    expdim_cmd->add_option("r", s3)->required();

    auto* count_cmd = app.add_subcommand("count", "Intersection counts of incidence varieties");
    count_cmd->fallthrough();
    count_cmd->require_subcommand(1);
    std::string opt_g, opt_l1, opt_l2, opt_e, opt_r1, opt_d1, opt_d2;
    auto* incidence_cmd = count_cmd->add_subcommand("incidence", "Coefficient extraction from the generating function");
    auto* chow_cmd = count_cmd->add_subcommand("chow", "Product of incidence classes on C_e");
    for (auto* sub : {incidence_cmd, chow_cmd}) {
        sub->fallthrough();
        sub->add_option("--g", opt_g, "Genus")->required();
        sub->add_option("--l1", opt_l1, "First series as R,D")->required();
        sub->add_option("--l2", opt_l2, "Second series as R,D")->required();
        sub->add_option("--e", opt_e, "Divisor degree (default r1+r2)");
    }
    auto* severi_cmd = count_cmd->add_subcommand("severi", "Divisors common to a g^r1_d1 and a pencil of degree d2");
    severi_cmd->fallthrough();
    severi_cmd->add_option("--g", opt_g)->required();
    severi_cmd->add_option("--r1", opt_r1)->required();
    severi_cmd->add_option("--d1", opt_d1)->required();
    severi_cmd->add_option("--d2", opt_d2)->required();
    auto* adjunction_cmd = count_cmd->add_subcommand("adjunction", "Nodes of a bidegree (d1,d2) curve on P1 x P1");
    adjunction_cmd->fallthrough();
    adjunction_cmd->add_option("--g", opt_g)->required();
    adjunction_cmd->add_option("--d1", opt_d1)->required();
    adjunction_cmd->add_option("--d2", opt_d2)->required();

    auto* certify_cmd = app.add_subcommand("certify", "Certify Gamma_e(l1) ∩ V_e^{e-f}(K - l1) empty");
    certify_cmd->fallthrough();
    certify_cmd->add_option("g", s1)->required();
    certify_cmd->add_option("r1", s2)->required();
    certify_cmd->add_option("d1", s3)->required();
    certify_cmd->add_option("e", s4)->required();
    certify_cmd->add_option("f", s5)->required();
    std::optional<std::string> constraint_list;
    std::size_t witness_cap = kDefaultWitnessCap;
    certify_cmd->add_option("--constraints", constraint_list,
                            "Comma-separated constraint ids (C-ZERO,C-SUB,C-E,C-PLK-Y1,C-PLK-Y2,C-PLK-Z1,"
                            "C-PLK-Z2,C-ZSUB); defaults depend on f");
    certify_cmd->add_option("--witness-cap", witness_cap, "Maximum witnesses stored");

    auto* classify_cmd = app.add_subcommand("classify", "Zero Severi count: empty or positive-dimensional");
    classify_cmd->fallthrough();
    classify_cmd->add_option("g", s1)->required();
    classify_cmd->add_option("r1", s2)->required();
    classify_cmd->add_option("d1", s3)->required();
    bool not_bpf = false;
    classify_cmd->add_flag("--not-bpf", not_bpf, "The pencil l2 has base points");

    auto* counter_cmd = app.add_subcommand("counterexample", "Empty secant variety of expected dimension 0");
    counter_cmd->fallthrough();
    counter_cmd->add_option("d1", s1)->required();

    auto* oracle_cmd = app.add_subcommand("oracle", "Exact genus-0 checks");
    oracle_cmd->fallthrough();
    oracle_cmd->require_subcommand(1);
    std::string opt_basis, opt_divisor;
    unsigned long opt_degree = 0, opt_f = 0;
    auto* check_cmd = oracle_cmd->add_subcommand("check", "Rank test for D in V_e^{e-f}(l)");
    check_cmd->fallthrough();
    check_cmd->add_option("--degree", opt_degree, "Degree d of the series")->required();
    check_cmd->add_option("--basis", opt_basis, "Basis polynomials 'c0,c1,..;c0,..' (increasing degree)")->required();
    check_cmd->add_option("--divisor", opt_divisor, "Divisor 'p:m,p:m' with rational points")->required();
    check_cmd->add_option("--f", opt_f, "Failure index f")->required();
    auto* ram_cmd = oracle_cmd->add_subcommand("ramification", "Total ramification via the Wronskian");
    ram_cmd->fallthrough();
    ram_cmd->add_option("--degree", opt_degree)->required();
    ram_cmd->add_option("--basis", opt_basis)->required();

    auto* sweep_cmd = app.add_subcommand("sweep", "Certify every instance of a parameter grid");
    sweep_cmd->fallthrough();
    std::string config_path;
    sweep_cmd->add_option("--config", config_path, "JSON config file")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& ex) {
        err << "error: " << ex.what() << "\n\n" << app.help();
        return kInvalidArguments;
    }

    CLI::App* active = app.get_subcommands().front();
    try {
        std::uint64_t cap = search_cap_from_env();
        auto print = [&](Json inputs, Json result) {
            emit(json_io::dump(json_io::record(std::move(inputs), std::move(result))), out_path, out);
        };

        if (active == rho_cmd) {
            Integer g = parse_integer(s1), r = parse_integer(s2), d = parse_integer(s3);
            print({{"g", json_io::integer(g)}, {"r", json_io::integer(r)}, {"d", json_io::integer(d)}},
                  {{"rho", json_io::integer(rho(g, r, d))}});
        } else if (active == residual_cmd) {
            auto l = SeriesParams::make(parse_integer(s1), parse_integer(s2), parse_integer(s3));
            auto res = residual(l);
            print(series_params_json(l), {{"residual", series_params_json(res)}, {"rho", json_io::integer(res.rho())}});
        } else if (active == expdim_cmd) {
            Integer e = parse_integer(s1), f = parse_integer(s2), r = parse_integer(s3);
            SecantParams::make(e, f);
            print({{"e", json_io::integer(e)}, {"f", json_io::integer(f)}, {"r", json_io::integer(r)}},
                  {{"expected_dim", json_io::integer(expected_dim_secant(e, f, r))}});
        } else if (active == count_cmd) {
            CLI::App* which = count_cmd->get_subcommands().front();
            if (which == incidence_cmd || which == chow_cmd) {
                Integer g = parse_integer(opt_g);
                auto [r1, d1] = parse_rd(opt_l1, "--l1");
                auto [r2, d2] = parse_rd(opt_l2, "--l2");
                auto l1 = SeriesParams::make(g, r1, d1);
                auto l2 = SeriesParams::make(g, r2, d2);
                auto inputs = opt_e.empty() ? CountInputs::make(g, l1, l2)
                                            : CountInputs::make(g, l1, l2, parse_integer(opt_e));
                Json in{{"g", json_io::integer(g)},
                        {"l1", series_params_json(l1)},
                        {"l2", series_params_json(l2)},
                        {"e", json_io::integer(inputs.e())}};
                if (which == incidence_cmd) {
                    print(std::move(in), {{"count", json_io::integer(incidence_count(inputs))}});
                } else {
                    auto c1 = gamma_class(g, r1, d1, inputs.e());
                    auto c2 = gamma_class(g, r2, d2, inputs.e());
                    print(std::move(in), {{"count", json_io::integer(chow_product_evaluate(c1, c2, g, inputs.e()))},
                                          {"gamma1", json_io::to_json(c1)},
                                          {"gamma2", json_io::to_json(c2)}});
                }
            } else if (which == severi_cmd) {
                Integer g = parse_integer(opt_g), r1 = parse_integer(opt_r1), d1 = parse_integer(opt_d1),
                        d2 = parse_integer(opt_d2);
                print({{"g", json_io::integer(g)},
                       {"r1", json_io::integer(r1)},
                       {"d1", json_io::integer(d1)},
                       {"d2", json_io::integer(d2)}},
                      {{"count", json_io::integer(severi_count(g, r1, d1, d2))}});
            } else {
                Integer g = parse_integer(opt_g), d1 = parse_integer(opt_d1), d2 = parse_integer(opt_d2);
                print({{"g", json_io::integer(g)}, {"d1", json_io::integer(d1)}, {"d2", json_io::integer(d2)}},
                      {{"count", json_io::integer(adjunction_nodes(g, d1, d2))}});
            }
        } else if (active == certify_cmd) {
            auto inst = CertifierInstance::make(parse_integer(s1), parse_integer(s2), parse_integer(s3),
                                                parse_integer(s4), parse_integer(s5));
            CertifyOptions options;
            options.search_cap = cap;
            options.witness_cap = witness_cap;
            Json in{{"g", json_io::integer(inst.g())},
                    {"r1", json_io::integer(inst.r1())},
                    {"d1", json_io::integer(inst.d1())},
                    {"e", json_io::integer(inst.e())},
                    {"f", json_io::integer(inst.f())}};
            if (constraint_list) {
                options.constraints = parse_flags(split(*constraint_list, ','));
                in["constraints"] = split(*constraint_list, ',');
            }
            auto cert = certify_empty(inst, options);
            print(std::move(in), json_io::to_json(cert));
            return cert.status == CertificateStatus::NotApplicable ? kNotApplicable : kOk;
        } else if (active == classify_cmd) {
            Integer g = parse_integer(s1), r1 = parse_integer(s2), d1 = parse_integer(s3);
            auto cert = classify_incidence_zero(g, r1, d1, !not_bpf);
            print({{"g", json_io::integer(g)},
                   {"r1", json_io::integer(r1)},
                   {"d1", json_io::integer(d1)},
                   {"l2_base_point_free", !not_bpf}},
                  json_io::to_json(cert));
        } else if (active == counter_cmd) {
            Integer d1 = parse_integer(s1);
            print({{"d1", json_io::integer(d1)}}, json_io::to_json(remark_counterexample_report(d1)));
        } else if (active == oracle_cmd) {
            CLI::App* which = oracle_cmd->get_subcommands().front();
            auto series = RationalSeries::make(opt_degree, parse_basis(opt_basis));
            Json in{{"degree", opt_degree}, {"basis", opt_basis}};
            if (which == check_cmd) {
                auto divisor = parse_divisor(opt_divisor);
                auto matrix = secant_matrix(series, divisor);
                Json rows = Json::array();
                for (const auto& row : matrix)
                    rows.push_back(rational_row(row));
                in["divisor"] = opt_divisor;
                in["f"] = opt_f;
                print(std::move(in), {{"e", divisor.degree()},
                                      {"r", series.r()},
                                      {"rank", exact_rank(matrix)},
                                      {"is_secant", is_secant_divisor(series, divisor, opt_f)},
                                      {"matrix", rows}});
            } else {
                auto w = wronskian(series);
                unsigned long at_infinity = ramification_weight_at_infinity(series);
                print(std::move(in), {{"wronskian", rational_row(w.coefficients())},
                                      {"finite_weight", w.degree()},
                                      {"infinity_weight", at_infinity},
                                      {"total", ramification_weight_total(series)},
                                      {"plucker_total", json_io::integer(plucker_total(0, series.r(), series.d()))}});
            }
        } else if (active == sweep_cmd) {
            std::ifstream file(config_path);
            if (!file)
                throw InvalidArgument("cannot read sweep config '" + config_path + "'");
            Json doc;
            try {
                doc = Json::parse(file);
            } catch (const Json::parse_error& ex) {
                throw InvalidArgument(std::string("sweep config is not valid JSON: ") + ex.what());
            }
            auto config = parse_sweep_config(doc);
            auto outcome = run_sweep(config, cap);
            if (outcome.skipped_invalid > 0)
                err << "note: skipped " << outcome.skipped_invalid << " grid points that are not valid instances\n";
            std::string text = render_sweep(outcome, config.format);
            if (config.format == "csv" && !text.empty())
                text.pop_back(), text.pop_back(); // emit() appends the final newline
            emit(text, out_path ? out_path : config.out, out);
            return outcome.internal_error ? kInternalError : kOk;
        }
        return kOk;
    } catch (const InternalError& ex) {
        err << "internal error: " << ex.what() << '\n';
        return kInternalError;
    } catch (const SearchSpaceTooLarge& ex) {
        err << "error: " << ex.what() << " (raise CERTIFIER_SEARCH_CAP to allow it)\n";
        return kFailure;
    } catch (const Error& ex) {
        err << "error: " << ex.what() << "\n\n" << active->help();
        return kInvalidArguments;
    }
}

} // namespace secint::cli
