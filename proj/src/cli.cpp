#include "skewcode/cli.hpp"

#include "skewcode/search.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace skewcode {

namespace {

using nlohmann::json;

/// Options shared by every leaf command. One leaf parses per run, so a single
/// instance can back them all.
struct Common {
    std::string format = "json";
    std::string out_path;
    bool compact = false;

    uint64_t q = 0;
    uint32_t theta_exp = 1;

    std::string strategy = "auto";
    uint64_t budget = 0;
    uint64_t divisor_budget = 0;
    uint32_t jobs = 1;
    uint64_t seed = 1;
    std::string gray = "hadamard";
};

void add_format(CLI::App* cmd, Common& c) {
    cmd->add_option("--format", c.format, "Report format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    cmd->add_option("--out", c.out_path, "Write the report to this file instead of stdout");
}

void add_field(CLI::App* cmd, Common& c, bool required = true) {
    auto* q = cmd->add_option("--q", c.q, "Field size, a prime power");
    if (required) q->required();
    cmd->add_option("--i", c.theta_exp, "Twist exponent: the automorphism a -> a^(p^i)")
        ->capture_default_str();
}

void add_distance(CLI::App* cmd, Common& c) {
    cmd->add_option("--strategy", c.strategy, "Distance strategy")
        ->check(CLI::IsMember({"auto", "enumerate", "column_dependence"}))
        ->capture_default_str();
    cmd->add_option("--budget", c.budget,
                    "Distance work budget (0 = default; the SKEWCODE_BUDGET "
                    "environment variable overrides the default)");
    cmd->add_option("--jobs", c.jobs, "Worker threads")->capture_default_str();
}

void add_compact(CLI::App* cmd, Common& c) {
    cmd->add_flag("--compact", c.compact,
                  "Read polynomials as compact descending-coefficient strings "
                  "instead of ascending comma lists");
}

void add_gray(CLI::App* cmd, Common& c) {
    cmd->add_option("--gray", c.gray,
                    "Pair transform: identity, hadamard, or four comma-separated "
                    "element tokens (row-major)")
        ->capture_default_str();
}

SkewPoly read_poly(const std::shared_ptr<const Field>& field, uint32_t theta_exp,
                   const std::string& text, bool compact, std::vector<std::string>& warnings) {
    if (!compact) return SkewPoly::parse(field, theta_exp, text);
    ParsedPoly parsed = parse_compact(field, theta_exp, text);
    warnings.insert(warnings.end(), parsed.warnings.begin(), parsed.warnings.end());
    return parsed.poly;
}

json base_config(const std::string& command, const Common& c) {
    json cfg;
    cfg["command"] = command;
    cfg["format"] = c.format;
    return cfg;
}

void echo_field(json& cfg, const std::shared_ptr<const Field>& field, const Common& c) {
    cfg["q"] = field->q();
    cfg["theta_exp"] = c.theta_exp;
    std::ostringstream mod;
    for (size_t i = 0; i < field->modulus().size(); ++i) {
        if (i) mod << ",";
        mod << field->modulus()[i];
    }
    cfg["modulus"] = mod.str();
}

/// Config echo for csv and text reports: one comment line, then the body.
std::string with_config_line(const json& cfg, const std::string& body) {
    return "# config: " + cfg.dump() + "\n" + body;
}

std::string finish(const json& cfg, const json& report_json, const std::string& csv,
                   const std::string& text, const std::string& format) {
    if (format == "json") {
        json full = report_json;
        full["config"] = cfg;
        return full.dump(2) + "\n";
    }
    return with_config_line(cfg, format == "csv" ? csv : text);
}

/// Parsed spec plus its resolved config echo, shared by code build and
/// quantum check.
struct SpecInputs {
    std::string f, g1, g2, spec_json;
};

CodeSpec assemble_spec(const Common& c, const SpecInputs& in, uint32_t alpha, uint32_t beta,
                       std::vector<std::string>& warnings) {
    if (!in.spec_json.empty()) {
        if (!in.f.empty() || !in.g1.empty() || !in.g2.empty())
            throw std::invalid_argument("--spec excludes --f/--g1/--g2");
        return CodeSpec::parse_json(in.spec_json, &warnings);
    }
    if (in.f.empty() || in.g1.empty() || in.g2.empty())
        throw std::invalid_argument("code specs need --f, --g1 and --g2 (or --spec)");
    if (c.q == 0) throw std::invalid_argument("code specs need --q (or --spec)");
    if (alpha == 0 || beta == 0)
        throw std::invalid_argument("code specs need --alpha and --beta (or --spec)");
    CodeSpec spec;
    spec.field = Field::make_q(c.q);
    spec.theta_exp = c.theta_exp;
    spec.alpha = alpha;
    spec.beta = beta;
    spec.generators =
        SeparableGenerators{read_poly(spec.field, c.theta_exp, in.f, c.compact, warnings),
                            read_poly(spec.field, c.theta_exp, in.g1, c.compact, warnings),
                            read_poly(spec.field, c.theta_exp, in.g2, c.compact, warnings)};
    return spec;
}

json spec_config(const std::string& command, const Common& c, const CodeSpec& spec,
                 const std::vector<std::string>& warnings) {
    json cfg = base_config(command, c);
    echo_field(cfg, spec.field, c);
    cfg["spec"] = json::parse(spec.json());
    cfg["gray"] = c.gray;
    cfg["strategy"] = c.strategy;
    cfg["budget"] = c.budget;
    cfg["jobs"] = c.jobs;
    if (!warnings.empty()) cfg["warnings"] = warnings;
    return cfg;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact construction, verification, and search for mixed-alphabet "
                 "twisted codes and the quantum codes they induce"};
    app.name("skewcode");
    app.require_subcommand(1);

    Common c;
    std::string report;
    int rc = 0;

    // ---- field info -------------------------------------------------------
    auto* field_cmd = app.add_subcommand("field", "Finite field utilities");
    field_cmd->require_subcommand(1);
    auto* field_info = field_cmd->add_subcommand("info", "Element table and twist orbit");
    add_format(field_info, c);
    add_field(field_info, c);
    field_info->callback([&] {
        const auto field = Field::make_q(c.q);
        json cfg = base_config("field info", c);
        echo_field(cfg, field, c);

        json rep;
        rep["p"] = field->p();
        rep["m"] = field->m();
        rep["q"] = field->q();
        rep["descriptor"] = field->descriptor();
        rep["generator"] = field->generator().str();
        rep["automorphism_order"] = field->automorphism_order(c.theta_exp);
        json elems = json::array();
        std::ostringstream csv, text;
        csv << "token,value,frobenius\n";
        text << field->descriptor() << "  twist a -> a^(" << field->p() << "^" << c.theta_exp
             << ")  order " << field->automorphism_order(c.theta_exp) << "\n";
        for (uint32_t v = 0; v < field->q(); ++v) {
            const std::string token = field->element_str(uint16_t(v));
            const std::string image =
                field->element_str(field->frobenius_raw(uint16_t(v), c.theta_exp));
            elems.push_back({{"token", token}, {"value", v}, {"frobenius", image}});
            csv << token << "," << v << "," << image << "\n";
            text << "  " << token << " = " << v << "  ->  " << image << "\n";
        }
        rep["elements"] = std::move(elems);
        report = finish(cfg, rep, csv.str(), text.str(), c.format);
    });

    // ---- skew utilities ---------------------------------------------------
    auto* skew_cmd = app.add_subcommand("skew", "Twisted polynomial ring utilities");
    skew_cmd->require_subcommand(1);
    std::string poly_a, poly_b, poly_one;
    uint32_t length_n = 0, degree_d = 0;

    auto* divmod = skew_cmd->add_subcommand("divmod", "Right division a = quot*b + rem");
    add_format(divmod, c);
    add_field(divmod, c);
    add_compact(divmod, c);
    divmod->add_option("--a", poly_a, "Dividend")->required();
    divmod->add_option("--b", poly_b, "Divisor")->required();
    divmod->callback([&] {
        const auto field = Field::make_q(c.q);
        std::vector<std::string> warnings;
        const SkewPoly a = read_poly(field, c.theta_exp, poly_a, c.compact, warnings);
        const SkewPoly b = read_poly(field, c.theta_exp, poly_b, c.compact, warnings);
        const SkewDivMod result = right_divmod(a, b);

        json cfg = base_config("skew divmod", c);
        echo_field(cfg, field, c);
        cfg["a"] = a.canonical_str();
        cfg["b"] = b.canonical_str();
        if (!warnings.empty()) cfg["warnings"] = warnings;
        json rep;
        rep["quot"] = result.quot.canonical_str();
        rep["rem"] = result.rem.canonical_str();
        report = finish(cfg, rep,
                        "quot,rem\n\"" + result.quot.canonical_str() + "\",\"" +
                            result.rem.canonical_str() + "\"\n",
                        "quot: " + result.quot.str() + "\nrem:  " + result.rem.str() + "\n",
                        c.format);
    });

    auto* dagger = skew_cmd->add_subcommand("dagger", "Twisted coefficient reversal");
    add_format(dagger, c);
    add_field(dagger, c);
    add_compact(dagger, c);
    dagger->add_option("--poly", poly_one, "Input polynomial")->required();
    dagger->callback([&] {
        const auto field = Field::make_q(c.q);
        std::vector<std::string> warnings;
        const SkewPoly p = read_poly(field, c.theta_exp, poly_one, c.compact, warnings);
        const SkewPoly d = p.dagger();

        json cfg = base_config("skew dagger", c);
        echo_field(cfg, field, c);
        cfg["poly"] = p.canonical_str();
        if (!warnings.empty()) cfg["warnings"] = warnings;
        json rep;
        rep["dagger"] = d.canonical_str();
        report = finish(cfg, rep, "dagger\n\"" + d.canonical_str() + "\"\n",
                        "dagger: " + d.str() + "\n", c.format);
    });

    auto* divisors = skew_cmd->add_subcommand("divisors", "Monic right divisors of x^n - 1");
    add_format(divisors, c);
    add_field(divisors, c);
    divisors->add_option("--n", length_n, "Length: modulus is x^n - 1")->required();
    divisors->add_option("--deg", degree_d, "Divisor degree")->required();
    divisors->add_option("--divisor-budget", c.divisor_budget,
                         "Candidate bound for the enumeration (0 = 10^7)");
    divisors->callback([&] {
        const auto field = Field::make_q(c.q);
        const auto divs = right_divisors(field, c.theta_exp, length_n, degree_d,
                                         c.divisor_budget);
        json cfg = base_config("skew divisors", c);
        echo_field(cfg, field, c);
        cfg["n"] = length_n;
        cfg["deg"] = degree_d;
        cfg["divisor_budget"] = c.divisor_budget;
        json rep;
        json list = json::array();
        std::ostringstream csv, text;
        csv << "divisor\n";
        for (const auto& d : divs) {
            list.push_back(d.canonical_str());
            csv << "\"" << d.canonical_str() << "\"\n";
            text << d.str() << "\n";
        }
        rep["count"] = divs.size();
        rep["divisors"] = std::move(list);
        report = finish(cfg, rep, csv.str(), text.str(), c.format);
    });

    // ---- code build -------------------------------------------------------
    SpecInputs sin;
    uint32_t alpha = 0, beta = 0;
    bool dump_matrix = false;

    auto* code_cmd = app.add_subcommand("code", "Mixed-alphabet code construction");
    code_cmd->require_subcommand(1);
    auto* build = code_cmd->add_subcommand(
        "build", "Build a code from generators and measure its Gray image");
    add_format(build, c);
    add_field(build, c, /*required=*/false);
    add_compact(build, c);
    add_distance(build, c);
    add_gray(build, c);
    build->add_option("--alpha", alpha, "x-block length");
    build->add_option("--beta", beta, "R-block length");
    build->add_option("--f", sin.f, "x-block generator");
    build->add_option("--g1", sin.g1, "First R-block generator");
    build->add_option("--g2", sin.g2, "Second R-block generator");
    build->add_option("--spec", sin.spec_json,
                      "Complete code spec as JSON (alternative to the flags above; "
                      "required for general two-generator codes)");
    build->add_flag("--dump-matrix", dump_matrix, "Include the Gray-image basis rows");
    build->callback([&] {
        std::vector<std::string> warnings;
        const CodeSpec spec = assemble_spec(c, sin, alpha, beta, warnings);
        const GrayMatrix m = GrayMatrix::parse(spec.field, c.gray);
        const GeneratorMatrix image = gray_image_matrix(spec, m, /*checked=*/true);
        const uint32_t d =
            min_distance(image, strategy_from_string(c.strategy), c.budget, c.jobs);

        json cfg = spec_config("code build", c, spec, warnings);
        json rep;
        rep["n"] = image.n();
        rep["k"] = image.k();
        rep["d"] = d;
        rep["q"] = spec.field->q();
        rep["duality_warning"] = duality_warning(spec);
        std::ostringstream text;
        text << "[" << image.n() << "," << image.k() << "," << d << "]_" << spec.field->q()
             << "\n";
        if (!duality_warning(spec).empty())
            text << "warning: " << duality_warning(spec) << "\n";
        if (dump_matrix) {
            json rows = json::array();
            for (const auto& row : image.canonical()) {
                std::ostringstream line;
                for (size_t i = 0; i < row.size(); ++i) {
                    if (i) line << ",";
                    line << row[i];
                }
                rows.push_back(line.str());
                text << line.str() << "\n";
            }
            rep["matrix"] = std::move(rows);
        }
        std::ostringstream csv;
        csv << "n,k,d,q\n"
            << image.n() << "," << image.k() << "," << d << "," << spec.field->q() << "\n";
        report = finish(cfg, rep, csv.str(), text.str(), c.format);
    });

    // ---- quantum check ----------------------------------------------------
    auto* quantum_cmd = app.add_subcommand("quantum", "Stabilizer code derivation");
    quantum_cmd->require_subcommand(1);
    auto* check = quantum_cmd->add_subcommand(
        "check", "Certify dual containment and derive the induced parameters");
    add_format(check, c);
    add_field(check, c, /*required=*/false);
    add_compact(check, c);
    add_distance(check, c);
    add_gray(check, c);
    check->add_option("--alpha", alpha, "x-block length");
    check->add_option("--beta", beta, "R-block length");
    check->add_option("--f", sin.f, "x-block generator");
    check->add_option("--g1", sin.g1, "First R-block generator");
    check->add_option("--g2", sin.g2, "Second R-block generator");
    check->add_option("--spec", sin.spec_json, "Complete code spec as JSON");
    check->callback([&] {
        std::vector<std::string> warnings;
        const CodeSpec spec = assemble_spec(c, sin, alpha, beta, warnings);
        const GrayMatrix m = GrayMatrix::parse(spec.field, c.gray);
        const QuantumBuild built = build_quantum_code(
            spec, m, strategy_from_string(c.strategy), c.budget, c.jobs);

        json cfg = spec_config("quantum check", c, spec, warnings);
        json rep;
        rep["classical"] = {{"n", built.gray_image.n()},
                            {"k", built.gray_image.k()},
                            {"d", built.distance}};
        rep["certificate"] = json::parse(built.certificate.json());
        rep["dual_containing"] = built.certificate.valid();
        std::ostringstream csv, text;
        csv << "n,k,d,q,dual_containing,route\n";
        if (built.params) {
            rep["params"] = json::parse(built.params->json());
            rep["n"] = built.params->n;
            rep["k"] = built.params->k;
            rep["d"] = built.params->d;
            csv << built.params->n << "," << built.params->k << "," << built.params->d << ","
                << built.params->q << ",true," << route_name(built.certificate.route) << "\n";
            text << built.params->str() << "  from  [" << built.gray_image.n() << ","
                 << built.gray_image.k() << "," << built.distance << "]_"
                 << spec.field->q() << "  route " << route_name(built.certificate.route)
                 << "\n";
        } else {
            rc = 1;
            csv << ",,," << spec.field->q() << ",false,"
                << route_name(built.certificate.route) << "\n";
            text << "not dual-containing: no stabilizer code is induced (classical image ["
                 << built.gray_image.n() << "," << built.gray_image.k() << ","
                 << built.distance << "]_" << spec.field->q() << ")\n";
        }
        report = finish(cfg, rep, csv.str(), text.str(), c.format);
    });

    // ---- search run -------------------------------------------------------
    uint32_t max_deg_f = 1, max_deg_g1 = 1, max_deg_g2 = 1;
    auto* search_cmd = app.add_subcommand("search", "Certified parameter sweeps");
    search_cmd->require_subcommand(1);
    auto* run = search_cmd->add_subcommand("run", "Sweep every certified generator triple");
    add_format(run, c);
    add_field(run, c);
    add_distance(run, c);
    add_gray(run, c);
    run->add_option("--alpha", alpha, "x-block length")->required();
    run->add_option("--beta", beta, "R-block length")->required();
    run->add_option("--max-deg-f", max_deg_f, "Degree bound for f")->capture_default_str();
    run->add_option("--max-deg-g1", max_deg_g1, "Degree bound for g1")->capture_default_str();
    run->add_option("--max-deg-g2", max_deg_g2, "Degree bound for g2")->capture_default_str();
    run->add_option("--divisor-budget", c.divisor_budget,
                    "Candidate bound for divisor enumeration (0 = 10^7)");
    run->add_option("--seed", c.seed, "Seed for factorization and re-verification sampling")
        ->capture_default_str();
    run->callback([&] {
        SearchSpace space;
        space.field = Field::make_q(c.q);
        space.theta_exp = c.theta_exp;
        space.alpha = alpha;
        space.beta = beta;
        space.max_deg_f = max_deg_f;
        space.max_deg_g1 = max_deg_g1;
        space.max_deg_g2 = max_deg_g2;
        space.gray = GrayMatrix::parse(space.field, c.gray);
        space.strategy = strategy_from_string(c.strategy);
        space.budget = c.budget;
        space.divisor_budget = c.divisor_budget;
        space.jobs = c.jobs;
        space.seed = c.seed;
        const auto hits = search_quantum(space);

        json cfg = base_config("search run", c);
        echo_field(cfg, space.field, c);
        cfg["alpha"] = alpha;
        cfg["beta"] = beta;
        cfg["max_deg_f"] = max_deg_f;
        cfg["max_deg_g1"] = max_deg_g1;
        cfg["max_deg_g2"] = max_deg_g2;
        cfg["gray"] = c.gray;
        cfg["strategy"] = c.strategy;
        cfg["budget"] = c.budget;
        cfg["divisor_budget"] = c.divisor_budget;
        cfg["jobs"] = c.jobs;
        cfg["seed"] = c.seed;

        json rep;
        rep["count"] = hits.size();
        json arr = json::array();
        std::ostringstream csv, text;
        csv << search_csv_header() << "\n";
        for (const auto& h : hits) {
            arr.push_back(json::parse(h.json()));
            csv << h.csv() << "\n";
            if (h.params)
                text << h.params->str();
            else
                text << "[" << h.n << "," << h.k << ",?]_" << space.field->q();
            const auto& gen = std::get<SeparableGenerators>(h.spec.generators);
            text << "  f=" << gen.f.canonical_str() << "  g1=" << gen.g1.canonical_str()
                 << "  g2=" << gen.g2.canonical_str();
            if (!h.error.empty()) text << "  error: " << h.error;
            text << "\n";
        }
        rep["hits"] = std::move(arr);
        report = finish(cfg, rep, csv.str(), text.str(), c.format);
    });

    // ---- reproduce table1 -------------------------------------------------
    std::vector<uint32_t> rows;
    auto* reproduce_cmd = app.add_subcommand("reproduce", "Published benchmark pipelines");
    reproduce_cmd->require_subcommand(1);
    auto* table1 = reproduce_cmd->add_subcommand(
        "table1", "Rebuild the published parameter table from its printed generators");
    add_format(table1, c);
    add_distance(table1, c);
    table1->add_option("--rows", rows, "1-based row selection (default: all)")
        ->delimiter(',');
    table1->callback([&] {
        const TableReport rep_table =
            reproduce_table1(strategy_from_string(c.strategy), c.budget, c.jobs, rows);
        json cfg = base_config("reproduce table1", c);
        cfg["rows"] = rows;
        cfg["strategy"] = c.strategy;
        cfg["budget"] = c.budget;
        cfg["jobs"] = c.jobs;
        json rep = json::parse(rep_table.json());
        report = finish(cfg, rep, rep_table.csv(), rep_table.text(), c.format);
        if (!rep_table.all_pass()) rc = 1;
    });

    // ---- dispatch ---------------------------------------------------------
    auto emit_error = [&err](const std::string& type, const std::string& message,
                             const budget_error* b = nullptr) {
        json e;
        e["error"]["type"] = type;
        e["error"]["message"] = message;
        if (b) {
            e["error"]["required"] = b->required();
            e["error"]["budget"] = b->budget();
        }
        err << e.dump() << "\n";
    };

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        emit_error("usage", e.what());
        return 2;
    } catch (const budget_error& e) {
        emit_error("budget", e.what(), &e);
        return 1;
    } catch (const verify_error& e) {
        emit_error("verify", e.what());
        return 1;
    } catch (const std::invalid_argument& e) {
        emit_error("usage", e.what());
        return 2;
    }

    if (!c.out_path.empty()) {
        std::ofstream file(c.out_path, std::ios::binary);
        if (!file) {
            emit_error("usage", "cannot open --out path: " + c.out_path);
            return 2;
        }
        file << report;
    } else {
        out << report;
    }
    return rc;
}

}  // namespace skewcode
