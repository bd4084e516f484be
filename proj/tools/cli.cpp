#include "cli.hpp"

#include <CLI11.hpp>

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <ostream>
#include <sstream>

#include "wilsonq/quotients.hpp"
#include "wilsonq/series.hpp"

namespace wilsonq::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

Rational rational_from_string(const std::string& text) {
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0 || text.empty())
        throw std::runtime_error("bad rational literal: '" + text + "'");
    q.canonicalize();
    return q;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cur += c;
            }
        } else if (c == '"' && cur.empty()) {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(std::move(cur));
    return fields;
}

std::string params_csv(const CongruenceReport& r) {
    std::string s;
    for (const auto& [key, value] : r.params) {
        if (!s.empty()) s += ';';
        s += key + "=" + std::to_string(value);
    }
    return s;
}

ordered_json report_to_json(const CongruenceReport& r) {
    ordered_json j;
    j["name"] = r.name;
    ordered_json params = ordered_json::object();
    for (const auto& [key, value] : r.params) params[key] = value;
    j["params"] = params;
    if (r.modulus.fits_slong_p()) {
        j["modulus"] = static_cast<std::int64_t>(r.modulus.get_si());
    } else {
        j["modulus"] = r.modulus.get_str();
    }
    j["lhs"] = r.lhs ? ordered_json(r.lhs->value.get_str()) : ordered_json(nullptr);
    j["rhs"] = r.rhs ? ordered_json(r.rhs->value.get_str()) : ordered_json(nullptr);
    j["holds"] = r.holds;
    j["note"] = r.note;
    return j;
}

}  // namespace

std::vector<TableRow> make_table(TableKind kind, std::int64_t max) {
    if (max < 1) throw std::domain_error("table: requires --max >= 1");
    std::vector<TableRow> rows;
    switch (kind) {
        case TableKind::kZ:
            for (std::int64_t n = 1; n <= max; ++n)
                rows.push_back(TableRow{-1, n, z_closed(n).value});
            break;
        case TableKind::kZPlus:
            for (std::int64_t n = 1; n <= max; ++n)
                rows.push_back(TableRow{-1, n, z_plus_closed(n).value});
            break;
        case TableKind::kM:
            for (std::int64_t k = 0; k < max; ++k) {
                for (std::int64_t n = 1; n <= max; ++n) {
                    TableRow row{k, n, std::nullopt};
                    if (k < n) row.value = m_quotient(n, k).value;
                    rows.push_back(std::move(row));
                }
            }
            break;
    }
    return rows;
}

std::string render_table_csv(TableKind kind, const std::vector<TableRow>& rows) {
    std::string text = kind == TableKind::kM ? "k,n,value\n" : "n,value\n";
    for (const auto& row : rows) {
        if (kind == TableKind::kM) text += std::to_string(row.k) + ",";
        text += std::to_string(row.n) + ",";
        if (row.value) text += to_fraction(*row.value);
        text += '\n';
    }
    return text;
}

std::string render_table_json(TableKind kind, const std::vector<TableRow>& rows) {
    ordered_json arr = ordered_json::array();
    for (const auto& row : rows) {
        ordered_json j;
        if (kind == TableKind::kM) j["k"] = row.k;
        j["n"] = row.n;
        j["value"] = row.value ? ordered_json(to_fraction(*row.value)) : ordered_json(nullptr);
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

std::vector<TableRow> parse_table_csv(TableKind kind, const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("parse_table_csv: empty input");
    const std::string expected_header = kind == TableKind::kM ? "k,n,value" : "n,value";
    if (line != expected_header)
        throw std::runtime_error("parse_table_csv: unexpected header '" + line + "'");
    std::vector<TableRow> rows;
    while (std::getline(in, line)) {
        auto fields = split_csv_line(line);
        std::size_t want = kind == TableKind::kM ? 3 : 2;
        if (fields.size() != want)
            throw std::runtime_error("parse_table_csv: malformed row '" + line + "'");
        TableRow row;
        std::size_t i = 0;
        if (kind == TableKind::kM) row.k = std::stoll(fields[i++]);
        row.n = std::stoll(fields[i++]);
        if (!fields[i].empty()) row.value = rational_from_string(fields[i]);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<TableRow> parse_table_json(TableKind kind, const std::string& text) {
    ordered_json arr = ordered_json::parse(text);
    if (!arr.is_array()) throw std::runtime_error("parse_table_json: expected an array");
    std::vector<TableRow> rows;
    for (const auto& j : arr) {
        TableRow row;
        if (kind == TableKind::kM) row.k = j.at("k").get<std::int64_t>();
        row.n = j.at("n").get<std::int64_t>();
        const auto& v = j.at("value");
        if (!v.is_null()) row.value = rational_from_string(v.get<std::string>());
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<CongruenceReport> run_series_family(std::size_t order) {
    std::vector<CongruenceReport> reports;
    auto push = [&reports](std::string name,
                           std::vector<std::pair<std::string, std::int64_t>> params,
                           CoeffCheck result) {
        CongruenceReport r;
        r.name = std::move(name);
        r.params = std::move(params);
        r.modulus = 0;
        r.holds = result.ok;
        r.note = result.ok ? ""
                           : "first mismatch at coefficient " +
                                 std::to_string(result.first_mismatch);
        reports.push_back(std::move(r));
    };
    auto order_i = static_cast<std::int64_t>(order);
    for (std::int64_t k = 0; k <= 12; ++k)
        push("egf_m", {{"k", k}, {"order", order_i}},
             egf_m_check(static_cast<std::size_t>(k), order));
    push("egf_z", {{"order", order_i}}, egf_z_check(order));
    push("sinh_identity", {{"order", order_i}}, sinh_identity_check(order));
    std::stable_sort(reports.begin(), reports.end(),
                     [](const CongruenceReport& a, const CongruenceReport& b) {
                         if (a.name != b.name) return a.name < b.name;
                         return a.params < b.params;
                     });
    return reports;
}

std::string render_verify_json(const std::string& command,
                               const std::vector<CongruenceReport>& reports,
                               const SuiteSummary& summary) {
    ordered_json j;
    j["command"] = command;
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r));
    j["reports"] = std::move(arr);
    j["summary"] = {{"checked", summary.checked},
                    {"held", summary.held},
                    {"failed", summary.failed},
                    {"ill_posed", summary.ill_posed}};
    return j.dump(2) + "\n";
}

std::string render_verify_csv(const std::vector<CongruenceReport>& reports,
                              const SuiteSummary& summary) {
    std::string text = "name,params,modulus,lhs,rhs,holds,note\n";
    for (const auto& r : reports) {
        text += csv_escape(r.name) + ",";
        text += csv_escape(params_csv(r)) + ",";
        text += r.modulus.get_str() + ",";
        text += (r.lhs ? r.lhs->value.get_str() : "") + ",";
        text += (r.rhs ? r.rhs->value.get_str() : "") + ",";
        text += (r.holds ? "true" : "false");
        text += "," + csv_escape(r.note) + "\n";
    }
    text += "#summary,checked=" + std::to_string(summary.checked) +
            ";held=" + std::to_string(summary.held) +
            ";failed=" + std::to_string(summary.failed) +
            ";ill_posed=" + std::to_string(summary.ill_posed) + "\n";
    return text;
}

namespace {

TableKind table_kind_of(const std::string& name) {
    if (name == "z") return TableKind::kZ;
    if (name == "zplus") return TableKind::kZPlus;
    if (name == "m") return TableKind::kM;
    throw std::domain_error("table: unknown kind '" + name + "'");
}

QuotientValue compute_value(const std::string& target, std::int64_t n,
                            const std::optional<std::int64_t>& k) {
    if (target == "m" || target == "mplus") {
        if (!k) throw std::domain_error("compute " + target + ": requires --k");
        return target == "m" ? m_quotient(n, *k) : m_plus(n, *k);
    }
    if (k) throw std::domain_error("compute " + target + ": --k not accepted");
    if (target == "w") return wilson_quotient(n);
    if (target == "z") return z_sum(n);
    if (target == "zplus") return z_plus_sum(n);
    throw std::domain_error("compute: unknown target '" + target + "'");
}

KChoice parse_k_mode(const std::string& text, std::int64_t* chosen_label) {
    if (text == "zero") return KChoice::zero();
    if (text == "balanced") return KChoice::balanced();
    try {
        std::size_t pos = 0;
        std::int64_t k = std::stoll(text, &pos);
        if (pos != text.size()) throw std::invalid_argument(text);
        if (chosen_label) *chosen_label = k;
        return KChoice::at(k);
    } catch (const std::exception&) {
        throw std::domain_error("--k-mode: expected zero, balanced, or an integer");
    }
}

int do_compute(const std::string& target, std::int64_t n, std::optional<std::int64_t> k,
               std::ostream& out) {
    QuotientValue q = compute_value(target, n, k);
    ordered_json j;
    std::string cmd = "compute " + target + " --n " + std::to_string(n);
    if (k) cmd += " --k " + std::to_string(*k);
    j["command"] = cmd;
    j["n"] = q.n;
    if (k) j["k"] = q.k;
    j["value"] = to_fraction(q.value);
    j["is_integer"] = q.is_integer;
    out << j.dump() << "\n";
    return kExitOk;
}

int do_table(const std::string& kind_name, std::int64_t max, const std::string& format,
             std::ostream& out) {
    TableKind kind = table_kind_of(kind_name);
    auto rows = make_table(kind, max);
    out << (format == "json" ? render_table_json(kind, rows) : render_table_csv(kind, rows));
    return kExitOk;
}

int do_verify(const std::string& family, VerifyConfig config, std::size_t order,
              const std::string& format, std::ostream& out) {
    std::vector<CongruenceReport> reports;
    if (family == "all") {
        reports = verify_suite(config);
        auto series = run_series_family(order);
        reports.insert(reports.end(), std::make_move_iterator(series.begin()),
                       std::make_move_iterator(series.end()));
    } else if (family == "lehmer") {
        reports = run_family(Family::kLehmer, config);
    } else if (family == "zsign") {
        reports = run_family(Family::kZSign, config);
    } else if (family == "zplus") {
        reports = run_family(Family::kZPlus, config);
    } else if (family == "harmonic") {
        reports = run_family(Family::kHarmonic, config);
    } else if (family == "series") {
        reports = run_series_family(order);
    } else {
        throw std::domain_error("verify: unknown family '" + family + "'");
    }

    SuiteSummary summary = summarize(reports);
    std::string t_list;
    for (std::int64_t t : config.t_set) t_list += (t_list.empty() ? "" : ",") + std::to_string(t);
    std::string k_mode = config.k_mode == KMode::kZero       ? "zero"
                         : config.k_mode == KMode::kBalanced ? "balanced"
                                                             : "all";
    std::string cmd = "verify " + family + " --p-max " + std::to_string(config.p_max) +
                      " --n-max " + std::to_string(config.n_max) + " --bernoulli-p-max " +
                      std::to_string(config.bernoulli_p_max) + " --t " + t_list + " --k-mode " +
                      k_mode + " --order " + std::to_string(order);
    out << (format == "csv" ? render_verify_csv(reports, summary)
                            : render_verify_json(cmd, reports, summary));
    return summary.all_asserted_hold ? kExitOk : kExitCheckFailed;
}

int do_primality(std::int64_t n, const std::string& k_mode, std::ostream& out) {
    std::int64_t explicit_k = -1;
    KChoice choice = parse_k_mode(k_mode, &explicit_k);
    bool verdict = noncomposite_test(n, choice);
    ordered_json j;
    j["command"] = "primality --n " + std::to_string(n) + " --k-mode " + k_mode;
    j["n"] = n;
    j["k"] = choice.resolve(n);
    j["noncomposite"] = verdict;
    out << j.dump() << "\n";
    return kExitOk;
}

int do_bench_primality(std::int64_t n_max, std::ostream& out) {
    if (n_max < 2) throw std::domain_error("bench primality: requires --n-max >= 2");
    out << "n,noncomposite,wall_ns,left_muls,right_muls,mul_bound,within_bound\n";
    bool all_within = true;
    for (std::int64_t n = 2; n <= n_max; ++n) {
        FactorialModCounters counters;
        auto start = std::chrono::steady_clock::now();
        bool verdict = noncomposite_test(n, KChoice::balanced(), &counters);
        auto stop = std::chrono::steady_clock::now();
        auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
        std::uint64_t bound = static_cast<std::uint64_t>((n + 1) / 2) + 1;
        bool within = counters.left_muls <= bound && counters.right_muls <= bound;
        all_within = all_within && within;
        out << n << "," << (verdict ? "true" : "false") << "," << ns << ","
            << counters.left_muls << "," << counters.right_muls << "," << bound << ","
            << (within ? "true" : "false") << "\n";
    }
    return all_within ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generalized Wilson quotients: values, tables, and congruence suites"};
    app.require_subcommand(1);

    int jobs = 1;
    app.add_option("--jobs", jobs, "Concurrency hint for range sweeps")->check(CLI::PositiveNumber);

    // compute
    auto* compute = app.add_subcommand("compute", "Compute one quotient or sum");
    compute->fallthrough();
    std::string compute_target;
    std::int64_t compute_n = 0;
    std::optional<std::int64_t> compute_k;
    compute->add_option("target", compute_target, "One of m|mplus|w|z|zplus")
        ->required()
        ->check(CLI::IsMember({"m", "mplus", "w", "z", "zplus"}));
    compute->add_option("--n", compute_n, "Argument n")->required();
    compute->add_option("--k", compute_k, "Index k (m and mplus only)");

    // table
    auto* table = app.add_subcommand("table", "Emit a value table");
    table->fallthrough();
    std::string table_kind;
    std::int64_t table_max = 0;
    std::string table_format = "csv";
    table->add_option("kind", table_kind, "One of z|zplus|m")
        ->required()
        ->check(CLI::IsMember({"z", "zplus", "m"}));
    table->add_option("--max", table_max, "Largest n")->required();
    table->add_option("--format", table_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    // verify
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->fallthrough();
    std::string verify_family;
    std::int64_t p_max = 13;
    std::int64_t n_max = 50;
    std::int64_t bernoulli_p_max = -1;
    std::string t_list = "1";
    std::string k_mode_name = "all";
    std::size_t order = 64;
    std::string verify_format = "json";
    verify->add_option("family", verify_family, "One of all|lehmer|zsign|zplus|harmonic|series")
        ->required()
        ->check(CLI::IsMember({"all", "lehmer", "zsign", "zplus", "harmonic", "series"}));
    verify->add_option("--p-max", p_max, "Largest prime to sweep");
    verify->add_option("--n-max", n_max, "Largest n to sweep");
    verify->add_option("--bernoulli-p-max", bernoulli_p_max,
                       "Cap for Bernoulli-dependent checks (defaults to --p-max)");
    verify->add_option("--t", t_list, "Comma-separated t values for Lehmer-style checks");
    verify->add_option("--k-mode", k_mode_name, "k sweep: zero, balanced, or all")
        ->check(CLI::IsMember({"zero", "balanced", "all"}));
    verify->add_option("--order", order, "Series order for the series family");
    verify->add_option("--format", verify_format, "json or csv")
        ->check(CLI::IsMember({"csv", "json"}));

    // primality
    auto* primality = app.add_subcommand("primality", "Corollary-1 non-compositeness test");
    primality->fallthrough();
    std::int64_t primality_n = 0;
    std::string primality_k_mode = "balanced";
    primality->add_option("--n", primality_n, "Number to test")->required();
    primality->add_option("--k-mode", primality_k_mode, "zero, balanced, or an explicit k");

    // bench
    auto* bench = app.add_subcommand("bench", "Wall-time and mul-count sweeps");
    bench->fallthrough();
    auto* bench_primality = bench->add_subcommand("primality", "Balanced-k primality sweep");
    bench_primality->fallthrough();
    std::int64_t bench_n_max = 0;
    bench_primality->add_option("--n-max", bench_n_max, "Largest n to sweep")->required();
    bench->require_subcommand(1);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("wilsonq");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "wilsonq: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*compute) return do_compute(compute_target, compute_n, compute_k, out);
        if (*table) return do_table(table_kind, table_max, table_format, out);
        if (*verify) {
            VerifyConfig config;
            config.p_max = p_max;
            config.n_max = n_max;
            config.bernoulli_p_max = bernoulli_p_max < 0 ? p_max : bernoulli_p_max;
            config.t_set.clear();
            std::istringstream ts(t_list);
            for (std::string part; std::getline(ts, part, ',');) {
                if (!part.empty()) config.t_set.push_back(std::stoll(part));
            }
            if (config.t_set.empty()) throw std::domain_error("verify: --t must list t values");
            config.k_mode = k_mode_name == "zero"       ? KMode::kZero
                            : k_mode_name == "balanced" ? KMode::kBalanced
                                                        : KMode::kAll;
            config.jobs = jobs;
            return do_verify(verify_family, config, order, verify_format, out);
        }
        if (*primality) return do_primality(primality_n, primality_k_mode, out);
        if (*bench) return do_bench_primality(bench_n_max, out);
    } catch (const std::domain_error& e) {
        err << "wilsonq: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "wilsonq: " << e.what() << "\n";
        return kExitUsage;
    }
    err << "wilsonq: no subcommand\n";
    return kExitUsage;
}

}  // namespace wilsonq::cli
