#include "qtk/cli.hpp"

#include "qtk/battery.hpp"
#include "qtk/error.hpp"
#include "qtk/json_io.hpp"
#include "qtk/macdonald.hpp"
#include "qtk/stats.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <ostream>
#include <string>

namespace qtk {

namespace {

Partition parse_mu(const std::string& text, const char* flag)
{
    const Partition mu = Partition::parse(text);
    if (mu.empty()) throw ParseError(std::string(flag) + ": expected a nonempty partition such as 2,1");
    return mu;
}

// Standard tableau with |mu| cells, parsed from "row/row". Its shape is free.
Tableau parse_standard(const std::string& text, const Partition& mu)
{
    const Tableau T = Tableau::parse(text);
    if (!T.is_standard()) throw DomainError("--tableau: \"" + text + "\" is not a standard tableau");
    if (T.size() != mu.size())
        throw DomainError("--tableau: " + std::to_string(T.size()) + " cells, but |mu| = " + std::to_string(mu.size()));
    return T;
}

// Statistics are defined on the unconjugated shapes only.
SupportedShape require_stat_shape(const Partition& mu)
{
    const SupportedShape s = require_supported(mu);
    if (s.conjugated)
        throw DomainError("statistics are defined for (2^a,1^b), (3,2^a,1^b) and (4,2^a,1^b); " + mu.pretty() +
                          " is only a conjugate of one");
    return s;
}

void print_expansion(const SchurExpansion& f, const Partition& mu, const std::string& format, std::ostream& out)
{
    if (format == "json") {
        out << to_json(f).dump(2) << '\n';
    } else if (format == "csv") {
        out << "lambda,coefficient\n";
        for (const auto& [lambda, c] : f.terms()) out << '"' << lambda.to_string() << "\"," << c.to_string() << '\n';
    } else {
        // One row per lambda of |mu|, zero entries included, so tables line up across mu.
        out << "\\begin{tabular}{l|l}\n";
        out << "$\\lambda$ & $K_{\\lambda," << mu.pretty() << "}(q,t)$ \\\\\n\\hline\n";
        for (const auto& lambda : partitions_of(mu.size()))
            out << '$' << lambda.pretty() << "$ & $" << f.coeff(lambda).to_latex() << "$ \\\\\n";
        out << "\\end{tabular}\n";
    }
}

std::string counts_text(const std::vector<long>& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact (q,t)-Kostka coefficients via vertex operators, and their tableau statistics", "qtk"};
    app.require_subcommand(1);

    std::string mu_text, lambda_text, tableau_text, word_text, format = "json", out_path;
    BatteryOptions opts;

    auto* mac = app.add_subcommand("macdonald", "print H_mu[X;q,t] in the Schur basis");
    mac->add_option("--mu", mu_text, "partition, e.g. 3,2,1")->required();
    mac->add_option("--format", format, "json, csv or latex")->check(CLI::IsMember({"json", "csv", "latex"}));

    auto* kos = app.add_subcommand("kostka", "print one coefficient K_{lambda,mu}(q,t)");
    kos->add_option("--lambda", lambda_text, "partition indexing the Schur function")->required();
    kos->add_option("--mu", mu_text, "partition indexing H_mu")->required();

    auto* hl = app.add_subcommand("hl", "print the Hall-Littlewood H_mu[X;t] in the Schur basis");
    hl->add_option("--mu", mu_text, "partition")->required();
    hl->add_option("--format", format, "json, csv or latex")->check(CLI::IsMember({"json", "csv", "latex"}));

    auto* chg = app.add_subcommand("charge", "charge of a word of partition content");
    chg->add_option("--word", word_text, "digits, or comma separated letters")->required();

    auto* st = app.add_subcommand("stats", "the pair (a_mu, b_mu) of a standard tableau");
    st->add_option("--mu", mu_text, "shape")->required();
    st->add_option("--tableau", tableau_text, "rows bottom to top, e.g. 1,3/2")->required();

    auto* ty = app.add_subcommand("type", "block sequence of a standard tableau");
    ty->add_option("--mu", mu_text, "shape")->required();
    ty->add_option("--tableau", tableau_text, "rows bottom to top")->required();

    auto* ver = app.add_subcommand("verify", "run the verification battery and print a JSON report");
    ver->add_option("--max-n", opts.max_n, "largest |mu| for exact checks (at most 8)")->capture_default_str();
    ver->add_option("--oracle-degree", opts.oracle_degree, "largest |mu| for the oracle (at most 6)")
        ->capture_default_str();
    ver->add_option("--points", opts.points, "random rational points per check")->capture_default_str();
    ver->add_option("--seed", opts.seed, "seed for the rational points")->capture_default_str();
    ver->add_option("--jobs", opts.jobs, "worker threads")->capture_default_str();
    ver->add_option("--out", out_path, "write the report here instead of stdout");

    auto* uni = app.add_subcommand("unimodal", "a_mu distribution on each type class");
    uni->add_option("--mu", mu_text, "shape")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (mac->parsed()) {
            const Partition mu = parse_mu(mu_text, "--mu");
            print_expansion(macdonald(mu), mu, format, out);
        } else if (kos->parsed()) {
            const Partition lambda = parse_mu(lambda_text, "--lambda");
            const Partition mu = parse_mu(mu_text, "--mu");
            out << kostka(lambda, mu).to_string() << '\n';
        } else if (hl->parsed()) {
            const Partition mu = parse_mu(mu_text, "--mu");
            print_expansion(hall_littlewood(mu), mu, format, out);
        } else if (chg->parsed()) {
            out << charge(parse_word(word_text)) << '\n';
        } else if (st->parsed()) {
            const Partition mu = parse_mu(mu_text, "--mu");
            const SupportedShape shape = require_stat_shape(mu);
            const StatValues v = stat_pair(shape, parse_standard(tableau_text, mu));
            out << "a=" << v.a << " b=" << v.b << '\n';
        } else if (ty->parsed()) {
            const Partition mu = parse_mu(mu_text, "--mu");
            const SupportedShape shape = require_stat_shape(mu);
            const TypeSequence type = full_type(shape, parse_standard(tableau_text, mu));
            out << type.to_string() << '\n';
        } else if (ver->parsed()) {
            const Report report = run_battery(opts);
            const std::string text = to_json(report).dump(2) + "\n";
            if (out_path.empty()) {
                out << text;
            } else {
                std::ofstream file(out_path, std::ios::binary);
                if (!file) throw DomainError("--out: cannot open " + out_path);
                file << text;
            }
            long failed = 0;
            for (const auto& r : report)
                if (!r.pass) {
                    ++failed;
                    err << "FAIL " << r.check << ' ' << r.params.dump() << ": " << r.detail << '\n';
                }
            err << report.size() << " checks, " << failed << " failed\n";
            return failed == 0 ? 0 : 1;
        } else if (uni->parsed()) {
            const Partition mu = parse_mu(mu_text, "--mu");
            for (const auto& cls : unimodal_profile(require_stat_shape(mu)))
                out << cls.type.to_string() << ' ' << counts_text(cls.counts) << ' '
                    << (cls.unimodal ? "unimodal" : "not-unimodal") << '\n';
        }
    } catch (const UnsupportedShape& e) {
        err << "qtk: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "qtk: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "qtk: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace qtk
