#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include <gpm/errors.hpp>
#include <gpm/fractal.hpp>
#include <gpm/io.hpp>
#include <gpm/pascal.hpp>
#include <gpm/special.hpp>
#include <gpm/suites.hpp>
#include <gpm/zero_algebra.hpp>

namespace gpm::cli
{

namespace
{

// A config problem detected after parsing; reported with exit status 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const std::set<std::string> &matrix_kinds()
{
    static const std::set<std::string> kinds = {"pascal",  "geometric",       "phiq",         "fractal",
                                                "qumbral", "qumbral-inverse", "zero-overlay", "tmatrix"};
    return kinds;
}

bool uses_q(const std::string &kind)
{
    return kind != "pascal" && kind != "geometric";
}

bool uses_phi(const std::string &kind)
{
    return kind == "phiq" || kind == "fractal";
}

Index modulus(const CommandConfig &config)
{
    if (!config.q) {
        throw UsageError("--kind " + config.kind + " requires --q");
    }
    if (*config.q < 2) {
        throw UsageError("--kind " + config.kind + " requires --q >= 2");
    }
    return static_cast<Index>(*config.q);
}

std::optional<Rational> parsed_phi(const CommandConfig &config)
{
    if (!config.phi) {
        return std::nullopt;
    }
    try {
        return Rational::parse(*config.phi);
    } catch (const Error &e) {
        throw UsageError("--phi: " + std::string(e.what()));
    }
}

void validate_kind(const CommandConfig &config)
{
    if (config.kind.empty()) {
        throw UsageError(config.command + " requires --kind");
    }
    if (!matrix_kinds().contains(config.kind)) {
        throw UsageError("unknown kind '" + config.kind + "'");
    }
    if (config.q && !uses_q(config.kind)) {
        throw UsageError("--q does not apply to --kind " + config.kind);
    }
    if (config.phi && !uses_phi(config.kind)) {
        throw UsageError("--phi does not apply to --kind " + config.kind);
    }
    if (config.kind == "phiq" && !config.phi) {
        throw UsageError("--kind phiq requires --phi");
    }
    if (uses_q(config.kind) && !config.q) {
        throw UsageError("--kind " + config.kind + " requires --q");
    }
}

MatrixDocument build(const CommandConfig &config)
{
    validate_kind(config);
    const std::size_t n = config.size;
    const std::string &kind = config.kind;
    const std::optional<Rational> phi = parsed_phi(config);
    MatrixDocument doc;
    doc.kind = kind;
    doc.q = config.q;
    if (kind == "pascal") {
        doc.matrix = build_from_c(CSequence::exponential(), n);
    } else if (kind == "geometric") {
        doc.matrix = build_from_c(CSequence::geometric(), n);
    } else if (kind == "phiq") {
        doc.phi = phi;
        doc.matrix = phi_q_matrix(*phi, modulus(config), n);
    } else if (kind == "fractal") {
        const Index q = modulus(config);
        doc.phi = phi ? *phi : Rational(static_cast<std::int64_t>(q));
        doc.matrix = fractal_matrix(*doc.phi, q, n);
    } else if (kind == "qumbral") {
        doc.matrix = q_umbral_matrix(Rational(*config.q), n);
    } else if (kind == "qumbral-inverse") {
        doc.matrix = q_umbral_inverse(Rational(*config.q), n);
    } else if (kind == "zero-overlay") {
        doc.matrix = zero_overlay_matrix(modulus(config), n);
    } else {
        doc.matrix = t_matrix(modulus(config), n);
    }
    return doc;
}

std::string render(const MatrixDocument &doc, const std::string &format)
{
    if (format == "json") {
        return to_json(doc) + "\n";
    }
    if (format == "csv") {
        return to_csv(doc.matrix);
    }
    if (format == "pbm") {
        return to_pbm(doc.matrix);
    }
    throw UsageError("unknown format '" + format + "'");
}

void emit(const CommandConfig &config, const std::string &text, std::ostream &out)
{
    if (config.output.empty()) {
        out << text;
        return;
    }
    std::ofstream file(config.output, std::ios::binary);
    if (!file) {
        throw UsageError("cannot open '" + config.output + "' for writing");
    }
    file << text;
    if (!file) {
        throw UsageError("failed writing '" + config.output + "'");
    }
}

Index parse_index(const std::string &text, const char *what)
{
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        if (!text.empty() && text[0] == '-') {
            throw std::invalid_argument("negative");
        }
        v = std::stoull(text, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used == 0 || used != text.size()) {
        throw UsageError(std::string(what) + " must be a non-negative integer, got '" + text + "'");
    }
    return v;
}

std::vector<Rational> parse_list(const std::string &text)
{
    std::vector<Rational> values;
    std::istringstream in(text);
    std::string cell;
    while (std::getline(in, cell, ',')) {
        try {
            values.push_back(Rational::parse(cell));
        } catch (const Error &e) {
            throw UsageError("series '" + text + "': " + e.what());
        }
    }
    if (values.empty()) {
        throw UsageError("empty series");
    }
    return values;
}

// Lists with at most q entries are digit generators, extended by
// a_{qn+i} = a_i a_n; longer lists are taken literally and validated.
Polynomial series_operand(const std::string &text, Index q, Index max_degree)
{
    std::vector<Rational> values = parse_list(text);
    if (values.size() <= q) {
        values.resize(q);
        return fractal_series(values, q, max_degree);
    }
    return Polynomial(std::move(values)).truncated(max_degree);
}

int cmd_eval(const CommandConfig &config, std::ostream &out)
{
    if (config.operands.size() != 2) {
        throw UsageError("eval takes two indices: N M");
    }
    const Index n = parse_index(config.operands[0], "N");
    const Index m = parse_index(config.operands[1], "M");
    Rational value;
    if (m > n) {
        validate_kind(config);
    } else if (config.kind == "fractal") {
        validate_kind(config);
        const Index q = modulus(config);
        const std::optional<Rational> phi = parsed_phi(config);
        value = phi ? fast_gbinom_fractal(q, n, m, *phi) : fast_gbinom_fractal(q, n, m);
    } else {
        CommandConfig sized = config;
        sized.size = n + 1;
        value = build(sized).matrix(n, m);
    }
    emit(config, value.to_string() + "\n", out);
    return static_cast<int>(Exit::ok);
}

int cmd_verify(const CommandConfig &config, std::ostream &out)
{
    std::string suite = config.suite;
    if (!config.kind.empty()) {
        if (config.kind != "primes-check") {
            throw UsageError("verify accepts only --kind primes-check");
        }
        if (!suite.empty() && suite != "primes") {
            throw UsageError("--kind primes-check conflicts with --suite " + suite);
        }
        suite = "primes";
    }
    if (suite.empty()) {
        throw UsageError("verify requires --suite");
    }
    const auto &names = suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end()) {
        throw UsageError("unknown suite '" + suite + "'");
    }
    const Report report = run_suite(suite, config.size);
    emit(config, to_json(report) + "\n", out);
    return static_cast<int>(report.pass ? Exit::ok : Exit::verification_failed);
}

int cmd_decompose(const CommandConfig &config, std::ostream &out)
{
    const MatrixDocument doc = build(config);
    const PhiCoordinates coords = phi_coordinates(doc.matrix, config.size - 1);
    emit(config, to_json(coords) + "\n", out);
    return static_cast<int>(Exit::ok);
}

int cmd_convolve(const CommandConfig &config, std::ostream &out)
{
    if (config.operands.size() != 2) {
        throw UsageError("convolve takes two series: A B");
    }
    if (!config.q || *config.q < 2) {
        throw UsageError("convolve requires --q >= 2");
    }
    const Index q = static_cast<Index>(*config.q);
    const Index max_degree = config.size - 1;
    const Polynomial a = series_operand(config.operands[0], q, max_degree);
    const Polynomial b = series_operand(config.operands[1], q, max_degree);
    emit(config, series_to_json(carryless_convolve(a, b, q, max_degree), max_degree) + "\n", out);
    return static_cast<int>(Exit::ok);
}

void add_common(CLI::App *sub, CommandConfig &config)
{
    sub->add_option("--kind", config.kind, "Matrix kind");
    sub->add_option("--q", config.q, "Modulus q (for qumbral: the parameter q)");
    sub->add_option("--phi", config.phi, "Rational parameter phi, e.g. 7 or -3/2");
    sub->add_option("--size", config.size, "Block size N")->check(CLI::PositiveNumber);
    sub->add_option("--output,-o", config.output, "Write to this path instead of stdout");
}

} // namespace

std::optional<CommandConfig> parse(const std::vector<std::string> &args, std::ostream &out, std::ostream &err,
                                   int &status)
{
    CommandConfig config;
    CLI::App app{"Generalized Pascal matrices: generation, evaluation and verification", "gpm"};
    app.require_subcommand(1);

    auto *gen = app.add_subcommand("gen", "Write a matrix block (json, csv or pbm)");
    add_common(gen, config);
    gen->add_option("--format", config.format, "json | csv | pbm")->check(CLI::IsMember({"json", "csv", "pbm"}));

    auto *eval = app.add_subcommand("eval", "Print one entry (n, m)");
    add_common(eval, config);
    eval->add_option("indices", config.operands, "N M");

    auto *verify = app.add_subcommand("verify", "Run an invariant suite and print the JSON report");
    add_common(verify, config);
    verify->add_option("--suite", config.suite, "Suite name");

    auto *decompose = app.add_subcommand("decompose", "Print the phi_q coordinates {q: beta}");
    add_common(decompose, config);

    auto *convolve = app.add_subcommand("convolve", "Carryless product of two fractal series");
    add_common(convolve, config);
    convolve->add_option("series", config.operands, "A B as comma-separated rationals");

    auto *exp = app.add_subcommand("export", "Write a matrix block, PBM by default");
    add_common(exp, config);
    exp->add_option("--format", config.format, "json | csv | pbm")->check(CLI::IsMember({"json", "csv", "pbm"}));

    std::vector<const char *> argv;
    argv.push_back("gpm");
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &e) {
        status = app.exit(e, out, err);
        return std::nullopt;
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        status = static_cast<int>(Exit::usage);
        return std::nullopt;
    }
    config.command = app.get_subcommands().front()->get_name();
    if (config.format.empty()) {
        config.format = config.command == "export" ? "pbm" : "json";
    }
    return config;
}

int execute(const CommandConfig &config, std::ostream &out, std::ostream &err)
{
    try {
        if (config.size < 1) {
            throw UsageError("--size must be >= 1");
        }
        if (config.command == "gen" || config.command == "export") {
            emit(config, render(build(config), config.format), out);
            return static_cast<int>(Exit::ok);
        }
        if (config.command == "eval") {
            return cmd_eval(config, out);
        }
        if (config.command == "verify") {
            return cmd_verify(config, out);
        }
        if (config.command == "decompose") {
            return cmd_decompose(config, out);
        }
        if (config.command == "convolve") {
            return cmd_convolve(config, out);
        }
        throw UsageError("unknown command '" + config.command + "'");
    } catch (const UsageError &e) {
        err << "gpm: " << e.what() << "\n";
    } catch (const Error &e) {
        err << "gpm: " << e.what() << "\n";
    } catch (const std::invalid_argument &e) {
        err << "gpm: " << e.what() << "\n";
    } catch (const std::out_of_range &e) {
        err << "gpm: " << e.what() << "\n";
    }
    return static_cast<int>(Exit::usage);
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    int status = 0;
    const auto config = parse(args, out, err, status);
    if (!config) {
        return status;
    }
    return execute(*config, out, err);
}

} // namespace gpm::cli
