#include "ramify/cli.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "ramify/error.hpp"
#include "ramify/report.hpp"

namespace ramify {

namespace {

constexpr std::uint64_t kDefaultSeed = 20240229;

struct Config {
    std::string subcommand;
    std::string field;
    std::string f;
    std::int64_t precision = 32;
    std::int64_t work_precision = ASExtension::kDefaultWorkPrecision;
    int samples = 50;
    std::int64_t p = 0;
    std::int64_t n = 0;
    std::uint64_t q = 0;
    int depth = 5;
    std::string a;
    int trials = 32;
    std::uint64_t seed = kDefaultSeed;
    std::string format = "text";
    std::string out;
    std::string csv;
    std::string batch;
};

struct Outcome {
    int code = kExitPass;
    Json json;
    std::string text;
};

void add_output_options(CLI::App &app, Config &c)
{
    app.add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", c.out, "write the report to this path instead of stdout");
}

std::unique_ptr<CLI::App> make_app(Config &c, bool top_level)
{
    auto app = std::make_unique<CLI::App>("Ramification invariants of Artin-Schreier extensions", "ramify");
    app->require_subcommand(top_level ? 0 : 1, 1);
    if (top_level) {
        app->add_option("--batch", c.batch, "run one command per line of FILE");
        add_output_options(*app, c);
    }

    auto *analyze = app->add_subcommand("analyze", "invariants of alpha^p - alpha = f over k((t))");
    analyze->add_option("--field", c.field, "Fp:3, Fq:9:w^2+1 or Fp(u):3")->required();
    analyze->add_option("--f", c.f, "Laurent series, e.g. \"t^-4 + u*t^-2\"")->required();
    analyze->add_option("--prec", c.precision, "coefficients of f are known below t^prec")->check(CLI::PositiveNumber);
    analyze->add_option("--work-prec", c.work_precision, "precision of inverses and quotients in L")
        ->check(CLI::PositiveNumber);
    analyze->add_option("--samples", c.samples, "random samples per verifier")->check(CLI::PositiveNumber);
    analyze->add_option("--seed", c.seed, "seed for every randomized check");
    add_output_options(*analyze, c);

    auto *tower = app->add_subcommand("tower", "the defect tower alpha^p - alpha = (a + y) / x^n");
    tower->add_option("--p", c.p, "characteristic")->required();
    tower->add_option("--n", c.n, "pole order, coprime to p")->required();
    tower->add_option("--q", c.q, "order of the residue field F_q")->required();
    tower->add_option("--depth", c.depth, "number of blow-up steps");
    tower->add_option("--a", c.a, "element of F_q outside F_p (default: the generator w)");
    tower->add_option("--trials", c.trials, "identity-test trials per level")->check(CLI::PositiveNumber);
    tower->add_option("--seed", c.seed, "seed for the identity test");
    tower->add_option("--csv", c.csv, "also write the level table as CSV");
    add_output_options(*tower, c);

    auto *selftest = app->add_subcommand("selftest", "run the acceptance grid");
    selftest->add_option("--seed", c.seed, "seed for every randomized check");
    add_output_options(*selftest, c);
    return app;
}

void write_file(const std::string &path, const std::string &contents)
{
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw Error(ErrorKind::InvalidSpec, "cannot write '" + path + "'");
    }
    f << contents;
}

Outcome run_analyze(const Config &c)
{
    const Field k = parse_field(c.field);
    const LaurentSeries f = parse_series(c.f, k, c.precision);
    const ASExtension ext(f, c.work_precision);
    AnalysisOptions options;
    options.samples = c.samples;
    options.seed = c.seed;
    const InvariantReport r = analyze(ext, options);
    const AnalyzeInput in{c.field, c.f, c.precision, c.work_precision, c.samples, c.seed};
    return {r.all_pass() ? kExitPass : kExitVerifierFailure, analyze_json(in, r), analyze_text(in, r)};
}

Outcome run_tower(const Config &c)
{
    TowerSpec spec;
    spec.p = c.p;
    spec.n = c.n;
    spec.q = c.q;
    spec.depth = c.depth;
    if (!c.a.empty()) {
        spec.a = parse_residue(c.a, finite_field_of_order(c.q));
    }
    const TowerAnalysis t = analyze_tower(spec, c.trials, c.seed);
    if (!c.csv.empty()) {
        write_file(c.csv, tower_csv(t.levels));
    }
    return {t.pass() ? kExitPass : kExitVerifierFailure, tower_json(t, c.trials, c.seed), tower_text(t)};
}

Outcome run_selftest(const Config &c)
{
    SelftestOptions options;
    options.seed = c.seed;
    const auto results = run_selftest(options);
    const bool all = std::all_of(results.begin(), results.end(), [](const auto &r) { return r.pass; });
    return {all ? kExitPass : kExitVerifierFailure, selftest_json(results, c.seed), selftest_text(results)};
}

Outcome failure(const std::string &command, int code, const std::string &kind, const std::string &message)
{
    Json j;
    j["schema"] = kSchema;
    j["command"] = command;
    // Error::what() already leads with the kind; JSON carries it separately.
    const std::string prefix = kind + ": ";
    const std::string bare = message.starts_with(prefix) ? message.substr(prefix.size()) : message;
    j["error"] = Json{{"kind", kind}, {"message", bare}};
    j["pass"] = false;
    return {code, j, "error: " + message + "\n"};
}

Outcome execute(const Config &c)
{
    try {
        if (c.subcommand == "analyze") {
            return run_analyze(c);
        }
        if (c.subcommand == "tower") {
            return run_tower(c);
        }
        return run_selftest(c);
    } catch (const Error &e) {
        return failure(c.subcommand, exit_code_for(e), std::string(to_string(e.kind())), e.what());
    } catch (const std::exception &e) {
        return failure(c.subcommand, exit_code_for(e), "Internal", e.what());
    }
}

std::string render(const Outcome &o, const std::string &format)
{
    return format == "json" ? o.json.dump(2) + "\n" : o.text;
}

// Writes to --out when given, otherwise to the stream.
void emit(const std::string &rendered, const std::string &path, std::ostream &out)
{
    if (path.empty()) {
        out << rendered;
    } else {
        write_file(path, rendered);
    }
}

// Parses one command (already tokenized or as a single line) into a config.
template <class Input>
int parse_command(Input input, Config &c, std::ostream &out, std::ostream &err, bool top_level)
{
    auto app = make_app(c, top_level);
    try {
        if constexpr (std::is_same_v<Input, std::string>) {
            app->parse(input, false);
        } else {
            std::reverse(input.begin(), input.end());
            app->parse(input);
        }
    } catch (const CLI::CallForHelp &) {
        out << app->help();
        return -1;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    }
    if (!app->get_subcommands().empty()) {
        c.subcommand = app->get_subcommands().front()->get_name();
    }
    return kExitPass;
}

int run_batch(const Config &top, std::ostream &out, std::ostream &err)
{
    std::ifstream in(top.batch);
    if (!in) {
        err << "error: cannot read batch file '" << top.batch << "'\n";
        return kExitInvalidInput;
    }
    Json results = Json::array();
    std::string text;
    int worst = kExitPass;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        Config c;
        std::ostringstream parse_err;
        const int parsed = parse_command(line, c, out, parse_err, false);
        Outcome o;
        if (parsed != kExitPass) {
            o = failure(c.subcommand, kExitInvalidInput, "ParseError", parse_err.str());
        } else {
            o = execute(c);
            if (!c.out.empty()) {
                write_file(c.out, render(o, c.format));
            }
        }
        worst = std::max(worst, o.code);
        Json entry = Json{{"line", line_no}, {"command", line}, {"exit_code", o.code}};
        entry["report"] = o.json;
        results.push_back(entry);
        text += "== line " + std::to_string(line_no) + ": " + line + "\n" + o.text;
    }
    Json doc;
    doc["schema"] = kSchema;
    doc["command"] = "batch";
    doc["results"] = results;
    doc["exit_code"] = worst;
    emit(top.format == "json" ? doc.dump(2) + "\n" : text, top.out, out);
    return worst;
}

} // namespace

int exit_code_for(const std::exception &e)
{
    const auto *err = dynamic_cast<const Error *>(&e);
    if (err == nullptr) {
        return kExitVerifierFailure;
    }
    return err->kind() == ErrorKind::InsufficientPrecision ? kExitInsufficientPrecision : kExitInvalidInput;
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    Config c;
    const int parsed = parse_command(args, c, out, err, true);
    if (parsed < 0) {
        return kExitPass;
    }
    if (parsed != kExitPass) {
        return parsed;
    }
    try {
        if (!c.batch.empty()) {
            if (!c.subcommand.empty()) {
                err << "error: --batch cannot be combined with a subcommand\n";
                return kExitInvalidInput;
            }
            return run_batch(c, out, err);
        }
        if (c.subcommand.empty()) {
            err << "error: a subcommand (analyze, tower, selftest) or --batch is required\n";
            return kExitInvalidInput;
        }
        const Outcome o = execute(c);
        if (o.json.contains("error")) {
            err << o.text;
            if (c.format != "json") {
                return o.code;
            }
        }
        emit(render(o, c.format), c.out, out);
        return o.code;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e);
    }
}

} // namespace ramify
