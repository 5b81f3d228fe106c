#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "eedist/dataset.hpp"
#include "eedist/errors.hpp"
#include "eedist/eval.hpp"
#include "eedist/metric.hpp"
#include "eedist/report_io.hpp"
#include "eedist/sax.hpp"
#include "eedist/symbolic.hpp"
#include "eedist/vptree.hpp"

namespace {

using namespace eedist;

struct RunConfig {
    std::string left;
    std::string right;
    std::string metric = "eed";
    std::string metrics_text = "ed,eed,sax,euclidean";
    std::string alpha_range_text = "3..10";
    int alpha = 26;
    double lambda = 1.0;
    std::string lambda_grid_text = "0,0.25,0.5,0.75,1";
    double ratio = kDefaultCompressionRatio;
    std::size_t segments = 0;
    std::string format = "table";
    std::string train_path;
    std::string test_path;
    std::vector<std::string> data_dirs;
    std::string input_file;
    std::string values_text;
    std::string out_path;
    std::uint64_t seed = 42;
    std::vector<std::string> queries;
    double radius = 0.0;
};

int parse_int(const std::string& text) {
    std::size_t consumed = 0;
    int value = 0;
    try {
        value = std::stoi(text, &consumed);
    } catch (const std::exception&) {
        throw InvalidParameter("'" + text + "' is not an integer");
    }
    if (consumed != text.size()) {
        throw InvalidParameter("'" + text + "' is not an integer");
    }
    return value;
}

double parse_real(const std::string& text) {
    std::size_t consumed = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &consumed);
    } catch (const std::exception&) {
        throw InvalidParameter("'" + text + "' is not a number");
    }
    if (consumed != text.size()) {
        throw InvalidParameter("'" + text + "' is not a number");
    }
    return value;
}

AlphaRange parse_alpha_range(const std::string& text) {
    const std::size_t pos = text.find("..");
    if (pos == std::string::npos) {
        const int a = parse_int(text);
        return AlphaRange{a, a};
    }
    return AlphaRange{parse_int(text.substr(0, pos)), parse_int(text.substr(pos + 2))};
}

std::vector<std::string> split_on_commas(const std::string& text) {
    std::vector<std::string> parts;
    std::string current;
    for (const char ch : text) {
        if (ch == ',') {
            parts.push_back(current);
            current.clear();
        } else if (ch != ' ') {
            current.push_back(ch);
        }
    }
    parts.push_back(current);
    return parts;
}

std::vector<double> parse_lambda_grid(const std::string& text) {
    std::vector<double> grid;
    for (const std::string& part : split_on_commas(text)) {
        if (!part.empty()) {
            grid.push_back(parse_real(part));
        }
    }
    return grid;
}

TimeSeries parse_values(const std::string& text) {
    TimeSeries values;
    for (const std::string& part : split_on_commas(text)) {
        if (!part.empty()) {
            values.push_back(parse_real(part));
        }
    }
    return values;
}

// Lambda is meaningful only for EED; an explicit flag anywhere else is a
// usage error rather than a silent no-op.
MetricSpec make_spec(MetricKind kind, double lambda, bool lambda_given) {
    MetricSpec spec{kind, std::nullopt};
    if (kind == MetricKind::Eed) {
        spec.lambda = lambda;
    } else if (lambda_given) {
        throw InvalidParameter(to_string(kind) + " does not take a lambda value");
    }
    validate(spec);
    return spec;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::fputs(text.c_str(), stdout);
        return;
    }
    std::ofstream out(out_path);
    if (!out) {
        throw IoError("cannot open '" + out_path + "' for writing");
    }
    out << text;
    if (!out) {
        throw IoError("failed while writing '" + out_path + "'");
    }
}

LabeledDataset load_train_only(const RunConfig& cfg, const char* command) {
    if (!cfg.data_dirs.empty()) {
        return load_ucr_pair(cfg.data_dirs.front()).train;
    }
    if (!cfg.train_path.empty()) {
        return load_ucr(cfg.train_path, DatasetRole::Train);
    }
    throw InvalidParameter(std::string(command) + " needs --train or --data");
}

DatasetPair load_pair(const RunConfig& cfg, const char* command) {
    if (!cfg.data_dirs.empty()) {
        return load_ucr_pair(cfg.data_dirs.front());
    }
    if (!cfg.train_path.empty() && !cfg.test_path.empty()) {
        return DatasetPair{load_ucr(cfg.train_path, DatasetRole::Train),
                           load_ucr(cfg.test_path, DatasetRole::Test)};
    }
    throw InvalidParameter(std::string(command) + " needs --train and --test, or --data");
}

void run_dist(const RunConfig& cfg, bool lambda_given) {
    const MetricKind kind = metric_kind_from_string(cfg.metric);
    const MetricSpec spec = make_spec(kind, cfg.lambda, lambda_given);
    const auto alpha = static_cast<std::size_t>(cfg.alpha);
    const SymbolicSequence s = SymbolicSequence::from_letters(cfg.left, alpha);
    const SymbolicSequence t = SymbolicSequence::from_letters(cfg.right, alpha);
    std::printf("%.6f\n", symbolic_distance(s, t, spec));
}

void run_symbolize(const RunConfig& cfg) {
    std::vector<TimeSeries> series;
    if (!cfg.values_text.empty()) {
        series.push_back(parse_values(cfg.values_text));
    } else if (!cfg.input_file.empty()) {
        const LabeledDataset ds = load_ucr(cfg.input_file);
        for (const LabeledSeries& inst : ds.instances) {
            series.push_back(inst.series);
        }
    } else {
        throw InvalidParameter("symbolize needs --values or --file");
    }
    if (series.empty() || series.front().empty()) {
        throw InvalidParameter("symbolize needs at least one nonempty series");
    }
    const std::size_t segments =
        cfg.segments > 0 ? cfg.segments : segments_for(series.front().size(), cfg.ratio);
    const SaxParams params = SaxParams::make(cfg.alpha, segments);

    std::vector<std::string> words;
    words.reserve(series.size());
    for (const TimeSeries& t : series) {
        words.push_back(symbolize(t, params).word.to_letters());
    }

    std::string out;
    if (cfg.format == "json") {
        nlohmann::json j{{"alphabet_size", cfg.alpha}, {"segments", segments}, {"words", words}};
        out = j.dump(2) + "\n";
    } else {
        if (cfg.format == "csv") {
            out += "word\n";
        }
        for (const std::string& w : words) {
            out += w;
            out += '\n';
        }
    }
    emit(out, cfg.out_path);
}

void run_tune(const RunConfig& cfg) {
    const LabeledDataset train = load_train_only(cfg, "tune");
    const MetricKind kind = metric_kind_from_string(cfg.metric);
    const TuneReport report = grid_search(train, kind, parse_alpha_range(cfg.alpha_range_text),
                                          parse_lambda_grid(cfg.lambda_grid_text), cfg.ratio);
    std::string out;
    if (cfg.format == "json") {
        out = to_json_text(report);
    } else if (cfg.format == "csv") {
        out = render_csv(report);
    } else {
        out = render_table(report);
    }
    emit(out, cfg.out_path);
}

void run_eval(const RunConfig& cfg, bool lambda_given) {
    const DatasetPair pair = load_pair(cfg, "eval");
    const MetricKind kind = metric_kind_from_string(cfg.metric);
    const MetricSpec spec = make_spec(kind, cfg.lambda, lambda_given);
    const EvalReport report = evaluate(pair.train, pair.test, spec, cfg.alpha, cfg.ratio);
    std::string out;
    if (cfg.format == "json") {
        out = to_json_text(report);
    } else if (cfg.format == "csv") {
        out = render_csv(BenchReport{{report}, {}});
    } else {
        out = render_table(BenchReport{{report}, {}});
    }
    emit(out, cfg.out_path);
}

void run_bench(const RunConfig& cfg) {
    std::vector<MetricKind> kinds;
    for (const std::string& token : split_on_commas(cfg.metrics_text)) {
        if (!token.empty()) {
            kinds.push_back(metric_kind_from_string(token));
        }
    }
    if (kinds.empty()) {
        throw InvalidParameter("bench needs at least one metric");
    }
    const AlphaRange alphas = parse_alpha_range(cfg.alpha_range_text);
    const std::vector<double> lambda_grid = parse_lambda_grid(cfg.lambda_grid_text);

    BenchReport bench;
    for (const std::string& dir : cfg.data_dirs) {
        try {
            const DatasetPair pair = load_ucr_pair(dir);
            for (const MetricKind kind : kinds) {
                const TuneReport tuned =
                    grid_search(pair.train, kind, alphas, lambda_grid, cfg.ratio);
                MetricSpec spec{kind, std::nullopt};
                if (kind == MetricKind::Eed) {
                    spec.lambda = tuned.best_lambda;
                }
                bench.reports.push_back(
                    evaluate(pair.train, pair.test, spec, tuned.best_alpha, cfg.ratio));
            }
        } catch (const std::exception& e) {
            std::fprintf(stderr, "warning: dataset '%s' failed: %s\n", dir.c_str(), e.what());
        }
    }
    if (bench.reports.empty()) {
        throw IoError("all datasets failed");
    }
    for (const MetricKind kind : kinds) {
        std::vector<EvalReport> of_kind;
        for (const EvalReport& r : bench.reports) {
            if (r.kind == kind) {
                of_kind.push_back(r);
            }
        }
        if (!of_kind.empty()) {
            bench.summaries.push_back(MetricSummary{kind, summarize(of_kind)});
        }
    }

    std::string out;
    if (cfg.format == "json") {
        out = to_json_text(bench);
    } else if (cfg.format == "csv") {
        out = render_csv(bench);
    } else {
        out = render_table(bench);
    }
    emit(out, cfg.out_path);
}

std::vector<SymbolicSequence> read_words(const std::string& path, std::size_t alpha) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open '" + path + "' for reading");
    }
    std::vector<SymbolicSequence> words;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (!line.empty()) {
            words.push_back(SymbolicSequence::from_letters(line, alpha));
        }
    }
    return words;
}

void run_index(const RunConfig& cfg, bool lambda_given, bool radius_given) {
    const MetricKind kind = metric_kind_from_string(cfg.metric);
    const MetricSpec spec = make_spec(kind, cfg.lambda, lambda_given);
    const auto alpha = static_cast<std::size_t>(cfg.alpha);
    const MetricIndex index = MetricIndex::build(read_words(cfg.input_file, alpha), spec, cfg.seed);

    std::string table;
    nlohmann::json jqueries = nlohmann::json::array();
    for (const std::string& qtext : cfg.queries) {
        const SymbolicSequence q = SymbolicSequence::from_letters(qtext, alpha);
        const IndexMatch nn = index.query_nn(q);
        nlohmann::json jq{{"query", qtext},
                          {"nn",
                           {{"id", nn.id},
                            {"word", index.item(nn.id).to_letters()},
                            {"distance", nn.distance}}}};
        char line[160];
        std::snprintf(line, sizeof(line), "nn %s -> id=%zu word=%s distance=%.6f\n",
                      qtext.c_str(), nn.id, index.item(nn.id).to_letters().c_str(),
                      nn.distance);
        table += line;
        if (radius_given) {
            const std::vector<IndexMatch> matches = index.query_range(q, cfg.radius);
            nlohmann::json jmatches = nlohmann::json::array();
            std::snprintf(line, sizeof(line), "range %s radius=%.6f -> %zu matches\n",
                          qtext.c_str(), cfg.radius, matches.size());
            table += line;
            for (const IndexMatch& m : matches) {
                jmatches.push_back({{"id", m.id},
                                    {"word", index.item(m.id).to_letters()},
                                    {"distance", m.distance}});
                std::snprintf(line, sizeof(line), "  id=%zu word=%s distance=%.6f\n", m.id,
                              index.item(m.id).to_letters().c_str(), m.distance);
                table += line;
            }
            jq["range"] = {{"radius", cfg.radius}, {"matches", jmatches}};
        }
        jqueries.push_back(jq);
    }

    std::string out;
    if (cfg.format == "json") {
        nlohmann::json j{{"metric", to_string(kind)},
                         {"count", index.size()},
                         {"seed", cfg.seed},
                         {"queries", jqueries}};
        if (kind == MetricKind::Eed) {
            j["lambda"] = *spec.lambda;
        }
        out = j.dump(2) + "\n";
    } else {
        out = table;
    }
    emit(out, cfg.out_path);
}

void add_format_option(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--format", cfg.format, "Output format: table, json, or csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"Symbolic sequence distances and time-series classification"};
    app.require_subcommand(1);

    CLI::App* dist = app.add_subcommand("dist", "Distance between two words over a-z");
    dist->add_option("left", cfg.left, "First word")->required();
    dist->add_option("right", cfg.right, "Second word")->required();
    dist->add_option("--metric", cfg.metric, "ed, eed, or lcss (default eed)");
    CLI::Option* dist_lambda =
        dist->add_option("--lambda", cfg.lambda, "EED frequency factor (default 1)");
    dist->add_option("--alpha", cfg.alpha, "Letter window size (default 26)");
    dist->callback([&] { run_dist(cfg, dist_lambda->count() > 0); });

    CLI::App* symbolize = app.add_subcommand("symbolize", "Turn series into SAX words");
    symbolize->add_option("--values", cfg.values_text, "Comma-separated series values");
    symbolize->add_option("--file", cfg.input_file, "Labeled series file, one per line");
    symbolize->add_option("--alpha", cfg.alpha, "Alphabet size")->required();
    symbolize->add_option("--ratio", cfg.ratio, "Compression ratio (default 4)");
    symbolize->add_option("--segments", cfg.segments, "Word length (overrides --ratio)");
    symbolize->add_option("--out", cfg.out_path, "Write output to a file");
    add_format_option(symbolize, cfg);
    symbolize->callback([&] { run_symbolize(cfg); });

    CLI::App* tune = app.add_subcommand("tune", "Grid-search alpha and lambda on a train set");
    tune->add_option("--train", cfg.train_path, "Training set file");
    tune->add_option("--data", cfg.data_dirs, "Dataset directory with <name>_TRAIN");
    tune->add_option("--metric", cfg.metric, "ed, eed, sax, lcss, or euclidean");
    tune->add_option("--alpha", cfg.alpha_range_text, "Alpha range, e.g. 3..10");
    tune->add_option("--lambdas", cfg.lambda_grid_text, "Lambda grid (default 0,0.25,...,1)");
    tune->add_option("--ratio", cfg.ratio, "Compression ratio (default 4)");
    tune->add_option("--out", cfg.out_path, "Write output to a file");
    add_format_option(tune, cfg);
    tune->callback([&] { run_tune(cfg); });

    CLI::App* eval = app.add_subcommand("eval", "Test error at fixed parameters");
    eval->add_option("--train", cfg.train_path, "Training set file");
    eval->add_option("--test", cfg.test_path, "Test set file");
    eval->add_option("--data", cfg.data_dirs, "Dataset directory with <name>_TRAIN/_TEST");
    eval->add_option("--metric", cfg.metric, "ed, eed, sax, lcss, or euclidean");
    eval->add_option("--alpha", cfg.alpha, "Alphabet size")->required();
    CLI::Option* eval_lambda =
        eval->add_option("--lambda", cfg.lambda, "EED frequency factor (default 1)");
    eval->add_option("--ratio", cfg.ratio, "Compression ratio (default 4)");
    eval->add_option("--out", cfg.out_path, "Write output to a file");
    add_format_option(eval, cfg);
    eval->callback([&] { run_eval(cfg, eval_lambda->count() > 0); });

    CLI::App* bench = app.add_subcommand("bench", "Tune and evaluate datasets end to end");
    bench->add_option("--data", cfg.data_dirs, "Dataset directories (repeatable)")->required();
    bench->add_option("--metrics", cfg.metrics_text, "Metrics (default ed,eed,sax,euclidean)");
    bench->add_option("--alpha", cfg.alpha_range_text, "Alpha range (default 3..10)");
    bench->add_option("--lambdas", cfg.lambda_grid_text, "Lambda grid (default 0,0.25,...,1)");
    bench->add_option("--ratio", cfg.ratio, "Compression ratio (default 4)");
    bench->add_option("--out", cfg.out_path, "Write output to a file");
    add_format_option(bench, cfg);
    bench->callback([&] { run_bench(cfg); });

    CLI::App* index = app.add_subcommand("index", "Exact nearest-neighbor queries over words");
    index->add_option("--file", cfg.input_file, "Word list, one per line")->required();
    index->add_option("--metric", cfg.metric, "ed or eed (default eed)");
    CLI::Option* index_lambda =
        index->add_option("--lambda", cfg.lambda, "EED frequency factor (default 1)");
    index->add_option("--alpha", cfg.alpha, "Letter window size (default 26)");
    index->add_option("--seed", cfg.seed, "Vantage selection seed (default 42)");
    index->add_option("--query", cfg.queries, "Query word (repeatable)");
    CLI::Option* index_radius =
        index->add_option("--radius", cfg.radius, "Also report all items within this radius");
    index->add_option("--out", cfg.out_path, "Write output to a file");
    add_format_option(index, cfg);
    index->callback(
        [&] { run_index(cfg, index_lambda->count() > 0, index_radius->count() > 0); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const InvalidParameter& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
