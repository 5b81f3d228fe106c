#include "eedist/report_io.hpp"

#include <cstdarg>
#include <cstdio>

#include "eedist/errors.hpp"
#include "json.hpp"

namespace eedist {

// ADL hooks for nlohmann::json.
static void to_json(nlohmann::json& j, const MetricKind& kind) { j = to_string(kind); }
static void from_json(const nlohmann::json& j, MetricKind& kind) {
    kind = metric_kind_from_string(j.get<std::string>());
}

static void to_json(nlohmann::json& j, const TuneCell& c) {
    j = nlohmann::json{{"alpha", c.alpha}, {"lambda", c.lambda}, {"error", c.error}};
}
static void from_json(const nlohmann::json& j, TuneCell& c) {
    j.at("alpha").get_to(c.alpha);
    j.at("lambda").get_to(c.lambda);
    j.at("error").get_to(c.error);
}

static void to_json(nlohmann::json& j, const TuneReport& r) {
    j = nlohmann::json{{"dataset", r.dataset},         {"metric", r.kind},
                       {"best_alpha", r.best_alpha},   {"best_lambda", r.best_lambda},
                       {"train_error", r.train_error}, {"grid", r.grid}};
}
static void from_json(const nlohmann::json& j, TuneReport& r) {
    j.at("dataset").get_to(r.dataset);
    j.at("metric").get_to(r.kind);
    j.at("best_alpha").get_to(r.best_alpha);
    j.at("best_lambda").get_to(r.best_lambda);
    j.at("train_error").get_to(r.train_error);
    j.at("grid").get_to(r.grid);
}

static void to_json(nlohmann::json& j, const EvalReport& r) {
    j = nlohmann::json{{"dataset", r.dataset},       {"metric", r.kind},
                       {"alpha", r.alpha},           {"lambda", r.lambda},
                       {"test_error", r.test_error}, {"instances", r.instance_count}};
}
static void from_json(const nlohmann::json& j, EvalReport& r) {
    j.at("dataset").get_to(r.dataset);
    j.at("metric").get_to(r.kind);
    j.at("alpha").get_to(r.alpha);
    j.at("lambda").get_to(r.lambda);
    j.at("test_error").get_to(r.test_error);
    j.at("instances").get_to(r.instance_count);
}

static void to_json(nlohmann::json& j, const MetricSummary& s) {
    j = nlohmann::json{{"metric", s.kind},
                       {"mean", s.summary.mean},
                       {"std", s.summary.stddev},
                       {"count", s.summary.report_count}};
}
static void from_json(const nlohmann::json& j, MetricSummary& s) {
    j.at("metric").get_to(s.kind);
    j.at("mean").get_to(s.summary.mean);
    j.at("std").get_to(s.summary.stddev);
    j.at("count").get_to(s.summary.report_count);
}

static void to_json(nlohmann::json& j, const BenchReport& r) {
    j = nlohmann::json{{"reports", r.reports}, {"summaries", r.summaries}};
}
static void from_json(const nlohmann::json& j, BenchReport& r) {
    j.at("reports").get_to(r.reports);
    j.at("summaries").get_to(r.summaries);
}

namespace {

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

template <typename T>
T parse_as(const std::string& text, const char* what) {
    try {
        return nlohmann::json::parse(text).get<T>();
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(std::string("invalid ") + what + " json: " + e.what());
    }
}

void append_line(std::string& out, const char* fmt, ...)
    __attribute__((format(printf, 2, 3)));
void append_line(std::string& out, const char* fmt, ...) {
    char buf[256];
    va_list args;
    va_start(args, fmt);
    std::vsnprintf(buf, sizeof(buf), fmt, args);
    va_end(args);
    out += buf;
    out += '\n';
}

}  // namespace

std::string to_json_text(const TuneReport& report) { return dump(nlohmann::json(report)); }
std::string to_json_text(const EvalReport& report) { return dump(nlohmann::json(report)); }
std::string to_json_text(const BenchReport& report) { return dump(nlohmann::json(report)); }

TuneReport tune_report_from_json(const std::string& text) {
    return parse_as<TuneReport>(text, "tune report");
}
EvalReport eval_report_from_json(const std::string& text) {
    return parse_as<EvalReport>(text, "eval report");
}
BenchReport bench_report_from_json(const std::string& text) {
    return parse_as<BenchReport>(text, "bench report");
}

std::string render_table(const TuneReport& report) {
    std::string out;
    append_line(out, "dataset %s  metric %s", report.dataset.c_str(),
                to_string(report.kind).c_str());
    append_line(out, "%5s  %6s  %8s", "alpha", "lambda", "error");
    for (const TuneCell& cell : report.grid) {
        append_line(out, "%5d  %6.2f  %8.6f", cell.alpha, cell.lambda, cell.error);
    }
    append_line(out, "best alpha %d  lambda %.2f  train error %.6f", report.best_alpha,
                report.best_lambda, report.train_error);
    return out;
}

std::string render_table(const BenchReport& report) {
    std::string out;
    append_line(out, "%-16s %-10s %5s %7s %11s %10s", "dataset", "metric", "alpha", "lambda",
                "test_error", "instances");
    for (const EvalReport& r : report.reports) {
        append_line(out, "%-16s %-10s %5d %7.2f %11.6f %10zu", r.dataset.c_str(),
                    to_string(r.kind).c_str(), r.alpha, r.lambda, r.test_error,
                    r.instance_count);
    }
    for (const MetricSummary& s : report.summaries) {
        append_line(out, "%-16s %-10s %5s %7s %11.6f %10zu", "MEAN",
                    to_string(s.kind).c_str(), "", "", s.summary.mean,
                    s.summary.report_count);
        append_line(out, "%-16s %-10s %5s %7s %11.6f %10s", "STD", to_string(s.kind).c_str(),
                    "", "", s.summary.stddev, "");
    }
    return out;
}

std::string render_csv(const TuneReport& report) {
    std::string out;
    append_line(out, "alpha,lambda,error");
    for (const TuneCell& cell : report.grid) {
        append_line(out, "%d,%.17g,%.17g", cell.alpha, cell.lambda, cell.error);
    }
    return out;
}

std::string render_csv(const BenchReport& report) {
    std::string out;
    append_line(out, "dataset,metric,alpha,lambda,test_error,instances");
    for (const EvalReport& r : report.reports) {
        append_line(out, "%s,%s,%d,%.17g,%.17g,%zu", r.dataset.c_str(),
                    to_string(r.kind).c_str(), r.alpha, r.lambda, r.test_error,
                    r.instance_count);
    }
    for (const MetricSummary& s : report.summaries) {
        append_line(out, "MEAN,%s,,,%.17g,%zu", to_string(s.kind).c_str(), s.summary.mean,
                    s.summary.report_count);
        append_line(out, "STD,%s,,,%.17g,", to_string(s.kind).c_str(), s.summary.stddev);
    }
    return out;
}

}  // namespace eedist
