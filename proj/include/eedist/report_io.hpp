#pragma once

#include <string>
#include <vector>

#include "eedist/eval.hpp"

namespace eedist {

struct BenchReport {
    std::vector<EvalReport> reports;
    std::vector<MetricSummary> summaries;

    bool operator==(const BenchReport&) const = default;
};

std::string to_json_text(const TuneReport& report);
std::string to_json_text(const EvalReport& report);
std::string to_json_text(const BenchReport& report);

TuneReport tune_report_from_json(const std::string& text);
EvalReport eval_report_from_json(const std::string& text);
BenchReport bench_report_from_json(const std::string& text);

std::string render_table(const TuneReport& report);
std::string render_table(const BenchReport& report);

std::string render_csv(const TuneReport& report);
std::string render_csv(const BenchReport& report);

}  // namespace eedist
