#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eedist/dataset.hpp"
#include "eedist/metric.hpp"
#include "eedist/sax.hpp"

namespace eedist {

inline constexpr double kDefaultCompressionRatio = 4.0;
inline constexpr int kDefaultAlphaLo = 3;
inline constexpr int kDefaultAlphaHi = 10;
inline const std::vector<double> kDefaultLambdaGrid = {0.0, 0.25, 0.5, 0.75, 1.0};

struct AlphaRange {
    int lo = kDefaultAlphaLo;
    int hi = kDefaultAlphaHi;
};

struct TuneCell {
    int alpha = 0;
    double lambda = 0.0;
    double error = 0.0;

    bool operator==(const TuneCell&) const = default;
};

struct TuneReport {
    std::string dataset;
    MetricKind kind = MetricKind::Ed;
    int best_alpha = 0;
    double best_lambda = 0.0;
    double train_error = 0.0;
    std::vector<TuneCell> grid;

    bool operator==(const TuneReport&) const = default;
};

struct EvalReport {
    std::string dataset;
    MetricKind kind = MetricKind::Ed;
    int alpha = 0;
    double lambda = 0.0;
    double test_error = 0.0;
    std::size_t instance_count = 0;

    bool operator==(const EvalReport&) const = default;
};

struct Summary {
    double mean = 0.0;
    // Population standard deviation.
    double stddev = 0.0;
    std::size_t report_count = 0;

    bool operator==(const Summary&) const = default;
};

struct MetricSummary {
    MetricKind kind = MetricKind::Ed;
    Summary summary;

    bool operator==(const MetricSummary&) const = default;
};

struct SymbolizedSet {
    std::vector<SaxWord> words;
    std::vector<int> labels;
    SaxParams params;
};

/// Symbolization parameters for a dataset: the segment count comes from the
/// first series' length and the compression ratio.
SaxParams tuned_params(const LabeledDataset& train, int alpha, double ratio);

SymbolizedSet symbolize_set(const LabeledDataset& ds, const SaxParams& params);

/// Word-level distance for the symbol metrics; MINDIST picks up the shared
/// params. Euclidean is rejected (it never symbolizes).
double word_distance(const SaxWord& a, const SaxWord& b, const MetricSpec& metric,
                     const SaxParams& params);

double euclidean_distance(const TimeSeries& a, const TimeSeries& b);

/// Label of the nearest training word; distance ties go to the lowest
/// training index.
int nn1_classify(const SaxWord& query, const SymbolizedSet& train, const MetricSpec& metric);

/// Euclidean 1-NN over series that are already z-normalized.
int nn1_classify_euclidean(const TimeSeries& query, const std::vector<TimeSeries>& train,
                           const std::vector<int>& labels);

/// Leave-one-out 1-NN error over an already-symbolized training set.
double loocv_error(const SymbolizedSet& train, const MetricSpec& metric);

/// Symbolizing (or, for Euclidean, normalizing) convenience overload.
double loocv_error(const LabeledDataset& train, const MetricSpec& metric, int alpha,
                   double ratio);

/// Evaluates loocv_error over the (alpha, lambda) grid and returns the
/// minimizing cell, ties broken by smaller alpha then smaller lambda. For EED,
/// when the minimum sits at the top of the lambda grid and the error fell
/// strictly over the last two lambda steps, the grid is extended in 0.25 steps
/// until the error stops decreasing or lambda reaches 4. Euclidean has nothing
/// to tune and reports a single cell.
TuneReport grid_search(const LabeledDataset& train, MetricKind kind, AlphaRange alphas,
                       const std::vector<double>& lambda_grid, double ratio);

/// 1-NN predictions for every test instance.
std::vector<int> classify_all(const LabeledDataset& train, const LabeledDataset& test,
                              const MetricSpec& metric, int alpha, double ratio);

EvalReport evaluate(const LabeledDataset& train, const LabeledDataset& test,
                    const MetricSpec& metric, int alpha, double ratio);

/// Mean and population standard deviation of the test errors.
Summary summarize(const std::vector<EvalReport>& reports);

}  // namespace eedist
