#include "eedist/eval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "eedist/distances.hpp"
#include "eedist/errors.hpp"

namespace eedist {

namespace {

// Flattened upper-triangle position of the unordered pair (i, j), i < j.
std::size_t tri_index(std::size_t i, std::size_t j, std::size_t n) {
    return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

std::vector<int> labels_of(const LabeledDataset& ds) {
    std::vector<int> labels;
    labels.reserve(ds.instances.size());
    for (const LabeledSeries& inst : ds.instances) {
        labels.push_back(inst.label);
    }
    return labels;
}

std::vector<TimeSeries> normalized_series(const LabeledDataset& ds) {
    std::vector<TimeSeries> out;
    out.reserve(ds.instances.size());
    for (const LabeledSeries& inst : ds.instances) {
        out.push_back(z_normalize(inst.series));
    }
    return out;
}

double squared_euclidean(const TimeSeries& a, const TimeSeries& b) {
    if (a.size() != b.size()) {
        throw InvalidParameter("euclidean distance needs series of equal length");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        sum += d * d;
    }
    return sum;
}

// Index of the smallest dist(j) over j != skip; pass skip >= n to scan all.
// Ascending j with a strict < keeps the lowest index on ties.
template <typename DistFn>
std::size_t argmin_index(std::size_t n, std::size_t skip, DistFn&& dist) {
    std::size_t best = n;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
        if (j == skip) {
            continue;
        }
        const double d = dist(j);
        if (d < best_d) {
            best_d = d;
            best = j;
        }
    }
    return best;
}

template <typename DistFn>
double loocv_generic(const std::vector<int>& labels, DistFn&& dist) {
    const std::size_t n = labels.size();
    if (n < 2) {
        throw InvalidParameter("leave-one-out needs at least two instances");
    }
    std::size_t wrong = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j =
            argmin_index(n, i, [&](std::size_t k) { return dist(i, k); });
        if (labels[j] != labels[i]) {
            ++wrong;
        }
    }
    return static_cast<double>(wrong) / static_cast<double>(n);
}

double loocv_euclidean(const LabeledDataset& train) {
    const std::vector<TimeSeries> series = normalized_series(train);
    return loocv_generic(labels_of(train), [&](std::size_t i, std::size_t j) {
        return squared_euclidean(series[i], series[j]);
    });
}

// Pairwise tables for one alphabet size. EED keeps the integer ED and
// histogram-divergence parts separate so a lambda sweep is a multiply-add
// per pair instead of a fresh DP run.
struct PairTables {
    std::vector<std::uint32_t> ed;
    std::vector<std::uint32_t> divergence;
    std::vector<double> direct;
};

class GridEvaluator {
public:
    GridEvaluator(const LabeledDataset& train, MetricKind kind, double ratio)
        : train_(train), kind_(kind), ratio_(ratio), labels_(labels_of(train)) {}

    double error_at(int alpha, double lambda) {
        const PairTables& t = tables_for(alpha);
        const std::size_t n = labels_.size();
        if (kind_ == MetricKind::Eed) {
            return loocv_generic(labels_, [&](std::size_t i, std::size_t j) {
                const std::size_t k = tri_index(std::min(i, j), std::max(i, j), n);
                return eed_value(t.ed[k], t.divergence[k], lambda);
            });
        }
        return loocv_generic(labels_, [&](std::size_t i, std::size_t j) {
            return t.direct[tri_index(std::min(i, j), std::max(i, j), n)];
        });
    }

private:
    const PairTables& tables_for(int alpha) {
        const auto it = cache_.find(alpha);
        if (it != cache_.end()) {
            return it->second;
        }
        const SymbolizedSet set = symbolize_set(train_, tuned_params(train_, alpha, ratio_));
        const std::size_t n = set.words.size();
        PairTables t;
        const std::size_t pairs = n * (n - 1) / 2;
        if (kind_ == MetricKind::Eed) {
            t.ed.resize(pairs);
            t.divergence.resize(pairs);
        } else {
            t.direct.resize(pairs);
        }
        const MetricSpec plain{kind_, std::nullopt};
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                const std::size_t k = tri_index(i, j, n);
                if (kind_ == MetricKind::Eed) {
                    t.ed[k] = edit_distance(set.words[i].word, set.words[j].word);
                    t.divergence[k] =
                        histogram_divergence(set.words[i].word, set.words[j].word);
                } else if (kind_ == MetricKind::SaxMindist) {
                    t.direct[k] = mindist(set.words[i], set.words[j], set.params);
                } else {
                    t.direct[k] =
                        symbolic_distance(set.words[i].word, set.words[j].word, plain);
                }
            }
        }
        return cache_.emplace(alpha, std::move(t)).first->second;
    }

    const LabeledDataset& train_;
    MetricKind kind_;
    double ratio_;
    std::vector<int> labels_;
    std::map<int, PairTables> cache_;
};

// Better under (error, alpha, lambda): strictly smaller error, then smaller
// alpha, then smaller lambda.
bool better_cell(const TuneCell& a, const TuneCell& b) {
    if (a.error != b.error) return a.error < b.error;
    if (a.alpha != b.alpha) return a.alpha < b.alpha;
    return a.lambda < b.lambda;
}

const TuneCell& best_cell(const std::vector<TuneCell>& grid) {
    const TuneCell* best = nullptr;
    for (const TuneCell& cell : grid) {
        if (best == nullptr || better_cell(cell, *best)) {
            best = &cell;
        }
    }
    return *best;
}

double cell_error(const std::vector<TuneCell>& grid, int alpha, double lambda) {
    for (const TuneCell& cell : grid) {
        if (cell.alpha == alpha && cell.lambda == lambda) {
            return cell.error;
        }
    }
    throw std::logic_error("tuning grid is missing an evaluated cell");
}

}  // namespace

SaxParams tuned_params(const LabeledDataset& train, int alpha, double ratio) {
    if (train.instances.empty()) {
        throw InvalidParameter("dataset '" + train.name + "' is empty");
    }
    return SaxParams::make(alpha, segments_for(train.instances.front().series.size(), ratio));
}

SymbolizedSet symbolize_set(const LabeledDataset& ds, const SaxParams& params) {
    SymbolizedSet out;
    out.params = params;
    out.words.reserve(ds.instances.size());
    out.labels.reserve(ds.instances.size());
    for (const LabeledSeries& inst : ds.instances) {
        out.words.push_back(symbolize(inst.series, params));
        out.labels.push_back(inst.label);
    }
    return out;
}

double word_distance(const SaxWord& a, const SaxWord& b, const MetricSpec& metric,
                     const SaxParams& params) {
    if (metric.kind == MetricKind::SaxMindist) {
        validate(metric);
        return mindist(a, b, params);
    }
    if (metric.kind == MetricKind::Euclidean) {
        throw InvalidParameter("euclidean operates on raw series, not words");
    }
    return symbolic_distance(a.word, b.word, metric);
}

double euclidean_distance(const TimeSeries& a, const TimeSeries& b) {
    return std::sqrt(squared_euclidean(a, b));
}

int nn1_classify(const SaxWord& query, const SymbolizedSet& train, const MetricSpec& metric) {
    if (train.words.empty()) {
        throw InvalidParameter("training set is empty");
    }
    const std::size_t n = train.words.size();
    const std::size_t j = argmin_index(n, n, [&](std::size_t k) {
        return word_distance(query, train.words[k], metric, train.params);
    });
    return train.labels[j];
}

int nn1_classify_euclidean(const TimeSeries& query, const std::vector<TimeSeries>& train,
                           const std::vector<int>& labels) {
    if (train.empty()) {
        throw InvalidParameter("training set is empty");
    }
    if (train.size() != labels.size()) {
        throw InvalidParameter("training series and labels differ in count");
    }
    const std::size_t j = argmin_index(train.size(), train.size(), [&](std::size_t k) {
        return squared_euclidean(query, train[k]);
    });
    return labels[j];
}

double loocv_error(const SymbolizedSet& train, const MetricSpec& metric) {
    validate(metric);
    return loocv_generic(train.labels, [&](std::size_t i, std::size_t j) {
        return word_distance(train.words[i], train.words[j], metric, train.params);
    });
}

double loocv_error(const LabeledDataset& train, const MetricSpec& metric, int alpha,
                   double ratio) {
    validate(metric);
    if (train.instances.size() < 2) {
        throw InvalidParameter("leave-one-out needs at least two instances");
    }
    if (metric.kind == MetricKind::Euclidean) {
        return loocv_euclidean(train);
    }
    return loocv_error(symbolize_set(train, tuned_params(train, alpha, ratio)), metric);
}

TuneReport grid_search(const LabeledDataset& train, MetricKind kind, AlphaRange alphas,
                       const std::vector<double>& lambda_grid, double ratio) {
    if (train.instances.size() < 2) {
        throw InvalidParameter("grid search needs at least two training instances");
    }
    TuneReport report;
    report.dataset = train.name;
    report.kind = kind;

    if (kind == MetricKind::Euclidean) {
        const double err = loocv_euclidean(train);
        report.grid.push_back(TuneCell{0, 0.0, err});
        report.train_error = err;
        return report;
    }

    if (alphas.lo < 2 || alphas.hi > 26 || alphas.lo > alphas.hi) {
        throw InvalidParameter("alpha range must satisfy 2 <= lo <= hi <= 26");
    }

    std::vector<double> lambdas;
    if (kind == MetricKind::Eed) {
        lambdas = lambda_grid;
        if (lambdas.empty()) {
            throw InvalidParameter("eed needs a nonempty lambda grid");
        }
        for (const double l : lambdas) {
            if (!(l >= 0.0)) {
                throw InvalidParameter("frequency factor lambda must be >= 0");
            }
        }
        std::sort(lambdas.begin(), lambdas.end());
        lambdas.erase(std::unique(lambdas.begin(), lambdas.end()), lambdas.end());
    } else {
        lambdas = {0.0};
    }

    GridEvaluator evaluator(train, kind, ratio);
    for (int a = alphas.lo; a <= alphas.hi; ++a) {
        for (const double l : lambdas) {
            report.grid.push_back(TuneCell{a, l, evaluator.error_at(a, l)});
        }
    }

    if (kind == MetricKind::Eed && lambdas.size() >= 3) {
        const TuneCell base_best = best_cell(report.grid);
        const std::size_t k = lambdas.size();
        if (base_best.lambda == lambdas.back()) {
            const double two_back = cell_error(report.grid, base_best.alpha, lambdas[k - 3]);
            const double one_back = cell_error(report.grid, base_best.alpha, lambdas[k - 2]);
            const double at_top = cell_error(report.grid, base_best.alpha, lambdas[k - 1]);
            if (two_back > one_back && one_back > at_top) {
                double current_best = base_best.error;
                double lam = lambdas.back();
                while (lam + 0.25 <= 4.0 + 1e-12) {
                    const double next = lam + 0.25;
                    double column_min = std::numeric_limits<double>::infinity();
                    for (int a = alphas.lo; a <= alphas.hi; ++a) {
                        const double e = evaluator.error_at(a, next);
                        report.grid.push_back(TuneCell{a, next, e});
                        column_min = std::min(column_min, e);
                    }
                    if (!(column_min < current_best)) {
                        break;
                    }
                    current_best = column_min;
                    lam = next;
                }
            }
        }
    }

    const TuneCell& final_best = best_cell(report.grid);
    report.best_alpha = final_best.alpha;
    report.best_lambda = final_best.lambda;
    report.train_error = final_best.error;
    return report;
}

std::vector<int> classify_all(const LabeledDataset& train, const LabeledDataset& test,
                              const MetricSpec& metric, int alpha, double ratio) {
    validate(metric);
    if (train.instances.empty() || test.instances.empty()) {
        throw InvalidParameter("train and test sets must both be nonempty");
    }
    std::vector<int> predictions;
    predictions.reserve(test.instances.size());
    if (metric.kind == MetricKind::Euclidean) {
        const std::vector<TimeSeries> train_series = normalized_series(train);
        const std::vector<int> labels = labels_of(train);
        for (const LabeledSeries& inst : test.instances) {
            predictions.push_back(
                nn1_classify_euclidean(z_normalize(inst.series), train_series, labels));
        }
        return predictions;
    }
    const SaxParams params = tuned_params(train, alpha, ratio);
    const SymbolizedSet strain = symbolize_set(train, params);
    for (const LabeledSeries& inst : test.instances) {
        predictions.push_back(nn1_classify(symbolize(inst.series, params), strain, metric));
    }
    return predictions;
}

EvalReport evaluate(const LabeledDataset& train, const LabeledDataset& test,
                    const MetricSpec& metric, int alpha, double ratio) {
    const std::vector<int> predictions = classify_all(train, test, metric, alpha, ratio);
    EvalReport report;
    report.dataset = train.name.empty() ? test.name : train.name;
    report.kind = metric.kind;
    report.alpha = metric.kind == MetricKind::Euclidean ? 0 : alpha;
    report.lambda = metric.kind == MetricKind::Eed ? *metric.lambda : 0.0;
    report.instance_count = test.instances.size();
    std::size_t wrong = 0;
    for (std::size_t i = 0; i < predictions.size(); ++i) {
        if (predictions[i] != test.instances[i].label) {
            ++wrong;
        }
    }
    report.test_error = static_cast<double>(wrong) / static_cast<double>(predictions.size());
    return report;
}

Summary summarize(const std::vector<EvalReport>& reports) {
    if (reports.empty()) {
        throw InvalidParameter("cannot summarize zero reports");
    }
    Summary s;
    s.report_count = reports.size();
    double sum = 0.0;
    for (const EvalReport& r : reports) {
        sum += r.test_error;
    }
    s.mean = sum / static_cast<double>(reports.size());
    double sq = 0.0;
    for (const EvalReport& r : reports) {
        const double d = r.test_error - s.mean;
        sq += d * d;
    }
    s.stddev = std::sqrt(sq / static_cast<double>(reports.size()));
    return s;
}

}  // namespace eedist
