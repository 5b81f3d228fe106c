#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eedist/sax.hpp"
#include "eedist/symbolic.hpp"

namespace eedist {

struct LabeledSeries {
    int label = 0;
    TimeSeries series;

    bool operator==(const LabeledSeries&) const = default;
};

enum class DatasetRole { Train, Test };

struct LabeledDataset {
    std::string name;
    std::vector<LabeledSeries> instances;
    DatasetRole role = DatasetRole::Train;
    // Non-fatal observations gathered while loading (e.g. ragged lengths).
    std::vector<std::string> warnings;

    std::size_t size() const { return instances.size(); }
};

/// Parses the classic UCR text layout: one instance per line, class label
/// first, then the series values. Comma, tab, and whitespace delimiters are
/// all accepted; float labels round to the nearest integer. Ragged series
/// lengths produce a warning on the dataset, not a failure.
LabeledDataset load_ucr(const std::string& path, DatasetRole role = DatasetRole::Train,
                        const std::string& name = "");

/// Writes the canonical comma-delimited form, label first, values with
/// enough digits to round-trip exactly.
void write_ucr(const LabeledDataset& dataset, const std::string& path);

struct DatasetPair {
    LabeledDataset train;
    LabeledDataset test;
};

/// Loads <dir>/<name>_TRAIN and <dir>/<name>_TEST where <name> is the last
/// path component of dir.
DatasetPair load_ucr_pair(const std::string& dir);

/// Deterministic corpus of random words: lengths uniform in [0, max_len],
/// symbols uniform in [0, alpha).
std::vector<SymbolicSequence> synthetic_strings(std::uint64_t seed, std::size_t count,
                                                std::size_t max_len, std::size_t alpha);

}  // namespace eedist
