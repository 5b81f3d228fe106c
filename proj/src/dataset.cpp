#include "eedist/dataset.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "eedist/errors.hpp"

namespace eedist {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string current;
    for (const char ch : line) {
        if (ch == ',' || ch == '\t' || ch == ' ') {
            if (!current.empty()) {
                fields.push_back(std::move(current));
                current.clear();
            }
        } else {
            current.push_back(ch);
        }
    }
    if (!current.empty()) {
        fields.push_back(std::move(current));
    }
    return fields;
}

double parse_number(const std::string& field, std::size_t line_no) {
    std::size_t consumed = 0;
    double value = 0.0;
    try {
        value = std::stod(field, &consumed);
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line_no) + ": field '" + field +
                         "' is not numeric");
    }
    if (consumed != field.size() || !std::isfinite(value)) {
        throw ParseError("line " + std::to_string(line_no) + ": field '" + field +
                         "' is not numeric");
    }
    return value;
}

std::string stem_of(const std::string& path) {
    return std::filesystem::path(path).filename().string();
}

}  // namespace

LabeledDataset load_ucr(const std::string& path, DatasetRole role, const std::string& name) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open '" + path + "' for reading");
    }
    LabeledDataset dataset;
    dataset.name = name.empty() ? stem_of(path) : name;
    dataset.role = role;

    std::string line;
    std::size_t line_no = 0;
    std::size_t expected_length = 0;
    bool warned_ragged = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        const std::vector<std::string> fields = split_fields(line);
        if (fields.empty()) {
            continue;
        }
        if (fields.size() < 2) {
            throw ParseError("line " + std::to_string(line_no) +
                             ": expected a label and at least one value");
        }
        LabeledSeries instance;
        instance.label = static_cast<int>(std::lround(parse_number(fields[0], line_no)));
        instance.series.reserve(fields.size() - 1);
        for (std::size_t i = 1; i < fields.size(); ++i) {
            instance.series.push_back(parse_number(fields[i], line_no));
        }
        if (dataset.instances.empty()) {
            expected_length = instance.series.size();
        } else if (instance.series.size() != expected_length && !warned_ragged) {
            dataset.warnings.push_back("line " + std::to_string(line_no) + ": series length " +
                                       std::to_string(instance.series.size()) +
                                       " differs from the first instance's " +
                                       std::to_string(expected_length));
            warned_ragged = true;
        }
        dataset.instances.push_back(std::move(instance));
    }
    if (dataset.instances.empty()) {
        throw ParseError("'" + path + "': no instances");
    }
    return dataset;
}

void write_ucr(const LabeledDataset& dataset, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    char buf[64];
    for (const LabeledSeries& instance : dataset.instances) {
        out << instance.label;
        for (const double v : instance.series) {
            std::snprintf(buf, sizeof(buf), "%.17g", v);
            out << ',' << buf;
        }
        out << '\n';
    }
    if (!out) {
        throw IoError("failed while writing '" + path + "'");
    }
}

DatasetPair load_ucr_pair(const std::string& dir) {
    std::string trimmed = dir;
    while (trimmed.size() > 1 && (trimmed.back() == '/' || trimmed.back() == '\\')) {
        trimmed.pop_back();
    }
    const std::filesystem::path base(trimmed);
    const std::string name = base.filename().string();
    if (name.empty()) {
        throw InvalidParameter("dataset directory '" + dir + "' has no name component");
    }
    DatasetPair pair;
    pair.train = load_ucr((base / (name + "_TRAIN")).string(), DatasetRole::Train, name);
    pair.test = load_ucr((base / (name + "_TEST")).string(), DatasetRole::Test, name);
    return pair;
}

std::vector<SymbolicSequence> synthetic_strings(std::uint64_t seed, std::size_t count,
                                                std::size_t max_len, std::size_t alpha) {
    if (alpha < 1) {
        throw InvalidParameter("alphabet size must be >= 1");
    }
    std::mt19937_64 rng(seed);
    std::vector<SymbolicSequence> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        // Modulo keeps the draw identical across standard libraries; the bias
        // is irrelevant for test fuel.
        const std::size_t len = static_cast<std::size_t>(rng() % (max_len + 1));
        std::vector<Symbol> symbols(len);
        for (std::size_t j = 0; j < len; ++j) {
            symbols[j] = static_cast<Symbol>(rng() % alpha);
        }
        out.emplace_back(std::move(symbols), alpha);
    }
    return out;
}

}  // namespace eedist
