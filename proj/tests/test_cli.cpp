#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "eedist/dataset.hpp"
#include "eedist/report_io.hpp"

using namespace eedist;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct Scratch {
    std::filesystem::path dir;

    Scratch() {
        static int counter = 0;
        dir = std::filesystem::temp_directory_path() /
              ("eedtool_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        std::filesystem::create_directories(dir);
    }
    ~Scratch() { std::filesystem::remove_all(dir); }

    std::string file(const std::string& name, const std::string& contents) const {
        const std::filesystem::path p = dir / name;
        std::ofstream(p, std::ios::binary) << contents;
        return p.string();
    }
};

// Runs the tool (path from EEDTOOL_BIN) with the given arguments, capturing
// exit code, stdout and stderr.
RunResult run(const std::string& args) {
    const char* bin = std::getenv("EEDTOOL_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "EEDTOOL_BIN must point at the built tool");
    static const Scratch io;
    static int counter = 0;
    const std::string tag = std::to_string(counter++);
    const std::filesystem::path outp = io.dir / ("out" + tag);
    const std::filesystem::path errp = io.dir / ("err" + tag);

    const std::string cmd = std::string("'") + bin + "' " + args + " >'" + outp.string() +
                            "' 2>'" + errp.string() + "'";
    const int status = std::system(cmd.c_str());
    RunResult result;
    result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = slurp(outp);
    result.err = slurp(errp);
    return result;
}

// Two tiny linearly-separable binary datasets realized as series; see the
// evaluation suite for why these values symbolize back to the words exactly.
std::string binary_rows(const std::vector<std::pair<std::string, int>>& rows) {
    LabeledDataset ds;
    for (const auto& [word, label] : rows) {
        double ones = 0;
        for (const char ch : word) {
            ones += ch == '1' ? 1.0 : 0.0;
        }
        const double zeros = static_cast<double>(word.size()) - ones;
        LabeledSeries inst;
        inst.label = label;
        for (const char ch : word) {
            inst.series.push_back(ch == '0' ? -std::sqrt(ones / zeros)
                                            : std::sqrt(zeros / ones));
        }
        ds.instances.push_back(std::move(inst));
    }
    std::ostringstream text;
    for (const LabeledSeries& inst : ds.instances) {
        text << inst.label;
        char buf[64];
        for (const double v : inst.series) {
            std::snprintf(buf, sizeof(buf), ",%.17g", v);
            text << buf;
        }
        text << '\n';
    }
    return text.str();
}

const char* kWordList = "aarwnn\naarwxn\nxarwnn\nxarwxn\n";

}  // namespace

TEST_CASE("dist prints worked distances") {
    CHECK(run("dist marwan aarwin").out == "4.000000\n");
    CHECK(run("dist marwan aarwin --metric eed --lambda 1").out == "4.000000\n");
    CHECK(run("dist marwan aarwin --lambda 2").out == "6.000000\n");
    CHECK(run("dist marwan aarwin --metric ed").out == "2.000000\n");
    CHECK(run("dist kitten sitting --metric ed").out == "3.000000\n");
    CHECK(run("dist abc abc --metric ed").out == "0.000000\n");
    CHECK(run("dist aa ab --metric lcss").out == "2.000000\n");
    CHECK(run("dist marwan aarwin --lambda 0").out == "2.000000\n");
}

TEST_CASE("dist rejects bad usage with exit code 2") {
    const RunResult window = run("dist marwaN aarwin");
    CHECK(window.code == 2);
    CHECK(window.err.find("position 6") != std::string::npos);
    CHECK(window.err.find("a-z window") != std::string::npos);

    const RunResult narrow = run("dist abc abc --alpha 2");
    CHECK(narrow.code == 2);
    CHECK(narrow.err.find("a-b window") != std::string::npos);

    CHECK(run("dist aa bb --metric manhattan").code == 2);
    CHECK(run("dist aa bb --metric sax").code == 2);
    CHECK(run("dist aa bb --metric euclidean").code == 2);
    CHECK(run("dist aa bb --metric ed --lambda 1").code == 2);
    CHECK(run("dist aa bb --metric eed --lambda -0.5").code == 2);
    CHECK(run("dist aa bb --bogus-flag").code == 2);
    CHECK(run("dist onlyone").code == 2);
    CHECK(run("").code == 2);
}

TEST_CASE("help exits cleanly") {
    CHECK(run("--help").code == 0);
    CHECK(run("dist --help").code == 0);
    CHECK(run("bench --help").code == 0);
}

TEST_CASE("symbolize turns series into words") {
    CHECK(run("symbolize --values 5,5,5,5 --alpha 4 --segments 4").out == "bbbb\n");
    CHECK(run("symbolize --values 1,2,3,4,5,6,7,8 --alpha 3 --segments 4").out == "aacc\n");
    // Default 1:4 compression gives ceil(8/4) = 2 segments.
    CHECK(run("symbolize --values 1,2,3,4,5,6,7,8 --alpha 3").out == "ac\n");

    const RunResult csv = run("symbolize --values 5,5,5,5 --alpha 4 --segments 4 --format csv");
    CHECK(csv.out == "word\nbbbb\n");

    const RunResult json = run("symbolize --values 5,5,5,5 --alpha 4 --segments 4 --format json");
    CHECK(json.code == 0);
    const nlohmann::json j = nlohmann::json::parse(json.out);
    CHECK(j.at("alphabet_size") == 4);
    CHECK(j.at("segments") == 4);
    CHECK(j.at("words") == nlohmann::json::array({"bbbb"}));

    Scratch scratch;
    const std::string data = scratch.file("two", "1,5,5,5,5\n2,1,2,3,4\n");
    const RunResult from_file = run("symbolize --file '" + data + "' --alpha 4 --segments 4");
    CHECK(from_file.out.substr(0, 5) == "bbbb\n");
    CHECK(std::count(from_file.out.begin(), from_file.out.end(), '\n') == 2);

    const std::string outfile = (scratch.dir / "words.txt").string();
    const RunResult redirected =
        run("symbolize --values 5,5,5,5 --alpha 4 --segments 4 --out '" + outfile + "'");
    CHECK(redirected.code == 0);
    CHECK(redirected.out.empty());
    CHECK(slurp(outfile) == "bbbb\n");

    CHECK(run("symbolize --alpha 4").code == 2);
    CHECK(run("symbolize --values 1,2 --alpha 4 --format yaml").code == 2);
}

TEST_CASE("tune reports the grid and the chosen cell") {
    Scratch scratch;
    const std::string train = scratch.file("train", "1,0,0,1\n2,1,1,0\n");
    const std::string args =
        "tune --train '" + train + "' --metric eed --alpha 3..4 --lambdas 0,0.5 --ratio 1";

    const RunResult table = run(args);
    CHECK(table.code == 0);
    CHECK(table.out.find("best alpha 3  lambda 0.00  train error 1.000000") !=
          std::string::npos);

    const RunResult json = run(args + " --format json");
    CHECK(json.code == 0);
    const TuneReport report = tune_report_from_json(json.out);
    CHECK(report.best_alpha == 3);
    CHECK(report.best_lambda == 0.0);
    CHECK(report.train_error == 1.0);
    CHECK(report.grid.size() == 4);
    // The parsed json re-renders to exactly the table the tool printed.
    CHECK(render_table(report) == table.out);

    const RunResult csv = run(args + " --format csv");
    CHECK(csv.out.substr(0, 19) == "alpha,lambda,error\n");

    CHECK(run("tune --metric eed").code == 2);
}

TEST_CASE("eval on a test set equal to the training set is perfect") {
    Scratch scratch;
    const std::string data = scratch.file("set", "1,0,0,1\n2,1,1,0\n");
    const std::string args = "eval --train '" + data + "' --test '" + data +
                             "' --metric eed --lambda 0.5 --alpha 3 --ratio 1";

    const RunResult json = run(args + " --format json");
    CHECK(json.code == 0);
    const EvalReport report = eval_report_from_json(json.out);
    CHECK(report.kind == MetricKind::Eed);
    CHECK(report.alpha == 3);
    CHECK(report.lambda == 0.5);
    CHECK(report.test_error == 0.0);
    CHECK(report.instance_count == 2);

    const RunResult table = run(args);
    CHECK(table.out.find("0.000000") != std::string::npos);

    CHECK(run("eval --train '" + data + "' --metric eed --alpha 3").code == 2);
}

TEST_CASE("bench tunes and evaluates whole dataset directories") {
    Scratch scratch;
    const std::vector<std::pair<std::string, int>> train_rows = {
        {"10011000", 1}, {"10011010", 1}, {"11000000", 1},
        {"11010100", 2}, {"00110001", 2}, {"00011101", 2},
    };
    const std::vector<std::pair<std::string, int>> test_rows = {
        {"00110101", 1}, {"00011010", 2},
    };
    for (const char* name : {"ToyA", "ToyB"}) {
        std::filesystem::create_directories(scratch.dir / name);
        std::ofstream(scratch.dir / name / (std::string(name) + "_TRAIN"))
            << binary_rows(train_rows);
        std::ofstream(scratch.dir / name / (std::string(name) + "_TEST"))
            << binary_rows(test_rows);
    }
    const std::string dir_a = (scratch.dir / "ToyA").string();
    const std::string dir_b = (scratch.dir / "ToyB").string();
    const std::string args = "bench --data '" + dir_a + "' --data '" + dir_b +
                             "' --metrics ed,eed --alpha 2 --lambdas 0,0.5,1 --ratio 1";

    const RunResult table = run(args);
    CHECK(table.code == 0);
    CHECK(table.out.find("ToyA") != std::string::npos);
    CHECK(table.out.find("ToyB") != std::string::npos);
    CHECK(table.out.find("MEAN") != std::string::npos);

    const RunResult json = run(args + " --format json");
    CHECK(json.code == 0);
    const BenchReport bench = bench_report_from_json(json.out);
    REQUIRE(bench.reports.size() == 4);
    CHECK(bench.reports[0].kind == MetricKind::Ed);
    CHECK(bench.reports[1].kind == MetricKind::Eed);
    REQUIRE(bench.summaries.size() == 2);
    CHECK(bench.summaries[0].summary.report_count == 2);
    CHECK(render_table(bench) == table.out);

    // Identical invocations produce identical bytes.
    CHECK(run(args).out == table.out);

    const RunResult partial =
        run("bench --data '" + dir_a + "' --data /nonexistent --metrics ed --alpha 2 --ratio 1");
    CHECK(partial.code == 0);
    CHECK(partial.err.find("warning") != std::string::npos);
    CHECK(partial.out.find("ToyA") != std::string::npos);

    const RunResult all_bad = run("bench --data /nonexistent --metrics ed");
    CHECK(all_bad.code == 1);
    CHECK(all_bad.err.find("all datasets failed") != std::string::npos);
}

TEST_CASE("index answers nearest-neighbor and range queries") {
    Scratch scratch;
    const std::string words = scratch.file("words", kWordList);

    const RunResult nn = run("index --file '" + words + "' --query narwan --lambda 1");
    CHECK(nn.code == 0);
    CHECK(nn.out == "nn narwan -> id=0 word=aarwnn distance=2.000000\n");

    const RunResult range =
        run("index --file '" + words + "' --query narwan --lambda 1 --radius 4");
    CHECK(range.code == 0);
    CHECK(range.out.find("nn narwan -> id=0") != std::string::npos);
    CHECK(range.out.find("range narwan radius=4.000000 -> 3 matches") != std::string::npos);
    CHECK(range.out.find("  id=0 word=aarwnn distance=2.000000") != std::string::npos);
    CHECK(range.out.find("  id=1 word=aarwxn distance=4.000000") != std::string::npos);
    CHECK(range.out.find("  id=2 word=xarwnn distance=4.000000") != std::string::npos);

    const RunResult json =
        run("index --file '" + words + "' --query narwan --radius 4 --format json");
    CHECK(json.code == 0);
    const nlohmann::json j = nlohmann::json::parse(json.out);
    CHECK(j.at("metric") == "eed");
    CHECK(j.at("lambda") == 1.0);
    CHECK(j.at("count") == 4);
    CHECK(j.at("queries").at(0).at("nn").at("id") == 0);
    CHECK(j.at("queries").at(0).at("nn").at("distance") == 2.0);
    CHECK(j.at("queries").at(0).at("range").at("matches").size() == 3);

    // The answer is seed-independent even though the tree is not.
    const std::string base = "index --file '" + words + "' --query narwan --radius 4";
    CHECK(run(base + " --seed 7").out == range.out);
    CHECK(run(base).out == range.out);
}

TEST_CASE("index rejects unusable metrics and inputs") {
    Scratch scratch;
    const std::string words = scratch.file("words", kWordList);

    const RunResult sax = run("index --file '" + words + "' --metric sax --query aa");
    CHECK(sax.code == 2);
    CHECK(sax.err.find("not a metric") != std::string::npos);

    CHECK(run("index --file '" + words + "' --metric lcss --query aa").code == 2);
    CHECK(run("index --file '" + words + "' --metric euclidean --query aa").code == 2);
    CHECK(run("index --file '" + words + "' --lambda -1 --query aa").code == 2);
    CHECK(run("index --file '" + words + "' --metric ed --lambda 1 --query aa").code == 2);

    const std::string empty = scratch.file("empty", "");
    CHECK(run("index --file '" + empty + "' --query aa").code == 2);

    const std::string bad = scratch.file("bad", "aarwnn\nAARWNN\n");
    const RunResult upper = run("index --file '" + bad + "' --query aa");
    CHECK(upper.code == 2);
    CHECK(upper.err.find("position 1") != std::string::npos);

    CHECK(run("index --query aa").code == 2);
}
