#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "doctest.h"
#include "json.hpp"
#include "support.hpp"
#include "tsecon/cli.hpp"
#include "tsecon/report.hpp"
#include "tsecon/simulate.hpp"

using namespace tsecon;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        static int counter = 0;
        path = fs::temp_directory_path() / ("tsecon_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    fs::path operator/(const std::string& name) const { return path / name; }
};

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

std::string read(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

fs::path system_csv(const TempDir& dir, std::size_t n = 200, std::uint64_t seed = 1) {
    Rng rng(seed);
    const auto path = dir / "system.csv";
    write_csv(sim::cointegrated_system(rng, n, 4), path);
    return path;
}

std::string system_config(const fs::path& data, const std::string& extra = "") {
    return R"({"data": ")" + data.string() + R"(", "frequency": "monthly", "dependent": "Y",
              "regressors": ["X1", "X2", "X3", "X4"], "fixed": ["DPOL"],
              "ardl": {"dependent_max_lag": 3, "max_lag": 2})" + extra + "}";
}

std::vector<nlohmann::json> parse_lines(const std::string& text) {
    std::vector<nlohmann::json> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(nlohmann::json::parse(line));
    return out;
}

}  // namespace

TEST_CASE("exit codes") {
    TempDir dir;
    const auto data = system_csv(dir);
    CHECK(cli({"describe", data.string()}).code == 0);

    const auto unknown = cli({"describe", data.string(), "--bogus"});
    CHECK(unknown.code == 1);
    CHECK(unknown.err.find("Usage") != std::string::npos);
    CHECK(cli({}).code == 1);
    CHECK(cli({"adf", data.string()}).code == 1);  // --det is required
    CHECK(cli({"ardl", data.string(), "--dep", "Y", "--reg", "X1,X1"}).code == 1);

    write(dir / "gap.csv", "period,A\n2008-01,1\n2008-03,2\n");
    const auto gap = cli({"describe", (dir / "gap.csv").string()});
    CHECK(gap.code == 2);
    CHECK(gap.err.find("2008-02") != std::string::npos);
    CHECK(cli({"describe", (dir / "missing.csv").string()}).code == 2);
    CHECK(cli({"bounds", "--f", "3.0", "--k", "4", "--case", "I"}).code == 2);

    std::string text = "period,Y,A,B\n";
    for (int i = 0; i < 30; ++i) {
        const int a = (3 * i) % 7;
        text += sim::make_index(30)[static_cast<std::size_t>(i)].label() + "," + std::to_string(i % 5) + "," +
                std::to_string(a) + "," + std::to_string(2 * a) + "\n";
    }
    write(dir / "collinear.csv", text);
    const auto rank = cli({"ols", (dir / "collinear.csv").string(), "--dep", "Y", "--reg", "A,B"});
    CHECK(rank.code == 3);
    CHECK(rank.err.find("tsecon:") == 0);
    CHECK(std::count(rank.err.begin(), rank.err.end(), '\n') == 1);
}

TEST_CASE("subcommand outputs") {
    TempDir dir;
    const auto data = system_csv(dir);
    const auto b = cli({"bounds", "--f", "4.3927", "--k", "5", "--case", "I"});
    CHECK(b.code == 0);
    CHECK(b.out.find("cointegrated at 1%") != std::string::npos);

    const auto adf = cli({"adf", data.string(), "--col", "Y", "--det", "const", "--max-lag", "8", "--ic", "sic"});
    CHECK(adf.code == 0);
    for (const char* h : {"Prob.", "Lag", "DW"}) CHECK(adf.out.find(h) != std::string::npos);

    const auto out = dir / "ardl.jsonl";
    const auto ardl = cli({"ardl", data.string(), "--dep", "Y", "--reg", "X1,X2,X3,X4", "--fixed", "DPOL",
                           "--max-lag", "2", "--dep-max-lag", "3", "--out", out.string()});
    CHECK(ardl.code == 0);
    CHECK(ardl.out.find("ARDL(") != std::string::npos);
    const auto lines = parse_lines(read(out));
    CHECK_FALSE(lines.empty());
    for (const auto& j : lines) {
        CHECK(j.size() == 5);
        for (const char* key : {"stage", "name", "value", "se", "p"}) CHECK(j.contains(key));
    }

    const auto ecm = cli({"ecm", data.string(), "--dep", "Y", "--reg", "X1,X2,X3,X4", "--fixed", "DPOL",
                          "--max-lag", "2", "--dep-max-lag", "3"});
    CHECK(ecm.code == 0);
    CHECK(ecm.out.find("ECT(-1)") != std::string::npos);

    const auto plot = dir / "cusum.csv";
    CHECK(cli({"ols", data.string(), "--dep", "D(Y)", "--reg", "D(X1),Y(-1),X1(-1)", "--diagnostics",
               "--plot-cusum", plot.string()}).code == 0);
    CHECK(read(plot).rfind("period,W,lower,upper\n", 0) == 0);

    write(dir / "events.csv", "period,description\n2000-05,first\n2000-09,second\n");
    CHECK(cli({"ardl", data.string(), "--dep", "Y", "--reg", "X1,X2,X3,X4", "--events", (dir / "events.csv").string(),
               "--orders", "2,1,0,0,0"}).code == 0);
}

TEST_CASE("describe-only config gives one stage") {
    TempDir dir;
    const auto data = system_csv(dir);
    auto cfg = report::parse_config(R"({"data": ")" + data.string() + R"(", "dependent": "Y", "stages": ["describe"]})");
    const auto r = report::full_report(cfg);
    REQUIRE(r.stages.size() == 1);
    CHECK(r.stages[0].name == "describe");
    CHECK(r.exit_code() == 0);
}

TEST_CASE("config validation") {
    CHECK_THROWS_AS(report::parse_config(R"({"data": "x.csv", "dependent": "Y", "colour": 1})"), UsageError);
    CHECK_THROWS_AS(report::parse_config(R"({"data": "x.csv", "dependent": "Y", "stages": ["plot"]})"), UsageError);
    CHECK_THROWS_AS(report::parse_config(R"({"data": "x.csv", "ardl": {"case": "VII"}})"), UsageError);
    CHECK_THROWS_AS(report::parse_config("{not json"), UsageError);
    const auto c = report::parse_config(R"({"data": "d.csv", "dependent": "Y", "regressors": ["A"]})", "/base");
    CHECK(c.data == fs::path("/base/d.csv"));
    // the canonical echo parses back to the same config
    const auto echo = report::config_json(c);
    CHECK(report::config_json(report::parse_config(echo)) == echo);
}

TEST_CASE("cointegrated fixture report") {
    TempDir dir;
    const auto data = system_csv(dir, 300, 4);
    write(dir / "config.json", system_config(data));
    const auto out = dir / "report.jsonl";
    const auto svg = dir / "cusum.svg";
    const auto run = cli({"report", "--config", (dir / "config.json").string(), "--out", out.string(),
                          "--plot-cusum", svg.string()});
    CHECK(run.code == 0);
    CHECK(read(svg).find("<svg") != std::string::npos);

    const auto r = report::full_report(report::load_config(dir / "config.json"));
    for (const char* s : {"describe", "corr", "adf", "ols", "ardl", "bounds", "longrun", "ecm", "diagnostics", "cusum"}) {
        const auto* st = r.stage(s);
        REQUIRE_MESSAGE(st != nullptr, s);
        CHECK_MESSAGE(st->status == report::StageStatus::Ok, s << ": " << st->reason);
    }
    CHECK(r.stage("granger") == nullptr);
    CHECK(r.stage("bounds")->text.find("cointegrated at") != std::string::npos);

    const auto lines = parse_lines(read(out));
    bool cointegrated = false, valid = false;
    for (const auto& j : lines) {
        if (j["stage"] == "bounds" && j["name"] == "verdict") cointegrated = j["value"].get<std::string>().rfind("cointegrated", 0) == 0;
        if (j["stage"] == "ecm" && j["name"] == "valid") valid = j["value"] == "true";
    }
    CHECK(cointegrated);
    CHECK(valid);
    CHECK(lines[0]["name"] == "input_digest");
    CHECK(lines[0]["value"].get<std::string>().rfind("fnv1a64:", 0) == 0);
    CHECK(lines[1]["value"] == std::string(report::kVersion));
}

TEST_CASE("machine-readable output round-trips and is deterministic") {
    TempDir dir;
    const auto data = system_csv(dir, 240, 8);
    const auto cfg = report::parse_config(system_config(data));
    const auto a = report::full_report(cfg);
    const auto b = report::full_report(cfg);
    const auto ja = report::render_jsonl(a);
    CHECK(ja == report::render_jsonl(b));
    CHECK(report::render_text(a) == report::render_text(b));

    const auto lines = parse_lines(ja);
    std::size_t i = 3;
    for (const auto& s : a.stages) {
        REQUIRE(i < lines.size());
        CHECK(lines[i]["stage"] == s.name);
        CHECK(lines[i++]["name"] == "status");
        for (const auto& rec : s.records) {
            const auto& j = lines[i++];
            CHECK(j["stage"] == rec.stage);
            CHECK(j["name"] == rec.name);
            if (const double* v = std::get_if<double>(&rec.value)) {
                if (std::isfinite(*v)) CHECK(j["value"].get<double>() == *v);
                else CHECK(j["value"].is_null());
            } else {
                CHECK(j["value"] == std::get<std::string>(rec.value));
            }
            if (rec.se && std::isfinite(*rec.se)) CHECK(j["se"].get<double>() == *rec.se);
            else CHECK(j["se"].is_null());
            if (rec.p && std::isfinite(*rec.p)) CHECK(j["p"].get<double>() == *rec.p);
            else CHECK(j["p"].is_null());
        }
    }
    CHECK(i == lines.size());

    // changing one byte of the data changes the digest
    auto text = read(data);
    text[text.size() - 2] = text[text.size() - 2] == '1' ? '2' : '1';
    write(data, text);
    CHECK(report::full_report(cfg).provenance.input_digest != a.provenance.input_digest);
}

TEST_CASE("stars agree with p-values in every coefficient table") {
    TempDir dir;
    const auto data = system_csv(dir, 240, 12);
    const auto r = report::full_report(report::parse_config(system_config(data)));
    std::size_t checked = 0;
    for (const char* stage : {"ols", "ardl", "ecm"}) {
        const auto* s = r.stage(stage);
        REQUIRE(s != nullptr);
        for (const auto& rec : s->records) {
            if (!rec.se || !rec.p) continue;
            const std::string cell = report::starred(std::get<double>(rec.value), *rec.p);
            const auto pos = s->text.find(cell);
            REQUIRE_MESSAGE(pos != std::string::npos, stage << " " << rec.name << " " << cell);
            const char next = pos + cell.size() < s->text.size() ? s->text[pos + cell.size()] : ' ';
            CHECK(next != '*');
            ++checked;
        }
    }
    CHECK(checked > 10);
    for (double p : {0.0, 0.005, 0.00999, 0.01, 0.049, 0.05, 0.0999, 0.1, 0.5}) {
        const std::string s = report::starred(1.0, p);
        const auto stars = std::count(s.begin(), s.end(), '*');
        CHECK(stars == (p < 0.01 ? 3 : p < 0.05 ? 2 : p < 0.10 ? 1 : 0));
    }
}

TEST_CASE("failed stages skip their dependents") {
    TempDir dir;
    const auto data = system_csv(dir);
    // k = 4 level regressors has no embedded bounds table
    auto cfg = report::parse_config(R"({"data": ")" + data.string() + R"(", "dependent": "Y",
        "regressors": ["X1", "X2", "X3", "X4"], "ardl": {"dependent_max_lag": 2, "max_lag": 1}})");
    const auto r = report::full_report(cfg);
    CHECK(r.stage("bounds")->status == report::StageStatus::Failed);
    CHECK(r.stage("bounds")->reason.find("bounds") != std::string::npos);
    CHECK(r.stage("ardl")->status == report::StageStatus::Ok);
    CHECK(r.exit_code() == 2);
    CHECK(report::render_jsonl(r).find("\"status\"") != std::string::npos);
}

TEST_CASE("CUSUM plot data") {
    TempDir dir;
    Rng rng(50);
    const auto d = sim::coefficient_break(rng, 52, 1.0, 1.0);
    RegressionSpec s;
    s.dependent = {"Y"};
    s.terms = {{"X"}};
    const auto c = cusum(s, d);
    const auto csv = report::cusum_csv(c);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 51);
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        double w, lo, hi;
        const auto f1 = line.find(','), f2 = line.find(',', f1 + 1), f3 = line.find(',', f2 + 1);
        w = std::stod(line.substr(f1 + 1, f2 - f1 - 1));
        lo = std::stod(line.substr(f2 + 1, f3 - f2 - 1));
        hi = std::stod(line.substr(f3 + 1));
        CHECK(lo == -hi);
        if (c.stable) CHECK((lo <= w && w <= hi));
    }
    report::emit_cusum_plot(c, dir / "plot.csv");
    CHECK(read(dir / "plot.csv") == csv);
    report::emit_cusum_plot(c, dir / "plot.svg");
    CHECK(read(dir / "plot.svg").find("</svg>") != std::string::npos);
    CHECK_THROWS_AS(report::emit_cusum_plot(c, "/nonexistent/dir/plot.csv"), IoError);
}

TEST_CASE("formatting") {
    CHECK(report::fixed(-0.00001) == "0.0000");
    CHECK(report::fixed(std::nan("")) == "NA");
    CHECK(report::fixed(-0.2018) == "-0.2018");
    CHECK(report::starred(-0.2018, 0.0001) == "-0.2018***");
    for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 12345.678901234567}) CHECK(std::stod(report::round_trip(v)) == v);
    CHECK(report::exit_code_for(ErrorCategory::Usage) == 1);
    CHECK(report::exit_code_for(ErrorCategory::Data) == 2);
    CHECK(report::exit_code_for(ErrorCategory::Io) == 2);
    CHECK(report::exit_code_for(ErrorCategory::Numerical) == 3);
    CHECK(report::fnv1a("") == 0xcbf29ce484222325ULL);
    CHECK(report::fnv1a("a") == 0xaf63dc4c8601ec8cULL);
}
