#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <set>

#include "decnum/cubic.hpp"
#include "decnum/named.hpp"
#include "decnum/table.hpp"
#include "decnum/variant.hpp"

using namespace decnum;

namespace {
RunConfig trees_config(Variant v, int lo, int hi, int workers = 2) {
    RunConfig cfg;
    cfg.cls = *GraphClassSpec::parse("trees");
    cfg.variant = v;
    cfg.n_lo = lo;
    cfg.n_hi = hi;
    cfg.workers = workers;
    return cfg;
}

std::filesystem::path tmp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}
}  // namespace

TEST_CASE("table rows match known class aggregates") {
    auto rows = run_table(trees_config(Variant::bad(), 9, 9));
    REQUIRE(rows.size() == 1);
    CHECK(rows[0] == TableRow{9, 47, 1, 14, 5, 6});

    auto exc = run_table(trees_config(Variant::excellent(), 11, 11));
    REQUIRE(exc.size() == 1);
    CHECK(exc[0] == TableRow{11, 235, 5, 1, 11, 43});

    RunConfig cubic;
    cubic.cls = *GraphClassSpec::parse("cubic");
    cubic.variant = Variant::good();
    cubic.n_lo = cubic.n_hi = 8;
    cubic.workers = 2;
    auto rows8 = run_table(cubic);
    REQUIRE(rows8.size() == 1);
    CHECK(rows8[0] == TableRow{8, 5, 4, 5, 4, 5});
}

TEST_CASE("output bytes are identical across worker counts") {
    std::string bytes1, bytes4, bytes16;
    for (auto [workers, out] :
         {std::pair<int, std::string*>{1, &bytes1}, {4, &bytes4}, {16, &bytes16}}) {
        auto rows = run_table(trees_config(Variant::nice(), 4, 9, workers));
        *out = format_rows(rows, TableFormat::Csv);
    }
    CHECK(bytes1 == bytes4);
    CHECK(bytes1 == bytes16);
    CHECK(bytes1.substr(0, 20) == "n,count,min,m,max,M\n");
}

TEST_CASE("interrupted run resumes byte-identically") {
    auto ckpt = tmp_file("decnum_test_resume.ckpt");
    std::filesystem::remove(ckpt);

    auto straight = run_table(trees_config(Variant::bad(), 4, 9, 3));

    auto cfg = trees_config(Variant::bad(), 4, 9, 3);
    cfg.checkpoint_path = ckpt.string();
    cfg.abort_after = 61;  // dies mid-class, past the first checkpoint
    CHECK_THROWS_AS(run_table(cfg), TableInterrupted);
    CHECK(std::filesystem::exists(ckpt));

    cfg.abort_after = 0;
    auto resumed = run_table(cfg);
    CHECK(format_rows(resumed, TableFormat::Csv) == format_rows(straight, TableFormat::Csv));
    std::filesystem::remove(ckpt);
}

TEST_CASE("checkpoint fingerprint mismatch is rejected") {
    auto ckpt = tmp_file("decnum_test_fp.ckpt");
    std::filesystem::remove(ckpt);
    auto cfg = trees_config(Variant::bad(), 4, 6);
    cfg.checkpoint_path = ckpt.string();
    run_table(cfg);
    auto other = trees_config(Variant::good(), 4, 6);
    other.checkpoint_path = ckpt.string();
    CHECK_THROWS_AS(run_table(other), TableError);
    std::filesystem::remove(ckpt);
}

TEST_CASE("format rendering") {
    std::vector<TableRow> rows{{9, 47, 1, 14, 5, 6}};
    CHECK(format_rows(rows, TableFormat::Csv) == "n,count,min,m,max,M\n9,47,1,14,5,6\n");
    auto md = format_rows(rows, TableFormat::Markdown);
    CHECK(md.find("| 9 | 47 | 1 | 14 | 5 | 6 |") != std::string::npos);
    auto js = format_rows(rows, TableFormat::Json);
    CHECK(js.find("\"count\": 47") != std::string::npos);
    CHECK(parse_table_format("csv").has_value());
    CHECK_FALSE(parse_table_format("xml").has_value());
}

TEST_CASE("witness dump holds one valid line per graph") {
    auto wpath = tmp_file("decnum_test_witness.jsonl");
    std::filesystem::remove(wpath);
    auto cfg = trees_config(Variant::excellent(), 6, 7, 2);
    cfg.witness_path = wpath.string();
    auto rows = run_table(cfg);
    long long expect = 0;
    for (const auto& r : rows) expect += r.count;

    std::ifstream in(wpath);
    std::string line;
    long long lines = 0;
    while (std::getline(in, line)) {
        auto j = nlohmann::json::parse(line);
        auto g = parse_graph6(j.at("graph6").get<std::string>());
        auto f = assignment_from_string(j.at("witness").get<std::string>());
        auto ev = evaluate(g, Variant::excellent(), f);
        CHECK(ev.valid);
        CHECK(ev.total == j.at("value").get<int>());
        ++lines;
    }
    CHECK(lines == expect);
    std::filesystem::remove(wpath);
}

TEST_CASE("witness dump survives an interrupted run without duplicates") {
    auto ckpt = tmp_file("decnum_test_wres.ckpt");
    auto wpath = tmp_file("decnum_test_wres.jsonl");
    std::filesystem::remove(ckpt);
    std::filesystem::remove(wpath);

    auto cfg = trees_config(Variant::bad(), 4, 10, 2);
    cfg.checkpoint_path = ckpt.string();
    cfg.witness_path = wpath.string();
    cfg.abort_after = 123;
    CHECK_THROWS_AS(run_table(cfg), TableInterrupted);
    cfg.abort_after = 0;
    auto rows = run_table(cfg);

    long long expect = 0;
    for (const auto& r : rows) expect += r.count;
    std::ifstream in(wpath);
    std::string line;
    std::set<std::pair<int, long long>> seen;  // (n, seq) pairs must be unique
    long long lines = 0;
    while (std::getline(in, line)) {
        auto j = nlohmann::json::parse(line);
        CHECK(seen.emplace(j.at("n").get<int>(), j.at("seq").get<long long>()).second);
        ++lines;
    }
    CHECK(lines == expect);
    std::filesystem::remove(ckpt);
    std::filesystem::remove(wpath);
}

TEST_CASE("an all-infeasible order raises a table error") {
    RunConfig cfg = trees_config(Variant::good(), 1, 1);
    CHECK_THROWS_AS(run_table(cfg), TableError);
}

TEST_CASE("graph6 ingestion reproduces the built-in cubic rows") {
    // the supported route for orders past the built-in generator: dump the
    // class to graph6 and aggregate from the file, with checkpointing on
    auto path = tmp_file("decnum_test_cubic12.g6");
    {
        std::ofstream out(path);
        connected_cubic(12, [&](const Graph& g) { out << emit_graph6(g) << '\n'; });
    }
    RunConfig builtin;
    builtin.cls = *GraphClassSpec::parse("cubic");
    builtin.variant = Variant::nice();
    builtin.n_lo = builtin.n_hi = 12;
    builtin.workers = 2;
    auto want = run_table(builtin);

    auto ckpt = tmp_file("decnum_test_ingest.ckpt");
    std::filesystem::remove(ckpt);
    RunConfig ingest = builtin;
    ingest.cls = *GraphClassSpec::parse("g6:" + path.string());
    ingest.checkpoint_path = ckpt.string();
    auto got = run_table(ingest);
    CHECK(format_rows(got, TableFormat::Csv) == format_rows(want, TableFormat::Csv));
    std::filesystem::remove(ckpt);
    std::filesystem::remove(path);
}

TEST_CASE("graph6 file classes aggregate by order") {
    auto path = tmp_file("decnum_test_class.g6");
    {
        std::ofstream out(path);
        out << emit_graph6(complete_graph(4)) << '\n'
            << emit_graph6(cycle_graph(5)) << '\n'
            << emit_graph6(path_graph(4)) << '\n';
    }
    RunConfig cfg;
    cfg.cls = *GraphClassSpec::parse("g6:" + path.string());
    cfg.variant = Variant::bad();
    cfg.n_lo = 4;
    cfg.n_hi = 6;
    auto rows = run_table(cfg);
    REQUIRE(rows.size() == 2);  // orders 4 and 5 present, 6 absent
    CHECK(rows[0].n == 4);
    CHECK(rows[0].count == 2);
    CHECK(rows[0].min_value == 0);  // K4 and P4 both have beta 0
    CHECK(rows[1].n == 5);
    CHECK(rows[1].count == 1);
    std::filesystem::remove(path);
}
