#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <vector>

#include "unisplit/bench.hpp"
#include "unisplit/io.hpp"

using namespace unisplit;

namespace {
const std::string kFixtures = UNISPLIT_FIXTURE_DIR;
}

TEST_SUITE("io") {

TEST_CASE("sample files") {
    const SampleFile f = parse_samples("# comment\n1.5\n\n-2\n3e2\n");
    CHECK(f.values == std::vector<double>{1.5, -2, 300});
    CHECK(f.labels.empty());

    const SampleFile labeled = read_samples(kFixtures + "/samples.csv");
    CHECK(labeled.values.size() == 6);
    CHECK(labeled.labels == std::vector<int>{0, 0, 0, 1, 1, 1});

    CHECK_THROWS_AS(parse_samples("1\n2,0\n"), Error);
    CHECK_THROWS_AS(parse_samples("1\nabc\n"), Error);
    CHECK_THROWS_AS(parse_samples("1\nnan\n"), Error);
    CHECK_THROWS_WITH(parse_samples("# only comments\n"), "empty dataset");
    CHECK_THROWS_AS(read_samples(kFixtures + "/does_not_exist.txt"), Error);
}

TEST_CASE("tables") {
    const Table t = parse_table("f1,f2,class\n1,2,0\n3,4,1\n");
    CHECK(t.rows == std::vector<std::vector<double>>{{1, 2}, {3, 4}});
    CHECK(t.labels == std::vector<int>{0, 1});
    CHECK(parse_table("1,2,0\n").size() == 1);
    CHECK_THROWS_AS(parse_table("1,2,0\n3,1\n"), Error);
    CHECK_THROWS_AS(parse_table("1,2,x\n"), Error);
}

TEST_CASE("number formatting round trips") {
    for (double x : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, 0.0}) CHECK(std::stod(format_double(x)) == x);
    CHECK(format_double(2.0) == "2");
    CHECK(format_values(std::vector<double>{1, 2.5}) == "1\n2.5\n");
    CHECK(format_labels(std::vector<int>{0, 3}) == "0\n3\n");
}

TEST_CASE("atomic writes leave no partial files") {
    const auto dir = std::filesystem::temp_directory_path() / "unisplit_io_test";
    std::filesystem::create_directories(dir);
    const auto path = (dir / "out.txt").string();
    write_text_atomic(path, "hello\n");
    CHECK(read_text(path) == "hello\n");
    CHECK_THROWS_AS(write_text_atomic((dir / "missing" / "x.txt").string(), "x"), Error);
    CHECK_FALSE(std::filesystem::exists(dir / "missing"));
    std::size_t files = 0;
    for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(dir)) ++files;
    CHECK(files == 1);
    std::filesystem::remove_all(dir);
}

}

TEST_SUITE("bench") {

TEST_CASE("suite names and thread selection") {
    CHECK(parse_suite("table3") == Suite::Table3);
    CHECK(suite_name(Suite::Table5) == "table5");
    CHECK_THROWS_AS(parse_suite("table4"), Error);
    CHECK(bench_threads(3) == 3);
    CHECK(default_names(Suite::Table3).size() == 12);
    CHECK(default_names(Suite::Table5).front() == "D13");
}

TEST_CASE("rescaling keeps proportions") {
    const auto r = rescale(builtin("D1"), 13000);
    CHECK(r[0].n == 5000);
    CHECK(r[1].n == 8000);
}

TEST_CASE("small runs are deterministic and well formed") {
    BenchConfig cfg;
    cfg.suite = Suite::Table3;
    cfg.replicates = 3;
    cfg.eval_n = 2000;
    cfg.names = {"D1", "D7"};
    cfg.threads = 2;
    const BenchReport a = run_bench(cfg);
    cfg.threads = 1;
    const BenchReport b = run_bench(cfg);
    REQUIRE(a.rows.size() == 6);
    CHECK(bench_csv(a) == bench_csv(b));
    CHECK(a.summary("D1").replicates == 3);
    CHECK(a.rows[1].seed == cfg.seed + 1);
    const std::string csv = bench_csv(a);
    CHECK(csv.rfind("name,replicate,ks,k,nmi,seed\n", 0) == 0);
    CHECK(bench_table(a).find("D7") != std::string::npos);

    BenchConfig t5;
    t5.suite = Suite::Table5;
    t5.replicates = 2;
    t5.names = {"D14"};
    const BenchReport c = run_bench(t5);
    CHECK(std::isnan(c.rows[0].ks));
    CHECK(c.summary("D14").nmi_mean == doctest::Approx(1.0));
    CHECK_THROWS_AS(c.summary("D1"), Error);

    BenchConfig bad;
    bad.names = {"D99"};
    CHECK_THROWS_AS(run_bench(bad), Error);
}

}
