#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <thread>

#include "permres/cli/args.hpp"
#include "permres/cli/cache.hpp"
#include "permres/cli/commands.hpp"
#include "permres/cli/envelope.hpp"

using namespace permres;
using namespace permres::cli;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("permres-test-" + std::to_string(std::random_device{}()) + std::to_string(::getpid()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

CommandRequest parse(std::vector<std::string> args) {
    const auto out = parse_command_line(args);
    REQUIRE(out.request.has_value());
    return *out.request;
}

int parse_exit(std::vector<std::string> args) { return parse_command_line(args).exit_code; }

}  // namespace

TEST_CASE("ranges and lists") {
    CHECK(parse_range("2..4") == std::pair{2, 4});
    CHECK(parse_range("3") == std::pair{3, 3});
    CHECK_THROWS_AS(parse_range("4..2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_range("a..2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_range(""), std::invalid_argument);
    CHECK(parse_int_list("0,2,1") == std::vector<int>{0, 2, 1});
    CHECK(parse_int_list("(3, 1 0)") == std::vector<int>{3, 1, 0});
    CHECK_THROWS_AS(parse_int_list("1,x"), std::invalid_argument);
}

TEST_CASE("command line parsing") {
    const auto h = parse({"--json", "hilbert", "--family", "perm", "--n", "3", "--kappa", "2", "--t", "2..4"});
    CHECK(h.subcommand == "hilbert");
    CHECK(h.format == OutputFormat::json);
    CHECK(h.params.at("t_min") == 2);
    CHECK(h.params.at("t_max") == 4);
    CHECK(h.params.at("mode") == "both");

    // global options after the subcommand
    const auto b = parse({"betti", "--family", "sqfree", "--n", "5", "--kappa", "3", "--csv", "--expensive",
                          "--prime-seed", "9", "--cap-nonzeros", "100"});
    CHECK(b.format == OutputFormat::csv);
    CHECK(b.expensive);
    CHECK(b.prime_seed == 9);
    CHECK(b.cap_nonzeros == 100);
    CHECK_FALSE(b.params.contains("step_min"));

    CHECK(parse({"bott", "0,2,1"}).params.at("sequence") == Json::array({0, 2, 1}));
    CHECK(parse({"verify"}).params.at("suite") == "all");
    CHECK(parse({"verify", "lascoux"}).params.at("suite") == "lascoux");

    CHECK(parse_exit({}) == 4);
    CHECK(parse_exit({"hilbert", "--n", "3"}) == 4);
    CHECK(parse_exit({"hilbert", "--family", "perm", "--n", "3", "--kappa", "2", "--t", "5..1"}) == 4);
    CHECK(parse_exit({"--json", "--csv", "verify"}) == 4);
    CHECK(parse_exit({"--help"}) == 0);
    CHECK(parse_exit({"--version"}) == 0);
}

TEST_CASE("record match invariant") {
    ResultRecord r;
    r.formula = 3;
    r.settle();
    CHECK_FALSE(r.match.has_value());
    r.oracle = 3;
    r.settle();
    CHECK(r.match == true);
    r.settle(false);
    CHECK(r.match == false);
    r.formula.reset();
    r.settle(true);
    CHECK_FALSE(r.match.has_value());
}

TEST_CASE("envelope JSON round trip") {
    ResultEnvelope env;
    env.version = "9.9.9";
    env.request.subcommand = "betti";
    env.request.params = {{"family", "minors"}, {"n", 3}, {"kappa", 2}};
    env.request.cache_dir = "/tmp/x";
    env.request.prime_seed = 123456789012345ULL;
    env.status = Status::mismatch;
    env.error = "something";
    ResultRecord a;
    a.labels = {{"step", 1}, {"lambda_e", "(2,1)"}};
    a.formula = BigInt("123456789012345678901234567890");
    a.oracle = 5;
    a.settle();
    ResultRecord b;
    b.labels = {{"note", "only oracle"}};
    b.oracle = 7;
    b.settle();
    env.results = {a, b};
    env.seconds = 0.1234567890123;
    env.primes = {1073741827u, 2147483647u};
    env.cache = {1, 2, 3, 4};

    const Json j = to_json(env);
    CHECK(envelope_from_json(j) == env);
    CHECK(envelope_from_json(Json::parse(j.dump())) == env);
    CHECK(j.at("results")[1].at("match").is_null());
    CHECK(j.at("summary").at("mismatches") == 1);

    const auto real = run(parse({"lascoux", "--n", "3", "--r", "1"}));
    CHECK(envelope_from_json(Json::parse(to_json(real).dump())) == real);
}

TEST_CASE("CSV output") {
    ResultEnvelope env;
    ResultRecord a;
    a.labels = {{"lambda_e", "(2,1)"}, {"j", 2}};
    a.formula = 8;
    a.oracle = 8;
    a.settle();
    ResultRecord b;
    b.labels = {{"j", 3}, {"extra", "say \"hi\""}};
    env.results = {a, b};
    CHECK(to_csv(env) ==
          "lambda_e,j,extra,formula,oracle,match\n"
          "\"(2,1)\",2,,8,8,true\n"
          ",3,\"say \"\"hi\"\"\",,,\n");
}

TEST_CASE("exit codes") {
    CHECK(exit_code(Status::ok) == 0);
    CHECK(exit_code(Status::mismatch) == 2);
    CHECK(exit_code(Status::resource_cap) == 3);
    CHECK(exit_code(Status::invalid) == 4);

    const auto ok = run(parse({"hilbert", "--family", "perm", "--n", "3", "--kappa", "2", "--t", "2..4"}));
    CHECK(ok.status == Status::ok);
    REQUIRE(ok.results.size() == 3);
    CHECK(*ok.results[1].oracle == 77);
    CHECK(ok.results[2].match == true);
    CHECK(ok.primes.size() == 2);

    const auto capped = run(parse({"--cap-nonzeros", "100", "betti", "--family", "perm", "--n", "4", "--kappa", "2",
                                   "--steps", "1", "--degree", "4"}));
    CHECK(capped.status == Status::resource_cap);
    CHECK(exit_code(capped.status) == 3);
    CHECK_FALSE(capped.error.empty());

    CHECK(run(parse({"hilbert", "--family", "perm", "--n", "3", "--kappa", "4"})).status == Status::invalid);
    CHECK(run(parse({"lascoux", "--n", "3", "--r", "1", "--j", "5"})).status == Status::invalid);
    CHECK(run(parse({"bott", "1,-1"})).status == Status::invalid);
    CHECK(run(parse({"verify", "nonsense"})).status == Status::invalid);
    CHECK(run(parse({"sr", "--complex", "perm2", "--n", "1"})).status == Status::invalid);
}

TEST_CASE("subcommand results") {
    const auto sq = run(parse({"betti", "--family", "squarefree", "--n", "5", "--kappa", "3"}));
    REQUIRE(sq.results.size() == 3);
    CHECK(*sq.results[0].oracle == 10);
    CHECK(*sq.results[1].oracle == 15);
    CHECK(*sq.results[2].oracle == 6);
    CHECK(sq.status == Status::ok);

    const auto perm = run(parse({"betti", "--family", "perm", "--n", "3", "--kappa", "2", "--steps", "0..2"}));
    CHECK(perm.status == Status::ok);
    CHECK(*perm.results[0].formula == 9);
    CHECK(*perm.results[1].formula == 4);

    const auto one = run(parse({"hilbert", "--family", "perm", "--n", "1", "--kappa", "1", "--t", "3"}));
    CHECK(*one.results[0].oracle == 1);

    const auto gens = run(parse({"lascoux", "--n", "3", "--r", "1", "--j", "1"}));
    REQUIRE(gens.results.size() == 1);
    CHECK(*gens.results[0].formula == 9);

    const auto four = run(parse({"lascoux", "--n", "3", "--r", "1", "--j", "4"}));
    CHECK(four.status == Status::ok);
    CHECK(four.results[0].labels.at("s") == 2);

    const auto wall = run(parse({"bott", "0,1"}));
    CHECK(wall.results[0].labels.at("wall") == true);

    const auto sr = run(parse({"sr", "--complex", "perm2", "--n", "3"}));
    CHECK(sr.status == Status::ok);

    for (const std::string suite : {"formulas", "syzygies", "lascoux", "simplicial"}) {
        const auto v = run(parse({"verify", suite}));
        CHECK(v.status == Status::ok);
        CHECK_FALSE(v.results.empty());
        CHECK(v.mismatches() == 0);
    }
}

TEST_CASE("minor Hilbert and Betti formulas agree with the oracle") {
    for (int n = 2; n <= 3; ++n) {
        for (int k = 1; k <= n; ++k) {
            const IdealSpec spec{Family::minors, n, k};
            const auto env = run(parse({"hilbert", "--family", "minors", "--n", std::to_string(n), "--kappa",
                                        std::to_string(k), "--t", "0..5"}));
            CHECK(env.status == Status::ok);
            const auto b = run(parse({"betti", "--family", "minors", "--n", std::to_string(n), "--kappa",
                                      std::to_string(k), "--steps", "0..3", "--max-degree", "6"}));
            CHECK(b.status == Status::ok);
        }
    }
}

TEST_CASE("cache files") {
    TempDir dir;
    const ResultCache cache(dir.path, "1.0");
    const CellKey key{"betti", {Family::subpermanents, 3, 2}, 1, 3, 7};
    CHECK(key.digest().size() == 64);
    CHECK(key.digest() == sha256_hex(key.canonical()));
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK_FALSE(cache.get(key).has_value());
    cache.put(key, 4);
    CHECK(cache.get(key) == BigInt(4));

    CellKey other = key;
    other.prime_seed = 8;
    CHECK(other.digest() != key.digest());
    CHECK_FALSE(cache.get(other).has_value());

    // another version reads as a miss
    CHECK_FALSE(ResultCache(dir.path, "2.0").get(key).has_value());

    // garbage reads as a miss
    std::ofstream(cache.path_for(other)) << "junk\n";
    CHECK_FALSE(cache.get(other).has_value());

    // concurrent writers leave one complete file and no temporaries
    std::vector<std::thread> threads;
    for (int t = 0; t < 8; ++t) {
        threads.emplace_back([&] {
            for (int i = 0; i < 50; ++i) cache.put(key, 4);
        });
    }
    for (auto& th : threads) th.join();
    CHECK(cache.get(key) == BigInt(4));
    std::size_t files = 0;
    for (const auto& entry : std::filesystem::directory_iterator(dir.path)) {
        CHECK(entry.path().extension() == ".cell");
        ++files;
    }
    CHECK(files == 2);
}

TEST_CASE("cached runs replay and the audit catches corruption") {
    TempDir dir;
    auto req = parse({"betti", "--family", "perm", "--n", "3", "--kappa", "2", "--steps", "0..2", "--max-degree", "5"});
    req.cache_dir = dir.path.string();
    const auto first = run(req, {0.0, 1});
    CHECK(first.cache.misses == first.results.size());
    CHECK(first.cache.hits == 0);

    const auto second = run(req, {0.0, 1});
    CHECK(second.cache.hits == first.results.size());
    for (std::size_t i = 0; i < first.results.size(); ++i) CHECK(first.results[i].oracle == second.results[i].oracle);

    // fresh recomputation of every hit agrees with the cache
    const auto audited = run(req, {1.0, 1});
    CHECK(audited.cache.audited == first.results.size());
    CHECK(audited.cache.audit_failures == 0);
    CHECK(audited.status == Status::ok);

    // plant a wrong value; the audit reports it and repairs the entry
    const ResultCache cache(dir.path, artifact_version());
    const CellKey key{"betti", {Family::subpermanents, 3, 2}, 1, 3, req.prime_seed};
    REQUIRE(cache.get(key) == BigInt(4));
    cache.put(key, 5);
    const auto caught = run(req, {1.0, 1});
    CHECK(caught.cache.audit_failures == 1);
    CHECK(caught.status == Status::mismatch);
    CHECK(exit_code(caught.status) == 2);
    CHECK(cache.get(key) == BigInt(4));

    // default sampling stays near five percent
    std::size_t audits = 0, hits = 0;
    for (int i = 0; i < 20; ++i) {
        const auto r = run(req, {0.05, static_cast<std::uint64_t>(i + 1)});
        audits += r.cache.audited;
        hits += r.cache.hits;
    }
    CHECK(audits < hits / 5);
}

TEST_CASE("cache directory from the environment") {
    TempDir dir;
    ::setenv(kCacheEnv, dir.path.c_str(), 1);
    const auto env = run(parse({"hilbert", "--family", "sqfree", "--n", "4", "--kappa", "2", "--t", "2..3"}));
    ::unsetenv(kCacheEnv);
    CHECK(env.cache.misses == 2);
    CHECK(std::distance(std::filesystem::directory_iterator(dir.path), std::filesystem::directory_iterator{}) == 2);
}
