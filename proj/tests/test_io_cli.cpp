#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "leibniz/algebra_io.hpp"
#include "leibniz/catalog.hpp"
#include "leibniz/cli.hpp"
#include "leibniz/suite.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace leibniz;
using json = nlohmann::ordered_json;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

json report_of(const CliResult& r) { return json::parse(r.out); }

std::filesystem::path scratch_dir() {
    const auto dir = std::filesystem::temp_directory_path() / "leibniz_cli_tests";
    std::filesystem::create_directories(dir);
    return dir;
}

std::string scratch(const std::string& name) { return (scratch_dir() / name).string(); }

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

TEST_CASE("algebra files round trip over both fields") {
    for (const Field& F : {Field::rationals(), Field::prime(5)})
        for (const std::string& name : catalog_names()) {
            const LeibnizAlgebra L = catalog(name, F);
            const LeibnizAlgebra back = algebra_from_json(algebra_to_json(L));
            CHECK(back == L);
            CHECK(back.name() == L.name());

            const std::string path = scratch("roundtrip.json");
            write_algebra_file(L, path);
            CHECK(read_algebra_file(path) == L);
        }
}

TEST_CASE("file parsing accepts mixed scalar forms and rejects bad shapes") {
    json j{{"field", "Q"},
           {"dim", 2},
           {"products", json::array({json{{"left", 1}, {"right", 1}, {"value", {"1/2", -3}}}})}};
    const LeibnizAlgebra L = algebra_from_json(j);
    CHECK(L.structure_constant(0, 0, 0) == Scalar(1) / 2);
    CHECK(L.structure_constant(0, 0, 1) == Scalar(-3));

    json bad = j;
    bad["products"][0]["left"] = 0;
    CHECK_THROWS_AS(algebra_from_json(bad), InputError);
    bad["products"][0]["left"] = 3;
    CHECK_THROWS_AS(algebra_from_json(bad), InputError);

    bad = j;
    bad["products"][0]["value"] = {"1"};
    CHECK_THROWS_AS(algebra_from_json(bad), InputError);

    bad = j;
    bad["products"].push_back(bad["products"][0]);
    CHECK_THROWS_AS(algebra_from_json(bad), InputError);

    bad = j;
    bad["field"] = "R";
    CHECK_THROWS_AS(algebra_from_json(bad), InputError);
    bad["field"] = json{{"GF", 4}};
    CHECK_THROWS_AS(algebra_from_json(bad), InputError);

    CHECK(parse_field_flag("Q") == Field::rationals());
    CHECK(parse_field_flag("GF:5") == Field::prime(5));
    CHECK(parse_field_flag("GF(7)") == Field::prime(7));
    CHECK_THROWS_AS(parse_field_flag("GF:x"), InputError);
    CHECK_THROWS_AS(parse_field_flag("F4"), InputError);
}

TEST_CASE("digest depends on content, not layout") {
    const LeibnizAlgebra L = catalog("heisenberg");
    const std::string path = scratch("digest.json");
    write_algebra_file(L, path);
    CHECK(algebra_digest(read_algebra_file(path)) == algebra_digest(L));
    CHECK(algebra_digest(catalog("cyclic:2")) != algebra_digest(catalog("cyclic:3")));
}

TEST_CASE("cli check separates identity failures from input errors") {
    const std::string good = scratch("good.json");
    REQUIRE(cli({"catalog", "--name", "cyclic:2", "--out", good}).code == 0);
    CHECK(cli({"check", good}).code == 0);

    // e1 e1 = e1 breaks the identity exactly at the basis triple (1,1,1).
    json j = json::parse(slurp(good));
    j["products"][0]["value"] = {"1", "0"};
    const std::string bad = scratch("bad.json");
    std::ofstream(bad) << j.dump();
    const CliResult r = cli({"check", bad});
    CHECK(r.code == 1);
    const json rep = report_of(r);
    CHECK(rep["pass"] == false);
    CHECK(rep["result"]["violations"][0] == json::array({1, 1, 1}));

    const std::string broken = scratch("broken.json");
    std::ofstream(broken) << "{ not json";
    CHECK(cli({"check", broken}).code == 2);
    CHECK(cli({"check", scratch("missing.json")}).code == 2);
    CHECK(cli({"nosuchcommand"}).code == 2);
    CHECK(cli({}).code == 2);

    // The cap guards every file-loading command.
    CHECK(cli({"check", good, "--max-dim", "1"}).code == 2);
}

TEST_CASE("cli random is deterministic and steps zero gives the abelian table") {
    const std::string a = scratch("rand_a.json");
    const std::string b = scratch("rand_b.json");
    const std::vector<std::string> base{"random", "--seed", "7", "--dim", "5",
                                        "--field", "GF:5"};
    std::vector<std::string> run1 = base;
    run1.insert(run1.end(), {"--out", a});
    std::vector<std::string> run2 = base;
    run2.insert(run2.end(), {"--out", b});
    REQUIRE(cli(run1).code == 0);
    REQUIRE(cli(run2).code == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(cli({"check", a}).code == 0);

    const std::string ab = scratch("rand_ab3.json");
    REQUIRE(cli({"random", "--seed", "1", "--dim", "3", "--steps", "0", "--out", ab}).code == 0);
    CHECK(read_algebra_file(ab) == LeibnizAlgebra::abelian(3, Field::rationals()));

    const std::string stepped = scratch("rand_steps.json");
    REQUIRE(
        cli({"random", "--seed", "4", "--dim", "5", "--steps", "2", "--out", stepped}).code == 0);
    const LeibnizAlgebra S = read_algebra_file(stepped);
    CHECK(S.dim() == 5);
    CHECK(is_nilpotent(S));

    CHECK(cli({"random", "--seed", "1", "--dim", "0", "--out", ab}).code == 2);
}

TEST_CASE("cli reports differ only in timing across reruns") {
    const std::string path = scratch("stable.json");
    REQUIRE(cli({"catalog", "--name", "heisenberg", "--out", path}).code == 0);
    json first = report_of(cli({"invariants", path}));
    json second = report_of(cli({"invariants", path}));
    CHECK(first.contains("timing_ms"));
    first.erase("timing_ms");
    second.erase("timing_ms");
    CHECK(first == second);
    CHECK(first["result"]["multiplier_dim"] == 5);
    CHECK(first["input"]["digest"] == algebra_digest(catalog("heisenberg")));
}

TEST_CASE("cli cover emits a file that itself passes check") {
    const std::string in = scratch("cover_in.json");
    const std::string out = scratch("cover_out.json");
    REQUIRE(cli({"catalog", "--name", "cyclic:2", "--out", in}).code == 0);
    const CliResult r = cli({"cover", in, "--out", out});
    REQUIRE(r.code == 0);
    const json rep = report_of(r);
    CHECK(rep["result"]["is_stem"] == true);
    CHECK(rep["result"]["tra_bijective"] == true);
    CHECK(rep["result"]["kernel_dim"] == 1);
    CHECK(cli({"check", out}).code == 0);
    CHECK(read_algebra_file(out) == catalog("cyclic:3"));
}

TEST_CASE("cli zstar, unicentral, sequences, and criteria agree with the library") {
    const std::string c2 = scratch("cli_c2.json");
    REQUIRE(cli({"catalog", "--name", "cyclic:2", "--out", c2}).code == 0);

    const json zrep = report_of(cli({"zstar", c2}));
    CHECK(zrep["result"]["z_star_dim"] == 0);
    CHECK(zrep["result"]["center_dim"] == 1);
    CHECK(zrep["result"]["unicentral"] == false);

    const std::string s3 = scratch("cli_sl2.json");
    REQUIRE(cli({"catalog", "--name", "sl2", "--out", s3}).code == 0);
    CHECK(report_of(cli({"unicentral", s3}))["result"]["unicentral"] == true);

    const CliResult seq = cli({"sequences", c2, "--ideal", "e2"});
    CHECK(seq.code == 0);
    const json srep = report_of(seq);
    CHECK(srep["result"]["all_exact"] == true);
    CHECK(srep["result"]["ideals"][0]["sequences"].size() == 4);
    CHECK(cli({"sequences", c2, "--ideal", "e1"}).code == 2);
    CHECK(cli({"sequences", c2, "--ideal", "bogus"}).code == 2);
    CHECK(cli({"sequences", c2, "--all-central"}).code == 0);
    CHECK(cli({"sequences", c2, "--ideal", "none"}).code == 0);

    const json crep = report_of(cli({"criteria", c2, "--ideal", "e2"}));
    CHECK(crep["result"]["consistent"] == true);
    CHECK(crep["result"]["all_hold"] == false);
    CHECK(crep["result"]["delta_trivial"] == false);
}

TEST_CASE("cli suite runs clean on a small corpus") {
    const CliResult r = cli({"suite", "--seeds", "3", "--max-dim", "3", "--seed", "11",
                             "--reproducer-dir", ""});
    REQUIRE(r.code == 0);
    const json rep = report_of(r);
    CHECK(rep["pass"] == true);
    CHECK(rep["result"]["failure_count"] == 0);
    CHECK(rep["result"]["algebras"] == 14); // 11 catalog + 3 random
    CHECK(rep["result"]["checks"].get<std::size_t>() > 100);
}

TEST_CASE("central ideal samples are central, deduplicated, and bounded") {
    for (const char* name : {"heisenberg", "abelian:3", "cyclic:4"}) {
        const LeibnizAlgebra L = catalog(name);
        const std::vector<Subspace> ideals = central_ideal_samples(L, 8, 5);
        CHECK(ideals.size() <= 8);
        CHECK(ideals.size() >= 2);
        for (std::size_t i = 0; i < ideals.size(); ++i) {
            CHECK(is_central_ideal(L, ideals[i]));
            for (std::size_t j = i + 1; j < ideals.size(); ++j) CHECK(ideals[i] != ideals[j]);
        }
    }
}
