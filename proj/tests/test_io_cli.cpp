#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "homex/cli.hpp"
#include "homex/constructions.hpp"
#include "homex/io.hpp"
#include "schema_check.hpp"
#include "test_support.hpp"

using namespace homex;
using homex::testing::load_schema;
using homex::testing::validates_against_schema;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name)
        : path("homex_test_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
};

int run_cli(const std::vector<std::string>& args, std::string* out_text = nullptr,
            std::string* err_text = nullptr) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    if (out_text) *out_text = out.str();
    if (err_text) *err_text = err.str();
    return code;
}

const nlohmann::json& schema() {
    static nlohmann::json s = load_schema(HOMEX_SCHEMA_PATH);
    return s;
}

} // namespace

TEST_CASE("sc format round trip") {
    SimplicialComplex x = read_complex_string("# comment\n0 1 2\n2 3\n\n");
    CHECK(x.facet_count() == 2);
    CHECK(x.vertex_count() == 4);
    CHECK(x.label_or_id(0) == "0");

    std::string once = to_sc_string(x);
    std::string twice = to_sc_string(read_complex_string(once));
    CHECK(once == twice);
}

TEST_CASE("sc tokens are arbitrary strings in first-seen order") {
    SimplicialComplex x = read_complex_string("apple banana\nbanana cherry\n");
    CHECK(x.vertex_count() == 3);
    CHECK(x.label_or_id(0) == "apple");
    CHECK(x.label_or_id(1) == "banana");
    CHECK(x.label_or_id(2) == "cherry");
    CHECK(x.contains_face(Face{0, 1}));
}

TEST_CASE("sc parse errors carry line numbers") {
    try {
        read_complex_string("0 1\n2 2\n");
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("json complex format") {
    SimplicialComplex ints = read_complex_string(R"({"facets": [[0,1,2],[2,3]]})");
    CHECK(ints.facet_count() == 2);
    CHECK(ints.labels().empty());

    SimplicialComplex strs =
        read_complex_string(R"({"facets": [["a","b"],["b","c"]]})");
    CHECK(strs.label_or_id(0) == "a");

    CHECK_THROWS_AS(read_complex_string(R"({"facets": [[0,"a"]]})"),
                    ValidationError);
    CHECK_THROWS_AS(read_complex_string(R"({"nope": 1})"), ValidationError);
    CHECK_THROWS_AS(read_complex_string("{broken"), ValidationError);
}

TEST_CASE("generated labels survive a file round trip") {
    SimplicialComplex mh = build_mh(2, 1);
    TempFile f("mh.sc");
    write_complex_file(f.path, mh);
    SimplicialComplex back = read_complex_file(f.path);
    CHECK(back == mh); // labels written in lex facet order keep the ids
    CHECK(back.label_or_id(4) == "z");
}

TEST_CASE("every generated complex round-trips through the sc format") {
    auto roundtrip = [](const SimplicialComplex& x) {
        SimplicialComplex back = read_complex_string(to_sc_string(x));
        CHECK(back == x);
        CHECK(to_sc_string(back) == to_sc_string(x));
    };
    for (int d = 0; d <= 5; ++d)
        for (int k = 0; k <= d; ++k) roundtrip(build_mh(d, k));
    for (int d = 1; d <= 4; ++d)
        for (int k = 1; k <= d; ++k) {
            roundtrip(build_ms(d, k));
            roundtrip(build_suspension_example(d, k));
            for (int m = connectivity_threshold(d, k) + 1; m <= d; ++m)
                roundtrip(build_rel(d, k, m));
        }
}

TEST_CASE("cli gen + homology reproduces the minimal pure example") {
    TempFile f("gen_mh.sc");
    CHECK(run_cli({"gen", "mh", "--d", "2", "--k", "1", "-o", f.path}) == 0);

    std::string out;
    CHECK(run_cli({"homology", f.path, "--reduced"}, &out) == 0);
    CHECK(out.find("H_0: 0") != std::string::npos);
    CHECK(out.find("H_1: Z") != std::string::npos);
}

TEST_CASE("cli bounds text and json") {
    std::string out;
    CHECK(run_cli({"bounds", "--d", "3", "--k", "2", "--m", "3"}, &out) == 0);
    CHECK(out.find("pure bound: 6") != std::string::npos);
    CHECK(out.find("strong bound: 6") != std::string::npos);
    CHECK(out.find("connectivity threshold: 2") != std::string::npos);
    CHECK(out.find("relative bound (m=3): 6") != std::string::npos);

    CHECK(run_cli({"bounds", "--d", "3", "--k", "2", "--m", "3", "--json"},
                  &out) == 0);
    CHECK(validates_against_schema(out, schema()));
}

TEST_CASE("cli verify exits zero and reports the bound") {
    std::string out;
    CHECK(run_cli({"verify", "pure-bound", "--d", "2", "--k", "1"}, &out) == 0);
    CHECK(out.find("minimal witness at n=5") != std::string::npos);

    CHECK(run_cli({"verify", "pure-bound", "--d", "1", "--k", "1", "--json"},
                  &out) == 0);
    CHECK(validates_against_schema(out, schema()));

    CHECK(run_cli({"verify", "strong-bound", "--d", "2", "--k", "1", "--m", "2",
                   "--jobs", "2", "--json"},
                  &out) == 0);
    CHECK(validates_against_schema(out, schema()));
}

TEST_CASE("cli json reports validate against the shipped schema") {
    TempFile f("round.sc");
    CHECK(run_cli({"gen", "ms", "--d", "2", "--k", "1", "-o", f.path}) == 0);

    std::string out;
    for (std::vector<std::string> cmd :
         {std::vector<std::string>{"homology", f.path, "--json"},
          {"check", f.path, "--pure", "2", "--json"},
          {"components", f.path, "--dim", "2", "--json"},
          {"growth", f.path, "--dim", "2", "--json"},
          {"collapse", f.path, "--to", "1", "--json"},
          {"nerve", f.path, "--json"}}) {
        INFO("command " << cmd[0]);
        CHECK(run_cli(cmd, &out) == 0);
        CHECK(validates_against_schema(out, schema()));
    }

    CHECK(run_cli({"gen", "rel", "--d", "3", "--k", "2", "--m", "3", "--json"},
                  &out) == 0);
    CHECK(validates_against_schema(out, schema()));
}

TEST_CASE("cli nerve caps the homology computation by facet count") {
    TempFile f("bignerve.sc");
    CHECK(run_cli({"gen", "ms", "--d", "4", "--k", "1", "-o", f.path}) == 0);
    std::string out;
    CHECK(run_cli({"nerve", f.path}, &out) == 0);
    CHECK(out.find("homology skipped") != std::string::npos);
    CHECK(run_cli({"nerve", f.path, "--json"}, &out) == 0);
    CHECK(validates_against_schema(out, schema()));

    // small complexes still get the full profile
    TempFile g("smallnerve.sc");
    CHECK(run_cli({"gen", "mh", "--d", "2", "--k", "1", "-o", g.path}) == 0);
    CHECK(run_cli({"nerve", g.path}, &out) == 0);
    CHECK(out.find("H_1: Z") != std::string::npos);
}

TEST_CASE("cli check assertions drive the exit code") {
    TempFile f("check.sc");
    CHECK(run_cli({"gen", "mh", "--d", "2", "--k", "1", "-o", f.path}) == 0);

    CHECK(run_cli({"check", f.path, "--pure", "2", "--homology", "1"}) == 0);
    CHECK(run_cli({"check", f.path, "--pure", "3"}) == 1);
    CHECK(run_cli({"check", f.path, "--strong", "2"}) == 1); // two components
    CHECK(run_cli({"check", f.path, "--strong", "1"}) == 0);
}

TEST_CASE("cli growth failure lists components and exits 1") {
    TempFile f("split.sc");
    {
        std::ofstream out(f.path);
        out << "0 1 2\n3 4 5\n";
    }
    std::string err;
    CHECK(run_cli({"growth", f.path, "--dim", "2"}, nullptr, &err) == 1);
    CHECK(err.find("2 components") != std::string::npos);
}

TEST_CASE("cli usage and input errors exit 2") {
    CHECK(run_cli({"no-such-command"}) == 2);
    CHECK(run_cli({"homology"}) == 2);             // missing file argument
    CHECK(run_cli({"homology", "missing.sc"}) == 2);
    CHECK(run_cli({"bounds", "--d", "2", "--k", "5"}) == 2); // domain error
    CHECK(run_cli({"gen", "rel", "--d", "3", "--k", "2"}) == 2); // rel needs m
    CHECK(run_cli({"gen", "what", "--d", "2", "--k", "1"}) == 2);
    CHECK(run_cli({}) == 2);
}

TEST_CASE("cli collapse keeps vertex labels on the remaining complex") {
    TempFile f("labels.sc");
    CHECK(run_cli({"gen", "mh", "--d", "2", "--k", "1", "-o", f.path}) == 0);
    std::string out;
    CHECK(run_cli({"collapse", f.path, "--to", "1"}, &out) == 0);
    CHECK(out.find("s0_0") != std::string::npos);
}

TEST_CASE("cli homology of an empty facet file") {
    TempFile f("empty.sc");
    {
        std::ofstream o(f.path);
        o << "# nothing here\n";
    }
    std::string out;
    CHECK(run_cli({"homology", f.path}, &out) == 0);
    CHECK(out.find("empty complex") != std::string::npos);
}

TEST_CASE("cli gen rel uses the construction block names") {
    std::string out;
    CHECK(run_cli({"gen", "rel", "--d", "3", "--k", "2", "--m", "3"}, &out) == 0);
    CHECK(out.find("q1") != std::string::npos);
    CHECK(out.find("w4") != std::string::npos);
    CHECK(out.find("v1") != std::string::npos);
}
