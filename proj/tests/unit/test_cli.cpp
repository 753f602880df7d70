#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args)
{
    const std::string out_file = "cli_out.txt";
    std::string cmd = std::string(RHT_EXE) + " " + args + " > " + out_file + " 2> cli_err.txt";
    int status = std::system(cmd.c_str());
    Run r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream f(out_file);
    std::stringstream ss;
    ss << f.rdbuf();
    r.out = ss.str();
    return r;
}

std::string err()
{
    std::ifstream f("cli_err.txt");
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string manifold(const char* name) { return std::string("--manifold ") + RHT_DATA_DIR + "/manifolds/" + name + ".json"; }

}  // namespace

TEST_CASE("stiefel")
{
    auto a = run("stiefel --m 2 --k 3");
    CHECK(a.code == 0);
    CHECK(a.out.find("x2         deg   7") != std::string::npos);
    auto j = run("stiefel --m 2 --k 2 --max-degree 6 --format json");
    CHECK(j.code == 0);
    CHECK(j.out.find("\"dims\": [\n      1,\n      0,\n      1,\n      1,\n      0,\n      1,\n      0\n    ]") !=
          std::string::npos);
    auto bad = run("stiefel --m 2 --k 1");
    CHECK(bad.code == 2);
    std::string e = err();
    CHECK(e.find("k >= 2") != std::string::npos);
    CHECK(std::count(e.begin(), e.end(), '\n') == 1);
}

TEST_CASE("immersion exit codes")
{
    auto s2k3 = run("immersion " + manifold("S2") + " --k 3 --max-degree 15");
    CHECK(s2k3.code == 0);
    CHECK(s2k3.out.find("growth        finite") != std::string::npos);
    auto cp2 = run("immersion " + manifold("CP2") + " --k 2");
    CHECK(cp2.code == 3);
    CHECK(cp2.out.find("fails for p1") != std::string::npos);
    auto s2k2 = run("immersion " + manifold("S2") + " --k 2");
    CHECK(s2k2.code == 4);
    CHECK(s2k2.out.find("symbolic") != std::string::npos);
    CHECK(run("immersion --named S3 --k 2").code == 0);
}

TEST_CASE("input errors exit 2 with a one-line reason")
{
    CHECK(run("immersion --manifold /nonexistent.json --k 2").code == 2);
    {
        std::ofstream f("broken.json");
        f << "{\n  \"name\": \"X\",\n  \"dimension\": ,\n}\n";
    }
    CHECK(run("immersion --manifold broken.json --k 2").code == 2);
    CHECK(err().find("line 3") != std::string::npos);
    {
        std::ofstream f("badfield.json");
        f << R"({"name": "X", "dimension": "four", "model": {"basis": []}})";
    }
    CHECK(run("immersion --manifold badfield.json --k 2").code == 2);
    CHECK(err().find("/dimension") != std::string::npos);
    CHECK(run("immersion --named S2").code == 2);
    CHECK(run("bogus").code == 2);
    CHECK(run("immersion --named S2 --k 3 --format xml").code == 2);
}

TEST_CASE("outputs are deterministic and --out writes the same bytes")
{
    for (const std::string args : {"immersion --named S2xS3 --k 4 --format json", "framed-model --named CP2 --k 3",
                                   "map-sphere --named S2 --k 2", "stiefel --m 5 --k 4 --format json"}) {
        auto a = run(args), b = run(args);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
        std::remove("cli_file.txt");
        run(args + " --out cli_file.txt");
        std::ifstream f("cli_file.txt");
        std::stringstream ss;
        ss << f.rdbuf();
        CHECK(ss.str() == a.out);
    }
}

TEST_CASE("cohomology and map-sphere commands")
{
    auto c = run(std::string("cohomology --input ") + RHT_DATA_DIR + "/cdga/stiefel_V2R4.json --max-degree 6");
    CHECK(c.code == 0);
    CHECK(c.out.find("betti    1   0   1   1   0   1   0") != std::string::npos);
    auto d = run(std::string("cohomology --input ") + RHT_DATA_DIR + "/cdga/stiefel_V2R4.json --max-degree 6 --method dense");
    CHECK(d.out == c.out);
    auto m = run("map-sphere --named S2 --k 2 --max-degree 6");
    CHECK(m.out.find("betti    1   1   1   1   0   0   0") != std::string::npos);
    auto o = run("map-sphere --named S3 --k 3 --format json");
    CHECK(o.code == 0);
    CHECK(o.out.find("\"components_rank\": 1") != std::string::npos);
}

TEST_CASE("verify")
{
    auto v = run("verify --suite core");
    CHECK(v.code == 0);
    CHECK(v.out.find("all checks passed") != std::string::npos);
    CHECK(run("verify --suite nope").code == 2);
}
