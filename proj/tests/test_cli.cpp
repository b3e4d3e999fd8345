#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
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
    const std::string cmd = std::string(ASYMWB_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), p)) > 0)
        r.out.append(buf.data(), got);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("gen output and round trip")
{
    auto circ = run("gen --family gkt-circ --k 3 --t 1");
    CHECK(circ.code == 0);
    CHECK(circ.out.rfind("7 4 3\n", 0) == 0);

    auto gks = run("gen --family gks --k 6 --s 0");
    CHECK(gks.code == 0);
    CHECK(gks.out.rfind("63 35 6\n", 0) == 0);

    auto fig = run("gen --family figure2 -o cli_fig.hgf");
    CHECK(fig.code == 0);
    const auto text = slurp("cli_fig.hgf");
    CHECK(text == run("gen --family figure2").out);
    CHECK(text.rfind("6 4 3\n", 0) == 0);
    CHECK(slurp("cli_fig.hgf.labels").rfind("0 ", 0) == 0);
    auto again = run("complement cli_fig.hgf -o cli_comp.hgf");
    CHECK(again.code == 0);
    auto back = run("complement cli_comp.hgf");
    CHECK(back.out == text);
    std::remove("cli_fig.hgf");
    std::remove("cli_fig.hgf.labels");
    std::remove("cli_comp.hgf");

    auto rel = run("gen --family r3t --t 1");
    CHECK(rel.code == 0);
    CHECK(rel.out.rfind("7 8 3\n", 0) == 0);
}

TEST_CASE("exit codes")
{
    CHECK(run("gen --family gkt --k 4 --t 1").code == 2);
    CHECK(run("gen --family bogus").code == 2);
    CHECK(run("gen").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("verify --family figure2 --property asymmetric").code == 0);
    auto k43 = run("verify --family gk --k 4 --property asymmetric");
    CHECK(k43.code == 1);
    CHECK(k43.out.find("\nperm ") != std::string::npos);
    CHECK(run("verify --family gks --k 6 --s 0 --property minimal-involution-free").code == 3);
    CHECK(run("verify --family gks --k 6 --s 0 --property minimal-involution-free --mode sampled").code == 2);
    CHECK(run("verify --family gks --k 6 --s 0 --property minimal-involution-free --mode sampled --seed 1 "
              "--samples 50")
              .code
          == 0);
    CHECK(run("search enumerate --k 3 --n 8").code == 3);
    CHECK(run("verify missing-file.hgf --property asymmetric").code == 2);
}

TEST_CASE("reports and search output")
{
    auto strong = run("verify --family gkt-circ --k 3 --t 1 --property strong-minimal");
    CHECK(strong.code == 0);
    CHECK(strong.out.rfind("# asymwb ", 0) == 0);
    CHECK(strong.out.find("\nstrong-minimal true exhaustive ") != std::string::npos);

    auto n3 = run("search min-order --k 3 --n-max 7");
    CHECK(n3.code == 0);
    CHECK(n3.out.find("n(3) = 6\n") != std::string::npos);
    auto n2 = run("search min-order --k 2 --n-max 7");
    CHECK(n2.out.find("n(2) = 6\n") != std::string::npos);

    auto lemma = run("search all-symmetric --k 4 --n 5");
    CHECK(lemma.code == 0);
    CHECK(lemma.out.find("all-symmetric true k 4 n 5 scanned 32") != std::string::npos);

    auto table = run("search enumerate --k 2 --n 5 --strategy augment");
    CHECK(table.out == "k n totalLabeled isoClasses asymmetricClasses\n2 5 1024 34 0\n");

    auto aut = run("aut --family gk --k 4");
    CHECK(aut.out.find("order 2\n") != std::string::npos);
    auto stab = run("aut --family gk --k 4 --stabilize 5,6 --brute-force");
    CHECK(stab.out.find("order 1\n") != std::string::npos);

    auto crit = run("rel --family single-arc --check critical");
    CHECK(crit.code == 0);
    CHECK(crit.out.find("critical true") != std::string::npos);
    CHECK(run("rel --family r3t --t 1 --check multiplicity").out.find("multiplicity 2") != std::string::npos);
}
