// End-to-end tests of the command-line tool: golden outputs, stable exit
// codes, byte-determinism, and the document round trip.  The binary path
// arrives as the first program argument.
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

namespace {

std::string g_cli;

struct RunResult {
    int code = -1;
    std::string out;  // stdout and stderr interleaved
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    RunResult r;
    std::string cmd = env_prefix + g_cli + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int st = pclose(p);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    int first_doctest_arg = 1;
    if (argc > 1 && argv[1][0] != '-') {
        g_cli = argv[1];
        first_doctest_arg = 2;
    } else {
        std::fprintf(stderr, "usage: test_cli <path-to-binary> [doctest args]\n");
        return 1;
    }
    doctest::Context ctx;
    ctx.applyCommandLine(argc - first_doctest_arg + 1, argv + first_doctest_arg - 1);
    return ctx.run();
}

TEST_CASE("shift-spectrum text and graph output") {
    RunResult r = run_cli("sspec --model kA2");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "space: 3 points\n"
          "point 0: {P1}\n"
          "point 1: {P2}\n"
          "point 2: {S2}\n"
          "closed-basis 0: points {0,1}\n"
          "closed-basis 1: points {0,2}\n"
          "closed-basis 2: points {1,2}\n"
          "T0: yes\n"
          "discrete: yes\n"
          "indiscrete: no\n"
          "sierpinski: no\n");
    RunResult dot = run_cli("sspec --model kA2 --format dot");
    CHECK(dot.code == 0);
    CHECK(dot.out ==
          "digraph sspec {\n"
          "  \"{P1}\";\n"
          "  \"{P2}\";\n"
          "  \"{S2}\";\n"
          "}\n");
}

TEST_CASE("shift-spectrum document output") {
    RunResult r = run_cli("sspec --model kA2 --format doc");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"kind\": \"finite_space\"") != std::string::npos);
    CHECK(r.out.find("\"name\": \"{P2}\"") != std::string::npos);
    CHECK(r.out.find("\"t0\": true") != std::string::npos);
    CHECK(r.out.find("\"discrete\": true") != std::string::npos);
}

TEST_CASE("shift-homological spectrum") {
    RunResult r = run_cli("shspec --model kA2");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "space: 3 points\n"
          "point 0: P1\n"
          "point 1: P2\n"
          "point 2: S2\n"
          "closed-basis 0: points {0,1}\n"
          "closed-basis 1: points {0,2}\n"
          "closed-basis 2: points {1,2}\n"
          "T0: yes\n"
          "discrete: yes\n"
          "indiscrete: no\n"
          "sierpinski: no\n");
    RunResult st = run_cli("shspec --model stmod_Cp --p 5");
    CHECK(st.code == 0);
    CHECK(st.out ==
          "space: 2 points\n"
          "point 0: <1>\n"
          "point 1: <2>\n"
          "closed-basis 0: points {0,1}\n"
          "T0: no\n"
          "discrete: no\n"
          "indiscrete: yes\n"
          "sierpinski: no\n");
}

TEST_CASE("discreteness criterion lines") {
    RunResult r = run_cli("sspec --model kA2 --criterion");
    CHECK(r.code == 0);
    CHECK(r.out.find("criterion P1: yes\ncriterion P2: yes\ncriterion S2: yes\n") !=
          std::string::npos);
    RunResult doc = run_cli("sspec --model kA2 --criterion --format doc");
    CHECK(doc.code == 0);
    CHECK(doc.out.find("\"discreteness_criterion\"") != std::string::npos);
    RunResult dot = run_cli("sspec --model kA2 --criterion --format dot");
    CHECK(dot.code == 1);
    CHECK(dot.out == "usage error: --criterion has no graph form; use --format text|doc\n");
}

TEST_CASE("declared primes appear verbatim as points") {
    RunResult r = run_cli("sspec --model specZ --bound 10");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "space: 5 points\n"
          "point 0: P(2)\n"
          "point 1: P(3)\n"
          "point 2: P(5)\n"
          "point 3: P(7)\n"
          "point 4: P(0)\n"
          "closed-basis 0: points {0}\n"
          "closed-basis 1: points {1}\n"
          "closed-basis 2: points {2}\n"
          "closed-basis 3: points {3}\n"
          "closed-basis 4: points {0,1,2,3,4}\n"
          "T0: yes\n"
          "discrete: no\n"
          "indiscrete: no\n"
          "sierpinski: no\n");
    RunResult k = run_cli("sspec --model kronecker");
    CHECK(k.code == 0);
    CHECK(k.out.substr(0, 16) == "space: 15 points");
    CHECK(k.out.find("point 10: reg_except(0)\n") != std::string::npos);
    CHECK(k.out.find("point 14: reg_all\n") != std::string::npos);
    CHECK(k.out.find("closed-basis 4: points {0,1,2,3,4,5,6,7,8,10,11,12,13,14}\n") !=
          std::string::npos);
}

TEST_CASE("thick-subcategory lattice") {
    RunResult r = run_cli("lattice --model kA2");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "thick subcategories: 5\n"
          "element 0: {}\n"
          "element 1: {P1}\n"
          "element 2: {P2}\n"
          "element 3: {S2}\n"
          "element 4: {P1,P2,S2}\n"
          "covers: 0<1 0<2 0<3 1<4 2<4 3<4\n");
    RunResult an = run_cli("lattice --model An --n 3");
    CHECK(an.code == 0);
    CHECK(an.out.substr(0, 23) == "thick subcategories: 14");
    CHECK(an.out.find("element 13: {[1..1],[1..2],[1..3],[2..2],[2..3],[3..3]}\n") !=
          std::string::npos);
    CHECK(an.out.find("covers: 0<1 0<2 0<3 0<4 0<5 0<6 1<7 1<9 1<10 2<9 2<11 3<8 3<10 "
                      "3<11 4<8 4<9 4<12 5<10 5<12 6<7 6<11 6<12 7<13 8<13 9<13 10<13 "
                      "11<13 12<13\n") != std::string::npos);
    RunResult dot = run_cli("lattice --model kA2 --format dot");
    CHECK(dot.code == 0);
    CHECK(dot.out.find("\"{}\" -> \"{P1}\";\n") != std::string::npos);
    CHECK(dot.out.find("\"{S2}\" -> \"{P1,P2,S2}\";\n") != std::string::npos);
}

TEST_CASE("comparison spaces from lattices") {
    RunResult ma = run_cli("matsui --model A_infinity");
    CHECK(ma.code == 0);
    CHECK(ma.out ==
          "space: 2 points\n"
          "point 0: {}\n"
          "point 1: {(x,y^1),(x,y^2),(x,y^3),(x,y^4),(x,y^5)}\n"
          "closed-basis 0: points {0}\n"
          "closed-basis 1: points {0,1}\n"
          "T0: yes\n"
          "discrete: no\n"
          "indiscrete: no\n"
          "sierpinski: yes\n");
    RunResult fs = run_cli("fspcnt --model A_infinity");
    CHECK(fs.code == 0);
    CHECK(fs.out ==
          "space: 3 points\n"
          "point 0: {}\n"
          "point 1: {(x,y^1),(x,y^2),(x,y^3),(x,y^4),(x,y^5)}\n"
          "point 2: {(x,y^1),(x,y^2),(x,y^3),(x,y^4),(x,y^5),(x,y^inf)}\n"
          "closed-basis 0: points {2}\n"
          "closed-basis 1: points {1,2}\n"
          "closed-basis 2: points {0,1,2}\n"
          "T0: yes\n"
          "discrete: no\n"
          "indiscrete: no\n"
          "sierpinski: no\n");
    RunResult fk = run_cli("fspcnt --model kA2");
    CHECK(fk.code == 0);
    CHECK(fk.out ==
          "space: 5 points\n"
          "point 0: {}\n"
          "point 1: {P1}\n"
          "point 2: {P2}\n"
          "point 3: {S2}\n"
          "point 4: {P1,P2,S2}\n"
          "closed-basis 0: points {4}\n"
          "closed-basis 1: points {1,4}\n"
          "closed-basis 2: points {2,4}\n"
          "closed-basis 3: points {3,4}\n"
          "closed-basis 4: points {0,1,2,3,4}\n"
          "T0: yes\n"
          "discrete: no\n"
          "indiscrete: no\n"
          "sierpinski: no\n");
}

TEST_CASE("model inspection and the document round trip") {
    RunResult r = run_cli("model --model stmod_Cp --p 5");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "model: stmod_C5\n"
          "mode: locally_finite\n"
          "classes: 2\n"
          "class 0: <1> (shift period 2)\n"
          "class 1: <2> (shift period 2)\n"
          "hom table: 4 nonzero pairs\n");
    std::string path = "/tmp/speclab_cli_roundtrip.json";
    RunResult save = run_cli("model --model kA2 --out " + path);
    CHECK(save.code == 0);
    RunResult a = run_cli("sspec --model kA2");
    RunResult b = run_cli("sspec --model-file " + path);
    CHECK(b.code == 0);
    CHECK(a.out == b.out);
    std::remove(path.c_str());
    RunResult dot = run_cli("model --model kA2 --format dot");
    CHECK(dot.code == 1);
    CHECK(dot.out == "usage error: the model document has no graph form; use --format text|doc\n");
}

TEST_CASE("radical subcommand") {
    RunResult r = run_cli("radical --model A_infinity --thick 0");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "thick: {}\n"
          "radical: {(x,y^1),(x,y^2),(x,y^3),(x,y^4),(x,y^5)}\n"
          "is radical: no\n");
    RunResult p = run_cli("radical --model kA2 --thick P1");
    CHECK(p.code == 0);
    CHECK(p.out == "thick: {P1}\nradical: {P1}\nis radical: yes\n");
    RunResult missing = run_cli("radical --model kA2");
    CHECK(missing.code == 1);
}

TEST_CASE("rank subcommands") {
    RunResult theta = run_cli("rank theta --model kA2 --object P1");
    CHECK(theta.code == 0);
    CHECK(theta.out == "class P1: 1\nclass P2: 0\nclass S2: 1\n");
    RunResult lower = run_cli("rank theta --model kA2 --object P1 --lower");
    CHECK(lower.code == 0);
    CHECK(lower.out == "class P1: 1\nclass P2: 1\nclass S2: 0\n");
    RunResult ker = run_cli("rank kernel --model kA2 --object P1");
    CHECK(ker.code == 0);
    CHECK(ker.out == "kernel: {P2}\nis radical: yes\n");
    RunResult dec = run_cli("rank decompose --model kA2 --values 1,2,1");
    CHECK(dec.code == 0);
    CHECK(dec.out == "decomposition found\ncandidate P2: 1\ncandidate S2: 1\n");
    RunResult good = run_cli("rank check --model kA2 --object P1");
    CHECK(good.code == 0);
    CHECK(good.out ==
          "[pass] nonnegative: all classes\n"
          "[pass] shift-invariant: all classes, sample shift 7\n"
          "[pass] additive: all two-class sums\n"
          "[pass] subadditive: P1 -> P2 -> S2\n"
          "axioms hold\n");
    RunResult bad = run_cli("rank check --model kA2 --values 0,1,0");
    CHECK(bad.code == 4);
    CHECK(bad.out ==
          "[pass] nonnegative: all classes\n"
          "[pass] shift-invariant: all classes, sample shift 7\n"
          "[pass] additive: all two-class sums\n"
          "[FAIL] subadditive: P1 -> P2 -> S2\n"
          "axioms violated\n");
    CHECK(run_cli("rank kernel --model kA2").code == 1);
    RunResult wrong = run_cli("rank kernel --model kA2 --values 1,0");
    CHECK(wrong.code == 1);
    CHECK(wrong.out ==
          "usage error: --values needs exactly 3 comma-separated integers for model kA2\n");
}

TEST_CASE("tube subcommands") {
    RunResult en = run_cli("tube enumerate --n 2");
    CHECK(en.code == 0);
    CHECK(en.out ==
          "non-crossing collections on 2 points: 4\n"
          "{}\n"
          "{(0,1)}\n"
          "{(1,0)}\n"
          "{(0,1),(1,0)}\n");
    RunResult wide = run_cli("tube wide --n 3 --arcs \"(0,1)\"");
    CHECK(wide.code == 0);
    CHECK(wide.out == "arcs: {(0,1)}\nwide (length <= 9): {R0^1}\n");
    RunResult perp = run_cli("tube perp --n 3 --arcs \"(0,2)\"");
    CHECK(perp.code == 0);
    CHECK(perp.out ==
          "arcs: {(0,2)}\n"
          "perp-object: {R0^1,R2^3}\n"
          "perp (length <= 9): {R0^2}\n");
    RunResult ver = run_cli("tube verify --n 2");
    CHECK(ver.code == 0);
    CHECK(ver.out ==
          "[pass] tube/hom vs quiver oracle (all pairs, length <= 6): expected agree; "
          "computed agree (nilpotent cyclic-quiver representations)\n"
          "[pass] tube/ext vs quiver oracle (all pairs, length <= 6): expected agree; "
          "computed agree (nilpotent cyclic-quiver representations)\n"
          "[pass] tube/wide = perp of perp-object (all non-empty non-crossing "
          "collections): expected agree; computed agree (filtration closure vs Hom/Ext "
          "vanishing)\n"
          "3 checks, 0 failures\n");
    CHECK(run_cli("tube verify --n 3").code == 0);
    RunResult badarcs = run_cli("tube wide --n 3 --arcs \"(0,1),(xx\"");
    CHECK(badarcs.code == 1);
    CHECK(badarcs.out == "usage error: bad arc list near position 7\n");
    RunResult crossing = run_cli("tube wide --n 3 --arcs \"(0,1),(0,2)\"");
    CHECK(crossing.code == 1);
    CHECK(crossing.out == "usage error: wide_from_arcs requires a non-crossing collection\n");
}

TEST_CASE("psi and support subcommands") {
    RunResult byindex = run_cli("psi --model kA2 --points 0,2");
    CHECK(byindex.code == 0);
    CHECK(byindex.out == "points: 2 of 3\npsi: {P2}\n");
    RunResult byname = run_cli("psi --model kA2 --points \"{P1},{S2}\"");
    CHECK(byname.code == 0);
    CHECK(byname.out == byindex.out);
    RunResult badname = run_cli("psi --model kA2 --points \"{P9}\"");
    CHECK(badname.code == 1);
    CHECK(badname.out == "usage error: unknown spectrum point '{P9}'\n");
    RunResult sup = run_cli("support --model specZ --bound 10 --object Z/3");
    CHECK(sup.code == 0);
    CHECK(sup.out == "object: Z/3\nsupport: 1 of 5 points\npoint 1: P(3)\n");
}

TEST_CASE("verification suites through the tool") {
    RunResult all = run_cli("verify all");
    CHECK(all.code == 0);
    CHECK(all.out.find("75 checks, 0 failures\n") != std::string::npos);
    CHECK(all.out.find("[FAIL]") == std::string::npos);
    RunResult t1 = run_cli("verify table1");
    CHECK(t1.code == 0);
    CHECK(t1.out.find("7 checks, 0 failures\n") != std::string::npos);
    CHECK(run_cli("verify nope").code == 1);
}

TEST_CASE("exit codes are stable per error class") {
    RunResult usage = run_cli("sspec --model nope");
    CHECK(usage.code == 1);
    CHECK(usage.out ==
          "usage error: unknown builtin model 'nope'; available: kA2, An, kronecker, "
          "tube_n, specZ, A_infinity, D_infinity, stmod_Cp\n");
    RunResult both = run_cli("sspec --model kA2 --model-file /tmp/whatever.json");
    CHECK(both.code == 1);
    CHECK(both.out == "usage error: give either --model or --model-file, not both\n");
    RunResult none = run_cli("sspec");
    CHECK(none.code == 1);
    CHECK(none.out == "usage error: no model selected (use --model NAME or --model-file PATH)\n");
    RunResult modelerr = run_cli("shspec --model kronecker");
    CHECK(modelerr.code == 2);
    CHECK(modelerr.out ==
          "model error: the shift-homological spectrum needs a locally finite model; "
          "kronecker(4,3) is declared data\n");
    RunResult guard = run_cli("lattice --model kA2", "SPECLAB_GUARD=4 ");
    CHECK(guard.code == 3);
    CHECK(guard.out ==
          "guard: thick-subcategory enumeration would visit 8 candidates (guard 4; "
          "raise with SPECLAB_GUARD)\n");
    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("").code == 1);  // a subcommand is required
}

TEST_CASE("repeated runs are byte-identical") {
    for (const char* cmd : {"sspec --model kronecker", "lattice --model An --n 4 --jobs 2",
                            "fspcnt --model specZ --bound 10", "tube enumerate --n 4"}) {
        RunResult a = run_cli(cmd);
        RunResult b = run_cli(cmd);
        CHECK(a.code == 0);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }
    RunResult jobs1 = run_cli("lattice --model An --n 4 --jobs 1");
    RunResult jobs3 = run_cli("lattice --model An --n 4 --jobs 3");
    CHECK(jobs1.out == jobs3.out);
}
