#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "motifspectral/graph.hpp"
#include "motifspectral/mam.hpp"
#include "motifspectral/spectral.hpp"

using namespace motifspectral;

namespace {

std::string g_binary;
std::filesystem::path g_dir;

int run(const std::string& args) {
    const std::string cmd = g_binary + " " + args + " >" + (g_dir / "stdout.txt").string() +
                            " 2>" + (g_dir / "stderr.txt").string();
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string path(const std::string& name) { return (g_dir / name).string(); }

}  // namespace

TEST_CASE("mam command writes MatrixMarket plus id mapping") {
    {
        std::ofstream out(path("one.tsv"));
        out << "7\t9\t3.5\n";
    }
    CHECK(run("mam -i " + path("one.tsv") + " -m Ms --closure func --weighting mean -o " +
              path("one.mtx")) == 0);
    const SymmetricSparseMatrix m = read_matrix_market(path("one.mtx"));
    CHECK(m.n() == 2);
    CHECK(m.at(0, 1) == 3.5);
    CHECK(slurp(path("one.mtx.idmap.csv")) == "external_id,internal_id\n7,0\n9,1\n");

    // unknown motif name is a usage error
    CHECK(run("mam -i " + path("one.tsv") + " -m M99 -o " + path("x.mtx")) == 2);
    // missing file is a usage-ish failure but happens at runtime: exit 1
    CHECK(run("mam -i " + path("absent.tsv") + " -o " + path("x.mtx")) == 1);
}

TEST_CASE("mam sums motifs across the list") {
    {
        std::ofstream out(path("star.tsv"));
        out << "0\t1\t1\n0\t2\t1\n3\t1\t1\n3\t2\t1\n";
    }
    CHECK(run("mam -i " + path("star.tsv") + " -m M8,M10 --weighting unweighted -o " +
              path("sum.mtx")) == 0);
    const SymmetricSparseMatrix sum = read_matrix_market(path("sum.mtx"));
    DirectedGraph g = load_edge_list(path("star.tsv")).graph;
    const SymmetricSparseMatrix m8 =
        build_mam(g, {{MotifName::M8}, Closure::Functional, Weighting::Unweighted, Method::Auto});
    const SymmetricSparseMatrix m10 =
        build_mam(g, {{MotifName::M10}, Closure::Functional, Weighting::Unweighted, Method::Auto});
    CHECK(sum == m8.add(m10));
}

TEST_CASE("generate er and ba are reproducible and exact where promised") {
    CHECK(run("generate er --n 50 --p 0.05 --seed 1 -o " + path("er1.tsv")) == 0);
    CHECK(run("generate er --n 50 --p 0.05 --seed 1 -o " + path("er2.tsv")) == 0);
    CHECK(slurp(path("er1.tsv")) == slurp(path("er2.tsv")));

    CHECK(run("generate ba --n 100 --m 10 --seed 1 -o " + path("ba.tsv")) == 0);
    const DirectedGraph ba = load_edge_list(path("ba.tsv")).graph;
    CHECK(ba.num_edges() == 2 * 10 * 90);  // 900 undirected edges

    // generators refuse to run without a seed
    CHECK(run("generate er --n 10 --p 0.1 -o " + path("x.tsv")) == 2);
    // dimension mismatch in the connection matrix
    CHECK(run("generate dsbm --sizes 10,10 --connection 0.5 --seed 1 -o " + path("x.tsv")) == 2);
}

TEST_CASE("cluster pipeline with truth reporting is deterministic") {
    CHECK(run("generate dsbm --sizes 40,40 --connection \"0.6,0.05;0.05,0.6\" --seed 3 -o " +
              path("blocks.tsv") + " --truth " + path("blocks_truth.csv")) == 0);
    const std::string flags = " -i " + path("blocks.tsv") + " -m Ms -k 2 -l 2 --seed 7 --truth " +
                              path("blocks_truth.csv") + " -o ";
    CHECK(run("cluster" + flags + path("p1.csv")) == 0);
    const std::string out1 = slurp(path("stdout.txt"));
    CHECK(run("cluster" + flags + path("p2.csv")) == 0);
    CHECK(slurp(path("p1.csv")) == slurp(path("p2.csv")));
    CHECK(out1.find("\"ari\":1.0") != std::string::npos);
    CHECK(slurp(path("p1.csv.summary.json")).find("\"component_size\":80") != std::string::npos);

    // eval agrees with the summary
    CHECK(run("eval ari --pred " + path("p1.csv") + " --truth " + path("blocks_truth.csv")) == 0);
    CHECK(slurp(path("stdout.txt")) == "ari=1\n");
    CHECK(run("eval nmi --pred " + path("p1.csv") + " --truth " + path("blocks_truth.csv") +
              " --json") == 0);
    CHECK(slurp(path("stdout.txt")).find("{\"nmi\":1.0}") != std::string::npos);
}

TEST_CASE("cluster honors the mean-degree tau token") {
    CHECK(run("cluster -i " + path("blocks.tsv") + " -m Ms -k 2 -l 2 --seed 7 --tau mean-degree -o " +
              path("preg.csv")) == 0);
    const std::string summary = slurp(path("preg.csv.summary.json"));
    CHECK(summary.find("\"tau\": 0.0") == std::string::npos);  // resolved to a positive value
}

TEST_CASE("bipartite command produces two partitions and auto-detects sources") {
    CHECK(run("generate bsbm --source-sizes 20,20 --dest-sizes 20,20 "
              "--connection \"0.9,0.05;0.05,0.9\" --seed 5 -o " +
              path("bip.tsv") + " --truth " + path("bip_truth.csv")) == 0);
    CHECK(run("bipartite -i " + path("bip.tsv") +
              " --sources auto --ks 2 --ls 2 --kd 2 --ld 2 --seed 2 -o " + path("bip")) == 0);
    CHECK(std::filesystem::exists(path("bip.sources.csv")));
    CHECK(std::filesystem::exists(path("bip.destinations.csv")));

    CHECK(run("eval ari --pred " + path("bip.sources.csv") + " --truth " + path("bip_truth.csv")) ==
          0);
    CHECK(slurp(path("stdout.txt")) == "ari=1\n");

    // a non-bipartite edge is a validation failure naming the edge
    {
        std::ofstream out(path("notbip.tsv"));
        out << "0\t1\t1\n1\t2\t1\n";
    }
    CHECK(run("bipartite -i " + path("notbip.tsv") + " --sources auto --seed 1 -o " +
              path("nb")) == 2);
}

TEST_CASE("eval cir and sweep write their CSVs") {
    CHECK(run("eval cir -i " + path("blocks.tsv") + " --pred " + path("p1.csv") + " -o " +
              path("cir.csv")) == 0);
    const std::string cir = slurp(path("cir.csv"));
    CHECK(std::count(cir.begin(), cir.end(), '\n') == 2);

    CHECK(run("eval sweep -i " + path("blocks.tsv") + " -m M8 -o " + path("sweep.csv")) == 0);
    CHECK(slurp(path("sweep.csv")).rfind("split,node,ncut", 0) == 0);
}

TEST_CASE("bench writes a report and applies the dense guard") {
    CHECK(run("bench --model er --ns 200 --param 5 --motifs M1 --methods dense,sparse "
              "--repeats 2 --seed 1 -o " +
              path("bench.csv")) == 0);
    const std::string report = slurp(path("bench.csv"));
    CHECK(report.find("er,200,5,M1,dense,2,") != std::string::npos);
    CHECK(report.find("er,200,5,M1,sparse,2,") != std::string::npos);
    CHECK(report.find("DNF") == std::string::npos);

    CHECK(run("bench --model er --ns 40000 --param 0.1 --motifs Ms --methods dense --repeats 1 "
              "--seed 1 -o " +
              path("bench_guard.csv")) == 0);
    CHECK(slurp(path("bench_guard.csv")).find("DNF") != std::string::npos);
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: test_cli <path-to-binary>\n");
        return 1;
    }
    g_binary = argv[argc - 1];
    g_dir = std::filesystem::temp_directory_path() / "msp_cli_tests";
    std::filesystem::create_directories(g_dir);

    doctest::Context ctx;
    ctx.applyCommandLine(argc - 1, argv);
    return ctx.run();
}
