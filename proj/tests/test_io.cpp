#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "skc/errors.hpp"
#include "skc/io.hpp"
#include "skc/manifest.hpp"
#include "skc/plot.hpp"
#include "testutil.hpp"

using skc::DataError;

namespace {

std::filesystem::path dir = testutil::scratch_dir("io");

std::string write(const std::string& name, const std::string& content) {
  auto p = (dir / name).string();
  std::ofstream out(p, std::ios::binary);
  out << content;
  return p;
}

}  // namespace

TEST_CASE("g17 round-trips doubles exactly") {
  for (double x : {1.0 / 3, 0.1, 1e-300, -2.5e17, 0.0, 2.0000000000000004}) {
    CHECK(std::stod(skc::format_g17(x)) == x);
  }
  CHECK(skc::format_g17(0.5) == "0.5");
  CHECK(skc::format_g17(1.0) == "1");
}

TEST_CASE("atomic write creates the file and leaves no temp behind") {
  auto p = dir / "atomic.txt";
  skc::atomic_write_text(p.string(), "hello\n");
  CHECK(testutil::read_file(p.string()) == "hello\n");
  skc::atomic_write_text(p.string(), "replaced\n");
  CHECK(testutil::read_file(p.string()) == "replaced\n");
  int stray = 0;
  for (auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.path().filename().string().find(".tmp.") != std::string::npos) ++stray;
  CHECK(stray == 0);
}

TEST_CASE("edge list load accepts comments, blank lines and CRLF") {
  auto p = write("ok.txt", "# a comment\n0 1\n\n  \t\n1 2\r\n2 0\n");
  auto g = skc::load_edge_list(p);
  CHECK(g.num_vertices() == 3);
  CHECK(g.num_edges() == 3);
  CHECK(g.has_edge(0, 2));
}

TEST_CASE("edge list save and load round-trips") {
  auto g = testutil::petersen();
  auto p = (dir / "petersen.txt").string();
  skc::save_edge_list(g, p);
  auto back = skc::load_edge_list(p);
  CHECK(back.num_vertices() == g.num_vertices());
  CHECK(back.edges() == g.edges());
}

TEST_CASE("edge list parse failures carry the line number") {
  auto checked = [&](const std::string& content, const std::string& needle) {
    auto p = write("bad.txt", content);
    try {
      skc::load_edge_list(p);
      FAIL("expected DataError for: " << content);
    } catch (const DataError& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  checked("0 1\n2\n", ":2: expected two vertex ids");
  checked("0 1\n1 2 3\n", ":2: trailing token");
  checked("0 x\n", ":1: expected a non-negative integer");
  checked("0 -1\n", ":1: expected a non-negative integer");
  checked("0 1\n1 1\n", "self-loop");
  checked("0 1\n1 0\n", "duplicate edge");
  checked("0 1\n0 1\n", "duplicate edge");
  checked("0 2\n", "not dense");
  checked("", "no edges");
  checked("# only comments\n", "no edges");
  checked("0 100000001\n", "exceeds");
  CHECK_THROWS_AS(skc::load_edge_list((dir / "missing.txt").string()), DataError);
}

TEST_CASE("partition csv round-trips in any row order") {
  skc::Partition p;
  p.k = 3;
  p.labels = {2, 0, 0, 1};
  auto csv = skc::partition_to_csv(p);
  CHECK(csv == "vertex,cluster\n0,2\n1,0\n2,0\n3,1\n");
  auto path = write("part.csv", csv);
  auto back = skc::load_partition_csv(path, 4);
  CHECK(back.labels == p.labels);
  CHECK(back.k == 3);

  auto shuffled = write("part2.csv", "vertex,cluster\n3,1\n0,2\n2,0\n1,0\n");
  CHECK(skc::load_partition_csv(shuffled, 4).labels == p.labels);
  // without expected_n the count is inferred
  CHECK(skc::load_partition_csv(shuffled).labels == p.labels);
}

TEST_CASE("partition csv rejects malformed input") {
  auto reject = [&](const std::string& content, const std::string& needle) {
    auto p = write("badpart.csv", content);
    try {
      skc::load_partition_csv(p, 3);
      FAIL("expected DataError for: " << content);
    } catch (const DataError& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  reject("cluster,vertex\n0,0\n", "expected header");
  reject("vertex,cluster\n0,0\n0,1\n1,0\n2,0\n", "listed twice");
  reject("vertex,cluster\n0,0\n1,0\n", "has no row");
  reject("vertex,cluster\n0,0,9\n", "expected 'vertex,cluster'");
  reject("vertex,cluster\n0\n", "expected 'vertex,cluster'");
  reject("vertex,cluster\nx,0\n", "non-negative integer");
  reject("vertex,cluster\n5,0\n", "out of range");
  reject("vertex,cluster\n", "no rows");
}

TEST_CASE("spectrum csv format") {
  CHECK(skc::spectrum_to_csv({0.0, 0.5, 1.0 / 3}) ==
        "index,eigenvalue\n1,0\n2,0.5\n3,0.33333333333333331\n");
}

TEST_CASE("embedding csv format") {
  Eigen::MatrixXd emb(2, 2);
  emb << 1.0, 0.25, -0.5, 0.125;
  CHECK(skc::embedding_to_csv(emb) ==
        "vertex,x1,x2\n0,1,0.25\n1,-0.5,0.125\n");
}

TEST_CASE("file digests are stable and content-sensitive") {
  auto a = write("digest_a.txt", "0 1\n");
  auto b = write("digest_b.txt", "0 1\n");
  auto c = write("digest_c.txt", "0 2\n");
  CHECK(skc::fnv1a64_file(a) == skc::fnv1a64_file(b));
  CHECK(skc::fnv1a64_file(a) != skc::fnv1a64_file(c));
  auto s = skc::digest_string(skc::fnv1a64_file(a));
  CHECK(s.substr(0, 8) == "fnv1a64:");
  CHECK(s.size() == 8 + 16);
}

TEST_CASE("manifest round-trips through json") {
  skc::RunManifest m;
  m.subcommand = "cluster";
  m.params = {{"k", 5}, {"method", "greedy"}};
  auto in = write("m_input.txt", "0 1\n1 2\n2 0\n");
  m.add_input("graph", in);
  m.add_output("partition", (dir / "m_out.csv").string());

  auto primary = (dir / "m_out.csv").string();
  skc::write_manifest(m, primary);
  auto mpath = skc::manifest_path_for(primary);
  CHECK(mpath == primary + ".manifest.json");
  auto back = skc::load_manifest(mpath);
  CHECK(back.subcommand == "cluster");
  CHECK(back.params["k"] == 5);
  CHECK(back.inputs["graph"]["path"] == in);
  CHECK(back.inputs["graph"]["digest"] == skc::digest_string(skc::fnv1a64_file(in)));
  CHECK(back.outputs["partition"] == primary);

  auto junk = write("junk.manifest.json", "{not json");
  CHECK_THROWS_AS(skc::load_manifest(junk), DataError);
  auto wrong = write("wrong.manifest.json", R"({"tool":"other","version":"1",)"
                                            R"("manifest_format":"1","subcommand":"x",)"
                                            R"("params":{},"inputs":{},"outputs":{}})");
  CHECK_THROWS_AS(skc::load_manifest(wrong), DataError);
}

TEST_CASE("spectrum plot svg carries machine-readable data") {
  std::vector<double> values{0.0, 0.03, 0.2, 0.22, 0.25, 0.7};
  auto svg = skc::spectrum_plot_svg(values, 5);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("class=\"gap\"") != std::string::npos);
  CHECK(svg.find("data-k=\"5\"") != std::string::npos);
  for (std::size_t i = 1; i <= values.size(); ++i)
    CHECK(svg.find("data-index=\"" + std::to_string(i) + "\"") != std::string::npos);
  CHECK(svg.find("data-value=\"0.25\"") != std::string::npos);

  // no k+1 eigenvalue on record: no gap band
  auto nogap = skc::spectrum_plot_svg(values, 6);
  CHECK(nogap.find("class=\"gap\"") == std::string::npos);

  auto p = (dir / "plot.svg").string();
  skc::emit_spectrum_plot(values, 5, p);
  CHECK(testutil::read_file(p) == svg);
}
