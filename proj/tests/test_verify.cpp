#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "l3lab/families.hpp"
#include "l3lab/graphs.hpp"
#include "l3lab/verify.hpp"

using namespace l3lab;

namespace {

bool has_tag(const VerdictRecord& r, const std::string& t) {
  return std::find(r.tags.begin(), r.tags.end(), t) != r.tags.end();
}

Graph triple(const Graph& g) {
  return disjoint_union(disjoint_union(g, g), g);
}

}  // namespace

TEST_CASE("strongly regular verification") {
  const VerdictRecord pet = verify_srg(petersen_graph());
  CHECK(pet.ok);
  CHECK(pet.n == 10);
  CHECK(pet.lambda3 == doctest::Approx(1.0));
  CHECK(pet.ratio == doctest::Approx(0.1));
  CHECK(has_tag(pet, "srg(10,3,0,1)"));
  CHECK(has_tag(pet, "connected"));

  const VerdictRecord c5 = verify_srg(cycle_graph(5));
  CHECK(c5.ok);
  CHECK(has_tag(c5, "srg(5,2,0,1)"));
  CHECK(c5.lambda3 == doctest::Approx((std::sqrt(5.0) - 1.0) / 2.0));

  // disconnected: equal cliques, third eigenvalue equals the degree
  const VerdictRecord cliques = verify_srg(triple(complete_graph(4)));
  CHECK(cliques.ok);
  CHECK(has_tag(cliques, "disconnected"));
  CHECK(cliques.lambda3 == doctest::Approx(3.0));

  // complement disconnected: balanced multipartite, third eigenvalue zero
  const VerdictRecord octa = verify_srg(complement(triple(complete_graph(2))));
  CHECK(octa.ok);
  CHECK(has_tag(octa, "complement-disconnected"));
  CHECK(octa.lambda3 == doctest::Approx(0.0).scale(1.0));

  CHECK_THROWS_AS(verify_srg(path_graph(4)), std::invalid_argument);
}

TEST_CASE("regular line graph verification") {
  const VerdictRecord c6 = verify_regular_line_graph(cycle_graph(6));
  CHECK(c6.ok);
  CHECK(c6.n == 6);
  CHECK(c6.lambda3 == doctest::Approx(1.0));
  CHECK(c6.ratio == doctest::Approx(1.0 / 6.0));
  CHECK(has_tag(c6, "regular(2)"));
  CHECK(has_tag(c6, "line-graph"));
  CHECK_FALSE(has_tag(c6, "char-poly-relation-failed"));
  CHECK(c6.id.rfind("L(", 0) == 0);

  const VerdictRecord k4 = verify_regular_line_graph(complete_graph(4));
  CHECK(k4.ok);
  CHECK(k4.n == 6);
  CHECK(k4.lambda3 == doctest::Approx(0.0).scale(1.0));

  const VerdictRecord pet = verify_regular_line_graph(petersen_graph());
  CHECK(pet.ok);
  CHECK(pet.n == 15);
  CHECK(pet.lambda3 == doctest::Approx(2.0));
  CHECK(pet.ratio == doctest::Approx(2.0 / 15.0));

  // degree-0 graphs have an empty line graph; the relation still holds
  const VerdictRecord e3 = verify_regular_line_graph(empty_graph(3));
  CHECK(e3.ok);
  CHECK(has_tag(e3, "line-graph-too-small"));

  CHECK_THROWS_AS(verify_regular_line_graph(path_graph(3)),
                  std::invalid_argument);
}

TEST_CASE("semiregular line graph verification") {
  const VerdictRecord k23 = verify_semiregular_line_graph(complete_bipartite(2, 3));
  CHECK(k23.ok);
  CHECK(k23.n == 6);
  CHECK(has_tag(k23, "semiregular(3,2,2,3)"));
  CHECK(has_tag(k23, "n2<=2:closed-form"));
  CHECK(k23.lambda3 == doctest::Approx(0.0).scale(1.0));  // L = prism

  // two stars: line graph is a pair of cliques
  const VerdictRecord stars2 =
      verify_semiregular_line_graph(disjoint_union(complete_bipartite(1, 5),
                                                   complete_bipartite(1, 5)));
  CHECK(stars2.ok);
  CHECK(has_tag(stars2, "semiregular(10,2,1,5)"));
  CHECK(stars2.lambda3 == doctest::Approx(-1.0));

  // three stars: the r1 = 1 branch of the three-part case split
  const VerdictRecord stars3 = verify_semiregular_line_graph(
      triple(complete_bipartite(1, 2)));
  CHECK(stars3.ok);
  CHECK(has_tag(stars3, "n2=3:three-stars"));
  CHECK(stars3.lambda3 == doctest::Approx(1.0));  // L = 3 K_2

  const VerdictRecord k33 = verify_semiregular_line_graph(complete_bipartite(3, 3));
  CHECK(k33.ok);
  CHECK(has_tag(k33, "n2=3:complete-bipartite"));

  // middle sizes fall back to the eigensolver when the degree sum is too big
  const VerdictRecord k44 = verify_semiregular_line_graph(complete_bipartite(4, 4));
  CHECK(k44.ok);
  CHECK(has_tag(k44, "n2 in {4,5}:eigensolver"));
  CHECK(k44.lambda3 == doctest::Approx(2.0));
  CHECK(k44.ratio == doctest::Approx(0.125));

  // large second side: the degree sum alone settles the ratio bound
  const VerdictRecord k66 = verify_semiregular_line_graph(complete_bipartite(6, 6));
  CHECK(k66.ok);
  CHECK(has_tag(k66, "n2>=6:degree-bound"));
  CHECK(k66.lambda3 == doctest::Approx(4.0));

  CHECK_THROWS_AS(verify_semiregular_line_graph(complete_graph(3)),
                  std::invalid_argument);
}

TEST_CASE("corpus scanning") {
  const std::string h22 = graph6_encode(build_H(2, 2));
  const std::string c6 = graph6_encode(cycle_graph(6));
  const std::string pet = graph6_encode(petersen_graph());
  std::stringstream in;
  in << h22 << "\n\n" << c6 << "\r\n" << pet << "\nB\n?\n"
     << graph6_encode(complete_graph(2)) << "\n";

  const ScanResult res = scan_corpus(in, 2);
  REQUIRE(res.records.size() == 5);
  CHECK(res.summary.scanned == 5);
  CHECK(res.summary.failed_lines == 1);
  REQUIRE(res.errors.size() == 1);
  CHECK(res.errors[0].rfind("line 5:", 0) == 0);

  CHECK(res.records[0].id == h22);
  CHECK(res.records[0].n == 12);
  CHECK(res.records[0].lambda3 == doctest::Approx(3.0));
  CHECK(res.records[0].ratio == doctest::Approx(0.25));
  CHECK(res.records[0].ok);

  CHECK(res.records[1].id == c6);
  CHECK(res.records[1].ratio == doctest::Approx(1.0 / 6.0));
  CHECK(has_tag(res.records[1], "regular(2)"));
  CHECK(has_tag(res.records[1], "semiregular(3,3,2,2)"));

  CHECK(has_tag(res.records[2], "srg(10,3,0,1)"));

  CHECK(res.records[3].n == 0);
  CHECK(has_tag(res.records[3], "empty"));
  CHECK(res.records[3].ok);

  CHECK(res.records[4].n == 2);
  CHECK(has_tag(res.records[4], "n<3"));
  CHECK(res.records[4].ok);

  CHECK(res.summary.max_ratio == doctest::Approx(0.25));
  CHECK(res.summary.argmax_id == h22);
  CHECK(res.summary.near_third == 0);
  CHECK(res.summary.violations == 0);
  REQUIRE(res.summary.top.size() == 2);
  CHECK(res.summary.top[0].id == h22);
  CHECK(res.summary.top[1].id == c6);

  std::stringstream empty_in;
  const ScanResult nothing = scan_corpus(empty_in, 3);
  CHECK(nothing.summary.scanned == 0);
  CHECK(nothing.summary.max_ratio == 0.0);
  CHECK_THROWS_AS(scan_corpus(empty_in, -1), std::invalid_argument);
}

TEST_CASE("corpus files and path resolution") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "l3lab_verify_test";
  fs::create_directories(dir);
  const fs::path file = dir / "tiny.g6";
  {
    std::ofstream out(file);
    out << graph6_encode(cycle_graph(5)) << "\n";
  }

  const ScanResult res = scan_corpus_file(file.string(), 1);
  REQUIRE(res.records.size() == 1);
  CHECK(res.records[0].n == 5);
  CHECK_THROWS_AS(scan_corpus_file((dir / "missing.g6").string(), 1),
                  std::runtime_error);

  CHECK(resolve_corpus_path(file.string()) == file.string());
  ::setenv("L3LAB_CORPUS_DIR", dir.string().c_str(), 1);
  CHECK(resolve_corpus_path("tiny.g6") == (dir / "tiny.g6").string());
  CHECK(resolve_corpus_path("nowhere.g6") == "nowhere.g6");
  ::unsetenv("L3LAB_CORPUS_DIR");

  fs::remove_all(dir);
}

TEST_CASE("csv rendering") {
  CHECK(verdict_csv_header() == "id,n,lambda3,ratio,tags,ok");
  VerdictRecord r;
  r.id = "Bw";
  r.n = 3;
  r.lambda3 = 2.0;
  r.ratio = 2.0 / 3.0;
  r.tags = {"regular(2)", "srg(3,2,1,0)"};
  r.ok = false;
  CHECK(verdict_csv_row(r) ==
        "Bw,3,2,0.666666666667,regular(2);srg(3,2,1,0),0");
}
