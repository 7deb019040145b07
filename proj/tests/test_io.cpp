#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "simpdim/complex.hpp"
#include "simpdim/genfun.hpp"
#include "simpdim/io.hpp"
#include "test_util.hpp"

using namespace simpdim;
using testutil::fv;

TEST_SUITE("io") {
  TEST_CASE("complex_from_json generators") {
    Complex g = complex_from_json(R"({"generators": [[2,3,5],[1,4],[1,2],[3,4]]})");
    CHECK(f_vector(g) == fv({5, 6, 1}));
    Complex e = complex_from_json(R"({"generators": []})");
    CHECK(e.empty());
  }

  TEST_CASE("complex_from_json faces validates closure") {
    Complex k2 = complex_from_json(R"({"faces": [[0],[1],[0,1]]})");
    CHECK(k2 == complex_K(2));
    CHECK_THROWS_AS((void)complex_from_json(R"({"faces": [[0,1]]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)complex_from_json("not json"),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)complex_from_json(R"({"faces": "x"})"),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)complex_from_json(R"({})"), std::invalid_argument);
    CHECK_THROWS_AS((void)complex_from_json(R"({"generators": [[]]})"),
                    std::invalid_argument);
  }

  TEST_CASE("complex_to_json round trip") {
    Complex h = Complex::generate(
        {Simplex{2, 3, 5}, Simplex{1, 4}, Simplex{1, 2}, Simplex{3, 4}});
    std::string s = complex_to_json(h);
    Complex back = complex_from_json(s);
    CHECK(back == h);
    auto j = nlohmann::json::parse(s);
    CHECK(j["f_vector"] == nlohmann::json::parse("[5,6,1]"));
  }

  TEST_CASE("graph_from_edge_list") {
    Graph g = graph_from_edge_list("# a square\n0 1\n1 2\n2 3\n0 3\n");
    CHECK(g.vertex_count() == 4);
    CHECK(g.edges().size() == 4);
    Graph padded = graph_from_edge_list("n 6\n0 1\n");
    CHECK(padded.vertex_count() == 6);
    CHECK(padded.edges().size() == 1);
    Graph empty = graph_from_edge_list("");
    CHECK(empty.vertex_count() == 0);
    CHECK_THROWS_AS((void)graph_from_edge_list("0\n"), std::invalid_argument);
    CHECK_THROWS_AS((void)graph_from_edge_list("0 0\n"),
                    std::invalid_argument);
  }

  TEST_CASE("graph6 codec") {
    Graph k4 = graph_from_graph6("C~");
    CHECK(k4.vertex_count() == 4);
    CHECK(k4.edges().size() == 6);
    CHECK(graph_to_graph6(k4) == "C~");
    Graph c4 = graph_from_graph6("Cl");
    CHECK(c4.adjacent(0, 1));
    CHECK(c4.adjacent(1, 2));
    CHECK(c4.adjacent(2, 3));
    CHECK(c4.adjacent(0, 3));
    CHECK_FALSE(c4.adjacent(0, 2));
    CHECK(graph_to_graph6(c4) == "Cl");
    // single vertex and empty graph
    CHECK(graph_from_graph6("@").vertex_count() == 1);
    CHECK(graph_to_graph6(Graph(1)) == "@");
    CHECK(graph_from_graph6("?").vertex_count() == 0);
    // long form: 63 isolated vertices is '~' N(63) and then
    // ceil(C(63,2)/6) = 326 zero bytes
    std::string long63 = "~??~";
    long63.append(326, '?');
    Graph g63 = graph_from_graph6(long63);
    CHECK(g63.vertex_count() == 63);
    CHECK(g63.edges().empty());
    CHECK_THROWS_AS((void)graph_from_graph6(""), std::invalid_argument);
    CHECK_THROWS_AS((void)graph_from_graph6("C"), std::invalid_argument);
    CHECK_THROWS_AS((void)graph_from_graph6("C~x"), std::invalid_argument);
  }

  TEST_CASE("graph6 round trips masks") {
    for (std::uint64_t mask = 0; mask < 64; ++mask) {
      Graph g(4);
      std::vector<std::pair<int, int>> edges;
      int e = 0;
      for (int j = 1; j < 4; ++j)
        for (int i = 0; i < j; ++i, ++e)
          if (mask >> e & 1) edges.emplace_back(i, j);
      Graph gm(4, edges);
      Graph back = graph_from_graph6(graph_to_graph6(gm));
      CHECK(back == gm);
    }
  }

  TEST_CASE("read_file") {
    namespace fs = std::filesystem;
    fs::path p = fs::temp_directory_path() / "simpdim_io_test.txt";
    {
      std::ofstream out(p);
      out << "hello\nworld\n";
    }
    CHECK(read_file(p.string()) == "hello\nworld\n");
    std::remove(p.string().c_str());
    CHECK_THROWS(read_file(p.string()));
  }

  TEST_CASE("csv_row") {
    CHECK(csv_row({"a", "b", "c"}) == "a,b,c\n");
    CHECK(csv_row({"a,b", "c\"d", "e\nf"}) == "\"a,b\",\"c\"\"d\",\"e\nf\"\n");
    CHECK(csv_row({}) == "\n");
    CHECK(csv_row({""}) == "\n");
  }
}
