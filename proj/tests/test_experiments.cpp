#include <doctest.h>

#include <vector>

#include "simpdim/complex.hpp"
#include "simpdim/experiments.hpp"
#include "simpdim/genfun.hpp"
#include "test_util.hpp"

using namespace simpdim;
using testutil::fv;
using testutil::q;

TEST_SUITE("experiments") {
  TEST_CASE("graph_from_edge_mask uses column-major bit order") {
    // bit 0 is (0,1), bit 1 is (0,2), bit 2 is (1,2), bit 3 is (0,3)
    Graph g = graph_from_edge_mask(4, 0b1011);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(0, 2));
    CHECK_FALSE(g.adjacent(1, 2));
    CHECK(g.adjacent(0, 3));
    CHECK(g.edges().size() == 3);
  }

  TEST_CASE("sample_er endpoints and determinism") {
    ErParams all{5, q(1), 3};
    CHECK(sample_er(all, 0).edges().size() == 10);
    ErParams none{5, q(0), 3};
    CHECK(sample_er(none, 0).edges().size() == 0);
    ErParams half{10, q(1, 2), 12345};
    CHECK(sample_er(half, 7) == sample_er(half, 7));
    CHECK(sample_er(half, 7) != sample_er(half, 8));
  }

  TEST_CASE("enumerate_labeled_graphs") {
    int count = 0;
    enumerate_labeled_graphs(3, [&](const Graph&) { ++count; });
    CHECK(count == 8);
    std::vector<std::size_t> edge_counts;
    enumerate_labeled_graphs(2, [&](const Graph& g) {
      edge_counts.push_back(g.edges().size());
    });
    CHECK(edge_counts == std::vector<std::size_t>{0, 1});
  }

  TEST_CASE("er expectation small cases") {
    CHECK(er_dim_avg_expectation(1, q(1, 2)) == q(1, 2));
    CHECK(er_dim_avg_expectation(2, q(1, 2)) == q(5, 6));
    CHECK(er_dim_avg_expectation(3, q(1, 2)) == q(35, 32));
    // p = 1 forces the complete graph
    CHECK(er_dim_avg_expectation(4, q(1)) == q(2));
    // p = 0 leaves isolated vertices
    CHECK(er_dim_avg_expectation(4, q(0)) == q(4, 5));
  }

  TEST_CASE("inductive dimension polynomials") {
    CHECK(inductive_dim_polynomial(1).empty());
    CHECK(inductive_dim_polynomial(2) == std::vector<Rat>{q(0), q(1)});
    CHECK(inductive_dim_polynomial(3) ==
          std::vector<Rat>{q(0), q(2), q(-1), q(1)});
  }

  TEST_CASE("delta margin") {
    CHECK(delta(complex_K(4)) == q(0));
    CHECK(delta(complex_K(1)) == q(0));
    Complex c4 = whitney_complex(graph_from_edge_mask(4, 0b101101));
    CHECK(f_vector(c4) == fv({4, 4}));
    CHECK(delta(c4) == q(1, 3));
    CHECK(delta(Complex()) == q(0));
  }

  TEST_CASE("delta_max at n = 4") {
    DeltaMaxResult r = delta_max(4);
    CHECK(r.value == q(1, 3));
    CHECK(r.maximizer_masks.size() == 3);
    CHECK(f_vector(whitney_complex(r.first_maximizer)) == fv({4, 4}));
    // thread count must not change anything
    DeltaMaxResult r3 = delta_max(4, 3);
    CHECK(r3.value == r.value);
    CHECK(r3.maximizer_masks == r.maximizer_masks);
  }

  TEST_CASE("refinement_trajectory") {
    std::vector<Rat> t = refinement_trajectory(fv({6, 12, 8}), 2);
    REQUIRE(t.size() == 3);
    CHECK(t[0] == q(2));
    CHECK(t[1] == q(314, 147));
    CHECK(t[2] > t[1]);  // monotone toward 13/6
    CHECK(t[2] < q(13, 6));
  }

  TEST_CASE("er_survey determinism and thread independence") {
    auto a = er_survey(5, q(1, 4), q(3, 4), 2, 40, 9, 1);
    auto b = er_survey(5, q(1, 4), q(3, 4), 2, 40, 9, 3);
    REQUIRE(a.size() == 3);
    CHECK(a[0].p == q(1, 4));
    CHECK(a[1].p == q(1, 2));
    CHECK(a[2].p == q(3, 4));
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].mean_delta == b[i].mean_delta);
      CHECK(a[i].samples == 40);
      CHECK(a[i].mean_delta >= 0);
    }
  }
}
