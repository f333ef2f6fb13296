#include <doctest.h>

#include "hs3/errors.hpp"
#include "hs3/io.hpp"

using namespace hs3;

TEST_CASE("parse a small file") {
  const auto inst = parse_instance("c triangle-free\np hs3 3 1 1\ne 1 2 3\n");
  CHECK(inst.k == 1);
  CHECK(inst.graph.vertices() == std::vector<Vertex>{1, 2, 3});
  CHECK(inst.graph.edges() == std::vector<Edge>{Edge{1, 2, 3}});
}

TEST_CASE("duplicates collapse and isolated vertices stay") {
  const auto inst = parse_instance("p hs3 5 3 2\ne 2 1\ne 1 2\ne 3 4 5\n");
  CHECK(inst.graph.edge_count() == 2);
  CHECK(inst.graph.vertex_count() == 5);
}

TEST_CASE("parse errors carry line numbers") {
  auto line_of = [](const char* text) -> std::size_t {
    try {
      parse_instance(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("p hs3 3 1 1\ne 1 2 2\n") == 2);
  CHECK(line_of("p hs3 3 1 1\ne 1 4\n") == 2);
  CHECK(line_of("p hs3 3 1 1\ne 0 1\n") == 2);
  CHECK(line_of("p hs3 3 1 1\ne 1 2 3 1\n") == 2);
  CHECK(line_of("c hi\np hs 3 1 1\n") == 2);
  CHECK(line_of("e 1 2\n") == 1);
  CHECK(line_of("p hs3 3 1 x\n") == 1);
  CHECK(line_of("p hs3 3 2 1\ne 1 2\n") == 2);
  CHECK(line_of("p hs3 3 1 1\nq 1 2\n") == 2);
  CHECK(line_of("p hs3 3 1 1\np hs3 3 1 1\n") == 2);
  CHECK(line_of("p hs3 3 1 1\ne\n") == 2);
}

TEST_CASE("serialize then parse is the identity") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const int n = 4 + static_cast<int>(seed % 10);
    const auto inst = generate({.n = n, .edge_count = n + static_cast<int>(seed % 7), .p2 = 0.4, .p3 = 0.6, .seed = seed, .k = static_cast<long>(seed % 5)});
    const auto text = serialize_instance(inst);
    const auto back = parse_instance(text);
    CHECK(back.graph == inst.graph);
    CHECK(back.k == inst.k);
    CHECK(serialize_instance(back) == text);
  }
}

TEST_CASE("generator") {
  const GenConfig cfg{.n = 8, .edge_count = 12, .p2 = 0.5, .p3 = 0.5, .seed = 42, .k = -1};
  CHECK(generate(cfg).graph == generate(cfg).graph);
  CHECK(generate(cfg).k == 4);
  auto other = cfg;
  other.seed = 43;
  CHECK_FALSE(generate(other).graph == generate(cfg).graph);

  const auto all3 = generate({.n = 5, .edge_count = 10, .p2 = 0.0, .p3 = 1.0, .seed = 1});
  CHECK(all3.graph.edge_count() == 10);
  for (const Edge& e : all3.graph.edges()) CHECK(e.size() == 3);

  const auto k4 = generate({.n = 4, .edge_count = 6, .p2 = 1.0, .p3 = 0.0, .seed = 1});
  CHECK(k4.graph.edges() ==
        std::vector<Edge>{Edge{1, 2}, Edge{1, 3}, Edge{1, 4}, Edge{2, 3}, Edge{2, 4}, Edge{3, 4}});

  CHECK_THROWS_AS(generate({.n = 4, .edge_count = 7, .p2 = 1.0, .p3 = 0.0}), InputError);
  CHECK_THROWS_AS(generate({.n = 4, .edge_count = 3, .p2 = 0.7, .p3 = 0.7}), InputError);
}
