#include <doctest.h>

#include "ftop/catalog.hpp"
#include "ftop/error.hpp"
#include "ftop/poset.hpp"

using namespace ftop;

namespace {

std::vector<std::string> ids(const Poset& p, const ElementSet& s) { return p.names(s); }

Poset worked_cylinder() { return multiple_cylinder(catalog::worked_example()).poset; }

}  // namespace

TEST_CASE("build: chain, singleton, transitive reduction") {
  const Poset c = Poset::build({"a1", "a2"}, {{"a1", "a2"}});
  CHECK(c.size() == 2);
  CHECK(c.less(0, 1));
  CHECK(c.hasse_pairs() == std::vector<ElementPair>{{"a1", "a2"}});

  const Poset s = Poset::build({"x"}, {});
  CHECK(s.size() == 1);
  CHECK(s.height() == 0);

  const Poset r = Poset::build({"p", "q", "r"}, {{"p", "q"}, {"q", "r"}, {"p", "r"}});
  CHECK(r.hasse_pairs() == std::vector<ElementPair>{{"p", "q"}, {"q", "r"}});
}

TEST_CASE("build: errors") {
  auto kind = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidInput;
  };
  CHECK(kind([] { Poset::build({"a", "b"}, {{"a", "b"}, {"b", "a"}}); }) == ErrorKind::CycleDetected);
  CHECK(kind([] { Poset::build({"a", "a"}, {}); }) == ErrorKind::DuplicateElement);
  CHECK(kind([] { Poset::build({"a"}, {{"a", "z"}}); }) == ErrorKind::UnknownElement);
  // A reflexive pair adds nothing.
  CHECK(Poset::build({"a"}, {{"a", "a"}}).order_pairs().empty());
}

TEST_CASE("down and up sets") {
  const Poset c = catalog::chain("a", 2);
  CHECK(ids(c, c.down_set("a2")) == std::vector<std::string>{"a1", "a2"});
  CHECK(ids(c, c.down_set("a1")) == std::vector<std::string>{"a1"});
  CHECK(ids(c, c.up_set("a1")) == std::vector<std::string>{"a1", "a2"});
  CHECK(ids(c, c.down_set("a2", true)) == std::vector<std::string>{"a1"});

  const Poset anti = catalog::antichain("p", 2);
  CHECK(ids(anti, anti.up_set("p1")) == std::vector<std::string>{"p1"});

  const Poset b = worked_cylinder();
  CHECK(ids(b, b.down_set("1:b3")) ==
        std::vector<std::string>{"0:a1", "0:a2", "1:b1", "1:b2", "1:b3", "2:c1", "2:c2"});
  CHECK(ids(b, b.up_set("0:a1")) == std::vector<std::string>{"0:a1", "0:a2", "1:b1", "1:b2", "1:b3"});
}

TEST_CASE("closure and open hull") {
  const Poset c = Poset::build({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  CHECK(c.closure(c.none()).none());
  CHECK(c.open_hull(c.none()).none());
  CHECK(ids(c, c.closure(c.subset({"b"}))) == std::vector<std::string>{"b", "c"});
  CHECK(ids(c, c.open_hull(c.subset({"b"}))) == std::vector<std::string>{"a", "b"});

  const Poset x1 = catalog::chain("b", 3);
  CHECK(ids(x1, x1.open_hull(x1.subset({"b2"}))) == std::vector<std::string>{"b1", "b2"});
}

TEST_CASE("height") {
  CHECK(Poset::build({"x"}, {}).height() == 0);
  CHECK(catalog::chain("b", 3).height() == 2);
  CHECK(worked_cylinder().height() == 3);
  CHECK(Poset().height() == -1);
}

TEST_CASE("opposite") {
  const Poset c = Poset::build({"a", "b"}, {{"a", "b"}});
  CHECK(c.opposite().hasse_pairs() == std::vector<ElementPair>{{"b", "a"}});
  const Poset anti = catalog::antichain("p", 3);
  CHECK(anti.opposite() == anti);
  const Poset b = worked_cylinder();
  CHECK(b.opposite().opposite() == b);
}

TEST_CASE("linear extension") {
  auto ext = [](const Poset& p) {
    std::vector<std::string> out;
    for (auto i : p.linear_extension()) out.push_back(p.id(i));
    return out;
  };
  CHECK(ext(Poset::build({"c", "b", "a"}, {{"a", "b"}, {"b", "c"}})) == std::vector<std::string>{"a", "b", "c"});
  CHECK(ext(catalog::antichain("p", 2)) == std::vector<std::string>{"p1", "p2"});
  CHECK(ext(catalog::chain("b", 3)) == std::vector<std::string>{"b1", "b2", "b3"});
  // Ties broken by id even when a later id is minimal.
  CHECK(ext(Poset::build({"a", "b", "c"}, {{"c", "a"}})) == std::vector<std::string>{"b", "c", "a"});
}

TEST_CASE("open sets") {
  const Poset c = Poset::build({"a", "b"}, {{"a", "b"}});
  CHECK(c.is_open(c.down_set("b")));
  CHECK_FALSE(c.is_open(c.subset({"b"})));
  CHECK(c.is_open(c.all()));
  CHECK(c.is_closed(c.subset({"b"})));
}

TEST_CASE("induced subspace keeps the restricted order") {
  const Poset b = worked_cylinder();
  const Poset sub = b.induced(b.subset({"0:a1", "1:b3", "2:c2"}));
  CHECK(sub.size() == 3);
  CHECK(sub.hasse_pairs() == std::vector<ElementPair>{{"0:a1", "1:b3"}, {"2:c2", "1:b3"}});
}
