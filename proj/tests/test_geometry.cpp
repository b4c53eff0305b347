#include "kalmanson/generate.hpp"
#include "kalmanson/geometry.hpp"
#include "kalmanson/json_io.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace kalmanson;

namespace {

Metric metric_of(const RayMatrix& r) {
  std::vector<Rational> entries;
  for (std::uint8_t v : r.matrix().entries()) entries.emplace_back(v);
  return Metric(r.n(), entries);
}

Metric combination(int n, const std::vector<std::pair<RayIndex, long long>>& terms) {
  std::vector<Rational> entries(static_cast<std::size_t>(n * n));
  for (const auto& [index, w] : terms) {
    const RayMatrix r = ray_matrix(index, n);
    for (std::size_t i = 0; i < entries.size(); ++i) entries[i] += w * r.matrix().entries()[i];
  }
  return Metric(n, entries);
}

std::vector<Rational> entries_of(const Metric& m) { return {m.entries().begin(), m.entries().end()}; }

Metric random_metric(std::mt19937_64& rng, int n, int range) {
  std::vector<Rational> d(static_cast<std::size_t>(n * n));
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) {
      const Rational v(static_cast<long long>(rng() % static_cast<std::uint64_t>(range)), 1 + static_cast<long long>(rng() % 3));
      d[static_cast<std::size_t>(p * n + q)] = v;
      d[static_cast<std::size_t>(q * n + p)] = v;
    }
  return Metric(n, d);
}

}  // namespace

TEST_CASE("metric parsing and validation") {
  const Metric m = parse_metric_text("0 1/2 1.5\n1/2 0 2\n1.5 2 0\n");
  CHECK(m.at(0, 2) == Rational(3, 2));
  CHECK(m.at(0, 1) == Rational(1, 2));
  CHECK_THROWS_AS(parse_metric_text("0 1\n2 0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_metric_text("0 -1\n-1 0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_metric_text("1 1\n1 0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_metric_text("0 x\nx 0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_metric_text("0 1 2\n1 0\n"), std::invalid_argument);
  CHECK(to_text(m) == "0 1/2 3/2\n1/2 0 2\n3/2 2 0\n");
  CHECK(parse_metric_text(to_text(m)) == m);

  const Metric bad = parse_metric_text("0 1 5\n1 0 1\n5 1 0\n");
  REQUIRE(triangle_violation(bad));
  CHECK(*triangle_violation(bad) == std::array<int, 3>{1, 2, 3});
  CHECK_FALSE(triangle_violation(m));
}

TEST_CASE("ray matrices") {
  const RayMatrix v2 = ray_matrix({RayKind::V, 2}, 5);
  CHECK(v2.matrix() == split_metric(make_split(5, std::vector{1, 2})));
  CHECK(ray_matrix({RayKind::V, 3}, 5).matrix() == split_metric(make_split(5, std::vector{1, 2, 3})));
  CHECK(ray_matrix({RayKind::VV, 1, 3}, 5).matrix() == split_metric(make_split(5, std::vector{1, 4, 5})));
  // V^(1,4) separates positions 2..4 from 1 and 5.
  CHECK(ray_matrix({RayKind::VV, 1, 4}, 5).matrix() == split_metric(make_split(5, std::vector{1, 5})));
  CHECK(ray_matrix({RayKind::VV, 2, 4}, 5).matrix() == split_metric(make_split(5, std::vector{1, 2, 5})));
  const RayMatrix e1 = ray_matrix({RayKind::E, 1}, 4);
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q) CHECK(e1.at(p, q) == ((p == 0) != (q == 0) ? 1 : 0));

  CHECK_THROWS_AS(ray_matrix({RayKind::E, 0}, 5), std::invalid_argument);
  CHECK_THROWS_AS(ray_matrix({RayKind::V, 1}, 5), std::invalid_argument);
  CHECK_THROWS_AS(ray_matrix({RayKind::V, 4}, 5), std::invalid_argument);
  CHECK_THROWS_AS(ray_matrix({RayKind::VV, 1, 2}, 5), std::invalid_argument);
  CHECK_THROWS_AS(ray_matrix({RayKind::VV, 2, 5}, 5), std::invalid_argument);
  CHECK(to_string(RayIndex{RayKind::VV, 1, 3}) == "V(1,3)");
}

TEST_CASE("ray basis is a basis") {
  for (int n = 4; n <= 9; ++n) {
    const auto basis = ray_basis(n);
    CHECK(basis.size() == static_cast<std::size_t>(n * (n - 1) / 2));
    std::vector<std::vector<Rational>> rows;
    for (const RayIndex& r : basis) {
      const RayMatrix m = ray_matrix(r, n);
      std::vector<Rational> v;
      for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) v.emplace_back(m.at(p, q));
      rows.push_back(v);
    }
    CHECK(oracle::rank(rows) == static_cast<int>(basis.size()));
  }
}

TEST_CASE("ray_to_split") {
  const std::vector<int> id{1, 2, 3, 4, 5};
  CHECK(ray_to_split(ray_matrix({RayKind::V, 2}, 5), id) == make_split(5, std::vector{1, 2}));
  CHECK(ray_to_split(ray_matrix({RayKind::VV, 1, 3}, 5), id) == make_split(5, std::vector{2, 3}));
  CHECK_THROWS_AS(ray_to_split(ray_matrix({RayKind::E, 1}, 5), id), std::invalid_argument);
  CHECK_THROWS_AS(ray_to_split(ray_matrix({RayKind::V, 2}, 5), std::vector{1, 1, 3, 4, 5}), std::invalid_argument);

  std::mt19937_64 rng(3);
  for (int n = 4; n <= 8; ++n) {
    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 1);
    for (int trial = 0; trial < 20; ++trial) {
      std::shuffle(sigma.begin(), sigma.end(), rng);
      for (const RayIndex& r : ray_basis(n)) {
        if (r.kind == RayKind::E) continue;
        const RayMatrix m = ray_matrix(r, n);
        const std::vector<int> id_n = [&] {
          std::vector<int> v(static_cast<std::size_t>(n));
          std::iota(v.begin(), v.end(), 1);
          return v;
        }();
        // The split metric of the ray, relabelled.
        CHECK(ray_to_split(m, sigma) == relabel(split_from_metric(m.matrix()), sigma));
        CHECK(split_metric(ray_to_split(m, id_n)) == m.matrix());
      }
    }
  }
}

TEST_CASE("kalmanson examples") {
  CHECK(is_kalmanson(metric_of(ray_matrix({RayKind::V, 2}, 5))).holds);
  std::vector<std::pair<RayIndex, long long>> all;
  long long w = 1;
  for (const RayIndex& r : ray_basis(5)) all.push_back({r, w++});
  CHECK(is_kalmanson(combination(5, all)).holds);

  // Circular for (1,3,2,4,5) but not for the identity.
  const Split s = make_split(5, std::vector{1, 3});
  const Decomposition d{CircularOrdering::canonical(std::vector{1, 3, 2, 4, 5}), std::vector<Rational>(5), {{s, Rational(1)}}};
  const Metric m(5, reconstruct(d));
  const auto r = is_kalmanson(m);
  CHECK_FALSE(r.holds);
  REQUIRE(r.violation);
  CHECK_FALSE(oracle::kalmanson_under(entries_of(m), 5, {1, 2, 3, 4, 5}));
  CHECK(*r.violation == KalmansonViolation{1, 2, 3, 4});
  CHECK(is_kalmanson_exact(m).violation == r.violation);
  CHECK(is_kalmanson_under(m, d.ordering).holds);
}

TEST_CASE("fast and exact kalmanson scans agree") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 5);
    const Metric m = trial % 2 ? random_metric(rng, n, 6) : random_circular_metric(n, rng(), false).metric;
    const auto fast = is_kalmanson(m);
    REQUIRE(fast.holds == is_kalmanson_exact(m).holds);
    REQUIRE(fast.violation == is_kalmanson_exact(m).violation);
    std::vector<int> id(static_cast<std::size_t>(n));
    std::iota(id.begin(), id.end(), 1);
    REQUIRE(fast.holds == oracle::kalmanson_under(entries_of(m), n, id));
  }
  // Entries too large for the integer kernel take the exact route.
  const BigInt huge = BigInt(1) << 70;
  std::vector<Rational> d(16, Rational(huge));
  for (int p = 0; p < 4; ++p) d[static_cast<std::size_t>(p * 5)] = 0;
  CHECK(is_kalmanson(Metric(4, d)).holds);
}

TEST_CASE("decompose examples") {
  const Metric m = combination(5, {{{RayKind::V, 2}, 3}, {{RayKind::VV, 1, 3}, 2}});
  const auto d = decompose(m, CircularOrdering::identity(5));
  REQUIRE(d);
  CHECK(d->weights == std::map<Split, Rational>{{make_split(5, std::vector{1, 2}), Rational(3)},
                                                {make_split(5, std::vector{2, 3}), Rational(2)}});
  CHECK(d->alpha == std::vector<Rational>(5, Rational(0)));

  for (int n = 4; n <= 7; ++n) {
    std::vector<std::pair<RayIndex, long long>> es;
    for (int i = 1; i <= n; ++i) es.push_back({{RayKind::E, i}, 1});
    const auto e = decompose(combination(n, es), CircularOrdering::identity(n));
    REQUIRE(e);
    CHECK(e->alpha == std::vector<Rational>(static_cast<std::size_t>(n), Rational(1)));
    CHECK(e->weights.empty());
  }

  const Split s = make_split(5, std::vector{1, 3});
  const Metric off(5, reconstruct({CircularOrdering::canonical(std::vector{1, 3, 2, 4, 5}), std::vector<Rational>(5), {{s, 1}}}));
  CHECK_FALSE(decompose(off, CircularOrdering::identity(5)));
}

TEST_CASE("decomposition matches the four-point and alpha formulas") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 4);
    const GeneratedMetric g = random_circular_metric(n, rng(), true);
    const auto d = decompose(g.metric, g.decomposition.ordering);
    REQUIRE(d);
    CHECK(*d == g.decomposition);
    CHECK(reconstruct(*d) == entries_of(g.metric));

    const std::vector<int> order(d->ordering.order().begin(), d->ordering.order().end());
    const auto dm = entries_of(g.metric);
    for (int a = 0; a < n; ++a) {
      for (int len = 2; len <= n - 2; ++len) {
        std::vector<int> members;
        for (int p = a + 1; p <= a + len; ++p) members.push_back(order[static_cast<std::size_t>(p % n)]);
        const Split s = make_split(n, members);
        const Rational expected = oracle::arc_weight(dm, n, order, a, a + len);
        const auto it = d->weights.find(s);
        CHECK((it == d->weights.end() ? Rational(0) : it->second) == expected);
      }
      // 2 alpha at the middle of three consecutive points.
      const int x = order[static_cast<std::size_t>(a)] - 1;
      const int y = order[static_cast<std::size_t>((a + 1) % n)] - 1;
      const int z = order[static_cast<std::size_t>((a + 2) % n)] - 1;
      CHECK(2 * d->alpha[static_cast<std::size_t>(y)] == g.metric.at(x, y) + g.metric.at(y, z) - g.metric.at(x, z));
    }
  }
}

TEST_CASE("recognize") {
  const Metric k = combination(6, {{{RayKind::V, 2}, 1}, {{RayKind::VV, 2, 5}, 4}, {{RayKind::E, 3}, 2}});
  const auto r = recognize(k);
  REQUIRE(r);
  CHECK(r->ordering == CircularOrdering::identity(6));

  // Star tree with distinct leaf edges: only trivial splits.
  std::vector<Rational> star(25);
  const long long edge[5] = {1, 2, 3, 5, 8};
  for (int p = 0; p < 5; ++p)
    for (int q = 0; q < 5; ++q)
      if (p != q) star[static_cast<std::size_t>(p * 5 + q)] = edge[p] + edge[q];
  const auto rs = recognize(Metric(5, star));
  REQUIRE(rs);
  CHECK(rs->decomposition.weights.empty());
  for (int p = 0; p < 5; ++p) CHECK(rs->decomposition.alpha[static_cast<std::size_t>(p)] == edge[p]);

  // Tree ((1,2),(3,4),5) with internal edges of length 4 and 6.
  const Split s12 = make_split(5, std::vector{1, 2});
  const Split s34 = make_split(5, std::vector{3, 4});
  const Decomposition tree{CircularOrdering::identity(5), {1, 1, 2, 2, 3}, {{s12, 4}, {s34, 6}}};
  const auto rt = recognize(Metric(5, reconstruct(tree)));
  REQUIRE(rt);
  CHECK(rt->decomposition.weights == tree.weights);
  CHECK(rt->decomposition.alpha == tree.alpha);

  const GeneratedMetric g = random_circular_metric(6, 77, true);
  const auto rg = recognize(g.metric);
  REQUIRE(rg);
  CHECK(reconstruct(rg->decomposition) == entries_of(g.metric));
  for (const auto& [split, w] : rg->decomposition.weights) CHECK(rg->ordering.is_arc(split));

  CHECK_THROWS_AS(recognize(Metric(11, std::vector<Rational>(121))), std::invalid_argument);
}

TEST_CASE("tsp") {
  std::vector<Rational> ones(16, Rational(1));
  for (int p = 0; p < 4; ++p) ones[static_cast<std::size_t>(p * 5)] = 0;
  CHECK(tsp_bruteforce(Metric(4, ones)).length == 4);
  CHECK(tsp_bruteforce(metric_of(ray_matrix({RayKind::V, 2}, 5))).length == 2);
  CHECK_THROWS_AS(tsp_bruteforce(Metric(13, std::vector<Rational>(169))), std::invalid_argument);

  const Metric k = combination(7, {{{RayKind::V, 3}, 2}, {{RayKind::VV, 1, 4}, 1}, {{RayKind::E, 2}, 3}, {{RayKind::VV, 3, 6}, 5}});
  const auto t = tsp_kalmanson(k);
  REQUIRE(t);
  CHECK(t->perm == std::vector{1, 2, 3, 4, 5, 6, 7});
  CHECK(t->length == tsp_bruteforce(k).length);
  CHECK(t->length == oracle::tsp(entries_of(k), 7));

  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 3);
    const Metric m = trial % 2 ? random_circular_metric(n, rng(), true).metric : random_metric(rng, n, 20);
    const Tour b = tsp_bruteforce(m);
    CHECK(b.length == oracle::tsp(entries_of(m), n));
    CHECK(tour_length(m, b.perm) == b.length);
    if (auto kt = tsp_kalmanson(m)) CHECK(kt->length == b.length);
  }

  // Non-members are rejected after checking every ordering.
  int rejected = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const Metric m = random_metric(rng, 6, 50);
    if (tsp_kalmanson(m)) continue;
    ++rejected;
    bool any = false;
    for (const auto& ord : canonical_orderings(6)) {
      any = any || oracle::kalmanson_under(entries_of(m), 6, std::vector<int>(ord.order().begin(), ord.order().end()));
    }
    CHECK_FALSE(any);
  }
  CHECK(rejected > 0);
}

TEST_CASE("decomposition JSON round trip") {
  const GeneratedMetric g = random_circular_metric(6, 5, true);
  Decomposition d = g.decomposition;
  d.alpha[0] = Rational(-7, 3);
  const auto j = to_json(d);
  CHECK(decomposition_from_json(nlohmann::json::parse(j.dump())) == d);
  CHECK(j["alpha"][0] == "-7/3");
}
