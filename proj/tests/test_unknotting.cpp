#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "toric/certify.hpp"
#include "toric/unknotting.hpp"

using namespace toric;

namespace {

using V = std::vector<int>;

BraidWord descending(int n) {
  std::vector<Letter> ls;
  for (int k = n; k >= 1; --k) ls.push_back({k, 1});
  return BraidWord(n + 1, ls);
}

// sigma_i^g sigma_j^{g_j} ... sigma_n^{g_n} against the slid form, n+1 strands
std::pair<BraidWord, BraidWord> slide_instance(int n, int j, int i, int g, const std::vector<int>& gs) {
  std::vector<Letter> lhs{{i, g}}, rhs;
  for (int k = j; k <= n; ++k) lhs.push_back({k, gs[k - j]});
  for (int k = j; k <= n; ++k) {
    int s = gs[k - j];
    if (k == i - 1) s = gs[i - j];
    if (k == i) s = gs[i - 1 - j];
    rhs.push_back({k, s});
  }
  rhs.push_back({i - 1, g});
  return {BraidWord(n + 1, lhs), BraidWord(n + 1, rhs)};
}

// B(1,q) is the empty word on one strand
BraidWord torus(int p, int q) { return p == 1 ? BraidWord(1) : toric_braid(p, q); }

}  // namespace

TEST_CASE("golden minimal data") {
  CHECK(minimal_ucd(7, 4).positions == V{8, 12, 13, 14, 17, 18, 22, 23, 24});
  CHECK(minimal_ucd(13, 3).positions == V{15, 18, 21, 24, 26, 27, 29, 30, 32, 33, 35, 36});
  CHECK(minimal_ucd(6, 4).positions == V{6, 10, 14, 15, 16, 18, 19, 20});
}

TEST_CASE("provenance of the seven four plan") {
  auto plan = minimal_ucd(7, 4);
  std::set<int> step1, step3;
  for (const auto& pr : plan.provenance) {
    (pr.step == 1 ? step1 : step3).insert(pr.position);
    CHECK(pr.step != 2);
  }
  CHECK(step1 == std::set<int>{12, 17, 18, 22, 23, 24});
  CHECK(step3 == std::set<int>{8, 13, 14});

  auto p13 = minimal_ucd(13, 3);
  std::set<int> b1, b2;
  for (const auto& pr : p13.provenance) (pr.step == 1 ? b1 : b2).insert(pr.position);
  CHECK(b1 == std::set<int>{24, 35, 36});
  CHECK(b2 == std::set<int>{15, 18, 21, 26, 27, 29, 30, 32, 33});
}

TEST_CASE("Euclid trace") {
  auto tr = euclid_trace(7, 4);
  REQUIRE(tr.steps.size() == 3);
  CHECK(tr.steps[0].m == 0);
  CHECK(tr.steps[0].a == 4);
  CHECK(tr.steps[1].p == 7);
  CHECK(tr.steps[1].q == 4);
  CHECK(tr.steps[1].m == 1);
  CHECK(tr.steps[1].a == 3);
  CHECK(tr.steps[2].p == 3);
  CHECK(tr.steps[2].q == 4);
  CHECK(tr.terminal == "a=1");
  CHECK(euclid_trace(5, 11).steps.size() == 1);
  CHECK(euclid_trace(5, 11).terminal == "a=1");
  CHECK(euclid_trace(5, 9).terminal == "a=p-1");
  CHECK(euclid_trace(4, 4).terminal == "a=0");
}

TEST_CASE("one-pass procedure data") {
  CHECK(u_crossing_data(3, 4) == V{4, 5, 6});
  CHECK(u_crossing_data(5, 1).empty());
  CHECK(u_crossing_data(2, 3) == V{2});
  CHECK(u_crossing_data(3, 2) == V{4});
}

TEST_CASE("cardinality laws on the grid") {
  for (int p = 2; p <= 30; ++p) {
    for (int q = 1; q <= 30; ++q) {
      CAPTURE(p);
      CAPTURE(q);
      const int d = std::gcd(p, q);
      const int u = ((p - 1) * (q - 1) + d - 1) / 2;
      CHECK(unknotting_number(p, q) == u);
      auto plan = minimal_ucd(p, q);
      CHECK(static_cast<int>(plan.positions.size()) == u);
      CHECK(std::is_sorted(plan.positions.begin(), plan.positions.end()));
      CHECK(plan.positions.size() == plan.provenance.size());
      if (!plan.positions.empty()) {
        CHECK(plan.positions.front() >= 1);
        CHECK(plan.positions.back() <= q * (p - 1));
      }
      const int m = q / p, a = q % p;
      CHECK(static_cast<int>(u_crossing_data(p, q).size()) == m * p * (p - 1) / 2 + a * (a - 1) / 2);
    }
  }
}

TEST_CASE("one-pass procedure is minimal exactly when q is 1 or p-1 mod p") {
  for (int p = 2; p <= 30; ++p) {
    for (int q = 1; q <= 30; ++q) {
      if (std::gcd(p, q) != 1) continue;
      CAPTURE(p);
      CAPTURE(q);
      const auto u = u_crossing_data(p, q);
      const bool special = q % p == 1 || q % p == p - 1;
      CHECK((static_cast<int>(u.size()) == unknotting_number(p, q)) == special);
      CHECK((u == minimal_ucd(p, q).positions) == special);
    }
  }
}

TEST_CASE("mirrored data") {
  auto plan = minimal_ucd(7, 4);
  CHECK(mirrored_ucd(plan) == V{1, 2, 3, 7, 8, 11, 12, 13, 17});
  CHECK(mirrored_positions(mirrored_ucd(plan), 7, 4) == plan.positions);
  CHECK(mirrored_ucd(minimal_ucd(5, 1)).empty());
  auto v = verify_positions(7, 4, mirrored_ucd(plan), true);
  CHECK(v.status == TrivialityStatus::certified_trivial_unlink);
}

TEST_CASE("MATLAB program parity") {
  auto mp = matlab_parity(7, 4);
  CHECK(mp.mukd1 == V{12, 17, 18, 22, 23, 24, 8, 13, 14});
  CHECK_FALSE(mp.as_printed_in_range);
  CHECK(std::find(mp.mukd2_as_printed.begin(), mp.mukd2_as_printed.end(), -14) != mp.mukd2_as_printed.end());
  CHECK(mp.mukd2_corrected == V{1, 2, 3, 7, 8, 11, 12, 13, 17});
  CHECK_FALSE(mp.loop_bound_truncates);
  CHECK_THROWS_AS(matlab_parity(6, 4), std::invalid_argument);

  auto m13 = matlab_parity(13, 3);
  CHECK(std::set<int>(m13.mukd1.begin(), m13.mukd1.end()) ==
        std::set<int>{15, 18, 21, 24, 26, 27, 29, 30, 32, 33, 35, 36});

  for (int p = 2; p <= 15; ++p) {
    for (int q = 1; q <= 15; ++q) {
      if (std::gcd(p, q) != 1) continue;
      CAPTURE(p);
      CAPTURE(q);
      auto r = matlab_parity(p, q);
      auto ref = minimal_ucd(p, q).positions;
      CHECK(std::set<int>(r.mukd1.begin(), r.mukd1.end()) == std::set<int>(ref.begin(), ref.end()));
    }
  }
}

TEST_CASE("eta and staircase identities by handle reduction") {
  for (int n = 1; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(are_equal(eta_product(n), descending(n)));
    CHECK(is_identity(cancelling_staircase(n)));
  }
  CHECK(cancelling_staircase(2).to_string() == "1 2 1 -2 -1 -2");
}

TEST_CASE("slide identity holds under either sign condition") {
  for (int n = 3; n <= 5; ++n) {
    for (int i = 2; i <= n; ++i) {
      for (int j = 1; j < i; ++j) {
        const int len = n - j + 1;
        for (unsigned mask = 0; mask < (1u << (len + 1)); ++mask) {
          std::vector<int> gs;
          for (int k = 0; k < len; ++k) gs.push_back((mask >> k) & 1u ? -1 : 1);
          const int g = (mask >> len) & 1u ? -1 : 1;
          const int g_prev = gs[i - 1 - j], g_i = gs[i - j];
          auto [lhs, rhs] = slide_instance(n, j, i, g, gs);
          CAPTURE(lhs.to_string());
          if (g == g_prev || g_prev == g_i) CHECK(are_equal(lhs, rhs));
        }
      }
    }
  }
}

TEST_CASE("staircase instance") {
  auto [lhs, rhs] = staircase_instance(5, 2, {{1, 1}, {1, 1}});
  CHECK(lhs.strands() == 5);
  CHECK(rhs.strands() == 3);
  CHECK(rhs.to_string() == toric_braid(3, 2).to_string());
  // with all signs positive the left side is the one-pass procedure applied to B(5,2)
  CHECK(lhs.letters() == flipped_toric_braid(5, 2, u_crossing_data(5, 2)).letters());

  std::mt19937 rng(9);
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<std::vector<int>> signs(2, std::vector<int>(2));
    for (auto& row : signs) {
      for (int& g : row) g = rng() % 2 ? 1 : -1;
    }
    auto [l, r] = staircase_instance(5, 2, signs);
    CHECK(alexander_of_closure(l) == alexander_of_closure(r));
    CHECK(jones_of_closure(l) == jones_of_closure(r));
  }

  auto [l4, r4] = staircase_instance(4, 3, {{}, {}, {}});
  CHECK(r4.strands() == 1);
  CHECK(r4.length() == 0);
  CHECK(alexander_of_closure(l4) == LaurentPolynomial(1));

  CHECK_THROWS_AS(staircase_instance(5, 2, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(staircase_instance(5, 2, {{1, 1}, {1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(staircase_instance(3, 3, {}), std::invalid_argument);
}

TEST_CASE("symmetry of torus closures") {
  for (int p = 2; p <= 8; ++p) {
    for (int q = 2; q <= 8; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const auto a = torus(p, q), b = torus(q, p);
      CHECK(alexander_of_closure(a) == alexander_of_closure(b));
      if (a.length() <= kDefaultCrossingBudget && b.length() <= kDefaultCrossingBudget) {
        CHECK(jones_of_closure(a) == jones_of_closure(b));
      }
    }
  }
  for (int a = 1; a <= 7; ++a) {
    for (int n = 1; a + n <= 8; ++n) {
      const auto lhs = concat(torus(a, a), reverse(torus(a, n)));
      const auto rhs = toric_braid(a + n, a);
      CAPTURE(a);
      CAPTURE(n);
      CHECK(component_count_of_closure(lhs) == component_count_of_closure(rhs));
      CHECK(alexander_of_closure(lhs) == alexander_of_closure(rhs));
      if (lhs.length() <= kDefaultCrossingBudget && rhs.length() <= kDefaultCrossingBudget) {
        CHECK(jones_of_closure(lhs) == jones_of_closure(rhs));
      }
    }
  }
}

TEST_CASE("one-pass procedure on B(p,a) lands on B(a,p-a)") {
  for (int p = 2; p <= 8; ++p) {
    for (int a = 1; a < p; ++a) {
      if (std::gcd(p, a) != 1) continue;
      const auto w = flipped_toric_braid(p, a, u_crossing_data(p, a));
      const auto target = torus(a, p - a);
      CHECK(alexander_of_closure(w) == alexander_of_closure(target));
      if (w.length() <= kDefaultCrossingBudget && target.length() <= kDefaultCrossingBudget) {
        CHECK(jones_of_closure(w) == jones_of_closure(target));
      }
    }
  }
}

TEST_CASE("end to end triviality for small torus links") {
  for (int p = 2; p <= 8; ++p) {
    for (int q = 2; q <= 8; ++q) {
      CAPTURE(p);
      CAPTURE(q);
      const auto plan = minimal_ucd(p, q);
      const auto v = verify_plan(plan);
      CHECK(v.status != TrivialityStatus::certified_nontrivial);
      CHECK(v.evidence.components == plan.params.d);
      CHECK(v.evidence.alexander_matches);
      if (q * (p - 1) <= 20) CHECK(v.evidence.jones_matches);
      if (plan.params.d == 1 && p <= 6 && q <= 6) CHECK(v.evidence.certificate.has_value());
      if (v.evidence.certificate) CHECK(check_certificate(*v.evidence.certificate).ok);
    }
  }
}

TEST_CASE("certificates for the one-pass procedure on special residues") {
  auto w = flipped_toric_braid(3, 4, {4, 5, 6});
  auto r = certify_unknot(w, kDefaultSearchBudget);
  REQUIRE(r.certificate.has_value());
  CHECK(r.certificate->end.strands() == 1);
  CHECK(r.certificate->end.length() == 0);
  CHECK(check_certificate(*r.certificate).ok);

  for (int p = 2; p <= 6; ++p) {
    for (int m = 1; m <= 2; ++m) {
      for (int q : {m * p + 1, m * p - 1}) {
        if (q < 1) continue;
        CAPTURE(p);
        CAPTURE(q);
        auto c = certify_unknot(flipped_toric_braid(p, q, u_crossing_data(p, q)), kDefaultSearchBudget);
        REQUIRE(c.certificate.has_value());
        CHECK(check_certificate(*c.certificate).ok);
      }
    }
  }
}

TEST_CASE("negative controls") {
  CHECK(verify_positions(3, 2, {}).status == TrivialityStatus::certified_nontrivial);
  CHECK(verify_positions(2, 2, {}).status == TrivialityStatus::certified_nontrivial);
  CHECK_FALSE(certify_unknot(toric_braid(3, 2), 5000).certificate.has_value());
  const auto plan = minimal_ucd(3, 2);
  for (std::size_t drop = 0; drop < plan.positions.size(); ++drop) {
    auto fewer = plan.positions;
    fewer.erase(fewer.begin() + static_cast<long>(drop));
    CHECK(verify_positions(3, 2, fewer).status != TrivialityStatus::certified_trivial_unlink);
  }
  CHECK_THROWS_AS(minimal_ucd(1, 3), std::invalid_argument);
  CHECK_THROWS_AS(u_crossing_data(3, 0), std::invalid_argument);
}
