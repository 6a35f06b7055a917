#include "unconv/metric.hpp"

#include <algorithm>

#include "doctest.h"
#include "test_util.hpp"
#include "unconv/gallery.hpp"

using namespace unconv;
using testutil::throws_code;

namespace {

std::vector<std::uint32_t> syms(std::initializer_list<std::uint32_t> v) { return v; }

struct Fixture {
  ContractionSystem sys = make_px_system(3, 12).system;
  IndexFamily plain = plain_family(2);
  IndexFamily case4 = parity_family(XiMatrix::for_case(4));
  LimitSetSample lambda4 = enumerate_lambda0(sys, plain, 4, 4096);
};

std::vector<PadicInt> residue_grid(std::uint64_t p, int k) {
  // Every residue mod p^k as a K = k point.
  std::vector<PadicInt> out;
  std::vector<std::uint32_t> d(static_cast<std::size_t>(k), 0);
  while (true) {
    out.push_back(PadicInt::from_digits(p, d));
    std::size_t pos = 0;
    while (pos < d.size() && d[pos] == p - 1) d[pos++] = 0;
    if (pos == d.size()) break;
    ++d[pos];
  }
  return out;
}

}  // namespace

TEST_SUITE("metric") {

TEST_CASE("pdist is the difference valuation") {
  PadicInt zero = PadicInt::zero(3, 4);
  PadicInt one = PadicInt::one(3, 4);
  CHECK(pdist(one, one) == Valuation{3, 4, true});
  CHECK(pdist(zero, one) == Valuation{3, 0, false});
  CHECK(pdist(zero, PadicInt::from_rational(3, 4, 3, 4)) == Valuation{3, 1, false});
}

TEST_CASE("ultrametric triangle on random triples") {
  std::mt19937_64 rng(0x3e01);
  for (int i = 0; i < 300; ++i) {
    PadicInt x = random_padic(rng, 3, 8);
    PadicInt y = random_padic(rng, 3, 8);
    PadicInt z = random_padic(rng, 3, 8);
    CHECK(pdist(x, z).exponent >= std::min(pdist(x, y).exponent, pdist(y, z).exponent));
  }
}

TEST_CASE("diameter") {
  Fixture fx;
  CHECK(diameter(fx.lambda4.points) == Valuation{3, 0, false});  // contains 0 and 1

  std::vector<PadicInt> dup = {PadicInt::one(3, 4), PadicInt::one(3, 4)};
  CHECK(throws_code(errc::too_few_points, [&] { diameter(dup); }));
  CHECK(throws_code(errc::too_few_points,
                    [&] { diameter(std::vector<PadicInt>{PadicInt::one(3, 4)}); }));

  std::vector<PadicInt> inside = {PadicInt::from_digits(3, syms({0, 1, 0})),
                                  PadicInt::from_digits(3, syms({0, 2, 1}))};
  CHECK(diameter(inside).exponent >= 1);
}

TEST_CASE("annulus search") {
  Fixture fx;
  PadicInt zero = PadicInt::zero(3, 12);
  MetricReport hit = perfect_annulus(fx.lambda4.points, zero, 1, 1);
  CHECK(hit.verdict == Verdict::pass);
  CHECK(*hit.constant_exponent >= 1);
  CHECK(*hit.constant_exponent <= 2);

  MetricReport wide = perfect_annulus(fx.lambda4.points, zero, 0, 1);
  CHECK(wide.verdict == Verdict::pass);
  CHECK(*wide.constant_exponent == 0);  // the point 1 sits at distance 1

  std::vector<PadicInt> gap = {PadicInt::zero(3, 4), PadicInt::one(3, 4)};
  MetricReport miss = perfect_annulus(gap, PadicInt::zero(3, 4), 1, 1);
  CHECK(miss.verdict == Verdict::fail);
  CHECK(miss.note == "annulus empty");

  CHECK(throws_code(errc::validation_error, [&] {
    perfect_annulus(gap, PadicInt::from_integer(3, 4, 5), 1, 1);
  }));
}

TEST_CASE("separation strictly beats the radius") {
  Fixture fx;
  PadicInt zero = PadicInt::zero(3, 12);
  MetricReport r = disconnect_separation(fx.lambda4.points, zero, 1);
  CHECK(r.verdict == Verdict::pass);
  CHECK(*r.constant_exponent == 0);  // nearest outside point is 1 at distance 1

  MetricReport vac = disconnect_separation(fx.lambda4.points, zero, 0);
  CHECK(vac.verdict == Verdict::pass);
  CHECK(vac.note == "complement empty; separation vacuous");

  std::vector<PadicInt> pair = {PadicInt::zero(3, 4), PadicInt::one(3, 4)};
  MetricReport two = disconnect_separation(pair, PadicInt::zero(3, 4), 1);
  CHECK(two.verdict == Verdict::pass);
  CHECK(*two.constant_exponent == 0);
}

TEST_CASE("doubling cover never needs more than p subballs") {
  std::vector<PadicInt> grid = residue_grid(3, 2);
  MetricReport r = doubling_cover(grid, PadicInt::zero(3, 2), 1);
  CHECK(r.verdict == Verdict::pass);
  CHECK(*r.constant_exponent == 3);
  REQUIRE(r.witnesses.size() == 3);  // class representatives 0, 3, 6
  CHECK(r.witnesses[0] == "0,0");
  CHECK(r.witnesses[1] == "0,1");
  CHECK(r.witnesses[2] == "0,2");

  std::vector<PadicInt> lone = {PadicInt::one(3, 4)};
  MetricReport single = doubling_cover(lone, PadicInt::one(3, 4), 1);
  CHECK(*single.constant_exponent == 1);

  std::vector<PadicInt> bits = residue_grid(2, 3);
  for (const auto& c : bits) {
    for (int k = 0; k <= 3; ++k) {
      CHECK(*doubling_cover(bits, c, k).constant_exponent <= 2);
    }
  }
}

TEST_CASE("Cantor distance between words") {
  Fraction half{1, 2};
  SymbolWord x(syms({1}), syms({2}), 2);
  SymbolWord y(syms({1}), syms({1}), 2);
  SymbolDistance d = symbol_dist(x, y, half);
  CHECK(!d.equal);
  CHECK(d.common_prefix == 1);

  CHECK(symbol_dist(x, x, half).equal);

  SymbolDistance head = symbol_dist(SymbolWord(syms({2, 1}), 2), SymbolWord(syms({1, 1}), 2), half);
  CHECK(head.common_prefix == 0);

  // Same period written with different prefix lengths is still equality.
  SymbolWord a(syms({1, 2}), syms({1, 2}), 2);
  SymbolWord b(syms({1}), syms({2, 1}), 2);
  CHECK(symbol_dist(a, b, half).equal);

  CHECK(throws_code(errc::incomparable_length, [&] {
    symbol_dist(SymbolWord(syms({1, 2}), 2), SymbolWord(syms({1, 2, 1}), 2), half);
  }));
  CHECK(throws_code(errc::value_out_of_range, [&] { symbol_dist(x, y, Fraction{3, 2}); }));
}

TEST_CASE("quasi-symmetry audit of the case-4 coding") {
  Fixture fx;
  // Exhaustive depth-4 triples.
  std::vector<SymbolWord> words;
  std::vector<std::uint32_t> w(4, 1);
  while (true) {
    words.emplace_back(w, 2);
    std::size_t pos = 4;
    while (pos > 0 && w[pos - 1] == 2) w[--pos] = 1;
    if (pos == 0) break;
    ++w[pos - 1];
  }
  REQUIRE(words.size() == 16);
  std::vector<std::array<SymbolWord, 3>> triples;
  for (const auto& a : words) {
    for (const auto& b : words) {
      for (const auto& c : words) triples.push_back({a, b, c});
    }
  }

  MetricReport snug = quasi_symmetry_audit(triples, fx.sys, fx.case4,
                                           QsModulus::snowflake_modulus());
  CHECK(snug.verdict == Verdict::pass);
  CHECK(*snug.constant_exponent == 0);  // the coding is an exact snowflake

  MetricReport wrong =
      quasi_symmetry_audit(triples, fx.sys, fx.case4, QsModulus::power(10, 1));
  CHECK(wrong.verdict == Verdict::fail);
  CHECK(!wrong.witnesses.empty());
}

TEST_CASE("isolation scans") {
  Fixture fx;
  LimitSetSample coarse = enumerate_lambda0(fx.sys, fx.case4, 3, 4096);
  LimitSetSample fine = enumerate_lambda0(fx.sys, fx.case4, 6, 4096);
  MetricReport r = isolation_scan(coarse, fine, 0);
  CHECK(r.verdict == Verdict::pass);

  LimitSetSample tiny = enumerate_lambda0(fx.sys, fx.case4, 1, 4096);
  MetricReport near = isolation_scan(tiny, enumerate_lambda0(fx.sys, fx.case4, 4, 4096), 0);
  CHECK(near.verdict == Verdict::pass);
  CHECK(*near.constant_exponent >= 1);

  // A one-point limit set has nothing to separate.
  PadicInt a = PadicInt::from_integer(3, 8, 3);
  ContractionSystem degenerate(
      {AffineMap(a, PadicInt::zero(3, 8)), AffineMap(a, PadicInt::zero(3, 8))});
  LimitSetSample c1 = enumerate_lambda0(degenerate, plain_family(2), 2, 64);
  LimitSetSample f1 = enumerate_lambda0(degenerate, plain_family(2), 4, 64);
  CHECK(isolation_scan(c1, f1, 0).verdict == Verdict::not_applicable);
}

TEST_CASE("ball membership") {
  BallSpec closed{PadicInt::zero(3, 6), 1, true};
  CHECK(closed.contains(PadicInt::from_integer(3, 6, 3)));
  CHECK(!closed.contains(PadicInt::one(3, 6)));
  BallSpec open{PadicInt::zero(3, 6), 1, false};
  CHECK(!open.contains(PadicInt::from_integer(3, 6, 3)));
  CHECK(open.contains(PadicInt::from_integer(3, 6, 9)));
  CHECK(open.contains(PadicInt::zero(3, 6)));
}

}  // TEST_SUITE
