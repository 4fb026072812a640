#include "doctest.h"

#include "shifted/operators.hpp"

using namespace shifted;

namespace {

Word W(const char* s, int n) { return parse_word(s, n); }
ShiftedTableau T(const char* s, int n) { return parse_tableau(s, n); }
std::string S(const std::optional<Word>& w) { return w ? to_string(*w) : "none"; }

template <class Fn>
void for_each_word(int max_size, int max_n, bool skew, Fn fn) {
  for (int n = 2; n <= max_n; ++n)
    for (int size = 0; size <= max_size; ++size)
      for (const auto& lam : strict_partitions(size)) {
        std::vector<StrictPartition> inners{StrictPartition{}};
        if (skew) inners = contained_partitions(lam);
        for (const auto& mu : inners)
          for (const auto& t : enumerate_tableaux(make_skew_shape(lam, mu), n)) fn(reading_word(t));
      }
}

const Family kFamilies[] = {Family::F, Family::E, Family::Fprime, Family::Eprime};

}  // namespace

TEST_CASE("walk anchors") {
  auto w = lattice_walk(parse_raw_word("211'12'22'1'1'", 2), 1);
  CHECK(w.end == Point{3, 2});
  CHECK(w.steps.size() == 9);
  CHECK(lattice_walk(Word({}, 2), 1).end == Point{0, 0});

  auto big = reading_word(T("1 1 1 1 1 1 3 3\n2 2 2 3\n3 3\n", 3));
  CHECK(lattice_walk(big, 2).end == Point{1, 3});
  CHECK(lattice_walk(big, 1).steps.size() == 9);
}

TEST_CASE("walk format") {
  auto w = lattice_walk(parse_raw_word("211", 2), 1);
  CHECK(format_walk(w) == "2 (0,0)->(0,1) N\n1 (0,1)->(1,1) E\n1 (1,1)->(1,0) S\nend (1,0)\n");
}

TEST_CASE("walk does not depend on the representative") {
  for_each_word(6, 3, true, [](const Word& w) {
    for (int i = 1; i < w.alphabet(); ++i) {
      auto base = lattice_walk(w, i).points();
      for (const auto& r : representatives(w)) CHECK(lattice_walk(r, i).points() == base);
    }
  });
}

TEST_CASE("critical substrings at known anchors") {
  auto a2 = reading_word(T("1 1 1 1 1 2' 3 3\n2 2 2 3\n3 3\n", 3));
  auto m = final_critical_substring(a2, 2, Side::Lower);
  REQUIRE(m);
  CHECK(m->kind == CriticalType::F2);
  CHECK(m->location == Point{1, 1});
  CHECK(m->length == 3);
  // last 2 of row 2, the 3 ending row 2, the 2' of row 1
  CHECK(m->positions == std::vector<std::size_t>{4, 5, 11});

  auto five = reading_word(T("1 1 1 1 1 1 3 3\n2 2 2 3\n3 3\n", 3));
  auto m5 = final_critical_substring(five, 2, Side::Lower);
  REQUIRE(m5);
  CHECK(m5->kind == CriticalType::F5);
  CHECK(m5->start_index == 4);
  CHECK_FALSE(apply({Family::F, 2}, five));

  auto m3 = final_critical_substring(W("11", 2), 1, Side::Lower);
  REQUIRE(m3);
  CHECK(m3->kind == CriticalType::F3);
  CHECK(m3->start_index == 1);
  CHECK(m3->location == Point{1, 0});
}

TEST_CASE("operator examples") {
  CHECK(S(apply({Family::Fprime, 1}, W("211", 2))) == "212'");
  CHECK(S(apply({Family::F, 1}, W("211", 2))) == "none");
  CHECK(S(apply({Family::F, 1}, W("11", 2))) == "12");
  CHECK(S(apply({Family::Fprime, 1}, W("11", 2))) == "12");

  auto a4 = T("1 1 1 1 1 2 3\n2 2 2 3 3\n3 3\n", 3);
  auto r = apply_to_tableau({Family::F, 1}, a4);
  REQUIRE(r);
  CHECK(*r == T("1 1 1 1 2 2 3\n2 2 2 3 3\n3 3\n", 3));
  CHECK(final_critical_substring(reading_word(a4), 1, Side::Lower)->kind == CriticalType::F3);

  auto a2 = T("1 1 1 1 1 2' 3 3\n2 2 2 3\n3 3\n", 3);
  auto r2 = apply_to_tableau({Family::F, 2}, a2);
  REQUIRE(r2);
  CHECK(*r2 == T("1 1 1 1 1 2 3 3\n2 2 3' 3\n3 3\n", 3));

  CHECK(apply_to_tableau({Family::Fprime, 1}, T("1 1\n2\n", 2)) == T("1 2'\n2\n", 2));
  CHECK_FALSE(apply_to_tableau({Family::F, 1}, T("1 1\n2\n", 2)));
  auto empty = enumerate_tableaux(make_skew_shape({}), 2).front();
  for (Family f : kFamilies) CHECK_FALSE(apply_to_tableau({f, 1}, empty));

  CHECK_THROWS_AS(apply({Family::F, 2}, W("11", 2)), InvalidIndex);
  CHECK_THROWS_AS(apply({Family::F, 0}, W("11", 2)), InvalidIndex);
  CHECK_THROWS_AS(primed_by_standardization(W("11", 2), 3, Side::Lower), InvalidIndex);
}

TEST_CASE("primed oracle examples") {
  CHECK(S(primed_by_standardization(W("211", 2), 1, Side::Lower)) == "212'");
  CHECK(S(primed_by_standardization(W("11", 2), 1, Side::Lower)) == "12");
  CHECK(S(primed_by_standardization(W("22", 2), 1, Side::Lower)) == "none");
}

TEST_CASE("alternate E2' examples") {
  CHECK_FALSE(alternate_E2prime(W("1221", 3)));
  auto w = W("33'122'132", 3);
  CHECK(alternate_E2prime(w) == apply({Family::Eprime, 2}, w));
  CHECK(S(alternate_E2prime(W("322'", 3))) == "22'2'");
}

TEST_CASE("partial inverses, weights and tie independence on skew shapes") {
  int defined = 0;
  for_each_word(7, 4, true, [&](const Word& w) {
    const int n = w.alphabet();
    for (int i = 1; i < n; ++i) {
      const WeightVector a = WeightVector::simple_root(n, i);
      for (auto [down, up] : {std::pair{Family::F, Family::E}, std::pair{Family::Fprime, Family::Eprime}}) {
        if (auto f = apply({down, i}, w)) {
          ++defined;
          CHECK(weight(*f) == weight(w) - a);
          CHECK_MESSAGE(apply({up, i}, *f) == w, to_string(w), " ", to_string(down), i);
          CHECK(f->size() == w.size());
        }
        if (auto e = apply({up, i}, w)) {
          CHECK(weight(*e) == weight(w) + a);
          CHECK_MESSAGE(apply({down, i}, *e) == w, to_string(w), " ", to_string(up), i);
        }
      }
      for (Side side : {Side::Lower, Side::Raise}) {
        auto cands = final_critical_candidates(w, i, side);
        if (cands.size() < 2) continue;
        auto outcome = [&](const CriticalMatch& m) {
          return undefined_type(m.kind) ? std::optional<Word>{} : std::optional<Word>{transform(m, i)};
        };
        for (const auto& c : cands) CHECK_MESSAGE(outcome(c) == outcome(cands[0]), to_string(w));
      }
    }
  });
  CHECK(defined > 1000);
}

TEST_CASE("primed operators agree with the standardization oracle") {
  for_each_word(7, 4, false, [](const Word& w) {
    for (int i = 1; i < w.alphabet(); ++i) {
      auto f = apply({Family::Fprime, i}, w);
      CHECK_MESSAGE(f == primed_by_standardization(w, i, Side::Lower), to_string(w), " i=", i);
      auto e = apply({Family::Eprime, i}, w);
      CHECK_MESSAGE(e == primed_by_standardization(w, i, Side::Raise), to_string(w), " i=", i);
      if (f) CHECK(standardize(*f) == standardize(w));
      if (e) CHECK(standardize(*e) == standardize(w));
    }
  });
}

TEST_CASE("alternate E2' agrees with E'_2") {
  for_each_word(7, 3, true, [](const Word& w) {
    if (w.alphabet() != 3) return;
    CHECK_MESSAGE(alternate_E2prime(w) == apply({Family::Eprime, 2}, w), to_string(w));
  });
}

TEST_CASE("eta conjugates lowering into raising") {
  for_each_word(7, 4, false, [](const Word& w) {
    const int n = w.alphabet();
    for (int i = 1; i < n; ++i) {
      for (auto [f, e] : {std::pair{Family::F, Family::E}, std::pair{Family::Fprime, Family::Eprime}}) {
        auto lhs = apply({f, i}, eta(w));
        std::optional<Word> conj;
        if (lhs) conj = eta(*lhs);
        CHECK_MESSAGE(conj == apply({e, n - i}, w), to_string(w), " ", to_string(f), i);
      }
    }
  });
}

TEST_CASE("string lengths change by (0,+1) or (-1,0) along neighbouring operators") {
  for_each_word(5, 3, false, [](const Word& w) {
    const int n = w.alphabet();
    auto dist = [](Word v, int i, bool up) {
      int k = 0;
      while (true) {
        std::optional<Word> nxt = apply({up ? Family::E : Family::F, i}, v);
        if (!nxt) nxt = apply({up ? Family::Eprime : Family::Fprime, i}, v);
        if (!nxt) return k;
        v = *nxt;
        ++k;
      }
    };
    for (int i = 1; i < n; ++i) {
      for (int j : {i - 1, i + 1}) {
        if (j < 1 || j >= n) continue;
        for (Family fam : {Family::F, Family::Fprime}) {
          auto z = apply({fam, j}, w);
          if (!z) continue;
          const int de = dist(*z, i, true) - dist(w, i, true);
          const int dp = dist(*z, i, false) - dist(w, i, false);
          CHECK_MESSAGE(((de == 0 && dp == 1) || (de == -1 && dp == 0)), to_string(w), " i=", i, " j=", j);
        }
      }
    }
  });
}
