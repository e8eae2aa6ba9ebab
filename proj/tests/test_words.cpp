#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "negabase/words.hpp"

using namespace negabase;

TEST_CASE("canonical form: primitive period, minimal preperiod") {
    EPWord w({1, 1}, {0, 1});
    // 1 1 (01)^w = 1 (10)^w
    CHECK(w.pre == std::vector<Digit>{1});
    CHECK(w.per == std::vector<Digit>{1, 0});

    EPWord powers({}, {2, 1, 2, 1});
    CHECK(powers.per == std::vector<Digit>{2, 1});

    EPWord zeros({1, 0, 0, 0}, {0});
    CHECK(zeros.pre == std::vector<Digit>{1});
    CHECK(zeros.per == std::vector<Digit>{0});
}

TEST_CASE("word text round-trip") {
    EPWord w = EPWord::parse("1 0 0 | 1");
    CHECK(w.pre == std::vector<Digit>{1, 0, 0});
    CHECK(w.per == std::vector<Digit>{1});
    CHECK(w.str() == "1 0 0 | 1");
    CHECK(EPWord::parse("| 2").str() == "| 2");
    CHECK_THROWS_AS(EPWord::parse("1 0"), std::invalid_argument);
    CHECK_THROWS_AS(EPWord::parse("1 |"), std::invalid_argument);
}

TEST_CASE("lexicographic comparison") {
    EPWord u({}, {1, 0}), v({}, {1, 1});
    CHECK(lex_compare(u, u).relation == Rel::EQ);
    auto verdict = lex_compare(u, v);
    CHECK(verdict.relation == Rel::LT);
    CHECK(verdict.witness == 2);
    // 1 1 0^w vs (1 0)^w: differs at position 2
    CHECK(lex_compare(EPWord({1, 1}, {0}), u).relation == Rel::GT);
}

TEST_CASE("alternate order") {
    CHECK(alt_compare(EPWord({2}, {0}), EPWord({1}, {0})).relation == Rel::LT);
    // d_{-beta}(l) before d*_{-beta}(r) for the plastic number
    EPWord dl({1, 0, 0}, {1});
    EPWord dsr({0, 1, 0, 0}, {1});
    auto v = alt_compare(dl, dsr);
    CHECK(v.relation == Rel::LT);
    CHECK(v.witness == 1);
    CHECK(alt_compare(EPWord({}, {0}), EPWord({}, {0, 1})).relation == Rel::LT);
}

TEST_CASE("alternate order is a total order on random words") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> len(0, 4), plen(1, 4), dig(0, 2);
    auto rand_word = [&] {
        std::vector<Digit> pre(len(rng)), per(plen(rng));
        for (auto& d : pre) d = dig(rng);
        for (auto& d : per) d = dig(rng);
        return EPWord(std::move(pre), std::move(per));
    };
    for (int i = 0; i < 300; ++i) {
        EPWord a = rand_word(), b = rand_word(), c = rand_word();
        auto ab = alt_compare(a, b), ba = alt_compare(b, a);
        if (a == b) {
            CHECK(ab.relation == Rel::EQ);
        } else {
            CHECK(ab.relation != Rel::EQ);
            CHECK((ab.relation == Rel::LT) == (ba.relation == Rel::GT));
        }
        // transitivity
        if (alt_compare(a, b).relation != Rel::GT && alt_compare(b, c).relation != Rel::GT)
            CHECK(alt_compare(a, c).relation != Rel::GT);
    }
}

TEST_CASE("d* of r from d of l") {
    // pure odd period (2 1 1)^w -> (0 2 1 0)^w
    CHECK(d_star_neg_r(EPWord({}, {2, 1, 1})) == EPWord({}, {0, 2, 1, 0}));
    // plastic number: 0 prepended
    CHECK(d_star_neg_r(EPWord({1, 0, 0}, {1})) == EPWord({0, 1, 0, 0}, {1}));
    // golden mean
    CHECK(d_star_neg_r(EPWord({1}, {0})) == EPWord({0, 1}, {0}));
    // integer base 2: (2)^w has odd period -> (0 1)^w
    CHECK(d_star_neg_r(EPWord({}, {2})) == EPWord({}, {0, 1}));
}

TEST_CASE("Parry admissibility for the golden mean") {
    EPWord dstar1({}, {1, 0});
    auto at_bound = is_admissible_pos(EPWord({}, {1, 0}), dstar1);
    CHECK_FALSE(at_bound.ok);
    CHECK(at_bound.violating_shift == 1);
    CHECK(is_admissible_pos(EPWord({1, 0, 0}, {0}), dstar1).ok);
    auto eleven = is_admissible_pos(EPWord({1, 1}, {0}), dstar1);
    CHECK_FALSE(eleven.ok);
    CHECK(eleven.violating_shift == 1);  // "1 1 ..." is already above "1 0 ..."
}

TEST_CASE("Ito-Sadahiro admissibility for the plastic number") {
    EPWord dl({1, 0, 0}, {1});
    EPWord dsr = d_star_neg_r(dl);
    CHECK(is_admissible_neg(dl, dl, dsr).ok);
    CHECK_FALSE(is_admissible_neg(dsr, dl, dsr).ok);
    CHECK(is_admissible_neg(EPWord({}, {0}), dl, dsr).ok);
}
