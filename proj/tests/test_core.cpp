#include <doctest.h>

#include "helpers.hpp"
#include "runslab/oracle.hpp"
#include "runslab/verify.hpp"

using namespace runslab;
using runslab::testing::W;

TEST_CASE("word parsing and rendering") {
    CHECK(W("1110101101").str() == "1110101101");
    CHECK(W("").empty());
    CHECK_THROWS_AS(W("0120"), ParseError);
    CHECK_THROWS_AS(W("01 "), ParseError);
    Word w = W("101");
    CHECK(w.at(1) == 1);
    CHECK(w.at(2) == 0);
    CHECK_THROWS_AS(w.at(0), DomainError);
    CHECK_THROWS_AS(w.at(4), DomainError);
}

TEST_CASE("bit packing across limb boundaries") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
        Word w = verify::random_word(rng, 60, 200);
        std::string s = w.str();
        CHECK(Word::parse(s) == w);
        Word copy = w;
        while (!copy.empty()) {
            copy.pop_back();
            s.pop_back();
            REQUIRE(copy.str() == s);
        }
        CHECK(copy == Word{});
    }
    CHECK(Word(70, 1).str() == std::string(70, '1'));
}

TEST_CASE("smallest_period examples") {
    CHECK(smallest_period(W("10101")) == 2);
    CHECK(smallest_period(W("0")) == 1);
    CHECK(smallest_period(W("0110")) == 3);
    CHECK_THROWS_AS(smallest_period(W("")), DomainError);
}

TEST_CASE("compare examples") {
    CHECK(compare(W("01"), W("0101"), order0) == std::strong_ordering::less);
    CHECK(compare(W("10"), W("01"), order1) == std::strong_ordering::less);
    CHECK(compare(W("0"), W("0"), order0) == std::strong_ordering::equal);
    CHECK(compare(W(""), W("0"), order1) == std::strong_ordering::less);
}

TEST_CASE("is_lyndon examples") {
    CHECK(is_lyndon(W("011"), order0));
    CHECK(is_lyndon(W("110"), order1));
    CHECK_FALSE(is_lyndon(W("0101"), order0));
    CHECK_THROWS_AS(is_lyndon(W(""), order0), DomainError);
}

TEST_CASE("longest_lyndon_start examples") {
    CHECK(longest_lyndon_start(W("1110101101"), 6, order0) == 8);
    CHECK(longest_lyndon_start(W("1101011"), 2, order1) == 3);
    CHECK(longest_lyndon_start(W("111"), 2, order1) == 2);
    CHECK_THROWS_AS(longest_lyndon_start(W("111"), 4, order1), DomainError);
    CHECK_THROWS_AS(longest_lyndon_start(W("111"), 0, order1), DomainError);
}

TEST_CASE("complement examples") {
    CHECK(complement(W("0")) == W("1"));
    CHECK(complement(W("1110101101")) == W("0001010010"));
    CHECK(complement(W("")) == W(""));
}

TEST_CASE("period and Lyndon predicates agree with the oracle, all words up to 14") {
    std::int64_t checked = 0;
    verify::for_each_word(1, 14, [&](const Word& u) {
        ++checked;
        Pos p = smallest_period(u);
        REQUIRE(p == oracle::naive_smallest_period(u));
        bool l0 = is_lyndon(u, order0);
        bool l1 = is_lyndon(u, order1);
        REQUIRE(l0 == oracle::naive_is_lyndon(u, order0));
        REQUIRE(l1 == oracle::naive_is_lyndon(u, order1));
        if (l0 || l1)
            REQUIRE(p == static_cast<Pos>(u.size())); // unbordered
        if (u.size() == 1)
            REQUIRE((l0 && l1));
        else
            REQUIRE_FALSE((l0 && l1));
        return true;
    });
    CHECK(checked == (1 << 15) - 2);
}

TEST_CASE("longest_lyndon_start agrees with the oracle, all words up to 12") {
    verify::for_each_word(1, 12, [](const Word& w) {
        for (Pos k = 1; k <= static_cast<Pos>(w.size()); ++k)
            for (Order o : {order0, order1})
                REQUIRE(longest_lyndon_start(w, k, o) == oracle::naive_longest_lyndon_start(w, k, o));
        return true;
    });
}

TEST_CASE("compare is a total order and complement swaps the two orders") {
    std::vector<Word> words;
    verify::for_each_word(0, 5, [&](const Word& w) {
        words.push_back(w);
        return true;
    });
    for (const auto& u : words)
        for (const auto& v : words)
            for (Order o : {order0, order1}) {
                auto c = compare(u, v, o);
                REQUIRE(compare(v, u, o) == 0 <=> c);
                REQUIRE((c == 0) == (u == v));
                REQUIRE(compare(complement(u), complement(v), Order{flip(o.smaller)}) == c);
            }
    // transitivity on a sample of triples
    for (std::size_t a = 0; a < words.size(); a += 3)
        for (std::size_t b = 0; b < words.size(); b += 5)
            for (std::size_t c = 0; c < words.size(); c += 7)
                if (compare(words[a], words[b], order0) < 0 && compare(words[b], words[c], order0) < 0)
                    REQUIRE(compare(words[a], words[c], order0) < 0);
}
