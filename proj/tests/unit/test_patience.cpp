#include "doctest.h"

#include <map>
#include <random>
#include <set>

#include "../oracles.hpp"
#include "patience/enumeration.hpp"
#include "patience/errors.hpp"
#include "patience/patience.hpp"
#include "patience/patterns.hpp"

using namespace patience;

namespace {

Permutation random_permutation(int n, std::mt19937& rng) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    std::shuffle(w.begin(), w.end(), rng);
    return Permutation(std::move(w));
}

}  // namespace

TEST_CASE("patience sort of the worked example") {
    const PileConfig r = patience_sort(Permutation::parse("64518723"));
    CHECK(r.piles() == std::vector<Pile>{{6, 4, 1}, {5, 2}, {8, 7, 3}});
    CHECK(patience_sort(Permutation::identity(6)).pile_count() == 6);
    CHECK(patience_sort(Permutation::parse("3142")) == patience_sort(Permutation::parse("3412")));
    CHECK(patience_sort(Permutation::parse("3142")).piles() == std::vector<Pile>{{3, 1}, {4, 2}});
    CHECK(patience_sort(Permutation{}).pile_count() == 0);
}

TEST_CASE("patience sort agrees with the linear-scan oracle") {
    for (int n = 0; n <= 7; ++n) {
        for (const auto& w : oracle::all_words(n)) CHECK(patience_sort(Permutation(w)).piles() == oracle::piles(w));
    }
}

TEST_CASE("number of piles is the longest increasing subsequence") {
    for (int n = 1; n <= 8; ++n) {
        for (const auto& w : oracle::all_words(n)) {
            REQUIRE(patience_sort(Permutation(w)).pile_count() == oracle::lis(w));
        }
    }
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 10000; ++trial) {
        const Permutation p = random_permutation(200, rng);
        const std::vector<int> w(p.word().begin(), p.word().end());
        REQUIRE(patience_sort(p).pile_count() == oracle::lis(w));
    }
}

TEST_CASE("gather returns the sorted deck") {
    std::vector<int> sorted8(8);
    std::iota(sorted8.begin(), sorted8.end(), 1);
    CHECK(gather(patience_sort(Permutation::parse("64518723"))) == sorted8);
    CHECK(gather(patience_sort(Permutation::identity(5))) == std::vector<int>{1, 2, 3, 4, 5});
    CHECK(gather(PileConfig{}).empty());
    std::mt19937 rng(11);
    for (int trial = 0; trial < 1000; ++trial) {
        const Permutation p = random_permutation(64, rng);
        std::vector<int> w(p.word().begin(), p.word().end());
        std::sort(w.begin(), w.end());
        REQUIRE(gather(patience_sort(p)) == w);
    }
    for (const auto& w : oracle::all_words(7)) {
        const auto out = gather(patience_sort(Permutation(w)));
        REQUIRE(std::is_sorted(out.begin(), out.end()));
    }
}

TEST_CASE("extended patience sort of the worked example") {
    const StablePair pair = extended_patience_sort(Permutation::parse("64518723"));
    CHECK(pair.insertion.piles() == std::vector<Pile>{{6, 4, 1}, {5, 2}, {8, 7, 3}});
    CHECK(pair.recording.piles() == std::vector<Pile>{{4, 2, 1}, {7, 3}, {8, 6, 5}});
    CHECK(arrival_order(pair.recording) == std::vector<Pile>{{1, 2, 4}, {3, 7}, {5, 6, 8}});
    CHECK(shape_of(pair.insertion).parts == std::vector<int>{3, 2, 3});
    CHECK(shape_of(pair.recording) == shape_of(pair.insertion));
    CHECK(reverse_patience_word(pair.insertion) == Permutation::parse("64152873"));
    CHECK(reverse_patience_word(pair.recording) == Permutation::parse("42173865"));
}

TEST_CASE("extended patience sort of a layered permutation and the identity") {
    const StablePair layered = extended_patience_sort(Permutation::parse("32154876"));
    CHECK(layered.insertion.piles() == std::vector<Pile>{{3, 2, 1}, {5, 4}, {8, 7, 6}});
    CHECK(layered.recording == layered.insertion);
    const StablePair id = extended_patience_sort(Permutation::identity(4));
    CHECK(id.insertion.piles() == std::vector<Pile>{{1}, {2}, {3}, {4}});
    CHECK(id.recording == id.insertion);
}

TEST_CASE("inverting the extended sort") {
    const StablePair pair = extended_patience_sort(Permutation::parse("64518723"));
    CHECK(invert_extended(pair) == Permutation::parse("64518723"));
    CHECK(invert_extended(extended_patience_sort(Permutation::identity(6))) == Permutation::identity(6));
    CHECK(invert_extended(StablePair{}).empty());
    std::set<std::pair<std::vector<Pile>, std::vector<Pile>>> images;
    for (const auto& w : oracle::all_words(7)) {
        const Permutation p(w);
        const StablePair sp = extended_patience_sort(p);
        REQUIRE(invert_extended(sp) == p);
        REQUIRE(shape_of(sp.insertion) == shape_of(sp.recording));
        images.insert({sp.insertion.piles(), sp.recording.piles()});
    }
    CHECK(images.size() == 5040);
    std::mt19937 rng(5);
    for (int trial = 0; trial < 2000; ++trial) {
        const Permutation p = random_permutation(100, rng);
        REQUIRE(invert_extended(extended_patience_sort(p)) == p);
    }
}

TEST_CASE("invert rejects pairs outside the image") {
    // Shapes differ.
    CHECK_THROWS_AS(invert_extended({PileConfig({{2, 1}}), PileConfig({{1}, {2}})}), MalformedPair);
    // Same shape, but pile 2 would have to start before pile 1 holds anything.
    CHECK_THROWS_AS(invert_extended({PileConfig({{2}, {1}}), PileConfig({{2}, {1}})}), MalformedPair);
    // Replays as 321, which would have put 2 on the first pile.
    CHECK_THROWS_AS(invert_extended({PileConfig({{3, 1}, {2}}), PileConfig({{3, 1}, {2}})}), MalformedPair);
    CHECK(invert_extended({PileConfig({{3, 1}, {2}}), PileConfig({{2, 1}, {3}})}) == Permutation::parse("312"));
    // Sizes differ.
    CHECK_THROWS_AS(invert_extended({PileConfig(std::vector<Pile>{{1}}), PileConfig({{2, 1}})}), MalformedPair);
}

TEST_CASE("preimages by interleaving") {
    const auto pre = preimages(PileConfig({{3, 1}, {4, 2}}));
    CHECK(pre == std::vector<Permutation>{Permutation::parse("3142"), Permutation::parse("3412")});
    CHECK(preimages(patience_sort(Permutation::identity(5))) == std::vector<Permutation>{Permutation::identity(5)});
    CHECK(preimages(PileConfig{}) == std::vector<Permutation>{Permutation{}});
    std::vector<Pile> big;
    for (int v = 1; v <= 11; ++v) big.push_back({v});
    CHECK_THROWS_AS(preimages(PileConfig(big)), OracleBoundExceeded);
    CHECK(preimages(PileConfig(big), 11).size() == 1);
}

TEST_CASE("preimages match the naive filter of S_n") {
    for (int n = 1; n <= 7; ++n) {
        std::map<std::vector<Pile>, std::vector<Permutation>> classes;
        for (const auto& w : oracle::all_words(n)) classes[oracle::piles(w)].push_back(Permutation(w));
        for (const auto& [piles, members] : classes) REQUIRE(preimages(PileConfig(piles)) == members);
    }
}

TEST_CASE("unique preimages and equivalence classes") {
    CHECK_FALSE(has_unique_preimage(PileConfig({{3, 1}, {4, 2}})));
    CHECK(has_unique_preimage(patience_sort(Permutation::identity(4))));
    CHECK(ps_equivalent(Permutation::parse("3142"), Permutation::parse("3412")));
    CHECK(ps_equivalent(Permutation::parse("64518723"), Permutation::parse("64518723")));
    CHECK_FALSE(ps_equivalent(Permutation::parse("12"), Permutation::parse("21")));

    std::set<std::vector<Pile>> configs5;
    int unique5 = 0;
    for (const auto& w : oracle::all_words(5)) {
        const PileConfig r = patience_sort(Permutation(w));
        if (configs5.insert(r.piles()).second && has_unique_preimage(r)) ++unique5;
    }
    CHECK(configs5.size() == 52);
    CHECK(unique5 == 23);

    std::set<std::vector<Pile>> configs6;
    for (const auto& w : oracle::all_words(6)) configs6.insert(oracle::piles(w));
    CHECK(configs6.size() == static_cast<std::size_t>(bell(6)));
    CHECK(oracle::unique_preimage_count(6) == 66);
}

TEST_CASE("unique-preimage test agrees with class sizes") {
    for (int n = 1; n <= 8; ++n) {
        std::map<std::vector<Pile>, int> sizes;
        for (const auto& w : oracle::all_words(n)) ++sizes[oracle::piles(w)];
        for (const auto& [piles, size] : sizes) REQUIRE(has_unique_preimage(PileConfig(piles)) == (size == 1));
    }
}

TEST_CASE("each class has exactly one 3-!1-42 avoider, its reverse patience word") {
    const GenPattern pat = parse_pattern("3-!1-42");
    for (int n = 1; n <= 7; ++n) {
        std::map<std::vector<Pile>, std::vector<Permutation>> avoiders;
        for (const auto& w : oracle::all_words(n)) {
            const Permutation p(w);
            if (avoids(p, pat)) avoiders[oracle::piles(w)].push_back(p);
        }
        CHECK(avoiders.size() == static_cast<std::size_t>(bell(n)));
        for (const auto& [piles, members] : avoiders) {
            REQUIRE(members.size() == 1);
            CHECK(members.front() == reverse_patience_word(PileConfig(piles)));
        }
    }
}

TEST_CASE("fixed points of the reverse patience word are the 3-!1-42 avoiders") {
    const GenPattern pat = parse_pattern("3-!1-42");
    for (int n = 1; n <= 8; ++n) {
        for (const auto& w : oracle::all_words(n)) {
            const Permutation p(w);
            REQUIRE((reverse_patience_word(patience_sort(p)) == p) == avoids(p, pat));
        }
    }
}

TEST_CASE("arrival order round trip") {
    const StablePair pair = extended_patience_sort(Permutation::parse("64518723"));
    CHECK(recording_from_arrival_order(arrival_order(pair.recording)) == pair.recording);
    CHECK_THROWS_AS(recording_from_arrival_order({{2, 1}}), InvalidPileConfig);
}
