#include "oracles.hpp"
#include "reference_data.hpp"

#include "sects/bruhat.hpp"
#include "sects/error.hpp"
#include "sects/grassmann.hpp"

#include <doctest.h>

#include <array>

using namespace sects;

namespace {

Clan c(const char* text) { return parse_clan(text); }

std::set<reference::Edge> cover_names(const Poset& poset) {
    std::set<reference::Edge> out;
    for (auto [lo, hi] : poset.covers())
        out.insert({poset.key(lo), poset.key(hi)});
    return out;
}

std::set<std::string> names(const Poset& poset, const std::vector<std::size_t>& indices) {
    std::set<std::string> out;
    for (auto i : indices)
        out.insert(poset.key(i));
    return out;
}

} // namespace

TEST_CASE("wyser_leq examples") {
    CHECK(wyser_leq(c("++-"), c("+11")));
    CHECK_FALSE(wyser_leq(c("++-"), c("-++")));
    CHECK_FALSE(wyser_leq(c("-++"), c("++-")));
    CHECK(wyser_leq(c("--++"), c("1221")));
    CHECK_FALSE(wyser_leq(c("1221"), c("--++")));
    for (const auto& g : enumerate_clans(2, 2))
        CHECK(wyser_leq(g, g));

    try {
        wyser_leq(c("+-"), c("++-"));
        FAIL("expected ShapeMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ShapeMismatch);
    }
}

TEST_CASE("wyser_leq is a partial order for p+q <= 6") {
    for (int p = 1; p <= 5; ++p) {
        for (int q = 1; p + q <= 6; ++q) {
            const auto poset = build_poset(enumerate_clans(p, q));
            CHECK(poset.is_partial_order());
        }
    }
}

TEST_CASE("wyser_leq matches the statistics oracle") {
    for (int p = 1; p <= 4; ++p) {
        for (int q = 1; p + q <= 5; ++q) {
            const auto clans = enumerate_clans(p, q);
            for (const auto& g : clans)
                for (const auto& t : clans)
                    CHECK(wyser_leq(g, t) == oracle::naive_wyser_leq(render(g), render(t)));
        }
    }
}

TEST_CASE("leq_via_involution agrees with wyser_leq") {
    std::size_t pairs21 = 0;
    std::size_t pairs22 = 0;
    for (const auto& g : enumerate_clans(2, 1)) {
        for (const auto& t : enumerate_clans(2, 1)) {
            CHECK(leq_via_involution(g, t) == wyser_leq(g, t));
            ++pairs21;
        }
    }
    for (const auto& g : enumerate_clans(2, 2)) {
        for (const auto& t : enumerate_clans(2, 2)) {
            CHECK(leq_via_involution(g, t) == wyser_leq(g, t));
            ++pairs22;
        }
    }
    CHECK(pairs21 == 36);
    CHECK(pairs22 == 441);
    CHECK(leq_via_involution(c("--++"), c("1221")));

    for (int p = 1; p <= 5; ++p) {
        for (int q = 1; p + q <= 6; ++q) {
            const auto clans = enumerate_clans(p, q);
            std::size_t disagreements = 0;
            for (const auto& g : clans)
                for (const auto& t : clans)
                    disagreements += leq_via_involution(g, t) != wyser_leq(g, t) ? 1 : 0;
            CHECK(disagreements == 0);
        }
    }
}

TEST_CASE("build_poset covers") {
    const auto p21 = build_poset(enumerate_clans(2, 1));
    CHECK(p21.size() == 6);
    CHECK(cover_names(p21) == reference::kCoversC21);

    const auto p22 = build_poset(enumerate_clans(2, 2));
    CHECK(p22.size() == 21);
    CHECK(p22.covers().size() == 38);
    CHECK(cover_names(p22) == reference::kCoversC22);

    const auto single = build_poset({c("+-")});
    CHECK(single.size() == 1);
    CHECK(single.covers().empty());

    CHECK(build_poset({}).size() == 0);
}

TEST_CASE("covers are the transitive reduction") {
    for (int p = 1; p <= 4; ++p) {
        for (int q = 1; p + q <= 6; ++q) {
            const auto poset = build_poset(enumerate_clans(p, q));
            const auto n = poset.size();
            std::set<Cover> naive;
            for (std::size_t a = 0; a < n; ++a) {
                for (std::size_t b = 0; b < n; ++b) {
                    if (!poset.less(a, b))
                        continue;
                    bool between = false;
                    for (std::size_t m = 0; m < n && !between; ++m)
                        between = poset.less(a, m) && poset.less(m, b);
                    if (!between)
                        naive.insert({a, b});
                }
            }
            CHECK(std::set<Cover>(poset.covers().begin(), poset.covers().end()) == naive);
        }
    }
}

TEST_CASE("build_poset rejects mixed shapes") {
    try {
        build_poset({c("+-"), c("++-")});
        FAIL("expected ShapeMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ShapeMismatch);
    }
}

TEST_CASE("extremal elements") {
    const auto p21 = build_poset(enumerate_clans(2, 1));
    const auto e21 = extremal_elements(p21);
    CHECK(names(p21, e21.minimals) == std::set<std::string>{"++-", "+-+", "-++"});
    CHECK(names(p21, e21.maximals) == std::set<std::string>{"1+1"});

    const auto p22 = build_poset(enumerate_clans(2, 2));
    CHECK(names(p22, extremal_elements(p22).maximals) == std::set<std::string>{"1221"});

    const auto none = extremal_elements(build_poset({}));
    CHECK(none.minimals.empty());
    CHECK(none.maximals.empty());
}

TEST_CASE("minimal elements are the base clans and the maximum is gamma_max") {
    for (int p = 1; p <= 5; ++p) {
        for (int q = 1; p + q <= 6; ++q) {
            const auto clans = enumerate_clans(p, q);
            const auto poset = build_poset(clans);
            const auto ext = extremal_elements(poset);
            std::set<std::string> bases;
            for (const auto& g : clans)
                if (g.is_base())
                    bases.insert(render(g));
            CHECK(names(poset, ext.minimals) == bases);
            if (p >= q) {
                REQUIRE(ext.maximals.size() == 1);
                CHECK(poset.key(ext.maximals.front()) == render(gamma_max(p, q)));
            } else {
                CHECK(ext.maximals.size() == 1);
            }
        }
    }
}

TEST_CASE("embed_clan examples") {
    CHECK(embed_clan(c("++--"), 2, 2) == c("++--"));
    CHECK(render(embed_clan(c("11"), 2, 2)) == "+11-");
    CHECK(render(embed_clan(c("+-"), 2, 2)) == "++--");
    try {
        embed_clan(c("++-"), 1, 1);
        FAIL("expected ShrinkNotAllowed");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ShrinkNotAllowed);
    }
}

TEST_CASE("embed_clan is an order- and sect-preserving injection") {
    const std::vector<std::array<int, 4>> shapes{{1, 1, 2, 2}, {2, 1, 3, 2}, {1, 2, 2, 3}, {2, 2, 3, 3}};
    for (const auto& [p, q, p2, q2] : shapes) {
        const auto clans = enumerate_clans(p, q);
        std::set<Clan> images;
        for (const auto& g : clans) {
            const auto e = embed_clan(g, p2, q2);
            CHECK(e.p() == p2);
            CHECK(e.q() == q2);
            images.insert(e);
            CHECK(base_clan(e) == embed_clan(base_clan(g), p2, q2));
            for (const auto& t : clans)
                CHECK(wyser_leq(g, t) == wyser_leq(e, embed_clan(t, p2, q2)));
        }
        CHECK(images.size() == clans.size());
    }
}
