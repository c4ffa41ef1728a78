/* Copyright 2026 The bicrystal Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#include <gtest/gtest.h>

#include "bicrystal/cartan.hpp"
#include "bicrystal/lattice.hpp"

using namespace bicrystal;

TEST(Cartan, ParsesAndNames) {
    EXPECT_EQ(CartanType::parse("A3").name(), "A3");
    EXPECT_EQ(CartanType::parse("d4").name(), "D4");
    EXPECT_THROW(CartanType::parse("C3"), invalid_input);
    EXPECT_THROW(CartanType::parse("A"), invalid_input);
    EXPECT_THROW(CartanType::parse("B1"), invalid_input);
    EXPECT_THROW(CartanType::parse("D3"), invalid_input);
    EXPECT_THROW(CartanType::parse("A3x"), invalid_input);
}

TEST(Cartan, Pairing) {
    const auto B3 = CartanType::parse("B3");
    EXPECT_EQ(B3.pairing(3, 2), -2);
    EXPECT_EQ(B3.pairing(2, 3), -1);
    EXPECT_EQ(B3.pairing(1, 3), 0);
    const auto D4 = CartanType::parse("D4");
    EXPECT_EQ(D4.pairing(2, 3), -1);
    EXPECT_EQ(D4.pairing(2, 4), -1);
    EXPECT_EQ(D4.pairing(3, 4), 0);
    EXPECT_EQ(D4.pairing(4, 4), 2);
    EXPECT_THROW(D4.pairing(0, 1), invalid_input);
    EXPECT_THROW(D4.pairing(1, 5), invalid_input);
}

TEST(Cartan, DomainSizeIsRootCount) {
    for (const char* name : {"A1", "A2", "A3", "A5", "B2", "B3", "B4", "D4", "D5", "D6"}) {
        const auto c = CartanType::parse(name);
        EXPECT_EQ(index_domain(c).size(), c.positive_root_count()) << name;
        EXPECT_EQ(positive_roots(c).size(), c.positive_root_count()) << name;
    }
}

TEST(Cartan, CanonicalOrder) {
    const auto A3 = CartanType::parse("A3");
    const std::vector<Coord> want{{3, 1}, {2, 2}, {2, 1}, {1, 3}, {1, 2}, {1, 1}};
    EXPECT_EQ(index_domain(A3), want);
    const auto D4 = CartanType::parse("D4");
    EXPECT_EQ(index_domain(D4).front(), (Coord{3, 4}));
    EXPECT_EQ(index_domain(D4).back(), (Coord{1, 1}));
}

TEST(Cartan, ConvexOrder) {
    const auto order = convex_order(CartanType::parse("A3"));
    ASSERT_EQ(order.size(), 6u);
    EXPECT_EQ(order[0], (PositiveRoot{1, 1}));
    EXPECT_EQ(order[1], (PositiveRoot{1, 2}));
    EXPECT_EQ(order[2], (PositiveRoot{2, 2}));
    EXPECT_EQ(order[3], (PositiveRoot{1, 3}));
    EXPECT_THROW(convex_order(CartanType::parse("B2")), invalid_input);
}

TEST(Cartan, B2RootsIncludeLongString) {
    auto roots = positive_roots(CartanType::parse("B2"));
    std::sort(roots.begin(), roots.end());
    const std::vector<std::vector<int>> want{{0, 1}, {1, 0}, {1, 1}, {1, 2}};
    EXPECT_EQ(roots, want);
}
