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

#include "bicrystal/enumerate.hpp"
#include "bicrystal/pbw.hpp"
#include "goldens.hpp"

using namespace bicrystal;

namespace {

PbwDatum datum(const CartanType& c, std::vector<int> v) { return PbwDatum::from_tuple(c, v); }

}  // namespace

TEST(Pbw, Pairs) {
    const auto A3 = CartanType::parse("A3");
    const std::vector<std::pair<std::vector<int>, const char*>> pairs{{{1, 2, 2, 1, 0, 3}, goldens::kA3},
                                                                      {{1, 2, 0, 0, 1, 2}, goldens::kA3Slot1}};
    for (const auto& [c, b] : pairs) {
        EXPECT_EQ(pbw_to_polyhedral(datum(A3, c)), parse_tuple(A3, b));
        EXPECT_EQ(polyhedral_to_pbw(parse_tuple(A3, b)).tuple(), c);
    }
    EXPECT_EQ(datum(A3, {1, 2, 2, 1, 0, 3}).to_string(), "(1,2,2,1,0,3)");
}

// PBW side of F_(1,0) on the two-slot example, carried across.
TEST(Pbw, CommutesWithExtendedF) {
    const auto A3 = CartanType::parse("A3");
    const std::map<int, PbwDatum> c{{0, datum(A3, {1, 2, 2, 1, 0, 3})}, {1, datum(A3, {1, 2, 0, 0, 1, 2})}};
    const std::map<int, PbwDatum> fc{{0, datum(A3, {1, 2, 2, 1, 0, 4})}, {1, datum(A3, {1, 2, 0, 0, 1, 2})}};
    EXPECT_EQ(extended_pbw_to_polyhedral(A3, fc), F_hat(extended_pbw_to_polyhedral(A3, c), 1, 0));
}

TEST(Pbw, Bijection) {
    for (const char* name : {"A1", "A2", "A3", "A4"}) {
        const auto c = CartanType::parse(name);
        for (const Element& b : enumerate_scan(c, 4)) {
            const PbwDatum d = polyhedral_to_pbw(b);
            EXPECT_EQ(pbw_to_polyhedral(d), b);
            int total = 0;
            for (int v : d.tuple()) total += v;
            EXPECT_LE(total, b.height());
        }
    }
}

TEST(Pbw, Errors) {
    const auto A2 = CartanType::parse("A2");
    EXPECT_THROW(datum(A2, {1, 2}), invalid_input);
    EXPECT_THROW(datum(A2, {1, -1, 0}), invalid_input);
    EXPECT_THROW(polyhedral_to_pbw(Element(CartanType::parse("B2"))), invalid_input);
    EXPECT_THROW(polyhedral_to_pbw(parse_tuple(A2, "1,0,0")), invalid_input);
}
