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

#include <map>

#include <gtest/gtest.h>

#include "bicrystal/lattice.hpp"

using namespace bicrystal;

namespace {
const CartanType A3 = CartanType::parse("A3");
const CartanType D4 = CartanType::parse("D4");
}  // namespace

TEST(Element, TupleRoundTrip) {
    const Element b = parse_tuple(A3, "2,4,0,5,1,3");
    EXPECT_EQ(b(3, 1), 2);
    EXPECT_EQ(b(2, 2), 4);
    EXPECT_EQ(b(1, 1), 3);
    EXPECT_EQ(b(4, 1), 0);
    EXPECT_EQ(b.to_string(), "(2,4,0,5,1,3)");
    EXPECT_EQ(parse_tuple(A3, "(2, 4,0,5,1,3)"), b);
    EXPECT_EQ(b.height(), 15);
}

TEST(Element, RejectsBadInput) {
    EXPECT_THROW(parse_tuple(A3, "1,2,3"), invalid_input);
    EXPECT_THROW(parse_tuple(A3, "1,2,x,0,0,0"), invalid_input);
    EXPECT_THROW(parse_tuple(A3, "1,,2,0,0,0"), invalid_input);
    EXPECT_THROW(parse_tuple(A3, "-1,0,0,0,0,0"), invalid_input);
    Element b(A3);
    EXPECT_THROW(b.set(3, 2, 1), invalid_input);
    EXPECT_NO_THROW(b.set(3, 2, 0));
}

TEST(Element, Weight) {
    EXPECT_EQ(weight(parse_tuple(A3, "2,4,0,5,1,3")), (Weight{-5, -5, -5}));
    EXPECT_EQ(weight(parse_tuple(D4, "0,0,0,2,0,1,3,0,2,1,0,0")), (Weight{-2, -3, -2, -2}));
    EXPECT_EQ(pair_with(A3, 1, Weight{-5, -5, -5}), -5);
}

TEST(Membership, PaperElements) {
    for (const auto& b : {parse_tuple(A3, "2,4,0,5,1,3"), parse_tuple(A3, "0,2,1,3,1,2"),
                          parse_tuple(D4, "0,0,0,2,0,1,3,0,2,1,0,0"), parse_tuple(D4, "0,0,0,2,0,0,2,1,2,1,1,0")}) {
        EXPECT_TRUE(is_member_chains(b)) << b.to_string();
        EXPECT_TRUE(is_member_boxed(b)) << b.to_string();
    }
}

TEST(Membership, NonMembers) {
    // b_{2,1} > 0 with b_{1,1} = 0 and b_{1,2} = 0 breaks the first chain
    const Element b = parse_tuple(A3, "0,0,1,0,0,0");
    EXPECT_FALSE(is_member_chains(b));
    EXPECT_FALSE(is_member_boxed(b));
    Element neg(A3);
    neg.set(1, 1, -1);
    EXPECT_FALSE(is_member_chains(neg));
    EXPECT_FALSE(is_member_boxed(neg));
}

TEST(LinearForm, NormalizeAndFormat) {
    LinearForm f;
    f.add(1, 3, 1).add(1, 2, -2).add(0, 2, 5).add(1, 3, -1);
    EXPECT_EQ(format_form(A3, f), "-2x[1,2]");
    EXPECT_TRUE(same_form(A3, f, LinearForm().add(1, 2, -2)));
}

TEST(BoxedForms, TypeAShape) {
    // box(2)_1 = x_{1,2} - x_{2,1}
    const std::map<Coord, int> want{{{1, 2}, 1}, {{2, 1}, -1}};
    EXPECT_EQ(boxed_form(A3, {2, false, 1}).normalized(A3), want);
    EXPECT_THROW(boxed_form(A3, {1, true, 1}), invalid_input);
}
