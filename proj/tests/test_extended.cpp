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

#include <random>

#include <gtest/gtest.h>

#include "bicrystal/extended.hpp"
#include "bicrystal/verify.hpp"
#include "goldens.hpp"

using namespace bicrystal;

namespace {

ExtendedElement two_slot(const char* cartan, const char* slot0, const char* slot1) {
    const auto c = CartanType::parse(cartan);
    ExtendedElement bb(c);
    bb.set(0, parse_tuple(c, slot0));
    bb.set(1, parse_tuple(c, slot1));
    return bb;
}

}  // namespace

TEST(Extended, GoldenA3) {
    const auto bb = two_slot("A3", goldens::kA3, goldens::kA3Slot1);
    const auto& c = bb.cartan();
    EXPECT_EQ(sigma_hat(bb, 1, 0, {Partition{1}, false}), 2);
    EXPECT_EQ(sigma_hat(bb, 1, 0, {Partition{2}, false}), 0);
    EXPECT_EQ(sigma_hat(bb, 1, 0, {Partition{3}, false}), 2);
    EXPECT_EQ(sigma_hat(bb, 1, 0, {Partition{1}, true}), 2);
    const auto sel = select_hat(bb, 1, 0);
    EXPECT_EQ(sel.least, (ExtendedLabel{Partition{1}, false}));
    EXPECT_EQ(sel.greatest, (ExtendedLabel{Partition{1}, true}));
    EXPECT_EQ(eps_hat(bb, 1, 0), 0);

    ExtendedElement want_e = bb;
    want_e.set(1, parse_tuple(c, "0,2,1,3,1,3"));
    EXPECT_EQ(E_hat(bb, 1, 0), want_e);
    ExtendedElement want_f = bb;
    want_f.set(0, parse_tuple(c, "2,4,0,5,1,4"));
    EXPECT_EQ(F_hat(bb, 1, 0), want_f);
}

TEST(Extended, GoldenD4) {
    const auto bb = two_slot("D4", goldens::kD4, goldens::kD4Slot1);
    const auto& c = bb.cartan();
    EXPECT_EQ(sigma_hat(bb, 1, 0, {Partition{1}, false}), 1);
    EXPECT_EQ(sigma_hat(bb, 1, 0, {Partition{2}, false}), 1);
    EXPECT_EQ(sigma_hat(bb, 1, 0, {Partition{3}, false}), 2);
    EXPECT_EQ(sigma_hat(bb, 1, 0, {Partition{1}, true}), 0);
    const auto sel = select_hat(bb, 1, 0);
    EXPECT_EQ(sel.least, (ExtendedLabel{Partition{3}, false}));
    EXPECT_EQ(sel.greatest, (ExtendedLabel{Partition{3}, false}));

    ExtendedElement want_e = bb;
    want_e.set(0, parse_tuple(c, "0,0,0,1,0,1,3,0,2,1,0,0"));
    EXPECT_EQ(E_hat(bb, 1, 0), want_e);
    ExtendedElement want_f = bb;
    want_f.set(0, parse_tuple(c, "0,0,0,3,0,1,3,0,2,1,0,0"));
    EXPECT_EQ(F_hat(bb, 1, 0), want_f);
}

TEST(Extended, InverseAndWeight) {
    std::mt19937_64 rng(7);
    for (const char* name : {"A3", "B3", "D4"}) {
        const auto c = CartanType::parse(name);
        const auto pool = enumerate_scan(c, 3);
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        for (int trial = 0; trial < 30; ++trial) {
            ExtendedElement bb(c);
            bb.set(0, pool[pick(rng)]);
            bb.set(1, pool[pick(rng)]);
            for (int i = 1; i <= c.rank(); ++i) {
                for (int k = -1; k <= 1; ++k) {
                    const auto up = F_hat(bb, i, k);
                    EXPECT_EQ(E_hat(up, i, k), bb);
                    EXPECT_EQ(F_hat(E_hat(bb, i, k), i, k), bb);
                    EXPECT_EQ(eps_hat(up, i, k), eps_hat(bb, i, k) + 1);
                    EXPECT_EQ(F_hat_by_eps(bb, i, k), up);
                    const Weight w0 = weight_hat(bb), w1 = weight_hat(up);
                    const int sign = k % 2 == 0 ? 1 : -1;
                    for (int j = 1; j <= c.rank(); ++j) {
                        const std::size_t q = static_cast<std::size_t>(j - 1);
                        EXPECT_EQ(w1[q] - w0[q], j == i ? -sign : 0);
                    }
                }
            }
        }
    }
}

TEST(Extended, WeightHat) {
    const auto bb = two_slot("A3", goldens::kA3, goldens::kA3Slot1);
    EXPECT_EQ(weight(bb.at(0)), (Weight{-5, -5, -5}));
    EXPECT_EQ(weight(bb.at(1)), (Weight{-3, -3, -3}));
    EXPECT_EQ(weight_hat(bb), (Weight{-2, -2, -2}));
}

TEST(Extended, Layout) {
    const auto A3 = CartanType::parse("A3");
    const auto lay = extended_configuration(A3, -1, 2);
    EXPECT_EQ(lay.at({1, Coord{1, 1}}), (Point{-3, 4}));
    EXPECT_EQ(lay.at({0, Coord{1, 3}}), (Point{-4, 1}));
    EXPECT_THROW(extended_configuration(CartanType::parse("D4"), 0, 1), invalid_input);
}

TEST(Extended, ToString) {
    const auto bb = two_slot("A3", goldens::kA3, goldens::kA3Slot1);
    EXPECT_EQ(bb.to_string(), "(..., 1, (0,2,1,3,1,2), _(2,4,0,5,1,3)_, 1, ...)");
}
