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
#include "bicrystal/verify.hpp"

using namespace bicrystal;

TEST(Enumerate, Counts) {
    const auto A2 = CartanType::parse("A2");
    EXPECT_EQ(enumerate_scan(A2, 2).size(), 7u);
    EXPECT_EQ(enumerate_bfs(A2, 2).size(), 7u);
    EXPECT_EQ(enumerate_bfs(A2, 2, true).size(), 7u);
    EXPECT_EQ(enumerate_scan(CartanType::parse("A1"), 5).size(), 6u);
}

TEST(Enumerate, BfsMatchesScan) {
    for (const char* name : {"A3", "B2", "B3", "D4"}) {
        const auto c = CartanType::parse(name);
        const auto scan = enumerate_scan(c, 3);
        EXPECT_EQ(enumerate_bfs(c, 3), scan) << name;
        EXPECT_EQ(enumerate_bfs(c, 3, true), scan) << name;
    }
}

TEST(Enumerate, Kostant) {
    EXPECT_EQ(kostant_count(CartanType::parse("A3"), {1, 1, 0}), 2);
    EXPECT_EQ(kostant_count(CartanType::parse("A2"), {2, 1}), 2);
    EXPECT_EQ(kostant_count(CartanType::parse("A2"), {1, 1}), 2);
    EXPECT_EQ(kostant_count(CartanType::parse("A2"), {0, 0}), 1);
    for (const char* name : {"A3", "B3", "D4"}) {
        const auto c = CartanType::parse(name);
        for (const auto& mu : weights_up_to(c, 3)) {
            EXPECT_EQ(static_cast<std::int64_t>(enumerate_weight(c, mu).size()), kostant_count(c, mu)) << name;
        }
    }
}

TEST(Verify, SuitesPass) {
    const std::vector<std::pair<const char*, int>> cases{{"A2", 3}, {"A3", 3}, {"B2", 3}, {"B3", 2}, {"D4", 2}};
    for (const auto& [name, depth] : cases) {
        const auto c = CartanType::parse(name);
        for (const auto& suite : suite_names()) {
            if (suite == "lemmas_BD" && c.family() == Family::A) continue;
            if (suite == "pbw_roundtrip" && c.family() != Family::A) continue;
            const SuiteReport r = run_suite(suite, c, depth, 1);
            EXPECT_TRUE(r.passed()) << suite << " on " << name << ": " << r.violations.size() << " violations";
            EXPECT_GT(r.cases, 0) << suite << " on " << name;
        }
    }
}

TEST(Verify, Deterministic) {
    const auto A3 = CartanType::parse("A3");
    const auto a = run_suite("extended", A3, 2, 42);
    const auto b = run_suite("extended", A3, 2, 42);
    EXPECT_EQ(a.cases, b.cases);
    EXPECT_EQ(a.violations.size(), b.violations.size());
}

TEST(Verify, BadArguments) {
    const auto A2 = CartanType::parse("A2");
    EXPECT_THROW(run_suite("nope", A2, 2), invalid_input);
    EXPECT_THROW(run_suite("axioms", A2, -1), invalid_input);
}
