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

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <gtest/gtest.h>

#ifndef BICRYSTAL_CLI_PATH
#error "BICRYSTAL_CLI_PATH must point at the built binary"
#endif

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run cli(const std::string& args) {
    Run r;
    const std::string cmd = std::string(BICRYSTAL_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf{};
    while (std::fgets(buf.data(), buf.size(), p)) r.out += buf.data();
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST(Cli, Check) {
    auto r = cli("check --cartan A3 --tuple 2,4,0,5,1,3");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "member\n");
    r = cli("check --cartan A2 --tuple 1,0,0");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "not a member\n");
}

TEST(Cli, Apply) {
    auto r = cli("apply --op e1 --cartan A3 --tuple 2,4,0,5,1,3");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "e1 1,4,0,5,1,3\n");
    EXPECT_EQ(cli("apply --op e2* --cartan A3 --tuple 2,4,0,5,1,3").code, 2);
}

TEST(Cli, BadInput) {
    EXPECT_EQ(cli("check --cartan Q3 --tuple 1").code, 1);
    EXPECT_EQ(cli("check --cartan A3 --tuple 1,2").code, 1);
    EXPECT_EQ(cli("apply --op x1 --cartan A3 --tuple 2,4,0,5,1,3").code, 1);
    EXPECT_EQ(cli("verify --suite nope --cartan A2").code, 1);
    EXPECT_EQ(cli("extended --cartan A3 --element '{bad'").code, 1);
}

TEST(Cli, Convert) {
    auto r = cli("convert --cartan A3 --from pbw --to polyhedral --tuple 1,2,2,1,0,3");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "2,4,0,5,1,3\n");
    r = cli("convert --cartan A3 --from polyhedral --to pbw --tuple 0,2,1,3,1,2");
    EXPECT_EQ(r.out, "1,2,0,0,1,2\n");
}

TEST(Cli, Extended) {
    const std::string el = R"('{"cartan":"A3","slots":{"0":[[1,1,3],[1,2,1],[1,3,5],[2,1,0],[2,2,4],[3,1,2]],)"
                           R"("1":[[1,1,2],[1,2,1],[1,3,3],[2,1,1],[2,2,2]]}}')";
    auto r = cli("extended --element " + el + " --op 'F(1,0)'");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("(2,4,0,5,1,4)"), std::string::npos) << r.out;
}

TEST(Cli, VerifyAndGraph) {
    auto r = cli("verify --suite axioms --cartan A2 --depth 3");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("\"passed\": true"), std::string::npos);
    r = cli("graph --cartan A2 --depth 2 --format dot");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("digraph", 0), 0u);
}

TEST(Cli, Tableau) {
    auto r = cli("tableau --cartan B3 -i 3 --star");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("2∂*[2,2]"), std::string::npos);
    r = cli("diamond --cartan A3 --tuple 2,4,0,5,1,3 --at 1,3 --star");
    EXPECT_EQ(r.out, "d*[1,3] = 4\n");
}
