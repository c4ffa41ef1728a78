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
// Worked examples shared by the unit tests and the acceptance runner.

#ifndef BICRYSTAL_TESTS_GOLDENS_HPP
#define BICRYSTAL_TESTS_GOLDENS_HPP

#include <string>
#include <vector>

namespace goldens {

struct OpCase {
    std::string op;    // "e1", "f3*", ...
    std::string want;  // tuple, or "" for null
};

inline const char* const kA3 = "2,4,0,5,1,3";

inline const std::vector<OpCase> kA3Ops{
    {"e1", "1,4,0,5,1,3"},  {"f1", "2,4,0,5,1,4"},  {"e2", "2,3,0,5,1,3"},  {"f2", "2,4,0,5,2,3"},
    {"e3", "2,4,0,4,1,3"},  {"f3", "2,4,0,6,1,3"},  {"e1*", "2,4,0,5,1,2"}, {"f1*", "2,4,0,5,1,4"},
    {"e2*", ""},            {"f2*", "2,4,1,5,2,2"}, {"e3*", "2,3,0,4,2,3"}, {"f3*", "2,4,0,6,1,3"},
};

inline const char* const kD4 = "0,0,0,2,0,1,3,0,2,1,0,0";

inline const std::vector<OpCase> kD4Ops{
    {"e1", "0,0,0,1,0,1,3,0,2,1,0,0"},  {"f1", "0,0,0,3,0,1,3,0,2,1,0,0"},
    {"e2", ""},                         {"f2", "0,0,0,2,0,1,3,0,2,1,1,0"},
    {"e3", "0,0,0,2,0,0,3,0,2,1,0,0"},  {"f3", "0,0,0,2,0,2,3,0,2,1,0,0"},
    {"e4", ""},                         {"f4", "0,0,0,2,1,1,3,0,2,1,0,0"},
    {"e1*", ""},                        {"f1*", "0,0,0,2,0,1,3,0,2,1,0,1"},
    {"e2*", ""},                        {"f2*", "0,0,0,2,0,1,3,0,2,1,1,0"},
    {"e3*", "0,0,0,2,0,1,2,0,2,0,1,0"}, {"f3*", "0,0,0,2,0,1,3,0,2,2,0,0"},
    {"e4*", "0,0,0,2,0,1,2,0,1,1,1,0"}, {"f4*", "0,0,0,2,0,1,3,0,3,1,0,0"},
};

// second slot of the two-slot examples
inline const char* const kA3Slot1 = "0,2,1,3,1,2";
inline const char* const kD4Slot1 = "0,0,0,2,0,0,2,1,2,1,1,0";

}  // namespace goldens

#endif  // BICRYSTAL_TESTS_GOLDENS_HPP
