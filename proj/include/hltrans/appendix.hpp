/*
   Copyright 2026 The hltrans Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef HLTRANS_APPENDIX_HPP
#define HLTRANS_APPENDIX_HPP

#include <string>
#include <vector>

#include "transition.hpp"

// Published degree-4 transition matrices, transcribed entry by entry in the
// canonical row and column orders.

namespace hltrans::golden {

struct GoldenMatrix {
    Basis from;
    Basis to;
    std::vector<std::vector<std::string>> entries;

    TransitionMatrix matrix() const {
        TransitionMatrix out{from, to, 4, index_list(from, 4), index_list(to, 4), {}};
        for (const auto& row : entries) {
            std::vector<TPoly> r;
            for (const auto& e : row) r.push_back(parse_tpoly(e));
            out.entries.push_back(std::move(r));
        }
        return out;
    }
};

inline const std::vector<GoldenMatrix>& degree4() {
    using B = Basis;
    static const std::vector<GoldenMatrix> all = {
        {B::s, B::m,
         {{"1", "1", "1", "1", "1"},
          {"0", "1", "1", "2", "3"},
          {"0", "0", "1", "1", "2"},
          {"0", "0", "0", "1", "3"},
          {"0", "0", "0", "0", "1"}}},
        {B::s, B::F,
         {{"1", "0", "0", "0", "0", "0", "0", "0"},
          {"0", "1", "1", "0", "1", "0", "0", "0"},
          {"0", "0", "1", "0", "0", "1", "0", "0"},
          {"0", "0", "0", "1", "0", "1", "1", "0"},
          {"0", "0", "0", "0", "0", "0", "0", "1"}}},
        {B::m, B::M,
         {{"1", "0", "0", "0", "0", "0", "0", "0"},
          {"0", "1", "0", "0", "1", "0", "0", "0"},
          {"0", "0", "1", "0", "0", "0", "0", "0"},
          {"0", "0", "0", "1", "0", "1", "1", "0"},
          {"0", "0", "0", "0", "0", "0", "0", "1"}}},
        {B::P, B::m,
         {{"1", "1-t", "1-t", "(1-t)^2", "(1-t)^3"},
          {"0", "1", "1-t", "2(1-t)", "3-5t+t^2+t^3"},
          {"0", "0", "1", "1-t", "2-3t+t^3"},
          {"0", "0", "0", "1", "3-t-t^2-t^3"},
          {"0", "0", "0", "0", "1"}}},
        {B::m, B::s,
         {{"1", "-1", "0", "1", "-1"},
          {"0", "1", "-1", "-1", "2"},
          {"0", "0", "1", "-1", "1"},
          {"0", "0", "0", "1", "-3"},
          {"0", "0", "0", "0", "1"}}},
        {B::s, B::P,
         {{"1", "t", "t^2", "t^3", "t^6"},
          {"0", "1", "t", "t+t^2", "t^3+t^4+t^5"},
          {"0", "0", "1", "t", "t^2+t^4"},
          {"0", "0", "0", "1", "t+t^2+t^3"},
          {"0", "0", "0", "0", "1"}}},
        {B::P, B::s,
         {{"1", "-t", "0", "t^2", "-t^3"},
          {"0", "1", "-t", "-t", "t^2+t^3"},
          {"0", "0", "1", "-t", "t^3"},
          {"0", "0", "0", "1", "-t-t^2-t^3"},
          {"0", "0", "0", "0", "1"}}},
        {B::F, B::M,
         {{"1", "1", "1", "1", "1", "1", "1", "1"},
          {"0", "1", "0", "1", "0", "1", "0", "1"},
          {"0", "0", "1", "1", "0", "0", "1", "1"},
          {"0", "0", "0", "1", "0", "0", "0", "1"},
          {"0", "0", "0", "0", "1", "1", "1", "1"},
          {"0", "0", "0", "0", "0", "1", "0", "1"},
          {"0", "0", "0", "0", "0", "0", "1", "1"},
          {"0", "0", "0", "0", "0", "0", "0", "1"}}},
        {B::M, B::F,
         {{"1", "-1", "-1", "1", "-1", "1", "1", "-1"},
          {"0", "1", "0", "-1", "0", "-1", "0", "1"},
          {"0", "0", "1", "-1", "0", "0", "-1", "1"},
          {"0", "0", "0", "1", "0", "0", "0", "-1"},
          {"0", "0", "0", "0", "1", "-1", "-1", "1"},
          {"0", "0", "0", "0", "0", "1", "0", "-1"},
          {"0", "0", "0", "0", "0", "0", "1", "-1"},
          {"0", "0", "0", "0", "0", "0", "0", "1"}}},
        {B::G, B::F,
         {{"1", "-t", "-t", "t^2", "-t", "t^2", "t^2", "-t^3"},
          {"0", "1", "0", "-t", "0", "-t", "0", "t^2"},
          {"0", "0", "1", "-t^2", "0", "0", "-t", "t^3"},
          {"0", "0", "0", "1", "0", "0", "0", "-t"},
          {"0", "0", "0", "0", "1", "-t^2", "-t^2", "t^4"},
          {"0", "0", "0", "0", "0", "1", "0", "-t^2"},
          {"0", "0", "0", "0", "0", "0", "1", "-t^3"},
          {"0", "0", "0", "0", "0", "0", "0", "1"}}},
        {B::G, B::M,
         {{"1", "-t + 1", "-t + 1", "t^2 - 2t + 1", "-t + 1", "t^2 - 2t + 1", "t^2 - 2t + 1", "-t^3 + 3t^2 - 3t + 1"},
          {"0", "1", "0", "-t + 1", "0", "-t + 1", "0", "t^2 - 2t + 1"},
          {"0", "0", "1", "-t^2 + 1", "0", "0", "-t + 1", "t^3 - t^2 - t + 1"},
          {"0", "0", "0", "1", "0", "0", "0", "-t + 1"},
          {"0", "0", "0", "0", "1", "-t^2 + 1", "-t^2 + 1", "t^4 - 2t^2 + 1"},
          {"0", "0", "0", "0", "0", "1", "0", "-t^2 + 1"},
          {"0", "0", "0", "0", "0", "0", "1", "-t^3 + 1"},
          {"0", "0", "0", "0", "0", "0", "0", "1"}}},
        {B::P, B::F,
         {{"1", "-t", "-t", "t^2", "-t", "t^2", "t^2", "-t^3"},
          {"0", "1", "-t + 1", "-t", "1", "-2t", "-t", "t^3 + t^2"},
          {"0", "0", "1", "-t", "0", "-t + 1", "-t", "t^3"},
          {"0", "0", "0", "1", "0", "1", "1", "-t^3 - t^2 - t"},
          {"0", "0", "0", "0", "0", "0", "0", "1"}}},
        {B::F, B::G,
         {{"1", "t", "t", "t^3", "t", "t^3", "t^3", "t^6"},
          {"0", "1", "0", "t", "0", "t", "0", "t^3"},
          {"0", "0", "1", "t^2", "0", "0", "t", "t^4"},
          {"0", "0", "0", "1", "0", "0", "0", "t"},
          {"0", "0", "0", "0", "1", "t^2", "t^2", "t^5"},
          {"0", "0", "0", "0", "0", "1", "0", "t^2"},
          {"0", "0", "0", "0", "0", "0", "1", "t^3"},
          {"0", "0", "0", "0", "0", "0", "0", "1"}}},
        {B::M, B::G,
         {{"1", "t - 1", "t - 1", "t^3 - t^2 - t + 1", "t - 1", "t^3 - t^2 - t + 1", "t^3 - t^2 - t + 1",
           "t^6 - t^5 - t^4 + t^2 + t - 1"},
          {"0", "1", "0", "t - 1", "0", "t - 1", "0", "t^3 - t^2 - t + 1"},
          {"0", "0", "1", "t^2 - 1", "0", "0", "t - 1", "t^4 - t^3 - t + 1"},
          {"0", "0", "0", "1", "0", "0", "0", "t - 1"},
          {"0", "0", "0", "0", "1", "t^2 - 1", "t^2 - 1", "t^5 - t^3 - t^2 + 1"},
          {"0", "0", "0", "0", "0", "1", "0", "t^2 - 1"},
          {"0", "0", "0", "0", "0", "0", "1", "t^3 - 1"},
          {"0", "0", "0", "0", "0", "0", "0", "1"}}},
        {B::P, B::G,
         {{"1", "0", "0", "0", "0", "0", "0", "0"},
          {"0", "1", "-t + 1", "-t^3 + t^2", "1", "t^2 - t", "0", "0"},
          {"0", "0", "1", "t^2 - t", "0", "-t + 1", "0", "0"},
          {"0", "0", "0", "1", "0", "1", "1", "0"},
          {"0", "0", "0", "0", "0", "0", "0", "1"}}},
        {B::S, B::F,
         {{"1", "0", "0", "0", "0", "0", "0", "0"},
          {"0", "1", "0", "0", "0", "0", "0", "0"},
          {"0", "0", "1", "0", "0", "1", "0", "0"},
          {"0", "0", "0", "1", "0", "0", "0", "0"},
          {"0", "0", "1", "0", "1", "0", "0", "0"},
          {"0", "0", "0", "0", "0", "1", "0", "0"},
          {"0", "0", "0", "0", "0", "0", "1", "0"},
          {"0", "0", "0", "0", "0", "0", "0", "1"}}},
        {B::S, B::M,
         {{"1", "1", "1", "1", "1", "1", "1", "1"},
          {"0", "1", "0", "1", "0", "1", "0", "1"},
          {"0", "0", "1", "1", "0", "1", "1", "2"},
          {"0", "0", "0", "1", "0", "0", "0", "1"},
          {"0", "0", "1", "1", "1", "1", "2", "2"},
          {"0", "0", "0", "0", "0", "1", "0", "1"},
          {"0", "0", "0", "0", "0", "0", "1", "1"},
          {"0", "0", "0", "0", "0", "0", "0", "1"}}},
        {B::S, B::G,
         {{"1", "t", "t", "t^3", "t", "t^3", "t^3", "t^6"},
          {"0", "1", "0", "t", "0", "t", "0", "t^3"},
          {"0", "0", "1", "t^2", "0", "1", "t", "t^2+t^4"},
          {"0", "0", "0", "1", "0", "0", "0", "t"},
          {"0", "0", "1", "t^2", "1", "t^2", "t+t^2", "t^4+t^5"},
          {"0", "0", "0", "0", "0", "1", "0", "t^2"},
          {"0", "0", "0", "0", "0", "0", "1", "t^3"},
          {"0", "0", "0", "0", "0", "0", "0", "1"}}},
        {B::K, B::F,
         {{"1", "1", "1", "1", "1", "1", "1", "1"},
          {"0", "1", "1", "0", "0", "1", "1", "0"},
          {"0", "0", "1", "1", "1", "1", "0", "0"}}},
        {B::K, B::M,
         {{"1", "2", "2", "4", "2", "4", "4", "8"},
          {"0", "1", "1", "2", "0", "2", "2", "4"},
          {"0", "0", "1", "2", "1", "2", "2", "4"}}},
        {B::K, B::G,
         {{"1", "1+t", "1+t", "(1+t)(1+t^2)", "1+t", "(1+t)(1+t^2)", "(1+t)(1+t^2)", "(1+t)(1+t^2)(1+t^3)"},
          {"0", "1", "1", "t(1+t)", "0", "1+t", "1+t", "t^2(1+t)^2"},
          {"0", "0", "1", "1+t^2", "1", "1+t^2", "t(1+t)", "t(1+t)(1+t^3)"}}},
    };
    return all;
}

}  // namespace hltrans::golden

#endif  // HLTRANS_APPENDIX_HPP
