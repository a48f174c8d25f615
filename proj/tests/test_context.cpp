// Copyright 2026 The stt authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include "helpers.hpp"
#include "stt/context.hpp"

using namespace stt;

TEST_CASE("extension appends normalized sorts") {
  Theory stlc = builtin("stlc");
  TypeExpr unit = TypeExpr::app(*stlc.find_type_op("Unit"));
  Context empty;
  Context one = extend(stlc, empty, unit);
  CHECK(one.size() == 1);
  CHECK(one[0] == unit);

  Theory ulc = builtin("ulc");
  TypeExpr d = TypeExpr::app(*ulc.find_type_op("D"));
  TypeExpr fdd = TypeExpr::app(*ulc.find_type_op("Fun"), {d, d});
  Context base = extend(ulc, Context{}, d);
  Context two = extend(ulc, base, fdd);
  CHECK(two.size() == 2);
  CHECK(two[1] == d);  // Fun(D,D) collapses to D
}

TEST_CASE("identity and composition of renamings") {
  Theory stlc = builtin("stlc");
  TypeExpr unit = TypeExpr::app(*stlc.find_type_op("Unit"));
  TypeExpr o = TypeExpr::app(*stlc.find_type_op("o"));
  Context ctx{{o, unit}};
  Renaming id = rename_id(ctx);
  Renaming w = weaken(stlc, ctx, o);
  CHECK(rename_compose(id, w).map == w.map);
  CHECK(rename_compose(w, rename_id(w.target)).map == w.map);
  validate_renaming(stlc, w);
  CHECK_THROWS_AS(rename_compose(w, w), Error);  // not composable
}

TEST_CASE("structural renamings have the documented maps") {
  Theory stlc = builtin("stlc");
  TypeExpr unit = TypeExpr::app(*stlc.find_type_op("Unit"));
  TypeExpr o = TypeExpr::app(*stlc.find_type_op("o"));

  Context single{{unit}};
  Renaming w = weaken(stlc, single, unit);
  CHECK(w.map == std::vector<std::size_t>{0});
  CHECK(w.target.size() == 2);

  Context pair{{o, unit}};
  Renaming ex = exchange(stlc, pair, 0);
  CHECK(ex.map == std::vector<std::size_t>{1, 0});
  CHECK(ex.target[0] == unit);
  CHECK(ex.target[1] == o);

  Context dup{{o, o}};
  Renaming c = contract(stlc, dup, 0, 1);
  CHECK(c.target.size() == 1);
  CHECK(c.map == std::vector<std::size_t>{0, 0});

  validate_renaming(stlc, w);
  validate_renaming(stlc, ex);
  validate_renaming(stlc, c);
}

TEST_CASE("contract requires equal sorts and valid positions") {
  Theory stlc = builtin("stlc");
  TypeExpr unit = TypeExpr::app(*stlc.find_type_op("Unit"));
  TypeExpr o = TypeExpr::app(*stlc.find_type_op("o"));
  Context ctx{{o, unit}};
  CHECK_THROWS_AS(contract(stlc, ctx, 0, 1), Error);
  CHECK_THROWS_AS(contract(stlc, ctx, 0, 5), Error);
  CHECK_THROWS_AS(exchange(stlc, ctx, 1), Error);
}
