// Copyright 2026 The posiso Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef POSISO_POSISO_HPP
#define POSISO_POSISO_HPP

#include "posiso/aux_digraph.hpp"
#include "posiso/bench.hpp"
#include "posiso/edge_list.hpp"
#include "posiso/fixtures.hpp"
#include "posiso/fuzz.hpp"
#include "posiso/graph.hpp"
#include "posiso/history.hpp"
#include "posiso/mapping.hpp"
#include "posiso/matcher.hpp"
#include "posiso/oracle.hpp"
#include "posiso/random.hpp"
#include "posiso/vertex.hpp"

#endif // POSISO_POSISO_HPP
