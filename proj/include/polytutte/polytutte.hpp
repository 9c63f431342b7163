// Copyright 2026 The Authors.
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


// Umbrella header for the polytutte library.

#ifndef POLYTUTTE_POLYTUTTE_HPP
#define POLYTUTTE_POLYTUTTE_HPP

#include "polytutte/activity.hpp"
#include "polytutte/bipoly.hpp"
#include "polytutte/config.hpp"
#include "polytutte/error.hpp"
#include "polytutte/formulas.hpp"
#include "polytutte/hypergraph.hpp"
#include "polytutte/polymatroid.hpp"
#include "polytutte/random.hpp"
#include "polytutte/recursion.hpp"
#include "polytutte/subset.hpp"

#endif  // POLYTUTTE_POLYTUTTE_HPP
