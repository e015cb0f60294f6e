// Copyright 2026 The Blindfold Authors. All rights reserved.
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

#ifndef BLINDFOLD_BLINDFOLD_HPP_
#define BLINDFOLD_BLINDFOLD_HPP_

#include "blindfold/arith.hpp"
#include "blindfold/belief.hpp"
#include "blindfold/error.hpp"
#include "blindfold/game.hpp"
#include "blindfold/permgroup.hpp"
#include "blindfold/refutation.hpp"
#include "blindfold/synthesis.hpp"
#include "blindfold/zplinalg.hpp"

#endif  // BLINDFOLD_BLINDFOLD_HPP_
