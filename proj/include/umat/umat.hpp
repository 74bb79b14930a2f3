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

#pragma once

// Umbrella header.
#include "umat/brute_oracle.hpp"
#include "umat/coloring.hpp"
#include "umat/elem_set.hpp"
#include "umat/errors.hpp"
#include "umat/feasible_query.hpp"
#include "umat/matroid.hpp"
#include "umat/rational.hpp"
#include "umat/uncertainty.hpp"
#include "umat/uob.hpp"
