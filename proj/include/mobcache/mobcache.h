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

// Umbrella header for the library (everything except the CLI driver).

#ifndef MOBCACHE_MOBCACHE_H_
#define MOBCACHE_MOBCACHE_H_

#include "mobcache/channel.h"
#include "mobcache/errors.h"
#include "mobcache/experiment.h"
#include "mobcache/high_mobility.h"
#include "mobcache/io.h"
#include "mobcache/load.h"
#include "mobcache/model.h"
#include "mobcache/montecarlo.h"
#include "mobcache/optimize.h"
#include "mobcache/quadrature.h"
#include "mobcache/random.h"
#include "mobcache/validation.h"

#endif  // MOBCACHE_MOBCACHE_H_
