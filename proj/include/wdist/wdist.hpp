// Copyright 2026 The wdist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "number.hpp"
#include "ffield.hpp"
#include "cyclo.hpp"
#include "chars.hpp"
#include "weight_distribution.hpp"
#include "code.hpp"
#include "charsum.hpp"
#include "curve.hpp"
#include "closedform.hpp"
#include "oracles.hpp"
