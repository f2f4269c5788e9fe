/*
 * Copyright 2026 The symparity Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include "symparity/attractor.hpp"
#include "symparity/bigstep.hpp"
#include "symparity/explicit_pm.hpp"
#include "symparity/game.hpp"
#include "symparity/pgsolver.hpp"
#include "symparity/pm_symbolic.hpp"
#include "symparity/rank.hpp"
#include "symparity/report.hpp"
#include "symparity/strategy.hpp"
#include "symparity/vertex_set.hpp"
