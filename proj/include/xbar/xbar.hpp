// Copyright 2026 The xbar Authors
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

#include "xbar/benchgen.hpp"
#include "xbar/circuit.hpp"
#include "xbar/config.hpp"
#include "xbar/crossbar.hpp"
#include "xbar/emit.hpp"
#include "xbar/errors.hpp"
#include "xbar/instruction.hpp"
#include "xbar/ir.hpp"
#include "xbar/mapper.hpp"
#include "xbar/metrics.hpp"
#include "xbar/pipeline.hpp"
#include "xbar/qasm.hpp"
#include "xbar/scheduler.hpp"
#include "xbar/statevector.hpp"
#include "xbar/sweep.hpp"
#include "xbar/verifier.hpp"
