// Copyright 2026 The bsf Authors
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

#include "bsf/bell.hpp"
#include "bsf/bosonic.hpp"
#include "bsf/cyclotomic.hpp"
#include "bsf/errors.hpp"
#include "bsf/fock.hpp"
#include "bsf/matrix.hpp"
#include "bsf/monomial.hpp"
#include "bsf/parallel.hpp"
#include "bsf/permanent.hpp"
#include "bsf/phase.hpp"
#include "bsf/rational.hpp"
#include "bsf/stabilizer.hpp"
#include "bsf/state.hpp"
#include "bsf/version.hpp"
