// Copyright 2026 The OAX Authors.
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

#include "oax/bench.hpp"
#include "oax/composition.hpp"
#include "oax/config.hpp"
#include "oax/decimal.hpp"
#include "oax/denotation.hpp"
#include "oax/encoding.hpp"
#include "oax/errors.hpp"
#include "oax/evaluate.hpp"
#include "oax/interval.hpp"
#include "oax/io.hpp"
#include "oax/iri.hpp"
#include "oax/model.hpp"
#include "oax/profile.hpp"
#include "oax/quality.hpp"
#include "oax/verdict.hpp"
