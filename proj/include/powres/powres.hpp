// Copyright 2026 The powres Authors
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


// Convenience header pulling in the whole library.

#ifndef POWRES_POWRES_HPP_
#define POWRES_POWRES_HPP_

#include "powres/bridge.hpp"
#include "powres/equivalence.hpp"
#include "powres/field.hpp"
#include "powres/geometry.hpp"
#include "powres/io.hpp"
#include "powres/linalg.hpp"
#include "powres/number_theory.hpp"
#include "powres/oracle.hpp"

#endif  // POWRES_POWRES_HPP_
