//Copyright (c) 2026, The z4lat authors
//
//Licensed under the Apache License, Version 2.0 (the "License");
//you may not use this file except in compliance with the License.
//You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
//Unless required by applicable law or agreed to in writing, software
//distributed under the License is distributed on an "AS IS" BASIS,
//WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//See the License for the specific language governing permissions and
//limitations under the License.

#ifndef Z4LAT_Z4LAT_HPP
#define Z4LAT_Z4LAT_HPP

#include "common.hpp"
#include "z4.hpp"
#include "binary.hpp"
#include "poly.hpp"
#include "enumerators.hpp"
#include "constructions.hpp"
#include "qseries.hpp"
#include "theta.hpp"
#include "secrecy.hpp"
#include "search.hpp"

#endif
