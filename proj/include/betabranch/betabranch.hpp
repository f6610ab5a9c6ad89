/*
   Copyright 2026 The betabranch authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef BETABRANCH_BETABRANCH_HPP
#define BETABRANCH_BETABRANCH_HPP

#include "betabranch/algebraic.hpp"
#include "betabranch/cantor.hpp"
#include "betabranch/catalog.hpp"
#include "betabranch/enumerator.hpp"
#include "betabranch/field.hpp"
#include "betabranch/polynomial.hpp"
#include "betabranch/rational.hpp"
#include "betabranch/serialize.hpp"
#include "betabranch/verify.hpp"
#include "betabranch/words.hpp"

#endif
