#pragma once

#include "numsemi/base.hpp"
#include "numsemi/bg_search.hpp"
#include "numsemi/herzog.hpp"
#include "numsemi/ideal.hpp"
#include "numsemi/invariants.hpp"
#include "numsemi/semigroup.hpp"
#include "numsemi/serialize.hpp"
