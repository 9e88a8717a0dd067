#pragma once

#include "posetcode/bits.hpp"
#include "posetcode/code.hpp"
#include "posetcode/distribution.hpp"
#include "posetcode/field.hpp"
#include "posetcode/hierarchy.hpp"
#include "posetcode/io.hpp"
#include "posetcode/matrix.hpp"
#include "posetcode/matroid.hpp"
#include "posetcode/poset.hpp"
#include "posetcode/random.hpp"
#include "posetcode/selftest.hpp"
