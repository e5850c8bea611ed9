#pragma once

#include "charsum/bigint.hpp"
#include "charsum/characters.hpp"
#include "charsum/charsums.hpp"
#include "charsum/discovery.hpp"
#include "charsum/error.hpp"
#include "charsum/oeis.hpp"
#include "charsum/partition.hpp"
#include "charsum/polyring.hpp"
