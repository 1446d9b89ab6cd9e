#pragma once

#include "bignat.hpp"
#include "binary.hpp"
#include "core_quotient.hpp"
#include "counting.hpp"
#include "oracle.hpp"
#include "partition.hpp"
#include "tower.hpp"
