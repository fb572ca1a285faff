#pragma once

#include "numbers.hpp"
#include "partitions.hpp"
#include "weights.hpp"
#include "weyl.hpp"
#include "symring.hpp"
#include "fock.hpp"
#include "homology.hpp"
#include "parallel.hpp"
#include "verify.hpp"
