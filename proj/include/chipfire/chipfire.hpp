#pragma once

#include "chipfire/combinatorics.hpp"
#include "chipfire/divisor.hpp"
#include "chipfire/error.hpp"
#include "chipfire/families.hpp"
#include "chipfire/formulas.hpp"
#include "chipfire/graph.hpp"
#include "chipfire/graph_algorithms.hpp"
#include "chipfire/io.hpp"
#include "chipfire/rank.hpp"
#include "chipfire/reduction.hpp"
#include "chipfire/search.hpp"
