#pragma once

// Umbrella header for the full library surface.

#include "bispec/combinatorics.hpp"
#include "bispec/delta_table.hpp"
#include "bispec/diff_operator.hpp"
#include "bispec/direct.hpp"
#include "bispec/errors.hpp"
#include "bispec/inverse.hpp"
#include "bispec/json_io.hpp"
#include "bispec/op_parser.hpp"
#include "bispec/parallel.hpp"
#include "bispec/polynomial.hpp"
#include "bispec/rational.hpp"
#include "bispec/recurrence.hpp"
#include "bispec/rng.hpp"
