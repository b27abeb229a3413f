#ifndef PEBBLING_PEBBLING_HPP
#define PEBBLING_PEBBLING_HPP

#include "pebbling/certificate.hpp"
#include "pebbling/configuration.hpp"
#include "pebbling/domination.hpp"
#include "pebbling/families.hpp"
#include "pebbling/formulas.hpp"
#include "pebbling/graph.hpp"
#include "pebbling/graph_io.hpp"
#include "pebbling/invariants.hpp"
#include "pebbling/path_partition.hpp"
#include "pebbling/rational.hpp"
#include "pebbling/reproduce.hpp"
#include "pebbling/simplex.hpp"
#include "pebbling/solver.hpp"
#include "pebbling/strategy.hpp"

#endif  // PEBBLING_PEBBLING_HPP
