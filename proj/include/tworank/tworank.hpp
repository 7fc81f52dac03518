#pragma once

#include "tworank/bounds.hpp"
#include "tworank/constructors.hpp"
#include "tworank/degeneracy.hpp"
#include "tworank/errors.hpp"
#include "tworank/experiment.hpp"
#include "tworank/graph.hpp"
#include "tworank/graph_io.hpp"
#include "tworank/isomorphism.hpp"
#include "tworank/ranking.hpp"
#include "tworank/solver.hpp"
