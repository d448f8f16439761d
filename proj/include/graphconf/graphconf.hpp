#pragma once

#include "graphconf/colored_graph.hpp"
#include "graphconf/config_space.hpp"
#include "graphconf/cube_complex.hpp"
#include "graphconf/curvature.hpp"
#include "graphconf/error.hpp"
#include "graphconf/io.hpp"
#include "graphconf/manifold.hpp"
#include "graphconf/morphism.hpp"
#include "graphconf/planner.hpp"
#include "graphconf/random_graph.hpp"
#include "graphconf/simplicial_complex.hpp"
#include "graphconf/smith.hpp"
#include "graphconf/splitting.hpp"
#include "graphconf/topology.hpp"
