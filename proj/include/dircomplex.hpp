#pragma once

#include "dircomplex/complex.hpp"
#include "dircomplex/curvature.hpp"
#include "dircomplex/direction.hpp"
#include "dircomplex/dynamics.hpp"
#include "dircomplex/error.hpp"
#include "dircomplex/graph.hpp"
#include "dircomplex/rational.hpp"
#include "dircomplex/refinement.hpp"
#include "dircomplex/rng.hpp"
#include "dircomplex/simplex.hpp"
#include "dircomplex/topology.hpp"
#include "dircomplex/version.hpp"
#include "dircomplex/io.hpp"
