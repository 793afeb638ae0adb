#pragma once

#include "surfclass/bench.hpp"
#include "surfclass/builders.hpp"
#include "surfclass/classifier.hpp"
#include "surfclass/connectivity.hpp"
#include "surfclass/generate.hpp"
#include "surfclass/graph.hpp"
#include "surfclass/invariants.hpp"
#include "surfclass/tape_format.hpp"
#include "surfclass/triangulation.hpp"
#include "surfclass/validator.hpp"
#include "surfclass/workspace.hpp"
