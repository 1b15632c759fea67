#pragma once

#include "kdiam/antipodal.hpp"
#include "kdiam/catalog.hpp"
#include "kdiam/configuration_graph.hpp"
#include "kdiam/construct.hpp"
#include "kdiam/errors.hpp"
#include "kdiam/graph.hpp"
#include "kdiam/io.hpp"
#include "kdiam/linalg.hpp"
#include "kdiam/lp.hpp"
#include "kdiam/norm.hpp"
#include "kdiam/point.hpp"
#include "kdiam/polytope.hpp"
#include "kdiam/report.hpp"
#include "kdiam/reproduce.hpp"
#include "kdiam/scalar.hpp"
#include "kdiam/search.hpp"
#include "kdiam/svg.hpp"
#include "kdiam/tiling.hpp"
#include "kdiam/verify.hpp"
