#pragma once

#include "dwmec/center_function.hpp"
#include "dwmec/division_tree.hpp"
#include "dwmec/edge_solver.hpp"
#include "dwmec/errors.hpp"
#include "dwmec/fvd.hpp"
#include "dwmec/geometry.hpp"
#include "dwmec/oracle.hpp"
#include "dwmec/rigid_motion.hpp"
