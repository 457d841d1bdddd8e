#pragma once

// Umbrella header for the balkit potential-theory toolkit.

#include "balkit/axis_charge.hpp"
#include "balkit/balayage.hpp"
#include "balkit/boundary.hpp"
#include "balkit/charge.hpp"
#include "balkit/conditions.hpp"
#include "balkit/construct.hpp"
#include "balkit/entire.hpp"
#include "balkit/errors.hpp"
#include "balkit/generators.hpp"
#include "balkit/logchar.hpp"
#include "balkit/parallel.hpp"
#include "balkit/quadrature.hpp"
#include "balkit/report.hpp"
#include "balkit/serialize.hpp"
#include "balkit/version.hpp"
