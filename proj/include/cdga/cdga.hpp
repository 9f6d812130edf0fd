#pragma once

// Umbrella header.

#include "cdga/acceptance.hpp"
#include "cdga/algebra.hpp"
#include "cdga/cohomology.hpp"
#include "cdga/error.hpp"
#include "cdga/json_io.hpp"
#include "cdga/lefschetz.hpp"
#include "cdga/linalg.hpp"
#include "cdga/massey.hpp"
#include "cdga/minmodel.hpp"
#include "cdga/models.hpp"
#include "cdga/morphism.hpp"
#include "cdga/report.hpp"
#include "cdga/scalar.hpp"
#include "cdga/symmetry.hpp"
