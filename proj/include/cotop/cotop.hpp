#pragma once

/**
 * @file cotop.hpp
 * @brief Umbrella header: exact coalgebra and bicomodule computations, the
 *        fully coprime spectrum and its topology, and the statement checks.
 */

#include "cotop/analysis.hpp"
#include "cotop/catalog.hpp"
#include "cotop/centralizer.hpp"
#include "cotop/check.hpp"
#include "cotop/instance_io.hpp"
#include "cotop/oracle.hpp"
#include "cotop/report.hpp"
#include "cotop/resolve.hpp"
#include "cotop/spectral.hpp"
#include "cotop/topology.hpp"
