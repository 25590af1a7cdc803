#pragma once

// Umbrella header.

#include "gridlink/error.hpp"
#include "gridlink/scalar.hpp"
#include "gridlink/radical_sum.hpp"
#include "gridlink/geometry.hpp"
#include "gridlink/chain.hpp"
#include "gridlink/verifier.hpp"
#include "gridlink/generators.hpp"
#include "gridlink/collision.hpp"
#include "gridlink/search.hpp"
#include "gridlink/io.hpp"
#include "gridlink/svg.hpp"
#include "gridlink/sweep.hpp"
