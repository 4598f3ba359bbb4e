// Umbrella header.
#pragma once

#include "atto/blaschke.hpp"
#include "atto/errors.hpp"
#include "atto/fourier.hpp"
#include "atto/instances.hpp"
#include "atto/json_io.hpp"
#include "atto/modelspace.hpp"
#include "atto/polynomial.hpp"
#include "atto/quadrature.hpp"
#include "atto/rational.hpp"
#include "atto/symbol.hpp"
#include "atto/tto.hpp"
#include "atto/verify.hpp"
