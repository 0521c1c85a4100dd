#pragma once

// Everything except the command-line driver (cli.hpp).

#include "classical.hpp"
#include "error.hpp"
#include "expansion.hpp"
#include "expr.hpp"
#include "jet.hpp"
#include "oracle.hpp"
#include "oscillatory.hpp"
#include "quadrature.hpp"
#include "registry.hpp"
#include "specfun.hpp"
#include "types.hpp"
#include "uniform.hpp"
