#pragma once

// Umbrella header.
#include "ga3/cartan.hpp"
#include "ga3/error.hpp"
#include "ga3/expr.hpp"
#include "ga3/matrix.hpp"
#include "ga3/multivector.hpp"
#include "ga3/qm.hpp"
#include "ga3/spinor.hpp"
