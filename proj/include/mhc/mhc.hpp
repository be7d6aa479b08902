#pragma once

#include "mhc/classes.hpp"
#include "mhc/degeneration.hpp"
#include "mhc/equivariant.hpp"
#include "mhc/hodge.hpp"
#include "mhc/poly_io.hpp"
#include "mhc/ring.hpp"
#include "mhc/spectra.hpp"
