#pragma once

#include "semimod/error.hpp"
#include "semimod/semigroup.hpp"
#include "semimod/semimodule.hpp"
#include "semimod/syzygy.hpp"
#include "semimod/dual.hpp"
#include "semimod/lattice_path.hpp"
#include "semimod/render.hpp"
#include "semimod/verify.hpp"
