#pragma once

#include "nlft/dft.hpp"
#include "nlft/errors.hpp"
#include "nlft/exppoly.hpp"
#include "nlft/nlft_d.hpp"
#include "nlft/nlft_dual.hpp"
#include "nlft/nlft_e.hpp"
#include "nlft/oracle.hpp"
#include "nlft/su2.hpp"
#include "nlft/tolerances.hpp"
