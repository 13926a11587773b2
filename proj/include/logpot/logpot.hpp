#pragma once

#include "logpot/basis.hpp"
#include "logpot/errors.hpp"
#include "logpot/io.hpp"
#include "logpot/params.hpp"
#include "logpot/quadrature.hpp"
#include "logpot/specfun.hpp"
#include "logpot/spectrum.hpp"
#include "logpot/transform.hpp"
