#pragma once

#include "pzeta/common.hpp"
#include "pzeta/prime_zeta.hpp"
#include "pzeta/primes.hpp"
#include "pzeta/quadrature.hpp"
#include "pzeta/scan.hpp"
#include "pzeta/specfun.hpp"
