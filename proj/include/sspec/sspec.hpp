#pragma once

#include "sspec/bitset.hpp"
#include "sspec/errors.hpp"
#include "sspec/goingdown.hpp"
#include "sspec/ideal.hpp"
#include "sspec/io.hpp"
#include "sspec/ring.hpp"
#include "sspec/spectrum.hpp"
#include "sspec/topology.hpp"
#include "sspec/verify.hpp"
