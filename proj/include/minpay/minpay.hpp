#pragma once

// Umbrella header for the minpay library: minimal-payment purse simulation,
// change-making tables, lattice point sets, cellular automata, and the
// serialization helpers shared by the command-line tool and the tests.

#include "minpay/automata.hpp"
#include "minpay/changemaking.hpp"
#include "minpay/currency.hpp"
#include "minpay/error.hpp"
#include "minpay/fractal.hpp"
#include "minpay/io.hpp"
#include "minpay/payment.hpp"
#include "minpay/simulate.hpp"
