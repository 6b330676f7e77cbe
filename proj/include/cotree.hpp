#pragma once

#include "cotree/error.hpp"
#include "cotree/bits.hpp"
#include "cotree/poset.hpp"
#include "cotree/canon.hpp"
#include "cotree/algebra.hpp"
#include "cotree/formula.hpp"
#include "cotree/validity.hpp"
#include "cotree/morphisms.hpp"
#include "cotree/charform.hpp"
#include "cotree/comb.hpp"
#include "cotree/bisim.hpp"
#include "cotree/consequence.hpp"
#include "cotree/filtration.hpp"
#include "cotree/json_io.hpp"
#include "cotree/verify.hpp"
#include "cotree/cli.hpp"
