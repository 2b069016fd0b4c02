#pragma once

#include "adjinv/chain.hpp"
#include "adjinv/dual.hpp"
#include "adjinv/errors.hpp"
#include "adjinv/evaluate.hpp"
#include "adjinv/ids.hpp"
#include "adjinv/io.hpp"
#include "adjinv/lattice.hpp"
#include "adjinv/matrix.hpp"
#include "adjinv/rational.hpp"
#include "adjinv/sampling.hpp"
#include "adjinv/verify.hpp"
#include "adjinv/weights.hpp"
