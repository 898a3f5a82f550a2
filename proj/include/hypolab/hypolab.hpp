#pragma once

#include "hypolab/asymptotics.hpp"
#include "hypolab/bergman.hpp"
#include "hypolab/commutator.hpp"
#include "hypolab/complex.hpp"
#include "hypolab/criteria.hpp"
#include "hypolab/error.hpp"
#include "hypolab/hermitian.hpp"
#include "hypolab/psd.hpp"
#include "hypolab/rational.hpp"
#include "hypolab/symbols.hpp"
