#pragma once

#include "susyzeta/dirac_basis.hpp"
#include "susyzeta/errors.hpp"
#include "susyzeta/gamma.hpp"
#include "susyzeta/monomial.hpp"
#include "susyzeta/susy_model.hpp"
#include "susyzeta/verification.hpp"
#include "susyzeta/zero_finder.hpp"
#include "susyzeta/zeta.hpp"
