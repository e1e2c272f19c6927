#pragma once

#include "mzlab/errors.hpp"
#include "mzlab/scalar.hpp"
#include "mzlab/multi_index.hpp"
#include "mzlab/laurent.hpp"
#include "mzlab/series.hpp"
#include "mzlab/localized.hpp"
#include "mzlab/linalg.hpp"
#include "mzlab/unipoly.hpp"
#include "mzlab/factor.hpp"
#include "mzlab/jordan.hpp"
#include "mzlab/operators.hpp"
#include "mzlab/locfin.hpp"
#include "mzlab/mzspace.hpp"
#include "mzlab/text.hpp"
#include "mzlab/repro.hpp"
