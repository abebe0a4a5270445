#ifndef BOREL_BOREL_HPP
#define BOREL_BOREL_HPP

#include "borel/bernoulli.hpp"
#include "borel/bounds.hpp"
#include "borel/expr.hpp"
#include "borel/format.hpp"
#include "borel/interval.hpp"
#include "borel/interval_set.hpp"
#include "borel/lemma.hpp"
#include "borel/monotone_spline.hpp"
#include "borel/report_io.hpp"
#include "borel/scenario.hpp"
#include "borel/tower.hpp"
#include "borel/zeta.hpp"

#endif  // BOREL_BOREL_HPP
