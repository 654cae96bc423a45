// SPDX-License-Identifier: Apache-2.0
#pragma once

// Convenience umbrella for the whole library.

#include "jetchow/binomial.hpp"
#include "jetchow/chern.hpp"
#include "jetchow/chow_ring.hpp"
#include "jetchow/classify.hpp"
#include "jetchow/cli.hpp"
#include "jetchow/hqf.hpp"
#include "jetchow/jet_classes.hpp"
#include "jetchow/rational.hpp"
#include "jetchow/report.hpp"
#include "jetchow/verify.hpp"
#include "jetchow/version.hpp"
