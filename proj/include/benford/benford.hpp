#pragma once

// Umbrella header for the library (everything except the CLI front end).

#include "benford_model.hpp"
#include "bignat.hpp"
#include "error.hpp"
#include "fit.hpp"
#include "fixed_log.hpp"
#include "histogram.hpp"
#include "ingest.hpp"
#include "leading_digit.hpp"
#include "radix.hpp"
#include "report.hpp"
#include "sequences.hpp"
#include "table2.hpp"
