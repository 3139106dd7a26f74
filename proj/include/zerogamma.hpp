#pragma once

#include "zerogamma/bench.hpp"
#include "zerogamma/errors.hpp"
#include "zerogamma/format.hpp"
#include "zerogamma/series.hpp"
#include "zerogamma/summation.hpp"
#include "zerogamma/tables.hpp"
#include "zerogamma/zero_finding.hpp"
#include "zerogamma/zeros_catalog.hpp"
