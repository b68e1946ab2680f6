#pragma once

#include "gradalg/cyclotomic.hpp"
#include "gradalg/integer.hpp"
#include "gradalg/poly.hpp"
#include "gradalg/poly_analysis.hpp"
#include "gradalg/series.hpp"
